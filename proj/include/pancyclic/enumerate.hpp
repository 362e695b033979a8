#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

inline constexpr int kMaxEnumerationOrder = 7;

/// Graph whose upper-triangle edges, in graph6 order (column-major:
/// (0,1), (0,2), (1,2), (0,3), ...), are the set bits of `mask`.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1U) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    return Graph::from_rows(n, rows);
}

/// Visits every connected labelled graph on n vertices (n <= 7) with minimum
/// degree at least `min_degree`, in increasing mask order.
template <class Callback>
std::uint64_t enumerate_connected(int n, int min_degree, Callback&& visit) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw InvalidArgument("built-in enumeration supports 1 <= n <= 7; use graph6 files for larger orders");
    }
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    // Pair index -> endpoints.
    std::vector<int> lo, hi;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            lo.push_back(i);
            hi.push_back(j);
        }
    }
    std::uint64_t visited = 0;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        for (std::uint64_t r = mask; r; r &= r - 1) {
            int k = std::countr_zero(r);
            rows[static_cast<std::size_t>(lo[static_cast<std::size_t>(k)])] |= bit(hi[static_cast<std::size_t>(k)]);
            rows[static_cast<std::size_t>(hi[static_cast<std::size_t>(k)])] |= bit(lo[static_cast<std::size_t>(k)]);
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = popcount(rows[static_cast<std::size_t>(v)]) >= min_degree;
        if (!ok) continue;
        VertexSet seen = 1, frontier = 1;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(lowest(f))];
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        if (seen != low_bits(n)) continue;
        ++visited;
        visit(Graph::from_rows(n, rows));
    }
    return visited;
}

}  // namespace pancyclic
