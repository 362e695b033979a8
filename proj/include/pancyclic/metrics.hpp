#pragma once

#include <optional>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/rational.hpp"

namespace pancyclic {

/// Hop distances between all vertex pairs; kUnreachable marks pairs in
/// different components.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int order() const noexcept { return n_; }
    int at(int i, int j) const noexcept { return d_[index(i, j)]; }
    bool reachable(int i, int j) const noexcept { return at(i, j) != kUnreachable; }
    void set(int i, int j, int d) noexcept { d_[index(i, j)] = d; }

    bool all_finite() const noexcept {
        for (int d : d_) {
            if (d == kUnreachable) return false;
        }
        return true;
    }

    /// Largest finite distance.
    int max_finite() const noexcept {
        int best = 0;
        for (int d : d_) best = d > best ? d : best;
        return best;
    }

    /// Row sum D_i; nullopt when the row contains an unreachable entry.
    std::optional<long long> row_sum(int i) const noexcept {
        long long s = 0;
        for (int j = 0; j < n_; ++j) {
            int d = at(i, j);
            if (d == kUnreachable) return std::nullopt;
            s += d;
        }
        return s;
    }

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<int> d_;
};

/// BFS from every vertex over the bitset rows.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = bit(s);
        VertexSet frontier = seen;
        dm.set(s, s, 0);
        for (int depth = 1; frontier; ++depth) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
            next &= ~seen;
            for (VertexSet r = next; r; r &= r - 1) dm.set(s, lowest(r), depth);
            seen |= next;
            frontier = next;
        }
    }
    return dm;
}

/// Diameter of a connected graph; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
    auto dm = all_pairs_distances(g);
    if (!dm.all_finite()) return std::nullopt;
    return dm.max_finite();
}

/// Number of unordered pairs at each finite distance; index 0 is unused.
inline std::vector<long long> distance_histogram(const DistanceMatrix& dm) {
    std::vector<long long> hist(static_cast<std::size_t>(dm.order()), 0);
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = i + 1; j < dm.order(); ++j) {
            int d = dm.at(i, j);
            if (d != DistanceMatrix::kUnreachable) ++hist[static_cast<std::size_t>(d)];
        }
    }
    return hist;
}

inline long long wiener(const DistanceMatrix& dm) {
    if (!dm.all_finite()) throw DisconnectedGraph("Wiener index is defined for connected graphs only");
    long long w = 0;
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = i + 1; j < dm.order(); ++j) w += dm.at(i, j);
    }
    return w;
}

/// Sum of distances over unordered pairs. Throws DisconnectedGraph.
inline long long wiener(const Graph& g) { return wiener(all_pairs_distances(g)); }

/// Sum of 1/d over unordered pairs; unreachable pairs contribute zero, which
/// equals the sum of the components' Harary indices.
inline Rational harary(const DistanceMatrix& dm) {
    auto hist = distance_histogram(dm);
    Rational h = 0;
    for (std::size_t d = 1; d < hist.size(); ++d) {
        if (hist[d] != 0) h += Rational(hist[d], static_cast<long long>(d));
    }
    return h;
}

inline Rational harary(const Graph& g) { return harary(all_pairs_distances(g)); }

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
    int n = 0;
    std::vector<Rational> entries;

    const Rational& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
    Rational& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
};

/// RD(G): 1/d_ij off the diagonal for reachable pairs, 0 elsewhere.
inline RationalMatrix reciprocal_distance_matrix(const DistanceMatrix& dm) {
    RationalMatrix rd{dm.order(), std::vector<Rational>(static_cast<std::size_t>(dm.order() * dm.order()))};
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = 0; j < dm.order(); ++j) {
            int d = dm.at(i, j);
            if (i != j && d != DistanceMatrix::kUnreachable) rd.at(i, j) = Rational(1, d);
        }
    }
    return rd;
}

inline RationalMatrix reciprocal_distance_matrix(const Graph& g) {
    return reciprocal_distance_matrix(all_pairs_distances(g));
}

/// D(G) as exact rationals; requires finite distances.
inline RationalMatrix distance_matrix_exact(const DistanceMatrix& dm) {
    if (!dm.all_finite()) throw DisconnectedGraph("distance matrix has unreachable entries");
    RationalMatrix m{dm.order(), std::vector<Rational>(static_cast<std::size_t>(dm.order() * dm.order()))};
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = 0; j < dm.order(); ++j) m.at(i, j) = dm.at(i, j);
    }
    return m;
}

struct IndexReport {
    /// Present only for connected graphs.
    std::optional<long long> wiener;
    Rational harary;
    /// D_i; nullopt for rows with an unreachable entry.
    std::vector<std::optional<long long>> row_sums_D;
    std::vector<Rational> row_sums_RD;
};

inline IndexReport index_report(const DistanceMatrix& dm) {
    IndexReport r;
    const int n = dm.order();
    r.row_sums_D.reserve(static_cast<std::size_t>(n));
    r.row_sums_RD.reserve(static_cast<std::size_t>(n));
    long long d_total = 0;
    bool finite = true;
    Rational rd_total = 0;
    for (int i = 0; i < n; ++i) {
        auto s = dm.row_sum(i);
        r.row_sums_D.push_back(s);
        if (s) {
            d_total += *s;
        } else {
            finite = false;
        }
        Rational rs = 0;
        for (int j = 0; j < n; ++j) {
            int d = dm.at(i, j);
            if (i != j && d != DistanceMatrix::kUnreachable) rs += Rational(1, d);
        }
        rd_total += rs;
        r.row_sums_RD.push_back(std::move(rs));
    }
    if (finite) r.wiener = d_total / 2;
    r.harary = rd_total / 2;
    return r;
}

inline IndexReport index_report(const Graph& g) { return index_report(all_pairs_distances(g)); }

}  // namespace pancyclic
