#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

inline constexpr std::int64_t kDefaultSearchBudget = 100'000'000;

enum class SearchStatus { Found, Absent, Unknown };

struct CycleSearch {
    SearchStatus status = SearchStatus::Absent;
    /// Vertex sequence of the cycle when Found; consecutive vertices and the
    /// last/first pair are adjacent.
    std::vector<int> witness;
    std::int64_t expansions = 0;
};

namespace detail {

class CycleFinder {
public:
    CycleFinder(const Graph& g, int k, std::int64_t budget) : g_(g), k_(k), budget_(budget) {}

    CycleSearch run() {
        CycleSearch out;
        const int n = g_.order();
        for (int anchor = 0; anchor + k_ <= n; ++anchor) {
            // The anchor is the smallest vertex on the cycle.
            anchor_ = anchor;
            allowed_ = g_.vertices() & ~low_bits(anchor + 1);
            VertexSet region = reachable(g_, anchor, allowed_ | bit(anchor));
            if (popcount(region) < k_ || popcount(g_.neighbors(anchor) & allowed_) < 2) continue;
            path_.assign(1, anchor);
            used_ = bit(anchor);
            if (extend()) {
                out.status = SearchStatus::Found;
                out.witness = path_;
                out.expansions = expansions_;
                return out;
            }
            if (exhausted_) break;
        }
        out.status = exhausted_ ? SearchStatus::Unknown : SearchStatus::Absent;
        out.expansions = expansions_;
        return out;
    }

private:
    bool extend() {
        if (++expansions_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const int depth = static_cast<int>(path_.size());
        const int tail = path_.back();
        if (depth == k_) {
            // Orient each cycle once: second vertex below the last.
            return g_.adjacent(tail, anchor_) && path_[1] < tail;
        }
        if (!degrees_feasible(depth, tail)) return false;
        const VertexSet anchor_nbrs = g_.neighbors(anchor_) & allowed_;
        for (VertexSet cand = g_.neighbors(tail) & allowed_ & ~used_; cand; cand &= cand - 1) {
            const int w = lowest(cand);
            const int still_needed = k_ - depth - 1;  // vertices to add after w
            if (!feasible(w, still_needed, anchor_nbrs)) continue;
            path_.push_back(w);
            used_ |= bit(w);
            if (extend()) return true;
            used_ &= ~bit(w);
            path_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    /// When every unused vertex must join the cycle, each needs two usable
    /// neighbours; a vertex with exactly two forces both edges, and no vertex
    /// may receive more forced edges than it has free slots.
    bool degrees_feasible(int depth, int tail) const {
        const VertexSet avail = allowed_ & ~used_;
        if (popcount(avail) != k_ - depth) return true;
        const VertexSet ends = bit(tail) | bit(anchor_);
        std::array<int, kMaxOrder> load{};
        for (VertexSet a = avail; a; a &= a - 1) {
            const int w = lowest(a);
            const VertexSet cands = g_.neighbors(w) & (avail | ends);
            const int c = popcount(cands);
            if (c < 2) return false;
            if (c > 2) continue;
            for (VertexSet u = cands; u; u &= u - 1) {
                const int v = lowest(u);
                const int cap = (bit(v) & avail) ? 2 : (depth == 1 ? 2 : 1);
                if (++load[static_cast<std::size_t>(v)] > cap) return false;
            }
        }
        return true;
    }

    /// After appending w, the path must still be able to collect
    /// `still_needed` unused vertices and end next to the anchor.
    bool feasible(int w, int still_needed, VertexSet anchor_nbrs) const {
        if (still_needed == 0) return (anchor_nbrs & bit(w)) != 0;
        VertexSet avail = allowed_ & ~used_ & ~bit(w);
        VertexSet seen = bit(w);
        VertexSet frontier = seen;
        int dist_to_anchor_nbr = -1;
        for (int layer = 1; frontier; ++layer) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) next |= g_.neighbors(lowest(f));
            next &= avail & ~seen;
            if (dist_to_anchor_nbr < 0 && (next & anchor_nbrs)) {
                dist_to_anchor_nbr = layer;
                if (layer > still_needed) return false;
            }
            seen |= next;
            frontier = next;
        }
        return dist_to_anchor_nbr >= 0 && popcount(seen) - 1 >= still_needed;
    }

    const Graph& g_;
    int k_;
    std::int64_t budget_;
    std::int64_t expansions_ = 0;
    bool exhausted_ = false;
    int anchor_ = 0;
    VertexSet allowed_ = 0;
    VertexSet used_ = 0;
    std::vector<int> path_;
};

}  // namespace detail

/// Searches for a simple cycle of length exactly k by depth-first
/// backtracking anchored at the cycle's smallest vertex. Returns Unknown
/// (never Absent) when the expansion budget runs out.
inline CycleSearch has_cycle_of_length(const Graph& g, int k, std::int64_t budget = kDefaultSearchBudget) {
    if (k < 3 || k > g.order()) {
        throw InvalidArgument("cycle length " + std::to_string(k) + " outside 3.." + std::to_string(g.order()));
    }
    return detail::CycleFinder(g, k, budget).run();
}

inline bool is_valid_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) return false;
    VertexSet seen = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int v = cycle[i];
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
        if (!g.adjacent(v, cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

struct CycleSpectrum {
    int n = 0;
    /// Lengths with a witness, ascending.
    std::vector<int> present;
    /// Lengths proven absent.
    std::vector<int> missing;
    /// Lengths whose search ran out of budget.
    std::vector<int> unknown;
    std::map<int, std::vector<int>> witnesses;

    bool pancyclic() const { return n >= 3 && missing.empty() && unknown.empty(); }
};

inline CycleSpectrum cycle_spectrum(const Graph& g, std::int64_t budget = kDefaultSearchBudget) {
    CycleSpectrum s;
    s.n = g.order();
    for (int k = 3; k <= g.order(); ++k) {
        CycleSearch r = has_cycle_of_length(g, k, budget);
        switch (r.status) {
            case SearchStatus::Found:
                s.present.push_back(k);
                s.witnesses.emplace(k, std::move(r.witness));
                break;
            case SearchStatus::Absent: s.missing.push_back(k); break;
            case SearchStatus::Unknown: s.unknown.push_back(k); break;
        }
    }
    return s;
}

enum class Pancyclicity { Pancyclic, NotPancyclic, Unknown };

/// Decides pancyclicity, stopping at the first absent length. Lengths that
/// exhaust the budget make the answer Unknown unless another length is
/// proven absent.
inline Pancyclicity pancyclicity(const Graph& g, std::int64_t budget = kDefaultSearchBudget) {
    if (g.order() < 3) return Pancyclicity::NotPancyclic;
    bool unknown = false;
    for (int k = 3; k <= g.order(); ++k) {
        switch (has_cycle_of_length(g, k, budget).status) {
            case SearchStatus::Found: break;
            case SearchStatus::Absent: return Pancyclicity::NotPancyclic;
            case SearchStatus::Unknown: unknown = true; break;
        }
    }
    return unknown ? Pancyclicity::Unknown : Pancyclicity::Pancyclic;
}

/// Throws SearchBudgetExceeded when the default budget cannot decide.
inline bool is_pancyclic(const Graph& g) {
    auto p = pancyclicity(g);
    if (p == Pancyclicity::Unknown) throw SearchBudgetExceeded("pancyclicity undecided");
    return p == Pancyclicity::Pancyclic;
}

}  // namespace pancyclic
