#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pancyclic/cycles.hpp"
#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/metrics.hpp"
#include "pancyclic/rational.hpp"
#include "pancyclic/spectral.hpp"

namespace pancyclic {

// --- the exception family -------------------------------------------------

/// The ten dense non-pancyclic exception graphs. Only the first has a free
/// order; the rest have the order given by fixed_order().
enum class NpMember {
    K2_Kn4_2K1,  // K2 v (K_{n-4} + 2K1)
    K5_6K1,
    K3_K2_3K1,
    K3_K14_K1,
    K3_K13_K2,
    K2_2K1_5K1,  // (K2 v 2K1) v 5K1
    K4_5K1,
    K12_4K1,
    K2_K13_K1,
    K3_4K1,
};

inline constexpr std::array<NpMember, 10> kAllNpMembers{
    NpMember::K2_Kn4_2K1, NpMember::K5_6K1,  NpMember::K3_K2_3K1, NpMember::K3_K14_K1, NpMember::K3_K13_K2,
    NpMember::K2_2K1_5K1, NpMember::K4_5K1,  NpMember::K12_4K1,   NpMember::K2_K13_K1, NpMember::K3_4K1,
};

/// 0 for the parameterised member.
inline int fixed_order(NpMember m) {
    switch (m) {
        case NpMember::K2_Kn4_2K1: return 0;
        case NpMember::K5_6K1: return 11;
        case NpMember::K3_K2_3K1: return 8;
        case NpMember::K3_K14_K1:
        case NpMember::K3_K13_K2:
        case NpMember::K2_2K1_5K1:
        case NpMember::K4_5K1: return 9;
        case NpMember::K12_4K1:
        case NpMember::K2_K13_K1:
        case NpMember::K3_4K1: return 7;
    }
    return 0;
}

/// ASCII name; the parameterised member is printed for the given order.
inline std::string np_name(NpMember m, int n = 0) {
    switch (m) {
        case NpMember::K2_Kn4_2K1:
            return n > 0 ? "K2 v (K" + std::to_string(n - 4) + " + 2K1)" : "K2 v (K{n-4} + 2K1)";
        case NpMember::K5_6K1: return "K5 v 6K1";
        case NpMember::K3_K2_3K1: return "K3 v (K2 + 3K1)";
        case NpMember::K3_K14_K1: return "K3 v (K1,4 + K1)";
        case NpMember::K3_K13_K2: return "K3 v (K1,3 + K2)";
        case NpMember::K2_2K1_5K1: return "(K2 v 2K1) v 5K1";
        case NpMember::K4_5K1: return "K4 v 5K1";
        case NpMember::K12_4K1: return "K1,2 v 4K1";
        case NpMember::K2_K13_K1: return "K2 v (K1,3 + K1)";
        case NpMember::K3_4K1: return "K3 v 4K1";
    }
    return {};
}

/// Builds a member. `n` is only read for the parameterised member (n >= 5).
inline Graph np_graph(NpMember m, int n = 0) {
    switch (m) {
        case NpMember::K2_Kn4_2K1:
            if (n < 5) throw InvalidArgument("K2 v (K_{n-4} + 2K1) needs n >= 5");
            return join(complete(2), disjoint_union(complete(n - 4), empty(2)));
        case NpMember::K5_6K1: return join(complete(5), empty(6));
        case NpMember::K3_K2_3K1: return join(complete(3), disjoint_union(complete(2), empty(3)));
        case NpMember::K3_K14_K1: return join(complete(3), disjoint_union(star(4), empty(1)));
        case NpMember::K3_K13_K2: return join(complete(3), disjoint_union(star(3), complete(2)));
        case NpMember::K2_2K1_5K1: return join(join(complete(2), empty(2)), empty(5));
        case NpMember::K4_5K1: return join(complete(4), empty(5));
        case NpMember::K12_4K1: return join(star(2), empty(4));
        case NpMember::K2_K13_K1: return join(complete(2), disjoint_union(star(3), empty(1)));
        case NpMember::K3_4K1: return join(complete(3), empty(4));
    }
    throw InvalidArgument("unknown member");
}

struct NpEntry {
    NpMember member;
    int n;
    Graph graph;
};

/// All members of order n.
inline std::vector<NpEntry> np_family(int n) {
    if (n < 5) throw InvalidArgument("the exception family is defined for n >= 5");
    std::vector<NpEntry> out;
    for (NpMember m : kAllNpMembers) {
        int order = fixed_order(m);
        if (order == 0) {
            out.push_back({m, n, np_graph(m, n)});
        } else if (order == n) {
            out.push_back({m, n, np_graph(m)});
        }
    }
    return out;
}

namespace detail {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(static_cast<std::size_t>(g.order()), -1) {
        // Map g's vertices in BFS order so each new vertex usually has a
        // mapped neighbour to constrain it.
        VertexSet seen = 0;
        for (int root = 0; root < g.order(); ++root) {
            if (seen & bit(root)) continue;
            std::vector<int> queue{root};
            seen |= bit(root);
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (VertexSet r = g.neighbors(queue[i]) & ~seen; r; r &= r - 1) {
                    queue.push_back(lowest(r));
                    seen |= bit(lowest(r));
                }
            }
        }
    }

    bool run() { return place(0); }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        const int u = order_[idx];
        for (VertexSet cand = h_.vertices() & ~used_; cand; cand &= cand - 1) {
            const int v = lowest(cand);
            if (g_.degree(u) != h_.degree(v)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                int w = order_[j];
                ok = g_.adjacent(u, w) == h_.adjacent(v, map_[static_cast<std::size_t>(w)]);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(u)] = v;
            used_ |= bit(v);
            if (place(idx + 1)) return true;
            used_ &= ~bit(v);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> map_;
    std::vector<int> order_;
    VertexSet used_ = 0;
};

/// Structural match for K2 v (K_{n-4} + 2K1): two universal vertices, and
/// the rest induce a clique on n-4 vertices plus isolated vertices.
inline bool matches_parameterised_member(const Graph& g) {
    const int n = g.order();
    if (n < 5 || g.edge_count() != 1 + (n - 4) * (n - 5) / 2 + 2 * (n - 2)) return false;
    VertexSet universal = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) universal |= bit(v);
    }
    if (popcount(universal) != 2) return false;
    VertexSet rest = g.vertices() & ~universal;
    VertexSet clique = 0;
    for (VertexSet r = rest; r; r &= r - 1) {
        if (g.neighbors(lowest(r)) & rest) clique |= bit(lowest(r));
    }
    int k = popcount(clique);
    if (n - 4 >= 2) {
        if (k != n - 4) return false;
    } else if (k != 0) {
        return false;
    }
    for (VertexSet r = clique; r; r &= r - 1) {
        int v = lowest(r);
        if ((g.neighbors(v) & rest) != (clique & ~bit(v))) return false;
    }
    return true;
}

}  // namespace detail

/// Brute-force isomorphism test with a degree-sequence prefilter.
inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return detail::IsomorphismSearch(g, h).run();
}

/// The member g is isomorphic to, if any.
inline std::optional<NpMember> is_in_np(const Graph& g) {
    if (g.order() < 5) return std::nullopt;
    if (detail::matches_parameterised_member(g)) return NpMember::K2_Kn4_2K1;
    for (const NpEntry& e : np_family(g.order())) {
        if (e.member == NpMember::K2_Kn4_2K1) continue;
        if (isomorphic(g, e.graph)) return e.member;
    }
    return std::nullopt;
}

// --- thresholds -------------------------------------------------------------

namespace threshold {

inline Rational lemma1_edges(long long n) { return choose2(n - 2) + 4; }
inline Rational t6(long long n) { return Rational(n * n + 3 * n - 14, 2); }
inline Rational t7(long long n) { return Rational(n * n * n - 6 * n * n + 23 * n - 28, 2); }
inline Rational t8(long long n) { return Rational(n * n - 3 * n + 7, 2); }
inline Rational t9(long long n) { return Rational(5 * n * n - 23 * n + 28, 2 * (n - 1)); }
inline Rational t10(long long n) { return Rational(n + 3) - Rational(14, n); }
inline Rational t11(long long n) { return Rational(5 * n * n - 23 * n + 28, n * (n - 1)); }

}  // namespace threshold

// --- verdicts ---------------------------------------------------------------

enum class TheoremId { Lemma1, T6, T7, T8, T9, T10, T11 };

inline constexpr std::array<TheoremId, 7> kAllTheorems{TheoremId::Lemma1, TheoremId::T6,  TheoremId::T7, TheoremId::T8,
                                                       TheoremId::T9,     TheoremId::T10, TheoremId::T11};

inline std::string_view theorem_key(TheoremId t) {
    switch (t) {
        case TheoremId::Lemma1: return "lemma1";
        case TheoremId::T6: return "t6";
        case TheoremId::T7: return "t7";
        case TheoremId::T8: return "t8";
        case TheoremId::T9: return "t9";
        case TheoremId::T10: return "t10";
        case TheoremId::T11: return "t11";
    }
    return "";
}

inline std::optional<TheoremId> parse_theorem_key(std::string_view key) {
    for (TheoremId t : kAllTheorems) {
        if (theorem_key(t) == key) return t;
    }
    return std::nullopt;
}

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater };

inline std::string_view relation_symbol(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::LessEqual: return "<=";
        case Relation::Equal: return "=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Greater: return ">";
    }
    return "";
}

template <class T>
bool compare(const T& lhs, Relation r, const T& rhs) {
    switch (r) {
        case Relation::Less: return lhs < rhs;
        case Relation::LessEqual: return lhs <= rhs;
        case Relation::Equal: return lhs == rhs;
        case Relation::GreaterEqual: return lhs >= rhs;
        case Relation::Greater: return lhs > rhs;
    }
    return false;
}

/// An exact rational, or a float when the quantity is an eigenvalue.
struct Quantity {
    std::optional<Rational> exact;
    double approx = 0.0;

    static Quantity of(Rational r) {
        double d = to_double(r);
        return {std::move(r), d};
    }
    static Quantity of(double d) { return {std::nullopt, d}; }

    std::string text() const { return exact ? to_string(*exact) : format_double(approx); }
};

enum class Conclusion {
    NotApplicable,  // hypothesis (threshold or side condition) not met
    Pancyclic,
    ExceptionNP,
    ExceptionBipartite,
    Violation,
    Undecided,  // cycle search ran out of budget
};

inline std::string_view conclusion_key(Conclusion c) {
    switch (c) {
        case Conclusion::NotApplicable: return "not_applicable";
        case Conclusion::Pancyclic: return "pancyclic";
        case Conclusion::ExceptionNP: return "exception_np";
        case Conclusion::ExceptionBipartite: return "exception_bipartite";
        case Conclusion::Violation: return "violation";
        case Conclusion::Undecided: return "undecided";
    }
    return "";
}

struct TheoremVerdict {
    TheoremId theorem = TheoremId::Lemma1;
    /// Side conditions (order, minimum degree, complement connectivity) and
    /// the threshold comparison together.
    bool hypothesis_met = false;
    /// Empty when every side condition holds.
    std::string side_condition_failure;
    std::optional<Quantity> lhs;
    std::optional<Quantity> rhs;
    Relation relation = Relation::LessEqual;
    bool threshold_met = false;
    /// The float comparison fell inside the tolerance band and was settled
    /// with exact arithmetic.
    bool boundary = false;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::optional<NpMember> exception_member;
    std::string bipartite_kind;
    std::vector<int> missing_cycle_lengths;
    std::string detail;
};

struct InequalityCheck {
    std::string name;
    Quantity lhs;
    Relation relation = Relation::GreaterEqual;
    Quantity rhs;
    bool holds = false;
};

inline constexpr double kBoundaryBand = 1e-8;

// --- per-graph evaluation context --------------------------------------------

/// Lazily computed invariants of one graph, shared by every checker run on
/// it. Not thread-safe; each worker owns its own instance.
class GraphFacts {
public:
    explicit GraphFacts(Graph g, std::int64_t budget = kDefaultSearchBudget, SolverOptions solver = {})
        : g_(std::move(g)), budget_(budget), solver_(solver) {}

    const Graph& graph() const { return g_; }
    int n() const { return g_.order(); }
    int m() const { return g_.edge_count(); }
    int delta() const { return min_degree(g_); }

    const DistanceMatrix& distances() {
        if (!dm_) dm_ = all_pairs_distances(g_);
        return *dm_;
    }
    bool connected() { return distances().all_finite(); }

    const Graph& complement_graph() {
        if (!gc_) gc_ = complement(g_);
        return *gc_;
    }
    const DistanceMatrix& complement_distances() {
        if (!dmc_) dmc_ = all_pairs_distances(complement_graph());
        return *dmc_;
    }
    bool complement_connected() { return complement_distances().all_finite(); }

    long long wiener_index() {
        if (!w_) w_ = wiener(distances());
        return *w_;
    }
    long long complement_wiener_index() {
        if (!wc_) wc_ = wiener(complement_distances());
        return *wc_;
    }
    const Rational& harary_index() {
        if (!h_) h_ = harary(distances());
        return *h_;
    }
    const Rational& complement_harary_index() {
        if (!hc_) hc_ = harary(complement_distances());
        return *hc_;
    }
    double rho() {
        if (!rho_) rho_ = distance_spectral_radius(distances(), solver_).value;
        return *rho_;
    }
    double complement_rho_star() {
        if (!rho_star_c_) rho_star_c_ = harary_spectral_radius(complement_graph(), solver_).value;
        return *rho_star_c_;
    }
    double rho_star() {
        if (!rho_star_) rho_star_ = harary_spectral_radius(g_, solver_).value;
        return *rho_star_;
    }

    /// Missing cycle lengths are filled in only when the graph is found not
    /// to be pancyclic.
    Pancyclicity pancyclicity() {
        if (!pan_) {
            pan_ = pancyclic::pancyclicity(g_, budget_);
            if (*pan_ != Pancyclicity::Pancyclic) {
                for (int k = 3; k <= n(); ++k) {
                    auto r = has_cycle_of_length(g_, k, budget_);
                    if (r.status == SearchStatus::Absent) missing_.push_back(k);
                }
            }
        }
        return *pan_;
    }
    const std::vector<int>& missing_cycle_lengths() {
        pancyclicity();
        return missing_;
    }

    const BipartitionResult& bipartition_result() {
        if (!bip_) bip_ = bipartition(g_);
        return *bip_;
    }
    bool bipartite() { return std::holds_alternative<BipartitionWitness>(bipartition_result()); }
    bool complete_bipartite() {
        const auto* w = std::get_if<BipartitionWitness>(&bipartition_result());
        return w != nullptr && connected() && w->a < n() && m() == w->a * (n() - w->a);
    }

    std::optional<NpMember> np_member() {
        if (!np_checked_) {
            np_ = is_in_np(g_);
            np_checked_ = true;
        }
        return np_;
    }

private:
    Graph g_;
    std::int64_t budget_;
    SolverOptions solver_;
    std::optional<DistanceMatrix> dm_, dmc_;
    std::optional<Graph> gc_;
    std::optional<long long> w_, wc_;
    std::optional<Rational> h_, hc_;
    std::optional<double> rho_, rho_star_, rho_star_c_;
    std::optional<Pancyclicity> pan_;
    std::vector<int> missing_;
    std::optional<BipartitionResult> bip_;
    std::optional<NpMember> np_;
    bool np_checked_ = false;
};

namespace detail {

struct Exceptions {
    bool any_np = false;
    std::vector<NpMember> members;
    bool any_bipartite = false;
    bool non_complete_bipartite = false;
};

inline Exceptions allowed_exceptions(TheoremId t) {
    switch (t) {
        case TheoremId::Lemma1: return {true, {}, true, false};
        case TheoremId::T6:
        case TheoremId::T8: return {true, {}, false, false};
        case TheoremId::T7: return {false, {}, false, true};
        case TheoremId::T9:
            return {false,
                    {NpMember::K5_6K1, NpMember::K3_K2_3K1, NpMember::K3_K14_K1, NpMember::K3_K13_K2,
                     NpMember::K2_2K1_5K1, NpMember::K4_5K1},
                    false,
                    false};
        case TheoremId::T10: return {false, {NpMember::K2_K13_K1, NpMember::K3_4K1}, false, false};
        case TheoremId::T11: return {};
    }
    return {};
}

/// Fills in the conclusion of a verdict whose hypothesis holds.
inline void conclude(GraphFacts& f, TheoremVerdict& v) {
    switch (f.pancyclicity()) {
        case Pancyclicity::Pancyclic: v.conclusion = Conclusion::Pancyclic; return;
        case Pancyclicity::Unknown:
            v.conclusion = Conclusion::Undecided;
            v.detail = "cycle search budget exhausted";
            return;
        case Pancyclicity::NotPancyclic: break;
    }
    v.missing_cycle_lengths = f.missing_cycle_lengths();
    Exceptions ex = allowed_exceptions(v.theorem);
    if (auto member = f.np_member()) {
        bool listed = ex.any_np || std::find(ex.members.begin(), ex.members.end(), *member) != ex.members.end();
        if (listed) {
            v.conclusion = Conclusion::ExceptionNP;
            v.exception_member = member;
            return;
        }
    }
    if (f.bipartite()) {
        if (ex.any_bipartite) {
            v.conclusion = Conclusion::ExceptionBipartite;
            v.bipartite_kind = f.complete_bipartite() ? "complete bipartite" : "bipartite";
            return;
        }
        if (ex.non_complete_bipartite && !f.complete_bipartite()) {
            v.conclusion = Conclusion::ExceptionBipartite;
            v.bipartite_kind = "bipartite, not complete bipartite";
            return;
        }
    }
    v.conclusion = Conclusion::Violation;
    std::string why = "not pancyclic";
    if (auto member = f.np_member()) why += "; member " + np_name(*member, f.n()) + " is not an allowed exception";
    if (f.bipartite()) why += f.complete_bipartite() ? "; complete bipartite" : "; bipartite";
    v.detail = why;
}

/// Shared side conditions. Returns false (and records why) when unmet.
inline bool side_conditions(GraphFacts& f, TheoremVerdict& v, int min_order) {
    if (f.n() < min_order) {
        v.side_condition_failure = "n < " + std::to_string(min_order);
    } else if (f.delta() < 2) {
        v.side_condition_failure = "minimum degree < 2";
    }
    return v.side_condition_failure.empty();
}

inline void require_connected(GraphFacts& f, TheoremId t) {
    if (!f.connected()) {
        throw DisconnectedGraph(std::string(theorem_key(t)) + " requires a connected graph");
    }
}

inline void finish(GraphFacts& f, TheoremVerdict& v) {
    v.hypothesis_met = v.side_condition_failure.empty() && v.threshold_met;
    if (v.hypothesis_met) {
        conclude(f, v);
    } else {
        v.conclusion = Conclusion::NotApplicable;
    }
}

inline void exact_threshold(TheoremVerdict& v, Rational lhs, Relation rel, Rational rhs) {
    v.relation = rel;
    v.threshold_met = compare(lhs, rel, rhs);
    v.lhs = Quantity::of(std::move(lhs));
    v.rhs = Quantity::of(std::move(rhs));
}

}  // namespace detail

/// Edge-count claim: connected, n >= 5, delta >= 2 and m >= C(n-2,2)+4 imply
/// pancyclic unless in the exception family or bipartite. Unlike the
/// theorem checkers, a disconnected graph only fails the hypothesis.
inline TheoremVerdict check_lemma1(GraphFacts& f) {
    TheoremVerdict v;
    v.theorem = TheoremId::Lemma1;
    if (!f.connected()) {
        v.side_condition_failure = "graph is disconnected";
    } else {
        detail::side_conditions(f, v, 5);
    }
    if (f.n() >= 2) detail::exact_threshold(v, Rational(f.m()), Relation::GreaterEqual, threshold::lemma1_edges(f.n()));
    detail::finish(f, v);
    return v;
}

/// W(G) <= (n^2+3n-14)/2.
inline TheoremVerdict check_theorem6(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T6);
    TheoremVerdict v;
    v.theorem = TheoremId::T6;
    detail::side_conditions(f, v, 5);
    detail::exact_threshold(v, Rational(f.wiener_index()), Relation::LessEqual, threshold::t6(f.n()));
    detail::finish(f, v);
    return v;
}

/// W(complement) >= (n^3-6n^2+23n-28)/2, complement connected.
inline TheoremVerdict check_theorem7(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T7);
    TheoremVerdict v;
    v.theorem = TheoremId::T7;
    v.relation = Relation::GreaterEqual;
    if (detail::side_conditions(f, v, 5) && !f.complement_connected()) {
        v.side_condition_failure = "complement is disconnected";
    }
    if (f.complement_connected()) {
        detail::exact_threshold(v, Rational(f.complement_wiener_index()), Relation::GreaterEqual, threshold::t7(f.n()));
    } else {
        v.rhs = Quantity::of(threshold::t7(f.n()));
    }
    detail::finish(f, v);
    return v;
}

/// H(G) >= (n^2-3n+7)/2.
inline TheoremVerdict check_theorem8(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T8);
    TheoremVerdict v;
    v.theorem = TheoremId::T8;
    detail::side_conditions(f, v, 5);
    detail::exact_threshold(v, f.harary_index(), Relation::GreaterEqual, threshold::t8(f.n()));
    detail::finish(f, v);
    return v;
}

/// H(complement) <= (5n^2-23n+28)/(2(n-1)), n >= 8.
inline TheoremVerdict check_theorem9(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T9);
    TheoremVerdict v;
    v.theorem = TheoremId::T9;
    detail::side_conditions(f, v, 8);
    detail::exact_threshold(v, f.complement_harary_index(), Relation::LessEqual, threshold::t9(f.n()));
    detail::finish(f, v);
    return v;
}

/// rho(G) <= n+3-14/n. Comparisons inside the float band are settled by
/// counting eigenvalues of D(G) above the threshold exactly.
inline TheoremVerdict check_theorem10(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T10);
    TheoremVerdict v;
    v.theorem = TheoremId::T10;
    v.relation = Relation::LessEqual;
    detail::side_conditions(f, v, 5);
    Rational t = threshold::t10(f.n());
    double rho = f.rho();
    double diff = rho - to_double(t);
    if (std::abs(diff) > kBoundaryBand) {
        v.threshold_met = diff < 0;
    } else {
        v.boundary = true;
        v.threshold_met = spectral_radius_at_most(distance_matrix_exact(f.distances()), t);
        v.detail = "threshold comparison resolved exactly";
    }
    v.lhs = Quantity::of(rho);
    v.rhs = Quantity::of(std::move(t));
    detail::finish(f, v);
    return v;
}

/// rho*(complement) <= (5n^2-23n+28)/(n(n-1)), n >= 8. No exceptions.
inline TheoremVerdict check_theorem11(GraphFacts& f) {
    detail::require_connected(f, TheoremId::T11);
    TheoremVerdict v;
    v.theorem = TheoremId::T11;
    v.relation = Relation::LessEqual;
    detail::side_conditions(f, v, 8);
    Rational t = threshold::t11(f.n());
    double rs = f.complement_rho_star();
    double diff = rs - to_double(t);
    if (std::abs(diff) > kBoundaryBand) {
        v.threshold_met = diff < 0;
    } else {
        v.boundary = true;
        bool all_below = true;
        for (const Component& c : components(f.complement_graph())) {
            if (c.graph.order() < 2) continue;
            if (!spectral_radius_at_most(reciprocal_distance_matrix(c.graph), t)) {
                all_below = false;
                break;
            }
        }
        v.threshold_met = all_below;
        v.detail = "threshold comparison resolved exactly";
    }
    v.lhs = Quantity::of(rs);
    v.rhs = Quantity::of(std::move(t));
    detail::finish(f, v);
    return v;
}

inline TheoremVerdict check(TheoremId t, GraphFacts& f) {
    switch (t) {
        case TheoremId::Lemma1: return check_lemma1(f);
        case TheoremId::T6: return check_theorem6(f);
        case TheoremId::T7: return check_theorem7(f);
        case TheoremId::T8: return check_theorem8(f);
        case TheoremId::T9: return check_theorem9(f);
        case TheoremId::T10: return check_theorem10(f);
        case TheoremId::T11: return check_theorem11(f);
    }
    throw InvalidArgument("unknown theorem");
}

inline TheoremVerdict check_lemma1(const Graph& g) {
    GraphFacts f(g);
    return check_lemma1(f);
}
inline TheoremVerdict check_theorem6(const Graph& g) {
    GraphFacts f(g);
    return check_theorem6(f);
}
inline TheoremVerdict check_theorem7(const Graph& g) {
    GraphFacts f(g);
    return check_theorem7(f);
}
inline TheoremVerdict check_theorem8(const Graph& g) {
    GraphFacts f(g);
    return check_theorem8(f);
}
inline TheoremVerdict check_theorem9(const Graph& g) {
    GraphFacts f(g);
    return check_theorem9(f);
}
inline TheoremVerdict check_theorem10(const Graph& g) {
    GraphFacts f(g);
    return check_theorem10(f);
}
inline TheoremVerdict check_theorem11(const Graph& g) {
    GraphFacts f(g);
    return check_theorem11(f);
}

// --- lemmas and in-proof inequalities ---------------------------------------

namespace detail {

inline InequalityCheck exact_check(std::string name, Rational lhs, Relation rel, Rational rhs) {
    bool holds = compare(lhs, rel, rhs);
    return {std::move(name), Quantity::of(std::move(lhs)), rel, Quantity::of(std::move(rhs)), holds};
}

/// Float comparison with a relative slack of `tol` in the favourable direction.
inline InequalityCheck float_check(std::string name, double lhs, Relation rel, double rhs, double tol = 1e-9) {
    double slack = tol * std::max(1.0, std::abs(rhs));
    bool holds = false;
    switch (rel) {
        case Relation::GreaterEqual: holds = lhs >= rhs - slack; break;
        case Relation::LessEqual: holds = lhs <= rhs + slack; break;
        case Relation::Equal: holds = std::abs(lhs - rhs) <= slack; break;
        case Relation::Greater: holds = lhs > rhs; break;
        case Relation::Less: holds = lhs < rhs; break;
    }
    return {std::move(name), Quantity::of(lhs), rel, Quantity::of(rhs), holds};
}

}  // namespace detail

/// Bipartite connected graphs satisfy W(G) > (n^2+3n-14)/2.
inline InequalityCheck check_lemma4(GraphFacts& f) {
    if (!f.bipartite()) throw NotBipartite("lemma 4 applies to bipartite graphs");
    if (!f.connected()) throw DisconnectedGraph("lemma 4 needs W(G), defined for connected graphs");
    return detail::exact_check("W(G) > (n^2+3n-14)/2", Rational(f.wiener_index()), Relation::Greater,
                               threshold::t6(f.n()));
}

/// Bipartite graphs on n >= 8 vertices satisfy H(complement) > (5n^2-23n+28)/(2(n-1)).
inline InequalityCheck check_lemma5(GraphFacts& f) {
    if (!f.bipartite()) throw NotBipartite("lemma 5 applies to bipartite graphs");
    if (f.n() < 8) throw InvalidArgument("lemma 5 needs n >= 8");
    return detail::exact_check("H(complement) > (5n^2-23n+28)/(2(n-1))", f.complement_harary_index(),
                               Relation::Greater, threshold::t9(f.n()));
}

inline InequalityCheck check_lemma4(const Graph& g) {
    GraphFacts f(g);
    return check_lemma4(f);
}
inline InequalityCheck check_lemma5(const Graph& g) {
    GraphFacts f(g);
    return check_lemma5(f);
}

/// rho(G) >= 2W(G)/n for connected G.
inline InequalityCheck check_lemma2(GraphFacts& f) {
    if (!f.connected()) throw DisconnectedGraph("lemma 2 needs a connected graph");
    return detail::float_check("rho >= 2W/n", f.rho(), Relation::GreaterEqual,
                               2.0 * static_cast<double>(f.wiener_index()) / f.n());
}

/// rho*(G) >= 2H(G)/n for any G.
inline InequalityCheck check_lemma3(GraphFacts& f) {
    return detail::float_check("rho* >= 2H/n", f.rho_star(), Relation::GreaterEqual,
                               2.0 * to_double(f.harary_index()) / f.n());
}

/// Every displayed bound from the proofs that applies to g, checked with
/// exact arithmetic. g must be connected.
inline std::vector<InequalityCheck> verify_intermediate_inequalities(GraphFacts& f) {
    if (!f.connected()) throw DisconnectedGraph("intermediate inequalities are stated for connected graphs");
    const long long n = f.n();
    const long long m = f.m();
    std::vector<InequalityCheck> out;
    const Rational w = f.wiener_index();
    const Rational& h = f.harary_index();
    const int diam = f.distances().max_finite();

    out.push_back(detail::exact_check("W(G) >= n(n-1)-m", w, Relation::GreaterEqual, Rational(n * (n - 1) - m)));
    if (diam <= 2) {
        out.push_back(detail::exact_check("W(G) = n(n-1)-m when diameter <= 2", w, Relation::Equal,
                                          Rational(n * (n - 1) - m)));
    }
    Rational h_bound = Rational(n * (n - 1), 4) + Rational(m, 2);
    out.push_back(detail::exact_check("H(G) <= n(n-1)/4 + m/2", h, Relation::LessEqual, h_bound));
    out.push_back(detail::exact_check(diam <= 2 ? "H(G) = n(n-1)/4 + m/2 when diameter <= 2"
                                                : "H(G) < n(n-1)/4 + m/2 when diameter > 2",
                                      h, diam <= 2 ? Relation::Equal : Relation::Less, h_bound));
    if (n >= 2) {
        out.push_back(detail::exact_check("H(complement) >= n(n-1)/2 - (n-2)m/(n-1)", f.complement_harary_index(),
                                          Relation::GreaterEqual,
                                          Rational(n * (n - 1), 2) - Rational((n - 2) * m, n - 1)));
    }
    if (f.complement_connected()) {
        out.push_back(detail::exact_check("W(complement) <= n(n-1)/2 + (n-2)m",
                                          Rational(f.complement_wiener_index()), Relation::LessEqual,
                                          Rational(n * (n - 1), 2) + Rational((n - 2) * m)));
    }
    if (f.bipartite()) {
        out.push_back(detail::exact_check("W(G) >= (3n^2-4n)/4 for bipartite G", w, Relation::GreaterEqual,
                                          Rational(3 * n * n - 4 * n, 4)));
        out.push_back(detail::exact_check("H(G) <= (3n^2-2n)/8 for bipartite G", h, Relation::LessEqual,
                                          Rational(3 * n * n - 2 * n, 8)));
        const auto& side = std::get<BipartitionWitness>(f.bipartition_result());
        const long long a = side.a;
        if (f.complete_bipartite()) {
            out.push_back(detail::exact_check("H(complement) = a^2-na+(n^2-n)/2 for K_{a,n-a}",
                                              f.complement_harary_index(), Relation::Equal,
                                              Rational(a * a - n * a) + Rational(n * n - n, 2)));
        } else if (f.complement_connected() && f.complement_distances().max_finite() <= 2) {
            out.push_back(detail::exact_check("H(complement) = n(n-1)/2 - m/2 when diameter(complement) <= 2",
                                              f.complement_harary_index(), Relation::Equal,
                                              Rational(n * (n - 1), 2) - Rational(m, 2)));
        }
        if (!f.complete_bipartite() && n >= 3) {
            out.push_back(detail::exact_check("H(complement) >= (3n^2-4n)/8 for non-complete bipartite G",
                                              f.complement_harary_index(), Relation::GreaterEqual,
                                              Rational(3 * n * n - 4 * n, 8)));
        }
    }
    return out;
}

inline std::vector<InequalityCheck> verify_intermediate_inequalities(const Graph& g) {
    GraphFacts f(g);
    return verify_intermediate_inequalities(f);
}

}  // namespace pancyclic
