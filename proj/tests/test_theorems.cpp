#include <algorithm>
#include <numeric>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pancyclic/enumerate.hpp"
#include "pancyclic/graph6.hpp"
#include "pancyclic/theorems.hpp"
#include "support/oracles.hpp"

using namespace pancyclic;

namespace {

std::vector<NpMember> members_of(int n) {
    std::vector<NpMember> out;
    for (const auto& e : np_family(n)) out.push_back(e.member);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NpMember> sorted(std::vector<NpMember> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("exception family by order", "[theorems][np]") {
    CHECK(members_of(7) == sorted({NpMember::K2_Kn4_2K1, NpMember::K12_4K1, NpMember::K2_K13_K1, NpMember::K3_4K1}));
    CHECK(members_of(11) == sorted({NpMember::K2_Kn4_2K1, NpMember::K5_6K1}));
    CHECK(members_of(10) == std::vector<NpMember>{NpMember::K2_Kn4_2K1});
    CHECK(members_of(8).size() == 2u);
    CHECK(members_of(9).size() == 5u);
    CHECK_THROWS_AS(np_family(4), InvalidArgument);

    for (NpMember m : kAllNpMembers) {
        const int n = fixed_order(m) == 0 ? 9 : fixed_order(m);
        Graph g = np_graph(m, n);
        INFO(np_name(m, n));
        CHECK(g.order() == n);
        CHECK(Rational(g.edge_count()) >= threshold::lemma1_edges(n));
        CHECK(is_connected(g));
        CHECK(min_degree(g) >= 2);
    }
    CHECK(np_graph(NpMember::K2_2K1_5K1).edge_count() == 25);
    CHECK(degree_sequence(np_graph(NpMember::K2_2K1_5K1)) == std::vector<int>{4, 4, 4, 4, 4, 7, 7, 8, 8});
    CHECK(np_name(NpMember::K2_Kn4_2K1, 8) == "K2 v (K4 + 2K1)");
}

TEST_CASE("membership up to isomorphism", "[theorems][np]") {
    CHECK(is_in_np(join(complete(3), empty(4))) == NpMember::K3_4K1);
    CHECK_FALSE(is_in_np(cycle(7)));
    CHECK_FALSE(is_in_np(complete(9)));

    std::mt19937_64 rng(0x1505);
    for (NpMember m : kAllNpMembers) {
        const int n = fixed_order(m) == 0 ? 10 : fixed_order(m);
        Graph g = np_graph(m, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(is_in_np(g.permuted(perm)) == m);
        }
    }
    // Agreement with the permutation oracle on small near-misses.
    Graph k3_4k1 = np_graph(NpMember::K3_4K1);
    auto edges = k3_4k1.edges();
    for (std::size_t drop = 0; drop < edges.size(); ++drop) {
        auto e = edges;
        e.erase(e.begin() + static_cast<long>(drop));
        Graph h = Graph::from_edges(7, e);
        CHECK(isomorphic(h, k3_4k1) == oracle::isomorphic(h, k3_4k1));
        std::optional<NpMember> expected;
        for (const auto& e7 : np_family(7)) {
            if (oracle::isomorphic(h, e7.graph)) expected = e7.member;
        }
        CHECK(is_in_np(h) == expected);
    }
}

TEST_CASE("Lemma 1", "[theorems]") {
    TheoremVerdict k7 = check_lemma1(complete(7));
    CHECK(k7.hypothesis_met);
    CHECK(k7.conclusion == Conclusion::Pancyclic);

    TheoremVerdict ex = check_lemma1(join(complete(3), empty(4)));
    CHECK(ex.hypothesis_met);
    CHECK(ex.conclusion == Conclusion::ExceptionNP);
    CHECK(ex.exception_member == NpMember::K3_4K1);
    CHECK(ex.missing_cycle_lengths == std::vector<int>{7});

    TheoremVerdict k34 = check_lemma1(complete_bipartite(3, 4));
    CHECK_FALSE(k34.hypothesis_met);
    CHECK(k34.conclusion == Conclusion::NotApplicable);
    CHECK(k34.lhs->text() == "12/1");
    CHECK(k34.rhs->text() == "14/1");

    // n^2/4 < C(n-2,2)+4 for n >= 5: no bipartite graph reaches the bound.
    for (int n = 5; n <= 40; ++n) {
        CHECK_FALSE(check_lemma1(complete_bipartite(n / 2, n - n / 2)).hypothesis_met);
    }

    TheoremVerdict split = check_lemma1(disjoint_union(complete(5), complete(5)));
    CHECK_FALSE(split.hypothesis_met);
    CHECK(split.side_condition_failure == "graph is disconnected");
}

TEST_CASE("Theorems 6 and 8", "[theorems]") {
    TheoremVerdict t6 = check_theorem6(complete(7));
    CHECK(t6.conclusion == Conclusion::Pancyclic);
    CHECK(t6.lhs->text() == "21/1");
    CHECK(t6.rhs->text() == "28/1");

    Graph k3_4k1 = join(complete(3), empty(4));
    TheoremVerdict w = check_theorem6(k3_4k1);
    CHECK(w.lhs->text() == "27/1");
    CHECK(w.conclusion == Conclusion::ExceptionNP);
    TheoremVerdict h = check_theorem8(k3_4k1);
    CHECK(h.lhs->text() == "18/1");
    CHECK(h.rhs->text() == "35/2");
    CHECK(h.conclusion == Conclusion::ExceptionNP);

    TheoremVerdict c7 = check_theorem6(cycle(7));
    CHECK(c7.lhs->text() == std::to_string(oracle::wiener(cycle(7))) + "/1");
    CHECK_FALSE(c7.hypothesis_met);

    TheoremVerdict low = check_theorem6(path(6));
    CHECK(low.side_condition_failure == "minimum degree < 2");
    CHECK(check_theorem6(complete(4)).side_condition_failure == "n < 5");

    CHECK_THROWS_AS(check_theorem6(disjoint_union(complete(3), complete(3))), DisconnectedGraph);
    CHECK_THROWS_AS(check_theorem8(disjoint_union(complete(3), complete(3))), DisconnectedGraph);
}

TEST_CASE("Theorem 7", "[theorems]") {
    TheoremVerdict c5 = check_theorem7(cycle(5));
    CHECK(c5.side_condition_failure.empty());
    CHECK(c5.lhs->text() == "15/1");
    CHECK(c5.rhs->text() == "31/1");
    CHECK_FALSE(c5.hypothesis_met);

    TheoremVerdict k7 = check_theorem7(complete(7));
    CHECK(k7.side_condition_failure == "complement is disconnected");
    CHECK_FALSE(k7.hypothesis_met);
}

TEST_CASE("Theorem 7 threshold exceeds every Wiener index", "[theorems]") {
    // The path maximises W over connected graphs: W(P_n) = (n^3-n)/6.
    for (long long n = 5; n <= 64; ++n) {
        CHECK(Rational(n * n * n - n, 6) < threshold::t7(n));
    }
    CHECK(wiener(path(9)) == (9 * 9 * 9 - 9) / 6);
}

TEST_CASE("Theorem 9", "[theorems]") {
    TheoremVerdict k4 = check_theorem9(np_graph(NpMember::K4_5K1));
    CHECK(k4.hypothesis_met);
    CHECK(k4.lhs->text() == "10/1");
    CHECK(k4.conclusion == Conclusion::ExceptionNP);
    CHECK(k4.exception_member == NpMember::K4_5K1);

    TheoremVerdict param = check_theorem9(np_graph(NpMember::K2_Kn4_2K1, 8));
    CHECK_FALSE(param.hypothesis_met);

    TheoremVerdict small = check_theorem9(complete(7));
    CHECK(small.side_condition_failure == "n < 8");

    // A non-listed non-pancyclic graph meeting the threshold: the derivation
    // of the edge bound fails when the complement is disconnected.
    TheoremVerdict gap = check_theorem9(graph6::decode("G?B~~{"));
    CHECK(gap.hypothesis_met);
    CHECK(gap.conclusion == Conclusion::Violation);
    CHECK(gap.missing_cycle_lengths == std::vector<int>{7, 8});
}

TEST_CASE("Theorem 10", "[theorems]") {
    TheoremVerdict ex = check_theorem10(np_graph(NpMember::K3_4K1));
    CHECK(ex.boundary);
    CHECK(ex.hypothesis_met);
    CHECK(ex.conclusion == Conclusion::ExceptionNP);
    CHECK(ex.exception_member == NpMember::K3_4K1);

    TheoremVerdict above = check_theorem10(np_graph(NpMember::K12_4K1));
    CHECK_FALSE(above.hypothesis_met);
    CHECK_FALSE(above.boundary);

    // Listed as an exception but its distance spectral radius exceeds 8.
    TheoremVerdict listed = check_theorem10(np_graph(NpMember::K2_K13_K1));
    CHECK_FALSE(listed.hypothesis_met);

    TheoremVerdict k7 = check_theorem10(complete(7));
    CHECK(k7.conclusion == Conclusion::Pancyclic);
    CHECK(k7.lhs->text() == "6.000000000000");
    CHECK(k7.rhs->text() == "8/1");
}

TEST_CASE("Theorem 11", "[theorems]") {
    TheoremVerdict k9 = check_theorem11(complete(9));
    CHECK(k9.hypothesis_met);
    CHECK(k9.conclusion == Conclusion::Pancyclic);
    CHECK(k9.lhs->text() == "0.000000000000");

    for (NpMember m : kAllNpMembers) {
        if (fixed_order(m) != 0 && fixed_order(m) < 8) continue;
        CHECK_FALSE(check_theorem11(np_graph(m, 10)).hypothesis_met);
    }
}

TEST_CASE("Lemmas 4 and 5", "[theorems]") {
    InequalityCheck k44 = check_lemma4(complete_bipartite(4, 4));
    CHECK(k44.holds);
    CHECK(k44.lhs.text() == "40/1");
    CHECK(k44.rhs.text() == "37/1");

    InequalityCheck star7 = check_lemma4(star(7));
    CHECK(star7.holds);
    CHECK(star7.lhs.text() == std::to_string(oracle::wiener(star(7))) + "/1");

    InequalityCheck c8 = check_lemma5(cycle(8));
    CHECK(c8.holds);
    CHECK(c8.lhs.exact == oracle::harary(complement(cycle(8))));
    CHECK(c8.rhs.text() == "82/7");

    CHECK_THROWS_AS(check_lemma4(complete(5)), NotBipartite);
    CHECK_THROWS_AS(check_lemma4(disjoint_union(complete(2), complete(2))), DisconnectedGraph);
    CHECK_THROWS_AS(check_lemma5(cycle(6)), InvalidArgument);
}

TEST_CASE("Lemmas 2 and 3 on the exception graphs", "[theorems]") {
    for (NpMember m : kAllNpMembers) {
        GraphFacts f(np_graph(m, 9));
        CHECK(check_lemma2(f).holds);
        CHECK(check_lemma3(f).holds);
    }
}

TEST_CASE("intermediate inequalities on named graphs", "[theorems]") {
    for (const auto& c : verify_intermediate_inequalities(complete(6))) {
        INFO(c.name);
        if (c.name.find("complement") != std::string::npos && c.name.find(">=") != std::string::npos) {
            // 6K1 has Harary index 0, below n(n-1)/2 - (n-2)m/(n-1) = 3.
            CHECK_FALSE(c.holds);
        } else {
            CHECK(c.holds);
        }
    }
    auto c6 = verify_intermediate_inequalities(cycle(6));
    auto it = std::find_if(c6.begin(), c6.end(), [](const auto& c) { return c.name == "W(G) >= (3n^2-4n)/4 for bipartite G"; });
    REQUIRE(it != c6.end());
    CHECK(it->lhs.text() == "27/1");
    CHECK(it->rhs.text() == "21/1");
    CHECK(it->holds);
    CHECK_THROWS_AS(verify_intermediate_inequalities(empty(3)), DisconnectedGraph);
}

TEST_CASE("threshold algebra reduces to the edge bound", "[theorems]") {
    for (long long n = 5; n <= 200; ++n) {
        const Rational target = choose2(n - 2) + 4;
        CHECK(Rational(n * (n - 1)) - threshold::t6(n) == target);
        CHECK(Rational(n * n * n - 7 * n * n + 24 * n - 28, 2 * (n - 2)) == target);
        CHECK((threshold::t7(n) - Rational(n * (n - 1), 2)) / (n - 2) == target);
        CHECK(Rational(n * (n - 1) * (n - 1), 2 * (n - 2)) - Rational(5 * n * n - 23 * n + 28, 2 * (n - 2)) == target);
        CHECK((Rational(n * (n - 1), 2) - threshold::t9(n)) * Rational(n - 1, n - 2) == target);
        CHECK(Rational(n * n - 3 * n + 7) - Rational(n * (n - 1), 2) == target);
        CHECK((threshold::t8(n) - Rational(n * (n - 1), 4)) * 2 == target);
    }
}

TEST_CASE("verdict soundness at n = 5 and 6", "[theorems][property]") {
    for (int n = 5; n <= 6; ++n) {
        enumerate_connected(n, 2, [&](const Graph& g) {
            GraphFacts f(g);
            for (TheoremId t : kAllTheorems) {
                TheoremVerdict v = check(t, f);
                CHECK(v.conclusion != Conclusion::Violation);
                CHECK(v.conclusion != Conclusion::Undecided);
                if (v.conclusion == Conclusion::Pancyclic) CHECK(oracle::cycle_lengths(g).size() == static_cast<std::size_t>(n - 2));
                if (v.conclusion == Conclusion::ExceptionNP) {
                    CHECK(oracle::cycle_lengths(g).size() < static_cast<std::size_t>(n - 2));
                    CHECK(v.exception_member.has_value());
                }
            }
        });
    }
}
