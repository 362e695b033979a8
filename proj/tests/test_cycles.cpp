#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pancyclic/cycles.hpp"
#include "pancyclic/enumerate.hpp"
#include "pancyclic/theorems.hpp"
#include "support/oracles.hpp"

using namespace pancyclic;

namespace {

std::set<int> present_set(const CycleSpectrum& s) { return {s.present.begin(), s.present.end()}; }

void check_witnesses(const Graph& g, const CycleSpectrum& s) {
    for (const auto& [k, w] : s.witnesses) {
        CHECK(static_cast<int>(w.size()) == k);
        CHECK(is_valid_cycle(g, w));
    }
}

}  // namespace

TEST_CASE("fixed-length cycle search", "[cycles]") {
    auto five = has_cycle_of_length(cycle(5), 5);
    REQUIRE(five.status == SearchStatus::Found);
    CHECK(is_valid_cycle(cycle(5), five.witness));
    CHECK(has_cycle_of_length(cycle(5), 3).status == SearchStatus::Absent);
    CHECK(has_cycle_of_length(complete(4), 3).status == SearchStatus::Found);
    CHECK(has_cycle_of_length(complete(4), 4).status == SearchStatus::Found);
    CHECK(has_cycle_of_length(join(complete(3), empty(4)), 7).status == SearchStatus::Absent);
    CHECK_THROWS_AS(has_cycle_of_length(complete(4), 2), InvalidArgument);
    CHECK_THROWS_AS(has_cycle_of_length(complete(4), 5), InvalidArgument);
}

TEST_CASE("witnesses are deterministic", "[cycles]") {
    auto w = has_cycle_of_length(complete(5), 4).witness;
    CHECK(w == std::vector<int>{0, 1, 2, 3});
    CHECK(has_cycle_of_length(complete(5), 4).witness == w);
}

TEST_CASE("cycle spectra", "[cycles]") {
    CHECK(cycle_spectrum(complete(5)).present == std::vector<int>{3, 4, 5});
    CHECK(cycle_spectrum(complete_bipartite(2, 3)).present == std::vector<int>{4});
    CycleSpectrum tree = cycle_spectrum(path(6));
    CHECK(tree.present.empty());
    CHECK(tree.missing == std::vector<int>{3, 4, 5, 6});
    CHECK(cycle_spectrum(complete(2)).present.empty());
}

TEST_CASE("pancyclicity", "[cycles]") {
    for (int n = 3; n <= 12; ++n) CHECK(is_pancyclic(complete(n)));
    CHECK_FALSE(is_pancyclic(complete(2)));
    CHECK_FALSE(is_pancyclic(complete_bipartite(4, 4)));
    CHECK_FALSE(is_pancyclic(cycle(6)));
    CHECK(pancyclicity(complete(1)) == Pancyclicity::NotPancyclic);
}

// Missing lengths computed with networkx.simple_cycles.
TEST_CASE("exception graphs miss exactly the oracle's lengths", "[cycles]") {
    const std::pair<NpMember, std::vector<int>> expected[] = {
        {NpMember::K5_6K1, {11}},    {NpMember::K3_K2_3K1, {8}}, {NpMember::K3_K14_K1, {9}},
        {NpMember::K3_K13_K2, {}},   {NpMember::K2_2K1_5K1, {9}}, {NpMember::K4_5K1, {9}},
        {NpMember::K12_4K1, {7}},    {NpMember::K2_K13_K1, {7}}, {NpMember::K3_4K1, {7}},
    };
    for (const auto& [member, missing] : expected) {
        INFO(np_name(member));
        Graph g = np_graph(member);
        CycleSpectrum s = cycle_spectrum(g);
        CHECK(s.missing == missing);
        CHECK(s.unknown.empty());
        check_witnesses(g, s);
    }
    for (int n = 5; n <= 11; ++n) {
        CycleSpectrum s = cycle_spectrum(np_graph(NpMember::K2_Kn4_2K1, n));
        CHECK(s.missing == std::vector<int>{n});
        CHECK_FALSE(is_pancyclic(np_graph(NpMember::K2_Kn4_2K1, n)));
    }
}

TEST_CASE("budget exhaustion yields Unknown", "[cycles]") {
    Graph g = np_graph(NpMember::K5_6K1);
    CycleSearch r = has_cycle_of_length(g, 11, 10);
    CHECK(r.status == SearchStatus::Unknown);
    CHECK(r.expansions > 10);
    CycleSpectrum s = cycle_spectrum(g, 10);
    CHECK(s.missing.empty());
    CHECK_FALSE(s.unknown.empty());
    CHECK(pancyclicity(g, 10) == Pancyclicity::Unknown);
}

TEST_CASE("cycle spectrum matches brute force on small graphs", "[cycles][property]") {
    for (int n = 3; n <= 6; ++n) {
        enumerate_connected(n, 0, [&](const Graph& g) {
            CycleSpectrum s = cycle_spectrum(g);
            CHECK(present_set(s) == oracle::cycle_lengths(g));
        });
    }
}

TEST_CASE("cycle spectrum properties on random graphs", "[cycles][property]") {
    std::mt19937_64 rng(0xc1c1e);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + trial % 7;
        Graph g = oracle::random_graph(rng, n, density(rng));
        CycleSpectrum s = cycle_spectrum(g);
        CHECK(present_set(s) == oracle::cycle_lengths(g));
        check_witnesses(g, s);
        if (is_bipartite(g)) {
            for (int k : s.present) CHECK(k % 2 == 0);
        }
        // Adding an edge never removes a cycle length.
        auto missing_pairs = complement(g).edges();
        if (!missing_pairs.empty()) {
            auto e = missing_pairs[rng() % missing_pairs.size()];
            auto edges = g.edges();
            edges.push_back(e);
            Graph h = Graph::from_edges(n, edges);
            auto before = present_set(s);
            auto after = present_set(cycle_spectrum(h));
            CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        }
    }
}
