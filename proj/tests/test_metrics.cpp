#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pancyclic/metrics.hpp"
#include "support/oracles.hpp"

using namespace pancyclic;

TEST_CASE("all pairs distances", "[metrics]") {
    DistanceMatrix p3 = all_pairs_distances(path(3));
    CHECK(p3.at(0, 2) == 2);
    CHECK(p3.at(0, 1) == 1);
    CHECK(p3.at(1, 1) == 0);

    DistanceMatrix u = all_pairs_distances(disjoint_union(complete(2), empty(3)));
    CHECK(u.at(0, 1) == 1);
    for (int j = 2; j < 5; ++j) CHECK_FALSE(u.reachable(0, j));
    CHECK_FALSE(u.all_finite());

    // Independent-set vertices of K3 v 4K1 are exactly the pairs at distance 2.
    Graph g = join(complete(3), empty(4));
    DistanceMatrix d = all_pairs_distances(g);
    auto fw = oracle::floyd_warshall(g);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            CHECK(d.at(i, j) == fw[i][j]);
            CHECK(d.at(i, j) == ((i != j && i >= 3 && j >= 3) ? 2 : (i == j ? 0 : 1)));
        }
    }
}

TEST_CASE("Wiener index", "[metrics]") {
    CHECK(wiener(complete(7)) == 21);
    CHECK(wiener(path(3)) == 4);
    Graph g = join(complete(3), empty(4));
    CHECK(wiener(g) == oracle::wiener(g));
    CHECK(wiener(g) == 27);
    CHECK(wiener(cycle(7)) == 42);
    CHECK_THROWS_AS(wiener(disjoint_union(complete(2), empty(1))), DisconnectedGraph);
}

TEST_CASE("Harary index", "[metrics]") {
    CHECK(harary(complete(5)) == 10);
    CHECK(harary(path(3)) == Rational(5, 2));
    CHECK(harary(disjoint_union(complete(2), empty(3))) == 1);
    CHECK(to_string(harary(path(3))) == "5/2");
    CHECK(to_string(harary(complete(5))) == "10/1");

    Graph a = cycle(5), b = path(4);
    CHECK(harary(disjoint_union(a, b)) == harary(a) + harary(b));
}

TEST_CASE("reciprocal distance matrix", "[metrics]") {
    RationalMatrix k3 = reciprocal_distance_matrix(complete(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 0 : 1));
    }
    RationalMatrix p3 = reciprocal_distance_matrix(path(3));
    CHECK(p3.at(0, 1) == 1);
    CHECK(p3.at(1, 2) == 1);
    CHECK(p3.at(0, 2) == Rational(1, 2));

    RationalMatrix u = reciprocal_distance_matrix(disjoint_union(complete(2), empty(3)));
    int nonzero = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) nonzero += u.at(i, j) != 0;
    }
    CHECK(nonzero == 2);
}

TEST_CASE("index report", "[metrics]") {
    IndexReport r = index_report(cycle(6));
    REQUIRE(r.wiener);
    CHECK(*r.wiener == 27);
    long long row_total = 0;
    for (const auto& s : r.row_sums_D) row_total += *s;
    CHECK(row_total == 2 * *r.wiener);
    Rational rd_total = 0;
    for (const auto& s : r.row_sums_RD) rd_total += s;
    CHECK(rd_total == 2 * r.harary);

    IndexReport d = index_report(disjoint_union(complete(3), empty(1)));
    CHECK_FALSE(d.wiener);
    CHECK_FALSE(d.row_sums_D[0]);
    CHECK(d.harary == 3);
}

TEST_CASE("indices agree with pair-sum oracle", "[metrics][property]") {
    std::mt19937_64 rng(0x11e7);
    std::uniform_int_distribution<int> order(1, 20);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const long long n = g.order(), m = g.edge_count();
        CHECK(harary(g) == oracle::harary(g));
        CHECK(harary(g) <= Rational(n * (n - 1), 4) + Rational(m, 2));
        if (!is_connected(g)) continue;
        const long long w = wiener(g);
        CHECK(w == oracle::wiener(g));
        CHECK(w >= n * (n - 1) - m);
        CHECK(w >= n * (n - 1) / 2);
        CHECK(harary(g) <= Rational(n * (n - 1), 2));
        const bool is_complete = m == n * (n - 1) / 2;
        CHECK((w == n * (n - 1) / 2) == is_complete);
        CHECK((harary(g) == Rational(n * (n - 1), 2)) == is_complete);
        const bool diam2 = diameter(g).value() <= 2;
        CHECK((w == n * (n - 1) - m) == diam2);
        CHECK((harary(g) == Rational(n * (n - 1), 4) + Rational(m, 2)) == diam2);

        DistanceMatrix d = all_pairs_distances(g);
        for (int i = 0; i < g.order(); ++i) {
            for (int j = 0; j < g.order(); ++j) {
                CHECK(d.at(i, j) == d.at(j, i));
                CHECK((d.at(i, j) == 1) == g.adjacent(i, j));
                for (int k = 0; k < g.order(); ++k) CHECK(d.at(i, j) <= d.at(i, k) + d.at(k, j));
            }
        }
    }
}
