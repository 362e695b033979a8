#pragma once

// Reference implementations used only by the tests. They share no code path
// with the library beyond the Graph container and its adjacency accessor.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/rational.hpp"

namespace oracle {

using pancyclic::Graph;
using pancyclic::Rational;

using Matrix = std::vector<std::vector<double>>;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j) {
            if (g.adjacent(i, j)) d[i][j] = 1;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    }
    return d;
}

inline long long wiener(const Graph& g) {
    auto d = floyd_warshall(g);
    long long w = 0;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) w += d[i][j];
    }
    return w;
}

/// Sum of 1/d over unordered pairs; unreachable pairs contribute 0.
inline Rational harary(const Graph& g) {
    auto d = floyd_warshall(g);
    Rational h = 0;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            if (d[i][j] < kInf) h += Rational(1, d[i][j]);
        }
    }
    return h;
}

/// Cyclic Jacobi rotations; returns all eigenvalues, ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline Matrix distance_matrix(const Graph& g) {
    auto d = floyd_warshall(g);
    Matrix m(g.order(), std::vector<double>(g.order(), 0.0));
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) m[i][j] = d[i][j] >= kInf ? 0.0 : d[i][j];
    }
    return m;
}

inline Matrix reciprocal_matrix(const Graph& g) {
    auto d = floyd_warshall(g);
    Matrix m(g.order(), std::vector<double>(g.order(), 0.0));
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            if (i != j && d[i][j] < kInf) m[i][j] = 1.0 / d[i][j];
        }
    }
    return m;
}

inline double largest_eigenvalue(const Matrix& m) {
    if (m.empty()) return 0.0;
    return jacobi_eigenvalues(m).back();
}

namespace detail {

inline void cycle_walk(const Graph& g, int start, int v, std::vector<bool>& used, int len, std::set<int>& lengths) {
    for (int w = start; w < g.order(); ++w) {
        if (!g.adjacent(v, w)) continue;
        if (w == start && len >= 3) lengths.insert(len);
        if (w > start && !used[w]) {
            used[w] = true;
            cycle_walk(g, start, w, used, len + 1, lengths);
            used[w] = false;
        }
    }
}

}  // namespace detail

/// Lengths of all simple cycles, by walking every simple path from each
/// start vertex through larger vertices only. Exponential; n <= 10.
inline std::set<int> cycle_lengths(const Graph& g) {
    std::set<int> lengths;
    std::vector<bool> used(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        used[s] = true;
        detail::cycle_walk(g, s, s, used, 1, lengths);
        used[s] = false;
    }
    return lengths;
}

/// Tries every vertex permutation. n <= 9.
inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> p(g.order());
    for (int i = 0; i < g.order(); ++i) p[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < g.order() && ok; ++i) {
            for (int j = i + 1; j < g.order() && ok; ++j) ok = g.adjacent(i, j) == h.adjacent(p[i], p[j]);
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

inline bool connected(const Graph& g) {
    auto d = floyd_warshall(g);
    for (int j = 0; j < g.order(); ++j) {
        if (d[0][j] >= kInf) return false;
    }
    return true;
}

/// Rejection-samples a connected graph; density drawn per call when p < 0.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p = -1.0) {
    std::uniform_real_distribution<double> density(0.15, 0.95);
    for (;;) {
        double q = p < 0 ? density(rng) : p;
        Graph g = random_graph(rng, n, q);
        if (connected(g)) return g;
    }
}

/// Random bipartite graph on parts of sizes a and n - a.
inline Graph random_bipartite(std::mt19937_64& rng, int n, int a, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = a; j < n; ++j) {
            if (coin(rng)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace oracle
