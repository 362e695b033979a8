#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/metrics.hpp"
#include "pancyclic/rational.hpp"

namespace pancyclic {

/// Dense row-major matrix of doubles.
struct DenseMatrix {
    int n = 0;
    std::vector<double> entries;

    DenseMatrix() = default;
    explicit DenseMatrix(int order)
        : n(order), entries(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {}

    double at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
};

inline DenseMatrix distance_matrix(const DistanceMatrix& dm) {
    if (!dm.all_finite()) throw DisconnectedGraph("distance matrix has unreachable entries");
    DenseMatrix m(dm.order());
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = 0; j < dm.order(); ++j) m.at(i, j) = dm.at(i, j);
    }
    return m;
}

inline DenseMatrix reciprocal_matrix(const DistanceMatrix& dm) {
    DenseMatrix m(dm.order());
    for (int i = 0; i < dm.order(); ++i) {
        for (int j = 0; j < dm.order(); ++j) {
            int d = dm.at(i, j);
            if (i != j && d != DistanceMatrix::kUnreachable) m.at(i, j) = 1.0 / d;
        }
    }
    return m;
}

struct SolverOptions {
    double rayleigh_tolerance = 1e-13;
    double residual_tolerance = 1e-10;
    int max_iterations = 200'000;
    int fallback_iterations = 50;
};

struct SpectralRadius {
    double value = 0.0;
    /// |Mx - value*x|_inf / |x|_inf for the returned vector.
    double residual = 0.0;
    int iterations = 0;
    bool used_fallback = false;
    /// Dominant eigenvector, scaled to unit max-norm.
    std::vector<double> eigenvector;
};

namespace detail {

inline void multiply(const DenseMatrix& m, const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < m.n; ++i) {
        double s = 0.0;
        const double* row = &m.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(m.n)];
        for (int j = 0; j < m.n; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
}

inline double max_norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s = std::max(s, std::abs(v));
    return s;
}

inline double rayleigh(const std::vector<double>& x, const std::vector<double>& mx) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * mx[i];
        den += x[i] * x[i];
    }
    return num / den;
}

inline double residual(const std::vector<double>& x, const std::vector<double>& mx, double lambda) {
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(mx[i] - lambda * x[i]));
    return r / max_norm(x);
}

/// Solves a x = b in place by LU with partial pivoting. Returns false when
/// a pivot vanishes.
inline bool lu_solve(DenseMatrix a, std::vector<double>& b) {
    const int n = a.n;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(a.at(i, k)) > std::abs(a.at(p, k))) p = i;
        }
        if (a.at(p, k) == 0.0) return false;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
            std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(k)]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = a.at(i, k) / a.at(k, k);
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = s / a.at(i, i);
    }
    return true;
}

}  // namespace detail

/// Perron root of a symmetric nonnegative matrix by power iteration from the
/// all-ones vector. Converged when successive Rayleigh quotients agree to
/// `rayleigh_tolerance` and the residual is below `residual_tolerance`. On
/// hitting the iteration cap, finishes with Rayleigh-shifted inverse
/// iteration.
inline SpectralRadius perron_root(const DenseMatrix& m, const SolverOptions& opts = {}) {
    const auto n = static_cast<std::size_t>(m.n);
    SpectralRadius out;
    std::vector<double> x(n, 1.0), y(n, 0.0);
    if (n == 0) return out;

    double lambda = 0.0;
    double previous = -1.0;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        detail::multiply(m, x, y);
        lambda = detail::rayleigh(x, y);
        double res = detail::residual(x, y, lambda);
        out.iterations = it;
        if (std::abs(lambda - previous) < opts.rayleigh_tolerance && res < opts.residual_tolerance) {
            out.value = lambda;
            out.residual = res;
            out.eigenvector = x;
            return out;
        }
        if (detail::max_norm(y) == 0.0) {
            // Zero matrix: every vector is an eigenvector for 0.
            out.value = 0.0;
            out.residual = 0.0;
            out.eigenvector = x;
            return out;
        }
        // The all-ones start can already be exact (regular row sums).
        if (res == 0.0) {
            out.value = lambda;
            out.eigenvector = x;
            return out;
        }
        previous = lambda;
        double scale = detail::max_norm(y);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / scale;
    }

    out.used_fallback = true;
    for (int it = 0; it < opts.fallback_iterations; ++it) {
        DenseMatrix shifted = m;
        double sigma = lambda + 1e-12 * (1.0 + std::abs(lambda));
        for (int i = 0; i < m.n; ++i) shifted.at(i, i) -= sigma;
        std::vector<double> z = x;
        if (!detail::lu_solve(shifted, z)) break;
        double scale = detail::max_norm(z);
        if (scale == 0.0) break;
        // Keep the Perron orientation (positive entries).
        double sign = 0.0;
        for (double v : z) sign += v;
        if (sign < 0) scale = -scale;
        for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / scale;
        detail::multiply(m, x, y);
        lambda = detail::rayleigh(x, y);
        ++out.iterations;
        double res = detail::residual(x, y, lambda);
        if (res < opts.residual_tolerance) {
            out.value = lambda;
            out.residual = res;
            out.eigenvector = x;
            return out;
        }
    }
    throw NonConvergence("residual above " + format_double(opts.residual_tolerance) + " after " +
                         std::to_string(out.iterations) + " iterations");
}

/// rho(G), the largest eigenvalue of D(G). Throws DisconnectedGraph.
inline SpectralRadius distance_spectral_radius(const DistanceMatrix& dm, const SolverOptions& opts = {}) {
    return perron_root(distance_matrix(dm), opts);
}

inline SpectralRadius distance_spectral_radius(const Graph& g, const SolverOptions& opts = {}) {
    if (!is_connected(g)) throw DisconnectedGraph("distance spectral radius needs a connected graph");
    return distance_spectral_radius(all_pairs_distances(g), opts);
}

/// rho*(G), the largest eigenvalue of RD(G). For a disconnected graph this is
/// the maximum over the components, each solved on its own. The returned
/// eigenvector is the winning component's, padded with zeros.
inline SpectralRadius harary_spectral_radius(const Graph& g, const SolverOptions& opts = {}) {
    SpectralRadius best;
    best.eigenvector.assign(static_cast<std::size_t>(g.order()), 0.0);
    best.eigenvector[0] = 1.0;
    for (VertexSet c : component_sets(g)) {
        if (popcount(c) < 2) continue;
        Graph h = g.induced(c);
        SpectralRadius r = perron_root(reciprocal_matrix(all_pairs_distances(h)), opts);
        if (r.value > best.value) {
            std::vector<double> full(static_cast<std::size_t>(g.order()), 0.0);
            std::size_t k = 0;
            for (VertexSet s = c; s; s &= s - 1) full[static_cast<std::size_t>(lowest(s))] = r.eigenvector[k++];
            r.eigenvector = std::move(full);
            r.iterations += best.iterations;
            best = std::move(r);
        } else {
            best.iterations += r.iterations;
            best.residual = std::max(best.residual, r.residual);
        }
    }
    return best;
}

/// Largest root of rho^3 - (n-2) rho^2 - (7n-23) rho - 2(n-3), the closed
/// form for rho(K2 v (K_{n-4} + 2K1)). Bisection on [n-2, 3n], where the
/// cubic changes sign from negative to positive.
inline double cubic_root_check(int n) {
    if (n < 5) throw InvalidArgument("cubic_root_check needs n >= 5");
    const double nn = n;
    auto f = [nn](double r) { return ((r - (nn - 2)) * r - (7 * nn - 23)) * r - 2 * (nn - 3); };
    double lo = nn - 2, hi = 3 * nn;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// (n-3+sqrt(n^2+18n-79))/4, the larger root of 2x^2-(n-3)x+11-3n, the
/// closed form for rho* of the complement of K2 v (K_{n-4} + 2K1).
inline double quadratic_root_check(int n) {
    if (n < 5) throw InvalidArgument("quadratic_root_check needs n >= 5");
    const double nn = n;
    return (nn - 3 + std::sqrt(nn * nn + 18 * nn - 79)) / 4;
}

// --- exact eigenvalue location ----------------------------------------------

/// Polynomial with exact coefficients, lowest degree first.
using Polynomial = std::vector<Rational>;

namespace detail {

inline void trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Polynomial derivative(const Polynomial& p) {
    Polynomial d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
    trim(d);
    return d;
}

/// Remainder of a / b.
inline Polynomial remainder(Polynomial a, const Polynomial& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Polynomial quotient(Polynomial a, const Polynomial& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Polynomial q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return q;
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Polynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// det(xI - M) by Faddeev-LeVerrier, exact.
inline Polynomial characteristic_polynomial(const RationalMatrix& m) {
    const int n = m.n;
    Polynomial c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    RationalMatrix acc{n, std::vector<Rational>(static_cast<std::size_t>(n * n))};  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RationalMatrix next{n, std::vector<Rational>(static_cast<std::size_t>(n * n))};
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l) {
                    if (m.at(i, l) != 0 && acc.at(l, j) != 0) s += m.at(i, l) * acc.at(l, j);
                }
                if (i == j) s += c[static_cast<std::size_t>(n - k + 1)];
                next.at(i, j) = std::move(s);
            }
        }
        Rational trace = 0;
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) trace += m.at(i, l) * next.at(l, i);
        }
        c[static_cast<std::size_t>(n - k)] = -trace / k;
        acc = std::move(next);
    }
    return c;
}

/// Number of distinct eigenvalues of the symmetric matrix `m` strictly
/// greater than `t`, by a Sturm sequence on the square-free part of the
/// characteristic polynomial.
inline int eigenvalues_above(const RationalMatrix& m, const Rational& t) {
    Polynomial p = characteristic_polynomial(m);
    Polynomial g = detail::gcd(p, detail::derivative(p));
    Polynomial q = g.size() > 1 ? detail::quotient(p, g) : p;
    if (detail::evaluate(q, t) == 0) q = detail::quotient(q, Polynomial{-t, Rational(1)});
    if (q.size() <= 1) return 0;

    std::vector<Polynomial> chain{q, detail::derivative(q)};
    while (chain.back().size() > 1) {
        Polynomial r = detail::remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& coeff : r) coeff = -coeff;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_t, at_inf;
    for (const auto& p_i : chain) {
        at_t.push_back(detail::sign(detail::evaluate(p_i, t)));
        at_inf.push_back(detail::sign(p_i.back()));
    }
    return detail::sign_changes(at_t) - detail::sign_changes(at_inf);
}

/// Exact test of "largest eigenvalue of m <= t".
inline bool spectral_radius_at_most(const RationalMatrix& m, const Rational& t) {
    return eigenvalues_above(m, t) == 0;
}

}  // namespace pancyclic
