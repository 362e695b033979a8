#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pancyclic/error.hpp"

namespace pancyclic {

using VertexSet = std::uint64_t;

constexpr int kMaxOrder = 64;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

/// Mask with the low `n` bits set (n in 0..64).
constexpr VertexSet low_bits(int n) noexcept {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) noexcept { return std::popcount(s); }
inline int lowest(VertexSet s) noexcept { return std::countr_zero(s); }

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset per vertex. Values are immutable once built; every constructor
/// below returns a fresh graph.
class Graph {
public:
    /// The single-vertex graph.
    Graph() : n_(1), m_(0) { rows_.fill(0); }

    /// Edgeless graph on `n` vertices.
    explicit Graph(int n) : n_(check_order(n)), m_(0) { rows_.fill(0); }

    /// Builds from adjacency rows. Throws InvalidArgument when the rows are
    /// not symmetric, contain a loop, or reference vertices >= n.
    static Graph from_rows(int n, std::span<const VertexSet> rows) {
        check_order(n);
        if (static_cast<int>(rows.size()) != n) {
            throw InvalidArgument("row count does not match order");
        }
        Graph g(n);
        int degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            VertexSet r = rows[static_cast<std::size_t>(v)];
            if (r & ~low_bits(n)) throw InvalidArgument("adjacency references a vertex outside 0..n-1");
            if (r & bit(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
            g.rows_[static_cast<std::size_t>(v)] = r;
            degree_sum += popcount(r);
        }
        for (int v = 0; v < n; ++v) {
            for (VertexSet r = g.rows_[static_cast<std::size_t>(v)]; r; r &= r - 1) {
                if (!(g.rows_[static_cast<std::size_t>(lowest(r))] & bit(v))) {
                    throw InvalidArgument("adjacency is not symmetric");
                }
            }
        }
        g.m_ = degree_sum / 2;
        return g;
    }

    /// Builds from an edge list. Duplicate edges collapse; loops are rejected.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        check_order(n);
        std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                      "} outside vertex range");
            }
            if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            rows[static_cast<std::size_t>(u)] |= bit(v);
            rows[static_cast<std::size_t>(v)] |= bit(u);
        }
        return from_rows(n, rows);
    }

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }
    VertexSet vertices() const noexcept { return low_bits(n_); }
    VertexSet neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const noexcept { return popcount(neighbors(v)); }
    bool adjacent(int u, int v) const noexcept { return (neighbors(u) >> v) & 1U; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u) {
            for (VertexSet r = neighbors(u) & ~low_bits(u + 1); r; r &= r - 1) out.emplace_back(u, lowest(r));
        }
        return out;
    }

    /// Relabels vertex v as perm[v]; `perm` must be a permutation of 0..n-1.
    Graph permuted(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
        VertexSet seen = 0;
        for (int p : perm) {
            if (p < 0 || p >= n_ || (seen & bit(p))) throw InvalidArgument("not a permutation");
            seen |= bit(p);
        }
        Graph g(n_);
        for (int u = 0; u < n_; ++u) {
            VertexSet row = 0;
            for (VertexSet r = neighbors(u); r; r &= r - 1) row |= bit(perm[static_cast<std::size_t>(lowest(r))]);
            g.rows_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = row;
        }
        g.m_ = m_;
        return g;
    }

    /// Subgraph induced by `keep`; vertex i of the result is the i-th
    /// smallest member of `keep`.
    Graph induced(VertexSet keep) const {
        keep &= vertices();
        if (!keep) throw InvalidArgument("induced subgraph needs at least one vertex");
        std::vector<int> label(static_cast<std::size_t>(n_), -1);
        int next = 0;
        for (VertexSet r = keep; r; r &= r - 1) label[static_cast<std::size_t>(lowest(r))] = next++;
        Graph g(next);
        int degree_sum = 0;
        for (VertexSet r = keep; r; r &= r - 1) {
            int u = lowest(r);
            VertexSet row = 0;
            for (VertexSet s = neighbors(u) & keep; s; s &= s - 1) row |= bit(label[static_cast<std::size_t>(lowest(s))]);
            g.rows_[static_cast<std::size_t>(label[static_cast<std::size_t>(u)])] = row;
            degree_sum += popcount(row);
        }
        g.m_ = degree_sum / 2;
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        if (a.n_ != b.n_) return false;
        return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
    }

private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxOrder) {
            throw InvalidArgument("graph order " + std::to_string(n) + " outside 1..64");
        }
        return n;
    }

    friend Graph complement(const Graph& g);
    friend Graph disjoint_union(const Graph& g, const Graph& h);
    friend Graph join(const Graph& g, const Graph& h);

    int n_;
    int m_;
    std::array<VertexSet, kMaxOrder> rows_;
};

// --- constructors -----------------------------------------------------------

inline Graph complete(int k) {
    static_cast<void>(Graph(k));  // validates k
    std::vector<VertexSet> rows(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) rows[static_cast<std::size_t>(v)] = low_bits(k) & ~bit(v);
    return Graph::from_rows(k, rows);
}

/// k isolated vertices (kK1).
inline Graph empty(int k) { return Graph(k); }

inline Graph complement(const Graph& g) {
    Graph c(g.n_);
    for (int v = 0; v < g.n_; ++v) {
        c.rows_[static_cast<std::size_t>(v)] = ~g.rows_[static_cast<std::size_t>(v)] & g.vertices() & ~bit(v);
    }
    c.m_ = g.n_ * (g.n_ - 1) / 2 - g.m_;
    return c;
}

/// G + H: g keeps labels 0..|g|-1, h is shifted up by |g|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.n_ + h.n_;
    if (n > kMaxOrder) throw InvalidArgument("disjoint union exceeds 64 vertices");
    Graph u(n);
    for (int v = 0; v < g.n_; ++v) u.rows_[static_cast<std::size_t>(v)] = g.rows_[static_cast<std::size_t>(v)];
    for (int v = 0; v < h.n_; ++v) {
        u.rows_[static_cast<std::size_t>(g.n_ + v)] = h.rows_[static_cast<std::size_t>(v)] << g.n_;
    }
    u.m_ = g.m_ + h.m_;
    return u;
}

/// G v H: disjoint union plus every edge between g's and h's vertices.
/// g's vertices come first.
inline Graph join(const Graph& g, const Graph& h) {
    Graph j = disjoint_union(g, h);
    VertexSet g_side = low_bits(g.n_);
    VertexSet h_side = j.vertices() & ~g_side;
    for (int v = 0; v < g.n_; ++v) j.rows_[static_cast<std::size_t>(v)] |= h_side;
    for (int v = g.n_; v < j.n_; ++v) j.rows_[static_cast<std::size_t>(v)] |= g_side;
    j.m_ += g.n_ * h.n_;
    return j;
}

/// kG, the disjoint union of k copies of g.
inline Graph copies(const Graph& g, int k) {
    if (k < 1) throw InvalidArgument("copies needs k >= 1");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidArgument("complete_bipartite needs both sides >= 1");
    return join(empty(a), empty(b));
}

/// K_{1,k}; the centre is vertex 0.
inline Graph star(int k) { return complete_bipartite(1, k); }

inline Graph path(int k) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < k; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(k, e);
}

inline Graph cycle(int k) {
    if (k < 3) throw InvalidArgument("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
    return Graph::from_edges(k, e);
}

// --- structural queries -----------------------------------------------------

inline int edge_count(const Graph& g) noexcept { return g.edge_count(); }

inline int min_degree(const Graph& g) noexcept {
    int d = kMaxOrder;
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

/// Degrees in ascending order.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

/// Vertices reachable from `source` inside `allowed` (source is always included).
inline VertexSet reachable(const Graph& g, int source, VertexSet allowed) noexcept {
    VertexSet seen = bit(source);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) noexcept {
    return reachable(g, 0, g.vertices()) == g.vertices();
}

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<VertexSet> component_sets(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        VertexSet c = reachable(g, lowest(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

struct Component {
    Graph graph;
    /// vertices[i] is the original label of the component's vertex i.
    std::vector<int> vertices;
};

inline std::vector<Component> components(const Graph& g) {
    std::vector<Component> out;
    for (VertexSet c : component_sets(g)) {
        Component comp{g.induced(c), {}};
        for (VertexSet r = c; r; r &= r - 1) comp.vertices.push_back(lowest(r));
        out.push_back(std::move(comp));
    }
    return out;
}

struct BipartitionWitness {
    /// side[v] is 1 or 2.
    std::vector<int> side;
    /// Size of part 1, which holds the smallest vertex of every component.
    int a = 0;
    VertexSet part1 = 0;
};

struct OddCycle {
    /// Starts at the cycle's smallest vertex; vertices[1] < vertices.back().
    std::vector<int> vertices;
};

using BipartitionResult = std::variant<BipartitionWitness, OddCycle>;

/// BFS two-colouring per component. Returns an odd cycle of g when no
/// colouring exists.
inline BipartitionResult bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (VertexSet r = g.neighbors(u); r; r &= r - 1) {
                int v = lowest(r);
                auto vi = static_cast<std::size_t>(v);
                auto ui = static_cast<std::size_t>(u);
                if (color[vi] == -1) {
                    color[vi] = 1 - color[ui];
                    parent[vi] = u;
                    depth[vi] = depth[ui] + 1;
                    queue.push_back(v);
                } else if (color[vi] == color[ui]) {
                    // Same colour at equal depth: climb both tree paths to the
                    // common ancestor.
                    std::vector<int> left{u}, right{v};
                    int x = u, y = v;
                    while (x != y) {
                        if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
                            x = parent[static_cast<std::size_t>(x)];
                            left.push_back(x);
                        } else {
                            y = parent[static_cast<std::size_t>(y)];
                            right.push_back(y);
                        }
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    std::rotate(left.begin(), std::min_element(left.begin(), left.end()), left.end());
                    if (left[1] > left.back()) std::reverse(left.begin() + 1, left.end());
                    return OddCycle{std::move(left)};
                }
            }
        }
    }
    BipartitionWitness w;
    w.side.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        bool first = color[static_cast<std::size_t>(v)] == 0;
        w.side[static_cast<std::size_t>(v)] = first ? 1 : 2;
        if (first) {
            w.part1 |= bit(v);
            ++w.a;
        }
    }
    return w;
}

inline bool is_bipartite(const Graph& g) {
    return std::holds_alternative<BipartitionWitness>(bipartition(g));
}

inline bool is_complete_bipartite(const Graph& g) {
    if (!is_connected(g)) return false;
    auto result = bipartition(g);
    auto* w = std::get_if<BipartitionWitness>(&result);
    return w != nullptr && g.edge_count() == w->a * (g.order() - w->a) && w->a < g.order();
}

}  // namespace pancyclic
