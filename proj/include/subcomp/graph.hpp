#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace sc {

/// Undirected simple graph on vertices 0..n-1. Each vertex owns one
/// adjacency bitrow; rows are kept symmetric and irreflexive by every
/// mutator. Optional per-vertex labels carry gadget roles.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    std::size_t n() const noexcept { return rows_.size(); }
    std::size_t order() const noexcept { return rows_.size(); }

    bool has_edge(Vertex u, Vertex v) const noexcept { return u < n() && rows_[u].test(v); }

    void add_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        rows_[u].insert(v);
        rows_[v].insert(u);
    }
    void remove_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        rows_[u].erase(v);
        rows_[v].erase(u);
    }
    void set_edge(Vertex u, Vertex v, bool present) {
        if (present)
            add_edge(u, v);
        else
            remove_edge(u, v);
    }
    void flip_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        rows_[u].flip(v);
        rows_[v].flip(u);
    }

    /// Open neighbourhood N(v).
    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    /// Closed neighbourhood N[v].
    VertexSet closed_neighbors(Vertex v) const {
        VertexSet s = rows_.at(v);
        s.insert(v);
        return s;
    }
    std::size_t degree(Vertex v) const { return rows_.at(v).count(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n(); ++u)
            rows_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    VertexSet all_vertices() const { return VertexSet::full(n()); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != n())
            throw Error(Errc::InvalidArgs, "label count " + std::to_string(labels.size()) +
                                               " differs from vertex count " + std::to_string(n()));
        labels_ = std::move(labels);
    }

    friend void subgraph_complement_into(const Graph& g, const VertexSet& s, Graph& out);
    friend Graph complement(const Graph& g);

    /// Equality is structural: labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    void check_pair(Vertex u, Vertex v) const {
        if (u >= n() || v >= n())
            throw Error(Errc::InvalidArgs, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") outside graph of order " + std::to_string(n()));
        if (u == v) throw Error(Errc::InvalidArgs, "self-loop at vertex " + std::to_string(u));
    }

    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

inline void require_cap(const Graph& g, const VertexSet& s) {
    if (s.cap() != g.n())
        throw Error(Errc::CapMismatch, "vertex set over " + std::to_string(s.cap()) +
                                           " vertices used with graph of order " + std::to_string(g.n()));
}

inline Graph complement(const Graph& g) {
    Graph out(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        out.rows_[u] = ~g.rows_[u];
        out.rows_[u].erase(u);
    }
    return out;
}

/// Writes G (+) S into `out`, flipping every pair inside S. `out` is resized
/// when its order differs, so a scratch graph can be reused across calls.
inline void subgraph_complement_into(const Graph& g, const VertexSet& s, Graph& out) {
    require_cap(g, s);
    if (out.n() != g.n()) out = Graph(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        out.rows_[u] = g.rows_[u];
        if (s.test(u)) {
            out.rows_[u] ^= s;
            out.rows_[u].erase(u);
        }
    }
}

/// G (+) S: complement the subgraph induced by S, keep everything else.
inline Graph subgraph_complement(const Graph& g, const VertexSet& s) {
    Graph out(g.n());
    subgraph_complement_into(g, s, out);
    if (g.has_labels()) out.set_labels(g.labels());
    return out;
}

/// G[S]. Vertex i of the result is the i-th smallest member of S; the same
/// order is returned by `s.to_vector()`.
inline Graph induced(const Graph& g, const VertexSet& s) {
    require_cap(g, s);
    const auto members = s.to_vector();
    Graph out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.has_edge(members[i], members[j])) out.add_edge(i, j);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (Vertex v : members) labels.push_back(g.labels()[v]);
        out.set_labels(std::move(labels));
    }
    return out;
}

/// a's vertices keep their indices; b's are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.n() + b.n());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    return out;
}

/// Cartesian ("cross") product; vertex (i, j) has index i * b.n() + j.
inline Graph cross_product(const Graph& a, const Graph& b) {
    const std::size_t m = b.n();
    Graph out(a.n() * m);
    for (Vertex i = 0; i < a.n(); ++i)
        for (auto [x, y] : b.edges()) out.add_edge(i * m + x, i * m + y);
    for (auto [x, y] : a.edges())
        for (Vertex j = 0; j < m; ++j) out.add_edge(x * m + j, y * m + j);
    return out;
}

/// complement(h) x h, which admits no S making it h-free.
inline Graph no_instance(const Graph& h) {
    if (h.n() < 2)
        throw Error(Errc::PatternTooSmall, "no-instance needs a pattern with at least 2 vertices, got " +
                                               std::to_string(h.n()));
    return cross_product(complement(h), h);
}

/// True if every vertex of x sees the same neighbours outside x.
inline bool is_module(const Graph& g, const VertexSet& x) {
    require_cap(g, x);
    const VertexSet outside = ~x;
    bool first = true;
    VertexSet reference(g.n());
    bool ok = true;
    x.for_each([&](Vertex v) {
        VertexSet outer = g.neighbors(v) & outside;
        if (first) {
            reference = std::move(outer);
            first = false;
        } else if (!(outer == reference)) {
            ok = false;
        }
    });
    return ok;
}

inline bool all_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_cap(g, a);
    require_cap(g, b);
    bool ok = true;
    a.for_each([&](Vertex v) {
        if (!(b - g.closed_neighbors(v)).empty() || b.test(v)) ok = false;
    });
    return ok;
}

inline bool nonadjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_cap(g, a);
    require_cap(g, b);
    bool ok = true;
    a.for_each([&](Vertex v) {
        if (g.neighbors(v).intersects(b)) ok = false;
    });
    return ok;
}

/// Smallest k such that every subgraph has a vertex of degree <= k,
/// by repeatedly deleting a minimum-degree vertex.
inline std::size_t degeneracy(const Graph& g) {
    if (g.n() == 0) throw Error(Errc::NullGraph, "degeneracy of the null graph is undefined");
    VertexSet alive = g.all_vertices();
    std::size_t best = 0;
    for (std::size_t round = 0; round < g.n(); ++round) {
        Vertex arg = g.n();
        std::size_t min_deg = g.n();
        alive.for_each([&](Vertex v) {
            std::size_t d = g.neighbors(v).intersection_count(alive);
            if (d < min_deg) {
                min_deg = d;
                arg = v;
            }
        });
        best = std::max(best, min_deg);
        alive.erase(arg);
    }
    return best;
}

} // namespace sc
