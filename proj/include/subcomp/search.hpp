#pragma once

#include <cstddef>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace sc {

/// Which relation the clique kernel follows: edges of G, or edges of the
/// complement of G (so a "clique" is an independent set of G).
enum class Polarity { Clique, Independent };

namespace detail {

inline VertexSet related(const Graph& g, Vertex v, Polarity pol) {
    if (pol == Polarity::Clique) return g.neighbors(v);
    VertexSet s = ~g.neighbors(v);
    s.erase(v);
    return s;
}

inline bool clique_dfs(const Graph& g, VertexSet& cand, std::size_t need, Polarity pol,
                       std::vector<Vertex>& chosen) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    for (Vertex v = cand.first(); v < cand.cap(); v = cand.next_from(v + 1)) {
        // smaller vertices were already erased from cand once exhausted
        VertexSet next = cand & related(g, v, pol);
        chosen.push_back(v);
        if (clique_dfs(g, next, need - 1, pol, chosen)) return true;
        chosen.pop_back();
        cand.erase(v);
        if (cand.count() < need) return false;
    }
    return false;
}

} // namespace detail

/// Lexicographically least k-clique (or k-independent set) inside `domain`,
/// as an ascending vertex list.
inline std::optional<std::vector<Vertex>> find_clique(const Graph& g, const VertexSet& domain, std::size_t k,
                                                      Polarity pol = Polarity::Clique) {
    require_cap(g, domain);
    std::vector<Vertex> chosen;
    if (k == 0) return chosen;
    VertexSet cand = domain;
    if (detail::clique_dfs(g, cand, k, pol, chosen)) return chosen;
    return std::nullopt;
}

inline bool has_clique(const Graph& g, const VertexSet& domain, std::size_t k) {
    return find_clique(g, domain, k, Polarity::Clique).has_value();
}

inline bool has_independent_set(const Graph& g, const VertexSet& domain, std::size_t k) {
    return find_clique(g, domain, k, Polarity::Independent).has_value();
}

inline bool is_kt_free(const Graph& g, std::size_t t) { return !has_clique(g, g.all_vertices(), t); }

/// Injective map from pattern vertices to host vertices; `image[i]` is the
/// host vertex playing pattern vertex i.
struct Embedding {
    std::vector<Vertex> image;

    VertexSet as_set(std::size_t cap) const { return VertexSet::from_range(cap, image); }
};

namespace detail {

/// Vertices of h that some automorphism maps to vertex 0 (including 0).
inline VertexSet orbit_of_zero(const Graph& h) {
    const std::size_t k = h.n();
    VertexSet orbit(k);
    if (k == 0) return orbit;
    std::vector<Vertex> image(k);
    VertexSet used(k);
    // automorphisms sending 0 to r exist iff h embeds into itself with 0 -> r
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) return true;
        for (Vertex v = 0; v < k; ++v) {
            if (used.test(v) || h.degree(v) != h.degree(i)) continue;
            if (i == 0 && v != image[0]) continue;
            bool ok = true;
            for (Vertex j = 0; j < i && ok; ++j) ok = h.has_edge(i, j) == h.has_edge(v, image[j]);
            if (!ok) continue;
            image[i] = v;
            used.insert(v);
            if (self(self, i + 1)) return true;
            used.erase(v);
        }
        return false;
    };
    for (Vertex r = 0; r < k; ++r) {
        image.assign(k, 0);
        image[0] = r;
        used.clear();
        if (dfs(dfs, 0)) orbit.insert(r);
    }
    return orbit;
}

/// Induced-copy search. With `break_symmetry`, pattern vertices in the orbit
/// of vertex 0 must map above image[0]; every copy still has such a
/// representative, but the one returned need not be lexicographically least.
inline std::optional<Embedding> induced_search(const Graph& g, const Graph& h, bool break_symmetry) {
    const std::size_t k = h.n();
    if (k == 0) return Embedding{};
    if (k > g.n()) return std::nullopt;

    // a host vertex can only play pattern vertex i if it has at least as many
    // neighbours and non-neighbours
    std::vector<VertexSet> allowed(k, VertexSet(g.n()));
    for (Vertex i = 0; i < k; ++i) {
        const std::size_t dh = h.degree(i);
        const std::size_t ndh = k - 1 - dh;
        for (Vertex v = 0; v < g.n(); ++v) {
            const std::size_t dg = g.degree(v);
            if (dg >= dh && g.n() - 1 - dg >= ndh) allowed[i].insert(v);
        }
        if (allowed[i].empty()) return std::nullopt;
    }
    const VertexSet orbit = break_symmetry ? orbit_of_zero(h) : VertexSet(k);

    std::vector<Vertex> image(k);
    VertexSet used(g.n());
    VertexSet below(g.n()); // host vertices <= image[0]

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) return true;
        VertexSet cand = allowed[i] - used;
        if (i > 0 && orbit.test(i)) cand -= below;
        for (Vertex j = 0; j < i && cand.any(); ++j) {
            if (h.has_edge(i, j))
                cand &= g.neighbors(image[j]);
            else
                cand -= g.neighbors(image[j]);
        }
        for (Vertex v = cand.first(); v < cand.cap(); v = cand.next_from(v + 1)) {
            image[i] = v;
            used.insert(v);
            if (i == 0) below.insert(v);
            if (self(self, i + 1)) return true;
            used.erase(v);
        }
        return false;
    };
    if (dfs(dfs, 0)) return Embedding{std::move(image)};
    return std::nullopt;
}

} // namespace detail

/// Finds an induced copy of `h` in `g`. Pattern vertices are placed in index
/// order and host candidates are tried in ascending order, so the result is
/// the lexicographically least embedding.
inline std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
    return detail::induced_search(g, h, false);
}

inline bool is_h_free(const Graph& g, const Graph& h) { return !detail::induced_search(g, h, true).has_value(); }

/// True iff h has no module other than the empty set, singletons and V(h).
inline bool is_prime_graph(const Graph& h) {
    const std::size_t k = h.n();
    if (k > 20) throw Error(Errc::InvalidArgs, "primality test is exhaustive; pattern too large");
    if (k < 3) return true;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        if (std::popcount(mask) < 2) continue;
        if (is_module(h, VertexSet::from_mask(k, mask))) return false;
    }
    return true;
}

/// H-freeness using a family of disjoint modules of g. For prime h an
/// induced copy meeting a module M in two or more vertices lies inside M,
/// so it suffices to check every G[M] and the graph keeping one vertex per
/// module. Falls back to the plain search when h is not prime.
inline bool is_h_free_modular(const Graph& g, const Graph& h, const std::vector<VertexSet>& modules) {
    if (h.n() < 4 || !is_prime_graph(h)) return is_h_free(g, h);
    VertexSet covered(g.n());
    VertexSet keep = VertexSet::full(g.n());
    for (const auto& m : modules) {
        require_cap(g, m);
        if (m.intersects(covered)) throw Error(Errc::InvalidArgs, "modules must be disjoint");
        if (!is_module(g, m)) throw Error(Errc::InvalidArgs, "vertex set is not a module");
        covered |= m;
        if (m.empty()) continue;
        keep -= m;
        keep.insert(m.first());
        if (m.count() >= h.n() && !is_h_free(induced(g, m), h)) return false;
    }
    return is_h_free(induced(g, keep), h);
}

} // namespace sc
