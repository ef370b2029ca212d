#pragma once

// Reference implementations used only by the tests. They work on raw
// adjacency bitmasks (n <= 32) and share no code with the library beyond
// reading edges out of an sc::Graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "subcomp/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Mini {
    int n = 0;
    std::vector<Mask> adj;

    bool edge(int u, int v) const { return (adj[u] >> v) & 1U; }
    Mask all() const { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
};

inline Mini from_graph(const sc::Graph& g) {
    Mini m{static_cast<int>(g.n()), std::vector<Mask>(g.n(), 0)};
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v)
            if (u != v && g.has_edge(u, v)) m.adj[u] |= Mask{1} << v;
    return m;
}

inline sc::Graph to_graph(const Mini& m) {
    sc::Graph g(m.n);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (m.edge(u, v)) g.add_edge(u, v);
    return g;
}

/// Pair (u,v), u<v, in lexicographic order <-> bit of mask.
inline Mini from_pair_mask(int n, std::uint64_t mask) {
    Mini m{n, std::vector<Mask>(n, 0)};
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) {
                m.adj[u] |= Mask{1} << v;
                m.adj[v] |= Mask{1} << u;
            }
    return m;
}

inline Mini complement(const Mini& g) {
    Mini c = g;
    for (int u = 0; u < g.n; ++u) c.adj[u] = ~g.adj[u] & g.all() & ~(Mask{1} << u);
    return c;
}

/// Flip every pair inside s, pair by pair.
inline Mini flip(const Mini& g, Mask s) {
    Mini r = g;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (((s >> u) & 1U) && ((s >> v) & 1U)) {
                r.adj[u] ^= Mask{1} << v;
                r.adj[v] ^= Mask{1} << u;
            }
    return r;
}

/// Does g[within] contain a set of k pairwise adjacent (or, if !clique,
/// pairwise nonadjacent) vertices? Plain subset enumeration.
inline bool has_uniform_set(const Mini& g, Mask within, int k, bool clique) {
    if (k <= 0) return true;
    if (std::popcount(within) < k) return false;
    for (Mask s = within;; s = (s - 1) & within) {
        if (std::popcount(s) == k) {
            bool ok = true;
            for (int u = 0; u < g.n && ok; ++u)
                if ((s >> u) & 1U)
                    for (int v = u + 1; v < g.n && ok; ++v)
                        if ((s >> v) & 1U) ok = g.edge(u, v) == clique;
            if (ok) return true;
        }
        if (s == 0) break;
    }
    return false;
}

inline bool has_clique(const Mini& g, int k) { return has_uniform_set(g, g.all(), k, true); }

/// Induced copy of h in g by trying every injective map (k-subsets in
/// increasing order, all orderings via next_permutation).
inline bool contains_induced(const Mini& g, const Mini& h) {
    if (h.n > g.n) return false;
    if (h.n == 0) return true;
    std::vector<int> pick(h.n);
    std::vector<int> sel(g.n, 0);
    std::fill(sel.end() - h.n, sel.end(), 1);
    do {
        std::vector<int> chosen;
        for (int i = 0; i < g.n; ++i)
            if (sel[i]) chosen.push_back(i);
        std::vector<int> perm = chosen;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (int a = 0; a < h.n && ok; ++a)
                for (int b = a + 1; b < h.n && ok; ++b) ok = g.edge(perm[a], perm[b]) == h.edge(a, b);
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (std::next_permutation(sel.begin(), sel.end()));
    return false;
}

/// Every S with g (+) S avoiding an induced h, in increasing mask order.
template <typename Free>
std::vector<Mask> all_solutions(const Mini& g, Free&& is_free) {
    std::vector<Mask> out;
    for (Mask s = 0; s <= g.all() && (g.n < 32); ++s) {
        if (is_free(flip(g, s))) out.push_back(s);
        if (s == g.all()) break;
    }
    return out;
}

/// Smallest cardinality of a solution, or -1.
template <typename Free>
int min_solution_size(const Mini& g, Free&& is_free) {
    int best = -1;
    for (Mask s : all_solutions(g, is_free))
        if (best < 0 || std::popcount(s) < best) best = std::popcount(s);
    return best;
}

/// All bipartitions (P, Q) of the whole vertex set with no K_{p+1} in P and
/// no independent (q+1)-set in Q; returned as P masks in increasing order.
inline std::vector<Mask> split_partitions(const Mini& g, int p, int q) {
    std::vector<Mask> out;
    for (Mask P = 0;; ++P) {
        const Mask Q = g.all() & ~P;
        if (!has_uniform_set(g, P, p + 1, true) && !has_uniform_set(g, Q, q + 1, false)) out.push_back(P);
        if (P == g.all()) break;
    }
    return out;
}

/// Largest minimum degree over all induced subgraphs.
inline int degeneracy(const Mini& g) {
    int best = 0;
    for (Mask s = 1; s <= g.all(); ++s) {
        int mn = 64;
        for (int v = 0; v < g.n; ++v)
            if ((s >> v) & 1U) mn = std::min(mn, std::popcount(g.adj[v] & s));
        best = std::max(best, mn);
        if (s == g.all()) break;
    }
    return best;
}

inline Mask mask_of(const sc::VertexSet& s) {
    Mask m = 0;
    for (auto v : s.to_vector()) m |= Mask{1} << v;
    return m;
}

/// Number of true literals needed: truth table scan, values[i] = bit (n-1-i)
/// of the row index so rows run in x1-first lexicographic order.
struct Lit {
    int var;
    bool pos;
};

inline std::optional<std::vector<bool>> least_assignment(int n, const std::vector<std::vector<Lit>>& clauses, int r) {
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
        std::vector<bool> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = (row >> (n - 1 - i)) & 1U;
        bool ok = true;
        for (const auto& c : clauses) {
            int t = 0;
            for (const auto& l : c) t += vals[l.var - 1] == l.pos;
            if (t < r) {
                ok = false;
                break;
            }
        }
        if (ok) return vals;
    }
    return std::nullopt;
}

} // namespace oracle
