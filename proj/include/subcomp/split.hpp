#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "ramsey.hpp"
#include "search.hpp"

namespace sc {

/// A (p,q)-split partition of some vertex domain: G[P] has no K_{p+1} and
/// G[Q] has no independent set of size q+1. Both sets index the full graph,
/// so partitions of a region are expressed in the host's vertex numbering.
struct SplitPartition {
    int p = 1;
    int q = 1;
    VertexSet P;
    VertexSet Q;

    friend bool operator==(const SplitPartition& a, const SplitPartition& b) {
        return a.p == b.p && a.q == b.q && a.P == b.P && a.Q == b.Q;
    }
};

namespace detail {

inline void require_pq(int p, int q) {
    if (p < 1 || q < 1)
        throw Error(Errc::InvalidArgs,
                    "(p,q)-split needs p, q >= 1, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

inline bool split_sides_ok(const Graph& g, const VertexSet& P, const VertexSet& Q, int p, int q) {
    return !has_clique(g, P, static_cast<std::size_t>(p) + 1) &&
           !has_independent_set(g, Q, static_cast<std::size_t>(q) + 1);
}

inline bool split_branch(const Graph& g, const VertexSet& domain, int p, int q, const VertexSet& forced_q,
                         const VertexSet& forced_p, std::optional<SplitPartition>& out) {
    if (has_independent_set(g, forced_q, static_cast<std::size_t>(q) + 1)) return false;
    if (has_clique(g, forced_p, static_cast<std::size_t>(p) + 1)) return false;
    const VertexSet rest = domain - forced_q;
    const auto clique = find_clique(g, rest, static_cast<std::size_t>(p) + 1);
    if (!clique) {
        out = SplitPartition{p, q, rest, forced_q};
        return true;
    }
    // some vertex of this clique must go to Q; branch on the first such one
    VertexSet next_p = forced_p;
    for (Vertex c : *clique) {
        if (forced_p.test(c)) continue;
        VertexSet next_q = forced_q;
        next_q.insert(c);
        if (split_branch(g, domain, p, q, next_q, next_p, out)) return true;
        next_p.insert(c);
    }
    return false;
}

template <typename F>
void for_each_subset_up_to(const std::vector<Vertex>& pool, std::size_t limit, std::size_t cap, F&& f) {
    VertexSet current(cap);
    auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
        f(current);
        if (size == limit) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            current.insert(pool[i]);
            self(self, i + 1, size + 1);
            current.erase(pool[i]);
        }
    };
    rec(rec, 0, 0);
}

} // namespace detail

inline bool is_split_partition(const Graph& g, const VertexSet& domain, const SplitPartition& part) {
    require_cap(g, domain);
    if (part.P.cap() != g.n() || part.Q.cap() != g.n()) return false;
    if (part.P.intersects(part.Q)) return false;
    if (!((part.P | part.Q) == domain)) return false;
    return detail::split_sides_ok(g, part.P, part.Q, part.p, part.q);
}

inline bool is_split_partition(const Graph& g, const SplitPartition& part) {
    return is_split_partition(g, g.all_vertices(), part);
}

/// Decides whether G[domain] is (p,q)-split and returns a partition if so.
/// Exact: while the P side still holds a K_{p+1}, one of its vertices must
/// move to Q, and every choice is explored.
inline std::optional<SplitPartition> find_split_partition(const Graph& g, const VertexSet& domain, int p, int q) {
    detail::require_pq(p, q);
    require_cap(g, domain);
    std::optional<SplitPartition> out;
    detail::split_branch(g, domain, p, q, VertexSet(g.n()), VertexSet(g.n()), out);
    return out;
}

inline std::optional<SplitPartition> find_split_partition(const Graph& g, int p, int q) {
    return find_split_partition(g, g.all_vertices(), p, q);
}

/// All (p,q)-split partitions of G[domain], sorted by the P bitmask.
/// Any other partition (P', Q') differs from the seed by X = P n Q' and
/// Y = P' n Q, each of size below R(p+1, q+1); every such guess is tried.
inline std::vector<SplitPartition> enumerate_split_partitions(const Graph& g, const VertexSet& domain, int p, int q,
                                                              const SplitPartition& seed) {
    detail::require_pq(p, q);
    require_cap(g, domain);
    if (seed.p != p || seed.q != q || !is_split_partition(g, domain, seed))
        throw Error(Errc::InvalidSeed, "seed is not a (" + std::to_string(p) + "," + std::to_string(q) +
                                           ")-split partition of the domain");

    const auto bound = ramsey_bound(p + 1, q + 1).value;
    const std::size_t limit = bound == 0 ? 0 : static_cast<std::size_t>(bound - 1);
    const auto p_pool = seed.P.to_vector();
    const auto q_pool = seed.Q.to_vector();

    std::vector<SplitPartition> found;
    detail::for_each_subset_up_to(p_pool, limit, g.n(), [&](const VertexSet& x) {
        const VertexSet p_keep = seed.P - x;
        const VertexSet q_gain = seed.Q | x;
        detail::for_each_subset_up_to(q_pool, limit, g.n(), [&](const VertexSet& y) {
            VertexSet new_p = p_keep | y;
            VertexSet new_q = q_gain - y;
            if (detail::split_sides_ok(g, new_p, new_q, p, q))
                found.push_back(SplitPartition{p, q, std::move(new_p), std::move(new_q)});
        });
    });
    std::sort(found.begin(), found.end(),
              [](const SplitPartition& a, const SplitPartition& b) { return bitmask_less(a.P, b.P); });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const SplitPartition& a, const SplitPartition& b) { return a.P == b.P; }),
                found.end());
    return found;
}

inline std::vector<SplitPartition> enumerate_split_partitions(const Graph& g, int p, int q,
                                                              const SplitPartition& seed) {
    return enumerate_split_partitions(g, g.all_vertices(), p, q, seed);
}

} // namespace sc
