#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "split.hpp"

namespace sc {

enum class Status { Yes, No, Unknown };

constexpr std::string_view status_name(Status s) noexcept {
    switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
    }
    return "?";
}

struct SolveStats {
    std::uint64_t subsets_examined = 0;
    std::uint64_t pairs_examined = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Outcome of one subgraph-complementation query. A Yes always carries the
/// set S and `verified` records an independent re-check of G (+) S.
struct SolveReport {
    Status status = Status::No;
    std::optional<VertexSet> solution;
    SolveStats stats;
    bool verified = false;
};

/// Membership test for a target graph class.
using Recognizer = std::function<bool(const Graph&)>;

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 26;

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Steps the sorted positions of a k-subset of {0..n-1} to the next subset
/// in increasing bitmask order. Returns false after the last one.
inline bool next_combination(std::vector<Vertex>& pos, std::size_t n) {
    const std::size_t k = pos.size();
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t limit = (j + 1 < k) ? pos[j + 1] : n;
        if (pos[j] + 1 < limit) {
            ++pos[j];
            for (std::size_t i = 0; i < j; ++i) pos[i] = i;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Tries every S in order of increasing size (ties by bitmask) and returns
/// the first with member(G (+) S); the answer is therefore a minimum-size
/// solution. Stops with Unknown once `budget` subsets have been examined.
inline SolveReport brute_solve_class(const Graph& g, const Recognizer& member,
                                     std::uint64_t budget = kDefaultSubsetBudget) {
    detail::Stopwatch clock;
    SolveReport report;
    Graph scratch(g.n());
    for (std::size_t k = 0; k <= g.n(); ++k) {
        std::vector<Vertex> pos(k);
        for (std::size_t i = 0; i < k; ++i) pos[i] = i;
        do {
            if (report.stats.subsets_examined >= budget) {
                report.status = Status::Unknown;
                report.stats.elapsed = clock.elapsed();
                return report;
            }
            ++report.stats.subsets_examined;
            const VertexSet s = VertexSet::from_range(g.n(), pos);
            subgraph_complement_into(g, s, scratch);
            if (member(scratch)) {
                report.status = Status::Yes;
                report.verified = member(subgraph_complement(g, s));
                report.solution = s;
                report.stats.elapsed = clock.elapsed();
                return report;
            }
        } while (detail::next_combination(pos, g.n()));
    }
    report.status = Status::No;
    report.stats.elapsed = clock.elapsed();
    return report;
}

/// Exhaustive search for S with G (+) S being H-free. H = K_1 is the
/// degenerate target: only the null graph qualifies.
inline SolveReport brute_solve(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultSubsetBudget) {
    if (h.n() == 0) throw Error(Errc::InvalidPattern, "the null pattern is contained in every graph");
    if (h.n() == 1) {
        SolveReport r;
        r.stats.subsets_examined = 1;
        if (g.n() == 0) {
            r.status = Status::Yes;
            r.solution = VertexSet(0);
            r.verified = true;
        }
        return r;
    }
    const std::size_t k = h.n();
    if (h.edge_count() == k * (k - 1) / 2)
        return brute_solve_class(g, [k](const Graph& x) { return !has_clique(x, x.all_vertices(), k); }, budget);
    if (h.edge_count() == 0)
        return brute_solve_class(g, [k](const Graph& x) { return !has_independent_set(x, x.all_vertices(), k); },
                                 budget);
    return brute_solve_class(g, [&h](const Graph& x) { return is_h_free(x, h); }, budget);
}

/// The eight regions of V(G) \ {u,v} relative to a solution S and a pair
/// u, v in S: common neighbours, common non-neighbours and the two private
/// neighbourhoods, each split into its S-part and its remainder T.
struct EightRegions {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet s_both;    // S n N(u) n N(v)
    VertexSet s_neither; // S n co-N[u] n co-N[v]
    VertexSet s_u_only;  // S n (N(u) \ N[v])
    VertexSet s_v_only;  // S n (N(v) \ N[u])
    VertexSet t_both;
    VertexSet t_neither;
    VertexSet t_u_only;
    VertexSet t_v_only;
};

/// The four neighbourhood regions of a pair, in the order
/// common, neither, u-only, v-only.
struct PairDomains {
    VertexSet both;
    VertexSet neither;
    VertexSet u_only;
    VertexSet v_only;
};

inline PairDomains pair_domains(const Graph& g, Vertex u, Vertex v) {
    const VertexSet& nu = g.neighbors(u);
    const VertexSet& nv = g.neighbors(v);
    PairDomains d{nu & nv, ~(nu | nv), nu - nv, nv - nu};
    d.neither.erase(u);
    d.neither.erase(v);
    d.u_only.erase(v);
    d.v_only.erase(u);
    return d;
}

inline EightRegions pair_regions(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
    require_cap(g, s);
    if (u == v || u >= g.n() || v >= g.n() || !s.test(u) || !s.test(v))
        throw Error(Errc::BadPair, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") must be two distinct members of S");
    const PairDomains d = pair_domains(g, u, v);
    const VertexSet t = ~s;
    return EightRegions{u,          v,          d.both & s, d.neither & s, d.u_only & s, d.v_only & s,
                        d.both & t, d.neither & t, d.u_only & t, d.v_only & t};
}

struct KtSolveOptions {
    /// Cross-check every accepted graph for K_t-freeness and throw
    /// RecognizerInconsistent when the recognizer accepts a K_t.
    bool check_recognizer = false;
};

/// Polynomial-time solver for targets that are subclasses of K_t-free
/// graphs. Any solution S with |S| >= 2 and any u, v in S cut each of the
/// four pair regions into a (t-1,t-1)-split partition (T-part, S-part), so
/// trying all pairs and all partition 4-tuples finds S whenever one exists.
/// Pairs and tuples are scanned lexicographically; the first success wins.
inline SolveReport solve_kt_free(const Graph& g, int t, Recognizer recognizer = {},
                                 KtSolveOptions options = {}) {
    if (t < 1) throw Error(Errc::InvalidT, "t must be >= 1, got " + std::to_string(t));
    const auto tt = static_cast<std::size_t>(t);
    if (!recognizer) recognizer = [tt](const Graph& x) { return is_kt_free(x, tt); };
    Recognizer accept = recognizer;
    if (options.check_recognizer) {
        accept = [recognizer, tt](const Graph& x) {
            const bool ok = recognizer(x);
            if (ok && !is_kt_free(x, tt))
                throw Error(Errc::RecognizerInconsistent, "recognizer accepted a graph containing K_" +
                                                              std::to_string(tt));
            return ok;
        };
    }

    detail::Stopwatch clock;
    SolveReport report;
    auto finish = [&](Status st, std::optional<VertexSet> s) {
        report.status = st;
        if (st == Status::Yes) {
            const Graph result = subgraph_complement(g, *s);
            report.verified = recognizer(result) && is_kt_free(result, tt);
            report.solution = std::move(s);
        }
        report.stats.elapsed = clock.elapsed();
        return report;
    };

    if (t == 1) {
        report.stats.subsets_examined = 1;
        return g.n() == 0 ? finish(Status::Yes, VertexSet(0)) : finish(Status::No, std::nullopt);
    }

    ++report.stats.subsets_examined;
    if (accept(g)) return finish(Status::Yes, VertexSet(g.n()));

    const int pq = t - 1;
    Graph scratch(g.n());
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            ++report.stats.pairs_examined;
            const PairDomains d = pair_domains(g, u, v);
            const VertexSet* domains[4] = {&d.both, &d.neither, &d.u_only, &d.v_only};

            std::optional<SplitPartition> seeds[4];
            bool all_split = true;
            for (int r = 0; r < 4 && all_split; ++r) {
                seeds[r] = find_split_partition(g, *domains[r], pq, pq);
                all_split = seeds[r].has_value();
            }
            if (!all_split) continue;

            std::vector<SplitPartition> lists[4];
            for (int r = 0; r < 4; ++r) lists[r] = enumerate_split_partitions(g, *domains[r], pq, pq, *seeds[r]);

            VertexSet base(g.n());
            base.insert(u);
            base.insert(v);
            for (const auto& a : lists[0]) {
                const VertexSet sa = base | a.Q;
                for (const auto& b : lists[1]) {
                    const VertexSet sb = sa | b.Q;
                    for (const auto& c : lists[2]) {
                        const VertexSet sc = sb | c.Q;
                        for (const auto& dd : lists[3]) {
                            VertexSet s = sc | dd.Q;
                            ++report.stats.subsets_examined;
                            subgraph_complement_into(g, s, scratch);
                            if (accept(scratch)) return finish(Status::Yes, std::move(s));
                        }
                    }
                }
            }
        }
    }
    return finish(Status::No, std::nullopt);
}

/// Solver for the complement class: G (+) S lies in co-C exactly when
/// complement(G) (+) S lies in C, so the base solver runs on complement(G)
/// and its certificate is returned unchanged. `base_member` recognizes C.
inline SolveReport solve_complement_class(const Graph& g, const std::function<SolveReport(const Graph&)>& base_solve,
                                          const Recognizer& base_member) {
    SolveReport report = base_solve(complement(g));
    if (report.status == Status::Yes && report.solution) {
        report.verified = base_member(complement(subgraph_complement(g, *report.solution)));
    } else {
        report.verified = false;
    }
    return report;
}

} // namespace sc
