#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnf.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "io.hpp"
#include "pattern.hpp"
#include "ramsey.hpp"
#include "search.hpp"
#include "solve.hpp"
#include "split.hpp"

namespace sc {

/// Outcome of one property suite. Only the first failure is dumped.
struct SuiteResult {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    json counterexample; // null when all cases pass
    json details = json::object();

    bool passed() const noexcept { return failures == 0; }

    void fail(json dump) {
        if (failures++ == 0) counterexample = std::move(dump);
    }

    json to_json() const {
        return {{"suite", suite},     {"cases", cases},   {"failures", failures},
                {"passed", passed()}, {"details", details}, {"counterexample", counterexample}};
    }
};

struct VerifyOptions {
    int max_n = -1;          // suite default when negative
    std::uint64_t seed = 1;
    std::uint64_t samples = 0; // suite default when 0
};

/// Graph on n vertices whose pair (u,v), u < v, in lexicographic order is
/// an edge iff the matching bit of mask is set.
inline Graph graph_from_pair_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(u, v);
    return g;
}

template <typename F>
void for_each_graph(std::size_t n, F&& f) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs >= 40) throw Error(Errc::InvalidArgs, "exhaustive sweep over " + std::to_string(n) + " vertices is infeasible");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) f(graph_from_pair_mask(n, mask));
}

/// Random graph with edge probability percent/100, driven only by raw
/// mt19937_64 output so sweeps are reproducible everywhere.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent = 50) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 100 < percent) g.add_edge(u, v);
    return g;
}

/// Random exact-k formula; each clause uses k distinct variables.
inline CnfFormula random_formula(std::mt19937_64& rng, int n, int m, int k) {
    if (k > n || k < 1) throw Error(Errc::InvalidArgs, "clause width " + std::to_string(k) + " needs 1..n variables");
    std::vector<Clause> clauses;
    for (int c = 0; c < m; ++c) {
        std::vector<int> vars(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(vars[static_cast<std::size_t>(i)], vars[rng() % static_cast<std::uint64_t>(i + 1)]);
        Clause cl;
        for (int j = 0; j < k; ++j) cl.push_back(Literal{vars[static_cast<std::size_t>(j)], (rng() & 1U) != 0});
        clauses.push_back(std::move(cl));
    }
    return CnfFormula(n, k, std::move(clauses));
}

namespace detail {

inline json dump_graph(const Graph& g, const std::string& why) {
    return {{"graph6", g6_encode(g)}, {"reason", why}};
}

inline json dump_graph(const Graph& g, const VertexSet& s, const std::string& why) {
    auto j = dump_graph(g, why);
    j["S"] = s.to_vector();
    return j;
}

inline int pick(const VerifyOptions& o, int fallback) { return o.max_n >= 0 ? o.max_n : fallback; }
inline std::uint64_t pick_samples(const VerifyOptions& o, std::uint64_t fallback) {
    return o.samples > 0 ? o.samples : fallback;
}

/// All (p,q)-split partitions of G[domain] by trying every bipartition.
inline std::vector<SplitPartition> split_partitions_exhaustive(const Graph& g, const VertexSet& domain, int p, int q) {
    const auto members = domain.to_vector();
    std::vector<SplitPartition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
        VertexSet P(g.n());
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((mask >> i) & 1U) P.insert(members[i]);
        VertexSet Q = domain - P;
        if (split_sides_ok(g, P, Q, p, q)) out.push_back(SplitPartition{p, q, std::move(P), std::move(Q)});
    }
    std::sort(out.begin(), out.end(), [](const SplitPartition& a, const SplitPartition& b) { return bitmask_less(a.P, b.P); });
    return out;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

} // namespace detail

/// G (+) S equals complement(complement(G) (+) S) for every graph on at
/// most max_n vertices (default 5) and every S.
inline SuiteResult verify_gs(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "gs";
    const int max_n = detail::pick(o, 5);
    for (int n = 0; n <= max_n; ++n) {
        for_each_graph(static_cast<std::size_t>(n), [&](const Graph& g) {
            const Graph cg = complement(g);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                ++r.cases;
                const VertexSet s = VertexSet::from_mask(g.n(), mask);
                if (!(subgraph_complement(g, s) == complement(subgraph_complement(cg, s))))
                    r.fail(detail::dump_graph(g, s, "G(+)S differs from complement(complement(G)(+)S)"));
            }
        });
    }
    r.details["max_n"] = max_n;
    return r;
}

/// SC to H-free on G agrees with SC to co-H-free on complement(G), and each
/// certificate works unchanged for the other side. H defaults to P_3.
inline SuiteResult verify_dual(const VerifyOptions& o = {}, const PatternSpec& pattern = PatternSpec::path(3)) {
    SuiteResult r;
    r.suite = "dual";
    const int max_n = detail::pick(o, 6);
    const Graph h = make_pattern(pattern);
    const Graph hbar = complement(h);
    for (int n = 0; n <= max_n; ++n) {
        for_each_graph(static_cast<std::size_t>(n), [&](const Graph& g) {
            ++r.cases;
            const Graph cg = complement(g);
            const SolveReport a = brute_solve(g, h);
            const SolveReport b = brute_solve(cg, hbar);
            if (a.status != b.status) {
                r.fail(detail::dump_graph(g, "status differs between G/H and complement(G)/co-H"));
                return;
            }
            if (a.status == Status::Yes && !is_h_free(subgraph_complement(cg, *a.solution), hbar))
                r.fail(detail::dump_graph(g, *a.solution, "certificate for G does not transfer to complement(G)"));
            if (b.status == Status::Yes && !is_h_free(subgraph_complement(g, *b.solution), h))
                r.fail(detail::dump_graph(g, *b.solution, "certificate for complement(G) does not transfer to G"));
            const SolveReport c = solve_complement_class(
                g, [&](const Graph& x) { return brute_solve(x, hbar); },
                [&](const Graph& x) { return is_h_free(x, hbar); });
            if (c.status != a.status || (c.status == Status::Yes && !c.verified))
                r.fail(detail::dump_graph(g, "complement-class wrapper disagrees"));
        });
    }
    r.details["max_n"] = max_n;
    r.details["pattern"] = pattern.name();
    return r;
}

/// Polynomial K_t-free solver against brute force: every graph on at most
/// max_n vertices (default 7) at t = 3, then `samples` random graphs on
/// max_n + 1 vertices at t = 4 (default 10^4).
inline SuiteResult verify_kt_oracle(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "kt-oracle";
    const int max_n = detail::pick(o, 7);
    const std::uint64_t samples = detail::pick_samples(o, 10000);
    auto check = [&](const Graph& g, int t) {
        ++r.cases;
        const SolveReport poly = solve_kt_free(g, t);
        const SolveReport brute = brute_solve(g, make_pattern(PatternSpec::complete(static_cast<std::size_t>(t))));
        if (poly.status != brute.status) {
            r.fail(detail::dump_graph(g, "t=" + std::to_string(t) + ": poly " + std::string(status_name(poly.status)) +
                                             ", brute " + std::string(status_name(brute.status))));
        } else if (poly.status == Status::Yes && !poly.verified) {
            r.fail(detail::dump_graph(g, *poly.solution, "poly solution fails re-check"));
        }
    };
    std::uint64_t exhaustive = 0;
    for (int n = 0; n <= max_n; ++n)
        for_each_graph(static_cast<std::size_t>(n), [&](const Graph& g) {
            check(g, 3);
            ++exhaustive;
        });
    std::mt19937_64 rng(o.seed);
    for (std::uint64_t i = 0; i < samples; ++i) check(random_graph(rng, static_cast<std::size_t>(max_n) + 1), 4);
    r.details["exhaustive_t3"] = exhaustive;
    r.details["random_t4"] = samples;
    r.details["max_n"] = max_n;
    return r;
}

/// Enumerated (p,q)-split partitions against every bipartition, with the
/// difference bound R(p+1,q+1)-1 and the count bound n^(2R) (n >= 2), on
/// `samples` random graphs with up to max_n vertices (defaults 10, 10^4).
inline SuiteResult verify_split(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "split";
    const int max_n = detail::pick(o, 10);
    const std::uint64_t samples = detail::pick_samples(o, 10000);
    std::mt19937_64 rng(o.seed);
    std::uint64_t split_graphs = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const auto n = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_n + 1));
        const Graph g = random_graph(rng, n, static_cast<unsigned>(10 + rng() % 81));
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) {
                ++r.cases;
                const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
                const auto oracle = detail::split_partitions_exhaustive(g, g.all_vertices(), p, q);
                const auto seed = find_split_partition(g, p, q);
                if (!seed) {
                    if (!oracle.empty()) r.fail(detail::dump_graph(g, tag + ": recognizer missed a split partition"));
                    continue;
                }
                ++split_graphs;
                const auto found = enumerate_split_partitions(g, p, q, *seed);
                if (!(found == oracle)) {
                    r.fail(detail::dump_graph(g, tag + ": enumeration differs from exhaustive bipartitions"));
                    continue;
                }
                const auto R = ramsey_bound(p + 1, q + 1).value;
                for (const auto& part : found)
                    if (seed->P.intersection_count(part.Q) > R - 1 || part.P.intersection_count(seed->Q) > R - 1)
                        r.fail(detail::dump_graph(g, tag + ": partition differs from the seed by R or more vertices"));
                if (n >= 2 && found.size() > detail::saturating_pow(n, 2 * R))
                    r.fail(detail::dump_graph(g, tag + ": more than n^(2R) partitions"));
            }
    }
    r.details["graphs"] = samples;
    r.details["split_cases"] = split_graphs;
    r.details["max_n"] = max_n;
    return r;
}

/// Every solution S (|S| >= 2) of SC to K_t-free on graphs with at most
/// max_n vertices (default 7, t = 3) cuts each pair region into a
/// (t-1,t-1)-split partition (T-part, S-part). Solutions are enumerated as
/// (G (+) S, S) over K_t-free graphs G (+) S.
inline SuiteResult verify_regions(const VerifyOptions& o = {}, int t = 3) {
    SuiteResult r;
    r.suite = "regions";
    const int max_n = detail::pick(o, 7);
    std::uint64_t solutions = 0;
    for (int n = 2; n <= max_n; ++n) {
        for_each_graph(static_cast<std::size_t>(n), [&](const Graph& target) {
            if (!is_kt_free(target, static_cast<std::size_t>(t))) return;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (std::popcount(mask) < 2) continue;
                const VertexSet s = VertexSet::from_mask(target.n(), mask);
                const Graph g = subgraph_complement(target, s);
                ++solutions;
                const auto members = s.to_vector();
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b) {
                        ++r.cases;
                        const EightRegions e = pair_regions(g, s, members[a], members[b]);
                        const std::pair<const VertexSet*, const VertexSet*> parts[4] = {
                            {&e.t_both, &e.s_both}, {&e.t_neither, &e.s_neither},
                            {&e.t_u_only, &e.s_u_only}, {&e.t_v_only, &e.s_v_only}};
                        for (const auto& [tp, sp] : parts) {
                            const SplitPartition part{t - 1, t - 1, *tp, *sp};
                            if (!is_split_partition(g, *tp | *sp, part)) {
                                r.fail(detail::dump_graph(g, s, "pair (" + std::to_string(members[a]) + "," +
                                                                    std::to_string(members[b]) +
                                                                    ") has a region that is not split"));
                                break;
                            }
                        }
                    }
            }
        });
    }
    r.details["solutions"] = solutions;
    r.details["max_n"] = max_n;
    return r;
}

/// brute_solve(no_instance(H), H) is No for H in {P_3, K_3}.
inline SuiteResult verify_no_instance(const VerifyOptions& = {}) {
    SuiteResult r;
    r.suite = "no-instance";
    for (const auto& spec : {PatternSpec::path(3), PatternSpec::complete(3)}) {
        ++r.cases;
        const Graph h = make_pattern(spec);
        const Graph g = no_instance(h);
        const SolveReport rep = brute_solve(g, h);
        r.details[spec.name()] = {{"status", std::string(status_name(rep.status))},
                                  {"subsets_examined", rep.stats.subsets_examined}};
        if (rep.status != Status::No) r.fail(detail::dump_graph(g, "no-instance of " + spec.name() + " is solvable"));
    }
    return r;
}

/// Size formula, role rebuild, block shapes and forward soundness of the
/// four SAT constructions on `samples` random satisfiable 4-SAT>=2 formulas
/// per kind (default 20), n in [4, max_n] (default 6), m in [1, 3].
inline SuiteResult verify_gadgets(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "gadget";
    const int max_n = std::max(4, detail::pick(o, 6));
    const std::uint64_t samples = detail::pick_samples(o, 20);
    std::mt19937_64 rng(o.seed);
    std::vector<CnfFormula> fixtures;
    while (fixtures.size() < samples) {
        const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 3));
        const int m = 1 + static_cast<int>(rng() % 3);
        CnfFormula phi = random_formula(rng, n, m, 4);
        if (brute_sat(phi, 2)) fixtures.push_back(std::move(phi));
    }
    for (GadgetKind kind : {GadgetKind::K15, GadgetKind::P7, GadgetKind::P8, GadgetKind::C8}) {
        std::uint64_t ok = 0;
        for (const auto& phi : fixtures) {
            ++r.cases;
            const GadgetInstance inst = kind == GadgetKind::K15  ? k15_gadget(phi)
                                        : kind == GadgetKind::P7 ? p7_gadget(phi)
                                        : kind == GadgetKind::P8 ? p8_gadget(phi)
                                                                 : c8_gadget(phi);
            const std::string tag = std::string(gadget_kind_name(kind)) + " on\n" + emit_dimacs(phi);
            if (inst.graph.n() != expected_size(inst)) {
                r.fail(detail::dump_graph(inst.graph, tag + "size formula mismatch"));
                continue;
            }
            if (!(rebuild_from_roles(inst) == inst.graph)) {
                r.fail(detail::dump_graph(inst.graph, tag + "role rebuild differs"));
                continue;
            }
            bool blocks_ok = true;
            for (const auto& b : gadget_blocks(inst)) blocks_ok = blocks_ok && !!find_induced(induced(inst.graph, b.members), b.expected);
            if (!blocks_ok) {
                r.fail(detail::dump_graph(inst.graph, tag + "a block has the wrong shape"));
                continue;
            }
            const Assignment a = *brute_sat(phi, 2);
            const VertexSet s = solution_from_assignment(inst, a);
            if (!complement_is_target_free(inst, s)) {
                r.fail(detail::dump_graph(inst.graph, s, tag + "mapped solution leaves the target pattern"));
                continue;
            }
            if (!(assignment_from_solution(inst, s) == a)) {
                r.fail(detail::dump_graph(inst.graph, s, tag + "assignment does not round-trip"));
                continue;
            }
            ++ok;
        }
        r.details[std::string(gadget_kind_name(kind))] = ok;
    }
    r.details["formulas"] = fixtures.size();
    return r;
}

/// Double brute force on the inductive lemmas: for every G' with at most
/// max_n vertices (default 3) and the smallest legal t, SC on (G', source
/// pattern) and on (G, lifted pattern) agree. For the star and path
/// constructions a solution of G' also solves G unchanged.
inline SuiteResult verify_inductive(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "inductive";
    const int max_n = detail::pick(o, 3);
    std::uint64_t largest = 0;
    for (GadgetKind kind : {GadgetKind::StarInductive, GadgetKind::PathInductive, GadgetKind::CycleInductive}) {
        const int t = kind == GadgetKind::StarInductive ? 2 : kind == GadgetKind::PathInductive ? 3 : 4;
        for (int n = 0; n <= max_n; ++n) {
            for_each_graph(static_cast<std::size_t>(n), [&](const Graph& gp) {
                ++r.cases;
                const GadgetInstance inst = kind == GadgetKind::StarInductive   ? star_inductive(gp, t)
                                            : kind == GadgetKind::PathInductive ? path_inductive(gp, t)
                                                                                : cycle_inductive(gp, t);
                largest = std::max<std::uint64_t>(largest, inst.graph.n());
                const std::string tag = std::string(gadget_kind_name(kind)) + " t=" + std::to_string(t) + ": ";
                if (inst.graph.n() != expected_size(inst) || !(rebuild_from_roles(inst) == inst.graph)) {
                    r.fail(detail::dump_graph(gp, tag + "construction shape"));
                    return;
                }
                const Graph src = make_pattern(source_pattern(inst));
                const Graph dst = make_pattern(target_pattern(inst));
                const SolveReport a = brute_solve(gp, src);
                const SolveReport b = brute_solve(inst.graph, dst);
                if (a.status != b.status || a.status == Status::Unknown) {
                    r.fail(detail::dump_graph(gp, tag + "source " + std::string(status_name(a.status)) + ", lifted " +
                                                      std::string(status_name(b.status))));
                    return;
                }
                if (a.status == Status::Yes && kind != GadgetKind::CycleInductive) {
                    VertexSet lifted(inst.graph.n());
                    a.solution->for_each([&](Vertex v) { lifted.insert(v); });
                    if (!is_h_free(subgraph_complement(inst.graph, lifted), dst))
                        r.fail(detail::dump_graph(gp, *a.solution, tag + "source solution does not lift"));
                }
            });
        }
    }
    r.details["max_n"] = max_n;
    r.details["largest_instance"] = largest;
    return r;
}

/// Phi has an assignment with >= s-2 true literals per clause iff lift(phi)
/// has one with >= s-1, over every 3-SAT formula with n <= max_n (default
/// 4) variables and 0 <= m <= 3 clauses, clauses taken as multisets.
inline SuiteResult verify_lift(const VerifyOptions& o = {}) {
    SuiteResult r;
    r.suite = "lift";
    const int max_n = detail::pick(o, 4);
    const int k = 3;
    for (int n = k; n <= max_n; ++n) {
        // every clause over k distinct variables with any polarity
        std::vector<Clause> universe;
        for (std::uint32_t vars = 0; vars < (1U << n); ++vars) {
            if (std::popcount(vars) != k) continue;
            for (std::uint32_t pol = 0; pol < (1U << k); ++pol) {
                Clause c;
                int j = 0;
                for (int v = 0; v < n; ++v)
                    if ((vars >> v) & 1U) c.push_back(Literal{v + 1, ((pol >> j++) & 1U) != 0});
                universe.push_back(std::move(c));
            }
        }
        for (int m = 0; m <= 3; ++m) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
            while (true) {
                std::vector<Clause> clauses;
                for (auto i : pick) clauses.push_back(universe[i]);
                const CnfFormula phi(n, k, clauses);
                ++r.cases;
                const bool base = brute_sat(phi, k - 2).has_value();
                const bool lifted = brute_sat(lift(phi), k - 1).has_value();
                if (base != lifted) r.fail({{"dimacs", emit_dimacs(phi)}, {"reason", "lift changes satisfiability"}});
                // next non-decreasing index tuple
                int j = m - 1;
                while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == universe.size()) --j;
                if (j < 0) break;
                ++pick[static_cast<std::size_t>(j)];
                for (int l = j + 1; l < m; ++l) pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(j)];
            }
        }
    }
    r.details["max_n"] = max_n;
    return r;
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"gs",    "dual",        "kt-oracle", "split", "gadget",
                                                "inductive", "regions", "no-instance", "lift"};
    return names;
}

inline SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& o) {
    if (name == "gs") return verify_gs(o);
    if (name == "dual") return verify_dual(o);
    if (name == "kt-oracle") return verify_kt_oracle(o);
    if (name == "split") return verify_split(o);
    if (name == "gadget") return verify_gadgets(o);
    if (name == "inductive") return verify_inductive(o);
    if (name == "regions") return verify_regions(o);
    if (name == "no-instance") return verify_no_instance(o);
    if (name == "lift") return verify_lift(o);
    throw Error(Errc::InvalidArgs, "unknown verify suite '" + name + "'");
}

} // namespace sc
