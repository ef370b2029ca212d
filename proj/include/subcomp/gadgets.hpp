#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cnf.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "pattern.hpp"
#include "search.hpp"

namespace sc {

enum class GadgetKind { StarInductive, PathInductive, CycleInductive, K15, P7, P8, C8 };

constexpr std::string_view gadget_kind_name(GadgetKind k) noexcept {
    switch (k) {
    case GadgetKind::StarInductive: return "star";
    case GadgetKind::PathInductive: return "path";
    case GadgetKind::CycleInductive: return "cycle";
    case GadgetKind::K15: return "k15";
    case GadgetKind::P7: return "p7";
    case GadgetKind::P8: return "p8";
    case GadgetKind::C8: return "c8";
    }
    return "?";
}

constexpr bool is_sat_gadget(GadgetKind k) noexcept {
    return k == GadgetKind::K15 || k == GadgetKind::P7 || k == GadgetKind::P8 || k == GadgetKind::C8;
}

enum class RoleKind {
    Source,     // copy of a vertex of the source graph G'
    Block,      // member of W_u
    Literal,    // literal vertex u_i / u'_i
    Hanging,    // member of a hanging set U_{i,s} / U'_{i,s}
    LiteralSet, // member of a literal set U_i / U'_i (C8)
    Clause,     // member of a clause block V_i, V_{i,s}, V_{i,s,t}
};

constexpr std::string_view role_kind_name(RoleKind k) noexcept {
    switch (k) {
    case RoleKind::Source: return "source";
    case RoleKind::Block: return "block";
    case RoleKind::Literal: return "literal";
    case RoleKind::Hanging: return "hanging";
    case RoleKind::LiteralSet: return "literal-set";
    case RoleKind::Clause: return "clause";
    }
    return "?";
}

/// What one gadget vertex stands for.
///   Source/Block: index = G' vertex (0-based), pos = place in W_u,
///                 special = the star block's vertex u'.
///   Literal/Hanging/LiteralSet: index = variable (1-based), positive =
///                 polarity, slot = s of U_{i,s} (Hanging), pos = place in
///                 the block (cycle position for LiteralSet).
///   Clause: index = clause (1-based), slot/slot2 = literal positions s, t
///           of V_{i,s,t} (slot2 = 0 for V_{i,s}; both 0 for K15's V_i).
struct Role {
    RoleKind kind = RoleKind::Source;
    int index = 0;
    bool positive = true;
    int slot = 0;
    int slot2 = 0;
    int pos = 0;
    bool special = false;

    friend bool operator==(const Role&, const Role&) = default;

    std::string label() const {
        const std::string prime = positive ? "" : "'";
        switch (kind) {
        case RoleKind::Source: return "g" + std::to_string(index);
        case RoleKind::Block:
            return "W" + std::to_string(index) + "#" + std::to_string(pos) + (special ? "*" : "");
        case RoleKind::Literal: return "u" + prime + std::to_string(index);
        case RoleKind::Hanging:
            return "U" + prime + std::to_string(index) + "," + std::to_string(slot) + "#" + std::to_string(pos);
        case RoleKind::LiteralSet: return "U" + prime + std::to_string(index) + "#" + std::to_string(pos);
        case RoleKind::Clause: {
            std::string name = "V" + std::to_string(index);
            if (slot > 0) name += "," + std::to_string(slot);
            if (slot2 > 0) name += "," + std::to_string(slot2);
            return name + "#" + std::to_string(pos);
        }
        }
        return "?";
    }
};

/// A generated reduction instance. `roles[v]` describes vertex v; the
/// graph's labels are the role labels.
struct GadgetInstance {
    Graph graph;
    GadgetKind kind = GadgetKind::StarInductive;
    std::vector<Role> roles;
    std::optional<Graph> source;      // inductive constructions
    std::optional<CnfFormula> formula; // SAT constructions
    int t = 0;                        // inductive constructions
};

struct GadgetOptions {
    /// Extend phi by four fresh variables and the clause of their positive
    /// literals before building (K15 only).
    bool add_dummy_clause = false;
};

namespace detail {

/// Block graph used inside W_u for each inductive construction.
inline Graph inductive_block(GadgetKind kind, int t) {
    const auto b = static_cast<std::size_t>(t + 2);
    switch (kind) {
    case GadgetKind::StarInductive: return make_pattern(PatternSpec::complete(b));
    case GadgetKind::PathInductive: return make_pattern(PatternSpec::complement_of(PatternSpec::path(b)));
    case GadgetKind::CycleInductive: return make_pattern(PatternSpec::complement_of(PatternSpec::cycle(b)));
    default: throw Error(Errc::KindMismatch, "not an inductive construction");
    }
}

/// Block graph of hanging, clause and literal sets in a SAT construction.
inline Graph sat_block(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::K15: return make_pattern(PatternSpec::complete(5));
    case GadgetKind::P7: return make_pattern(PatternSpec::complement_of(PatternSpec::path(7)));
    case GadgetKind::P8: return make_pattern(PatternSpec::complement_of(PatternSpec::path(8)));
    case GadgetKind::C8: return make_pattern(PatternSpec::complement_of(PatternSpec::cycle(8)));
    default: throw Error(Errc::KindMismatch, "not a SAT construction");
    }
}

/// Clause blocks as (s, t) literal positions, in layout order.
inline std::vector<std::pair<int, int>> clause_blocks(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::K15: return {{0, 0}};
    case GadgetKind::P7: return {{1, 2}, {2, 3}, {3, 4}};
    case GadgetKind::P8: return {{1, 0}, {1, 2}, {2, 3}, {3, 4}};
    case GadgetKind::C8: return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    default: throw Error(Errc::KindMismatch, "not a SAT construction");
    }
}

inline int hanging_sets_per_literal(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::K15: return 4; // U_{i,1..4}, shared by both literals
    case GadgetKind::P7:
    case GadgetKind::P8: return 3;
    default: return 0;
    }
}

inline void add_block_edges(Graph& g, const std::vector<Vertex>& members, const Graph& block) {
    for (auto [a, b] : block.edges()) g.add_edge(members[a], members[b]);
}

inline void join(Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
        for (Vertex y : b)
            if (x != y && !g.has_edge(x, y)) g.add_edge(x, y);
}

inline std::vector<std::string> role_labels(const std::vector<Role>& roles) {
    std::vector<std::string> out;
    out.reserve(roles.size());
    for (const auto& r : roles) out.push_back(r.label());
    return out;
}

/// Position (1-based) of the literal (var, positive) in clause c, or 0.
inline int literal_position(const Clause& c, int var, bool positive) {
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j].var == var && c[j].positive == positive) return static_cast<int>(j) + 1;
    return 0;
}

inline GadgetInstance build_inductive(const Graph& gp, int t, GadgetKind kind) {
    const int min_t = kind == GadgetKind::StarInductive ? 2 : kind == GadgetKind::PathInductive ? 3 : 4;
    if (t < min_t)
        throw Error(Errc::InvalidT, std::string(gadget_kind_name(kind)) + " construction needs t >= " +
                                        std::to_string(min_t) + ", got " + std::to_string(t));
    const Graph block = inductive_block(kind, t);
    const std::size_t n0 = gp.n();
    const std::size_t b = block.n();
    const bool star = kind == GadgetKind::StarInductive;

    GadgetInstance inst;
    inst.kind = kind;
    inst.t = t;
    inst.source = gp;
    inst.graph = Graph(n0 + n0 * b);
    for (Vertex u = 0; u < n0; ++u) inst.roles.push_back(Role{RoleKind::Source, static_cast<int>(u)});
    for (auto [u, v] : gp.edges()) inst.graph.add_edge(u, v);

    std::vector<std::vector<Vertex>> blocks(n0);
    for (Vertex u = 0; u < n0; ++u) {
        for (std::size_t j = 0; j < b; ++j) {
            const Vertex w = n0 + u * b + j;
            blocks[u].push_back(w);
            Role r{RoleKind::Block, static_cast<int>(u)};
            r.pos = static_cast<int>(j);
            r.special = star && j + 1 == b;
            inst.roles.push_back(r);
            if (!r.special) inst.graph.add_edge(u, w);
        }
        add_block_edges(inst.graph, blocks[u], block);
    }
    if (kind == GadgetKind::CycleInductive)
        for (Vertex u = 0; u < n0; ++u)
            for (Vertex v = u + 1; v < n0; ++v) join(inst.graph, blocks[u], blocks[v]);
    inst.graph.set_labels(role_labels(inst.roles));
    return inst;
}

inline GadgetInstance build_sat(const CnfFormula& phi_in, GadgetKind kind, const GadgetOptions& opts);

} // namespace detail

/// W_u = K_{t+2} per source vertex u; u sees all of W_u except its last
/// (special) vertex. Layout: G' vertices, then W_0, W_1, ...
inline GadgetInstance star_inductive(const Graph& gprime, int t) {
    return detail::build_inductive(gprime, t, GadgetKind::StarInductive);
}

/// W_u induces the complement of P_{t+2} (path order before complementing)
/// and is all-adjacent to u only.
inline GadgetInstance path_inductive(const Graph& gprime, int t) {
    return detail::build_inductive(gprime, t, GadgetKind::PathInductive);
}

/// W_u induces the complement of C_{t+2}; u is all-adjacent to W_u and
/// distinct blocks are all-adjacent to each other.
inline GadgetInstance cycle_inductive(const Graph& gprime, int t) {
    return detail::build_inductive(gprime, t, GadgetKind::CycleInductive);
}

/// phi with four fresh variables and one clause over their positive literals.
inline CnfFormula with_dummy_clause(const CnfFormula& phi) {
    if (phi.width() != 4) throw Error(Errc::WrongWidth, "dummy clause is defined for 4-SAT formulas");
    std::vector<Clause> clauses = phi.clauses();
    const int n = phi.num_vars();
    clauses.push_back({{n + 1, true}, {n + 2, true}, {n + 3, true}, {n + 4, true}});
    return CnfFormula(n + 4, 4, std::move(clauses));
}

/// Literal vertices u_i ~ u'_i, four K_5 hanging sets per variable chained
/// through U_{i,1}, one K_5 clause set per clause; all clause sets form one
/// clique and V_i sees the four literal vertices of its clause.
inline GadgetInstance k15_gadget(const CnfFormula& phi, GadgetOptions opts = {}) {
    return detail::build_sat(phi, GadgetKind::K15, opts);
}

/// Hanging chains U_{i,1..3}, U'_{i,1..3} of co-P_7 blocks, clause blocks
/// V_{i,1,2}, V_{i,2,3}, V_{i,3,4}.
inline GadgetInstance p7_gadget(const CnfFormula& phi) { return detail::build_sat(phi, GadgetKind::P7, {}); }

/// As p7 with co-P_8 blocks and an extra clause block V_{i,1} on y_{i,1}.
inline GadgetInstance p8_gadget(const CnfFormula& phi) { return detail::build_sat(phi, GadgetKind::P8, {}); }

/// Literal sets U_i, U'_i: the even and odd cycle positions of a co-C_8;
/// six co-C_8 clause blocks V_{i,s,t} per clause.
inline GadgetInstance c8_gadget(const CnfFormula& phi) { return detail::build_sat(phi, GadgetKind::C8, {}); }

namespace detail {

inline GadgetInstance build_sat(const CnfFormula& phi_in, GadgetKind kind, const GadgetOptions& opts) {
    if (phi_in.width() != 4 && !(phi_in.width() == 0 && phi_in.num_clauses() == 0))
        throw Error(Errc::WrongWidth, std::string(gadget_kind_name(kind)) + " construction needs 4-SAT, got width " +
                                          std::to_string(phi_in.width()));
    const CnfFormula phi = opts.add_dummy_clause ? with_dummy_clause(phi_in) : phi_in;
    const int n = phi.num_vars();
    const Graph block = sat_block(kind);
    const std::size_t b = block.n();

    GadgetInstance inst;
    inst.kind = kind;
    inst.formula = phi;
    std::vector<Role>& roles = inst.roles;

    auto add_block = [&](Role proto) {
        std::vector<Vertex> members;
        for (std::size_t j = 0; j < b; ++j) {
            proto.pos = static_cast<int>(j);
            members.push_back(roles.size());
            roles.push_back(proto);
        }
        return members;
    };

    // literal vertices (or literal sets for C8), by variable
    std::vector<std::array<std::vector<Vertex>, 2>> literal(static_cast<std::size_t>(n) + 1); // [var][positive]
    std::vector<std::vector<Vertex>> c8_blocks(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        if (kind == GadgetKind::C8) {
            for (std::size_t j = 0; j < b; ++j) {
                Role r{RoleKind::LiteralSet, i, j % 2 == 0};
                r.pos = static_cast<int>(j);
                literal[static_cast<std::size_t>(i)][r.positive ? 1 : 0].push_back(roles.size());
                c8_blocks[static_cast<std::size_t>(i)].push_back(roles.size());
                roles.push_back(r);
            }
        } else {
            for (bool pos : {true, false}) {
                literal[static_cast<std::size_t>(i)][pos ? 1 : 0].push_back(roles.size());
                roles.push_back(Role{RoleKind::Literal, i, pos});
            }
        }
    }

    // hanging sets: [var][positive][s-1]
    const int hs = hanging_sets_per_literal(kind);
    std::vector<std::array<std::vector<std::vector<Vertex>>, 2>> hanging(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        if (kind == GadgetKind::K15) {
            for (int s = 1; s <= hs; ++s) {
                Role r{RoleKind::Hanging, i, true};
                r.slot = s;
                hanging[static_cast<std::size_t>(i)][1].push_back(add_block(r));
            }
        } else if (hs > 0) {
            for (bool pos : {true, false})
                for (int s = 1; s <= hs; ++s) {
                    Role r{RoleKind::Hanging, i, pos};
                    r.slot = s;
                    hanging[static_cast<std::size_t>(i)][pos ? 1 : 0].push_back(add_block(r));
                }
        }
    }

    // clause blocks: [clause-1] -> list of (s, t, members)
    struct ClauseBlock {
        int s;
        int t;
        std::vector<Vertex> members;
    };
    std::vector<std::vector<ClauseBlock>> clauses(phi.num_clauses());
    for (std::size_t ci = 0; ci < phi.num_clauses(); ++ci) {
        for (auto [s, t2] : clause_blocks(kind)) {
            Role r{RoleKind::Clause, static_cast<int>(ci) + 1};
            r.slot = s;
            r.slot2 = t2;
            clauses[ci].push_back(ClauseBlock{s, t2, add_block(r)});
        }
    }

    Graph& g = inst.graph;
    g = Graph(roles.size());

    auto y_of = [&](std::size_t ci, int s) -> const std::vector<Vertex>& {
        const Literal& l = phi.clause(ci)[static_cast<std::size_t>(s - 1)];
        return literal[static_cast<std::size_t>(l.var)][l.positive ? 1 : 0];
    };

    // internal block edges
    for (int i = 1; i <= n; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        if (kind == GadgetKind::C8) add_block_edges(g, c8_blocks[iu], block);
        for (auto& side : hanging[iu])
            for (auto& h : side) add_block_edges(g, h, block);
    }
    for (auto& cl : clauses)
        for (auto& cb : cl) add_block_edges(g, cb.members, block);

    if (kind == GadgetKind::K15) {
        for (int i = 1; i <= n; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            const auto& h = hanging[iu][1];
            join(g, literal[iu][1], literal[iu][0]);
            join(g, literal[iu][1], h[0]);
            join(g, literal[iu][0], h[0]);
            for (int s = 1; s < hs; ++s) join(g, h[0], h[static_cast<std::size_t>(s)]);
        }
        std::vector<Vertex> all_clause;
        for (auto& cl : clauses)
            for (auto& cb : cl) all_clause.insert(all_clause.end(), cb.members.begin(), cb.members.end());
        join(g, all_clause, all_clause);
        for (std::size_t ci = 0; ci < clauses.size(); ++ci)
            for (int s = 1; s <= 4; ++s) join(g, clauses[ci][0].members, y_of(ci, s));
    }

    if (kind == GadgetKind::P7 || kind == GadgetKind::P8) {
        for (int i = 1; i <= n; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            for (int side = 0; side < 2; ++side) {
                const auto& h = hanging[iu][static_cast<std::size_t>(side)];
                join(g, literal[iu][static_cast<std::size_t>(side)], h[0]);
                for (int s = 0; s + 1 < hs; ++s) join(g, h[static_cast<std::size_t>(s)], h[static_cast<std::size_t>(s) + 1]);
            }
            // hanging sets see everything outside their own variable block
            std::vector<Vertex> own;
            VertexSet own_set(roles.size());
            for (int side = 0; side < 2; ++side) {
                for (Vertex v : literal[iu][static_cast<std::size_t>(side)]) own_set.insert(v);
                for (const auto& h : hanging[iu][static_cast<std::size_t>(side)])
                    for (Vertex v : h) {
                        own.push_back(v);
                        own_set.insert(v);
                    }
            }
            const auto outside = (~own_set).to_vector();
            join(g, own, outside);
        }
        for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
            const Clause& c = phi.clause(ci);
            std::vector<Vertex> vi;
            for (auto& cb : clauses[ci]) {
                vi.insert(vi.end(), cb.members.begin(), cb.members.end());
                join(g, cb.members, y_of(ci, cb.s));
                if (cb.t > 0) join(g, cb.members, y_of(ci, cb.t));
            }
            // every literal vertex whose literal is not in C_i
            std::vector<Vertex> others;
            for (int j = 1; j <= n; ++j)
                for (bool pos : {true, false})
                    if (literal_position(c, j, pos) == 0)
                        for (Vertex v : literal[static_cast<std::size_t>(j)][pos ? 1 : 0]) others.push_back(v);
            join(g, vi, others);
        }
    }

    if (kind == GadgetKind::C8) {
        for (std::size_t ci = 0; ci < clauses.size(); ++ci)
            for (auto& cb : clauses[ci]) {
                join(g, cb.members, y_of(ci, cb.s));
                join(g, cb.members, y_of(ci, cb.t));
            }
    }

    if (kind != GadgetKind::K15) {
        for (std::size_t a = 0; a < clauses.size(); ++a)
            for (std::size_t c = a + 1; c < clauses.size(); ++c)
                for (auto& x : clauses[a])
                    for (auto& y : clauses[c]) join(g, x.members, y.members);
    }

    g.set_labels(role_labels(roles));
    return inst;
}

} // namespace detail

/// Closed-form vertex count of a construction.
inline std::size_t expected_size(GadgetKind kind, std::size_t n, std::size_t m, int t = 0) {
    switch (kind) {
    case GadgetKind::StarInductive:
    case GadgetKind::PathInductive:
    case GadgetKind::CycleInductive: return n * static_cast<std::size_t>(t + 3);
    case GadgetKind::K15: return 22 * n + 5 * m;
    case GadgetKind::P7: return 44 * n + 21 * m;
    case GadgetKind::P8: return 50 * n + 32 * m;
    case GadgetKind::C8: return 8 * n + 48 * m;
    }
    return 0;
}

inline std::string_view size_formula(GadgetKind kind) noexcept {
    switch (kind) {
    case GadgetKind::StarInductive:
    case GadgetKind::PathInductive:
    case GadgetKind::CycleInductive: return "n'(t+3)";
    case GadgetKind::K15: return "22n+5m";
    case GadgetKind::P7: return "44n+21m";
    case GadgetKind::P8: return "50n+32m";
    case GadgetKind::C8: return "8n+48m";
    }
    return "?";
}

inline std::size_t expected_size(const GadgetInstance& inst) {
    if (is_sat_gadget(inst.kind))
        return expected_size(inst.kind, static_cast<std::size_t>(inst.formula->num_vars()),
                             inst.formula->num_clauses());
    return expected_size(inst.kind, inst.source->n(), 0, inst.t);
}

/// The forbidden pattern the instance is built against.
inline PatternSpec target_pattern(const GadgetInstance& inst) {
    switch (inst.kind) {
    case GadgetKind::StarInductive: return PatternSpec::star(static_cast<std::size_t>(inst.t) + 1);
    case GadgetKind::PathInductive: return PatternSpec::path(static_cast<std::size_t>(inst.t) + 2);
    case GadgetKind::CycleInductive: return PatternSpec::cycle(static_cast<std::size_t>(inst.t) + 2);
    case GadgetKind::K15: return PatternSpec::star(5);
    case GadgetKind::P7: return PatternSpec::path(7);
    case GadgetKind::P8: return PatternSpec::path(8);
    case GadgetKind::C8: return PatternSpec::cycle(8);
    }
    throw Error(Errc::KindMismatch, "unknown gadget kind");
}

/// The pattern the source instance of an inductive construction targets.
inline PatternSpec source_pattern(const GadgetInstance& inst) {
    switch (inst.kind) {
    case GadgetKind::StarInductive: return PatternSpec::star(static_cast<std::size_t>(inst.t));
    case GadgetKind::PathInductive:
    case GadgetKind::CycleInductive: return PatternSpec::path(static_cast<std::size_t>(inst.t));
    default: throw Error(Errc::KindMismatch, "source pattern exists only for inductive constructions");
    }
}

namespace detail {

inline void require_sat_kind(const GadgetInstance& inst) {
    if (!is_sat_gadget(inst.kind) || !inst.formula)
        throw Error(Errc::KindMismatch, std::string(gadget_kind_name(inst.kind)) +
                                            " instance has no variable/assignment correspondence");
}

} // namespace detail

/// Vertices standing for the literal (var, positive): one literal vertex,
/// or the four vertices of a C8 literal set.
inline VertexSet literal_vertices(const GadgetInstance& inst, int var, bool positive) {
    detail::require_sat_kind(inst);
    VertexSet s(inst.graph.n());
    for (Vertex v = 0; v < inst.roles.size(); ++v) {
        const Role& r = inst.roles[v];
        if ((r.kind == RoleKind::Literal || r.kind == RoleKind::LiteralSet) && r.index == var &&
            r.positive == positive)
            s.insert(v);
    }
    return s;
}

/// S = vertices of the true literals. Requires at least two true literals
/// per clause.
inline VertexSet solution_from_assignment(const GadgetInstance& inst, const Assignment& a) {
    detail::require_sat_kind(inst);
    if (!check_threshold(*inst.formula, a, 2))
        throw Error(Errc::NotSatisfying, "assignment leaves a clause with fewer than 2 true literals");
    VertexSet s(inst.graph.n());
    for (int i = 1; i <= inst.formula->num_vars(); ++i) s |= literal_vertices(inst, i, a.value(i));
    return s;
}

/// X_i is true iff u_i is in s (for C8: iff all of U_i is in s).
inline Assignment assignment_from_solution(const GadgetInstance& inst, const VertexSet& s) {
    detail::require_sat_kind(inst);
    require_cap(inst.graph, s);
    Assignment a{std::vector<bool>(static_cast<std::size_t>(inst.formula->num_vars()))};
    for (int i = 1; i <= inst.formula->num_vars(); ++i)
        a.values[static_cast<std::size_t>(i - 1)] = literal_vertices(inst, i, true).is_subset_of(s);
    return a;
}

/// A named vertex group that should induce a specific pattern.
struct GadgetBlock {
    std::string name;
    VertexSet members;
    Graph expected; // in member order
};

/// Every block of the construction with the graph it must induce.
inline std::vector<GadgetBlock> gadget_blocks(const GadgetInstance& inst) {
    const Graph block = is_sat_gadget(inst.kind) ? detail::sat_block(inst.kind)
                                                 : detail::inductive_block(inst.kind, inst.t);
    std::map<std::tuple<int, int, bool, int, int>, VertexSet> groups;
    for (Vertex v = 0; v < inst.roles.size(); ++v) {
        const Role& r = inst.roles[v];
        if (r.kind == RoleKind::Source || r.kind == RoleKind::Literal) continue;
        // both literal sets of a C8 variable form one block
        const bool pol = r.kind == RoleKind::LiteralSet ? true : r.positive;
        auto key = std::make_tuple(static_cast<int>(r.kind), r.index, pol, r.slot, r.slot2);
        auto it = groups.try_emplace(key, VertexSet(inst.graph.n())).first;
        it->second.insert(v);
    }
    std::vector<GadgetBlock> out;
    for (auto& [key, members] : groups) {
        const Role& r = inst.roles[members.first()];
        std::string name = r.label();
        name = name.substr(0, name.find('#'));
        out.push_back(GadgetBlock{name, members, block});
    }
    return out;
}

/// Forward-soundness check: is inst.graph (+) s free of the target pattern?
/// Blocks that are still modules after complementing speed up the search
/// for prime targets.
inline bool complement_is_target_free(const GadgetInstance& inst, const VertexSet& s) {
    const Graph g = subgraph_complement(inst.graph, s);
    std::vector<VertexSet> modules;
    for (auto& b : gadget_blocks(inst))
        if (is_module(g, b.members)) modules.push_back(std::move(b.members));
    return is_h_free_modular(g, make_pattern(target_pattern(inst)), modules);
}

/// Second, role-driven statement of each construction's edge rules:
/// decides adjacency of two vertices from their roles alone.
inline bool role_adjacent(const GadgetInstance& inst, Vertex x, Vertex y) {
    if (x == y) return false;
    const Role& a = inst.roles.at(x);
    const Role& b = inst.roles.at(y);
    const GadgetKind kind = inst.kind;

    if (!is_sat_gadget(kind)) {
        static thread_local std::pair<std::pair<int, int>, Graph> cache{{-1, -1}, Graph()};
        if (cache.first != std::make_pair(static_cast<int>(kind), inst.t))
            cache = {{static_cast<int>(kind), inst.t}, detail::inductive_block(kind, inst.t)};
        const Graph& block = cache.second;
        if (a.kind == RoleKind::Source && b.kind == RoleKind::Source)
            return inst.source->has_edge(static_cast<Vertex>(a.index), static_cast<Vertex>(b.index));
        if (a.kind == RoleKind::Source || b.kind == RoleKind::Source) {
            const Role& src = a.kind == RoleKind::Source ? a : b;
            const Role& w = a.kind == RoleKind::Source ? b : a;
            return w.index == src.index && !w.special;
        }
        if (a.index == b.index) return block.has_edge(static_cast<Vertex>(a.pos), static_cast<Vertex>(b.pos));
        return kind == GadgetKind::CycleInductive;
    }

    const CnfFormula& phi = *inst.formula;
    const Graph block = detail::sat_block(kind);
    auto same_block = [&](const Role& p, const Role& q) {
        return p.kind == q.kind && p.index == q.index && p.positive == q.positive && p.slot == q.slot &&
               p.slot2 == q.slot2;
    };
    auto in_block_edge = [&](const Role& p, const Role& q) {
        return block.has_edge(static_cast<Vertex>(p.pos), static_cast<Vertex>(q.pos));
    };
    // clause role c versus literal (var, positive): which clause positions see it
    auto clause_sees_literal = [&](const Role& c, int var, bool positive) {
        const Clause& cl = phi.clause(static_cast<std::size_t>(c.index - 1));
        const int at = detail::literal_position(cl, var, positive);
        if (kind == GadgetKind::K15) return at != 0;
        if (kind == GadgetKind::C8) return at != 0 && (at == c.slot || at == c.slot2);
        if (at == 0) return true; // P7/P8: literals outside C_i
        return at == c.slot || at == c.slot2;
    };
    auto ordered = [&](RoleKind k1, RoleKind k2) -> std::pair<const Role*, const Role*> {
        if (a.kind == k1 && b.kind == k2) return {&a, &b};
        if (a.kind == k2 && b.kind == k1) return {&b, &a};
        return {nullptr, nullptr};
    };

    if (kind == GadgetKind::C8) {
        if (a.kind == RoleKind::LiteralSet && b.kind == RoleKind::LiteralSet)
            return a.index == b.index && in_block_edge(a, b);
        if (a.kind == RoleKind::Clause && b.kind == RoleKind::Clause) {
            if (a.index != b.index) return true;
            return same_block(a, b) && in_block_edge(a, b);
        }
        auto [c, l] = ordered(RoleKind::Clause, RoleKind::LiteralSet);
        return c && clause_sees_literal(*c, l->index, l->positive);
    }

    if (kind == GadgetKind::K15) {
        if (a.kind == RoleKind::Literal && b.kind == RoleKind::Literal) return a.index == b.index;
        if (a.kind == RoleKind::Clause && b.kind == RoleKind::Clause) return true;
        if (a.kind == RoleKind::Hanging && b.kind == RoleKind::Hanging) {
            if (a.index != b.index) return false;
            if (a.slot == b.slot) return in_block_edge(a, b);
            return a.slot == 1 || b.slot == 1;
        }
        if (auto [l, h] = ordered(RoleKind::Literal, RoleKind::Hanging); l) return l->index == h->index && h->slot == 1;
        if (auto [c, l] = ordered(RoleKind::Clause, RoleKind::Literal); c) return clause_sees_literal(*c, l->index, l->positive);
        return false;
    }

    // P7 / P8
    if (a.kind == RoleKind::Hanging || b.kind == RoleKind::Hanging) {
        const Role& h = a.kind == RoleKind::Hanging ? a : b;
        const Role& o = a.kind == RoleKind::Hanging ? b : a;
        const bool own_variable = (o.kind == RoleKind::Hanging || o.kind == RoleKind::Literal) && o.index == h.index;
        if (!own_variable) return true;
        if (o.kind == RoleKind::Literal) return o.positive == h.positive && h.slot == 1;
        if (o.positive != h.positive) return false;
        if (o.slot == h.slot) return in_block_edge(a, b);
        return o.slot - h.slot == 1 || h.slot - o.slot == 1;
    }
    if (a.kind == RoleKind::Literal && b.kind == RoleKind::Literal) return false;
    if (a.kind == RoleKind::Clause && b.kind == RoleKind::Clause) {
        if (a.index != b.index) return true;
        return same_block(a, b) && in_block_edge(a, b);
    }
    auto [c, l] = ordered(RoleKind::Clause, RoleKind::Literal);
    return c && clause_sees_literal(*c, l->index, l->positive);
}

/// Rebuilds the graph from roles via `role_adjacent`.
inline Graph rebuild_from_roles(const GadgetInstance& inst) {
    Graph g(inst.roles.size());
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y = x + 1; y < g.n(); ++y)
            if (role_adjacent(inst, x, y)) g.add_edge(x, y);
    return g;
}

} // namespace sc
