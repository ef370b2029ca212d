#pragma once

#include <chrono>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnf.hpp"
#include "error.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "solve.hpp"
#include "split.hpp"

namespace sc {

using json = nlohmann::ordered_json;

inline json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

/// {"n": 3, "edges": [[0,1],[1,2]], "labels": [...]} with labels optional.
inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json j{{"n", g.n()}, {"edges", std::move(edges)}};
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

namespace detail {

inline Error bad_json(const std::string& why) { return Error(Errc::MalformedJson, why); }

inline std::size_t json_index(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<unsigned long long>() >= n)
        throw bad_json(where + ": vertex " + v.dump() + " is not in 0.." + std::to_string(n ? n - 1 : 0));
    return v.get<std::size_t>();
}

} // namespace detail

/// Reads a graph from the JSON schema above. Edges are unordered pairs; a
/// pair listed twice (in either orientation) or a self-loop is rejected.
/// An optional "adj" 0/1 matrix must be symmetric with a zero diagonal and
/// agree with "edges" when both are given.
inline Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw detail::bad_json("graph must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw detail::bad_json("field 'n' must be a non-negative integer");
    const auto n = j["n"].get<std::size_t>();
    if (n > (std::size_t{1} << 20)) throw detail::bad_json("graph order " + std::to_string(n) + " too large");
    if (!j.contains("edges") && !j.contains("adj")) throw detail::bad_json("need 'edges' or 'adj'");

    Graph g(n);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw detail::bad_json("'edges' must be an array");
        std::size_t k = 0;
        for (const auto& e : j["edges"]) {
            const std::string where = "edge " + std::to_string(k++);
            if (!e.is_array() || e.size() != 2) throw detail::bad_json(where + " must be a pair");
            const auto u = detail::json_index(e[0], n, where);
            const auto v = detail::json_index(e[1], n, where);
            if (u == v) throw detail::bad_json(where + " is a self-loop on " + std::to_string(u));
            if (g.has_edge(u, v))
                throw detail::bad_json(where + " repeats {" + std::to_string(u) + "," + std::to_string(v) + "}");
            g.add_edge(u, v);
        }
    }
    if (j.contains("adj")) {
        const json& a = j["adj"];
        if (!a.is_array() || a.size() != n) throw detail::bad_json("'adj' must have n rows");
        Graph h(n);
        for (std::size_t u = 0; u < n; ++u) {
            if (!a[u].is_array() || a[u].size() != n) throw detail::bad_json("'adj' row " + std::to_string(u) + " must have n entries");
            for (std::size_t v = 0; v < n; ++v) {
                const json& x = a[u][v];
                if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
                    throw detail::bad_json("'adj' entries must be 0 or 1");
                const bool bit = x.get<int>() == 1;
                if (u == v && bit) throw detail::bad_json("'adj' has a self-loop on " + std::to_string(u));
                if (v < u && bit != (a[v][u].get<int>() == 1))
                    throw detail::bad_json("'adj' is asymmetric at (" + std::to_string(v) + "," + std::to_string(u) + ")");
                if (v < u && bit) h.add_edge(u, v);
            }
        }
        if (j.contains("edges") && !(h == g)) throw detail::bad_json("'adj' disagrees with 'edges'");
        g = std::move(h);
    }
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_array() || l.size() != n) throw detail::bad_json("'labels' must have n strings");
        std::vector<std::string> labels;
        for (const auto& x : l) {
            if (!x.is_string()) throw detail::bad_json("'labels' must have n strings");
            labels.push_back(x.get<std::string>());
        }
        g.set_labels(std::move(labels));
    }
    return g;
}

inline Graph graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw detail::bad_json(std::string("byte ") + std::to_string(e.byte) + ": invalid JSON");
    }
    return graph_from_json(j);
}

inline json report_to_json(const SolveReport& r) {
    const double ms = std::chrono::duration<double, std::milli>(r.stats.elapsed).count();
    return json{{"status", std::string(status_name(r.status))},
                {"solution", r.solution ? set_to_json(*r.solution) : json(nullptr)},
                {"stats",
                 {{"subsets_examined", r.stats.subsets_examined},
                  {"pairs_examined", r.stats.pairs_examined},
                  {"elapsed_ms", ms}}},
                {"verified", r.verified}};
}

inline json partition_to_json(const SplitPartition& part) {
    return json{{"p", part.p}, {"q", part.q}, {"P", set_to_json(part.P)}, {"Q", set_to_json(part.Q)}};
}

inline json assignment_to_json(const Assignment& a) {
    json values = json::array();
    for (bool b : a.values) values.push_back(b);
    return json{{"values", std::move(values)}};
}

inline Assignment assignment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw detail::bad_json("assignment needs a 'values' array");
    Assignment a;
    for (const auto& v : j["values"]) {
        if (!v.is_boolean()) throw detail::bad_json("assignment values must be booleans");
        a.values.push_back(v.get<bool>());
    }
    return a;
}

inline json role_to_json(Vertex v, const Role& r) {
    json idx = json::object();
    switch (r.kind) {
    case RoleKind::Source: idx["u"] = r.index; break;
    case RoleKind::Block:
        idx["u"] = r.index;
        idx["pos"] = r.pos;
        if (r.special) idx["special"] = true;
        break;
    case RoleKind::Literal:
        idx["i"] = r.index;
        idx["positive"] = r.positive;
        break;
    case RoleKind::Hanging:
        idx["i"] = r.index;
        idx["positive"] = r.positive;
        idx["s"] = r.slot;
        idx["pos"] = r.pos;
        break;
    case RoleKind::LiteralSet:
        idx["i"] = r.index;
        idx["positive"] = r.positive;
        idx["pos"] = r.pos;
        break;
    case RoleKind::Clause:
        idx["i"] = r.index;
        if (r.slot > 0) idx["s"] = r.slot;
        if (r.slot2 > 0) idx["t"] = r.slot2;
        idx["pos"] = r.pos;
        break;
    }
    return json{{"vertex", v}, {"role", std::string(role_kind_name(r.kind))}, {"label", r.label()}, {"indices", idx}};
}

/// Sidecar certificate written next to the graph6 of a generated instance.
inline json certificate_to_json(const GadgetInstance& inst) {
    json params = json::object();
    if (inst.source) {
        params["t"] = inst.t;
        params["source_n"] = inst.source->n();
        params["source_g6"] = g6_encode(*inst.source);
        params["source_target"] = source_pattern(inst).name();
    }
    if (inst.formula) {
        params["n"] = inst.formula->num_vars();
        params["m"] = inst.formula->num_clauses();
        params["dimacs"] = emit_dimacs(*inst.formula);
    }
    params["target"] = target_pattern(inst).name();

    json roles = json::array();
    for (Vertex v = 0; v < inst.roles.size(); ++v) roles.push_back(role_to_json(v, inst.roles[v]));

    const std::size_t expected = expected_size(inst);
    json j{{"kind", std::string(gadget_kind_name(inst.kind))},
           {"params", std::move(params)},
           {"roles", std::move(roles)},
           {"size_formula_check",
            {{"formula", std::string(size_formula(inst.kind))},
             {"expected", expected},
             {"actual", inst.graph.n()},
             {"ok", expected == inst.graph.n()}}}};
    if (inst.kind == GadgetKind::K15)
        j["literal_pair_adjacent"] = true;
    else if (inst.kind == GadgetKind::P7 || inst.kind == GadgetKind::P8)
        j["literal_pair_adjacent"] = false; // literal vertices form an independent set
    return j;
}

} // namespace sc
