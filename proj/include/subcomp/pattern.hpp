#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "error.hpp"
#include "graph.hpp"

namespace sc {

enum class PatternKind { Complete, Empty, Path, Cycle, Star, ComplementOf };

/// Names one of the forbidden patterns K_t, tK_1, P_t, C_t, K_{1,t} or the
/// complement of another pattern. For Star, `size` is the number of leaves.
struct PatternSpec {
    PatternKind kind = PatternKind::Complete;
    std::size_t size = 1;
    std::shared_ptr<const PatternSpec> inner; // set only for ComplementOf

    static PatternSpec complete(std::size_t t) { return {PatternKind::Complete, t, nullptr}; }
    static PatternSpec empty(std::size_t t) { return {PatternKind::Empty, t, nullptr}; }
    static PatternSpec path(std::size_t t) { return {PatternKind::Path, t, nullptr}; }
    static PatternSpec cycle(std::size_t t) { return {PatternKind::Cycle, t, nullptr}; }
    static PatternSpec star(std::size_t leaves) { return {PatternKind::Star, leaves, nullptr}; }
    static PatternSpec complement_of(PatternSpec p) {
        std::size_t sz = p.order();
        return {PatternKind::ComplementOf, sz, std::make_shared<const PatternSpec>(std::move(p))};
    }

    /// Vertex count of the pattern graph.
    std::size_t order() const {
        switch (kind) {
        case PatternKind::Star: return size + 1;
        case PatternKind::ComplementOf: return inner ? inner->order() : 0;
        default: return size;
        }
    }

    /// Short name as accepted by `parse_pattern`: K3, I4, P7, C8, S5 (K_{1,5}), coP3.
    std::string name() const {
        switch (kind) {
        case PatternKind::Complete: return "K" + std::to_string(size);
        case PatternKind::Empty: return "I" + std::to_string(size);
        case PatternKind::Path: return "P" + std::to_string(size);
        case PatternKind::Cycle: return "C" + std::to_string(size);
        case PatternKind::Star: return "S" + std::to_string(size);
        case PatternKind::ComplementOf: return "co" + (inner ? inner->name() : std::string("?"));
        }
        return "?";
    }
};

inline Graph make_pattern(const PatternSpec& spec) {
    const std::size_t t = spec.size;
    switch (spec.kind) {
    case PatternKind::Complete: {
        if (t < 1) throw Error(Errc::InvalidPattern, "K_t needs t >= 1");
        Graph g(t);
        for (Vertex u = 0; u < t; ++u)
            for (Vertex v = u + 1; v < t; ++v) g.add_edge(u, v);
        return g;
    }
    case PatternKind::Empty:
        if (t < 1) throw Error(Errc::InvalidPattern, "tK_1 needs t >= 1");
        return Graph(t);
    case PatternKind::Path: {
        if (t < 1) throw Error(Errc::InvalidPattern, "P_t needs t >= 1");
        Graph g(t);
        for (Vertex v = 0; v + 1 < t; ++v) g.add_edge(v, v + 1);
        return g;
    }
    case PatternKind::Cycle: {
        if (t < 3) throw Error(Errc::InvalidPattern, "C_t needs t >= 3, got " + std::to_string(t));
        Graph g(t);
        for (Vertex v = 0; v < t; ++v) g.add_edge(v, (v + 1) % t);
        return g;
    }
    case PatternKind::Star: {
        if (t < 1) throw Error(Errc::InvalidPattern, "K_{1,t} needs t >= 1");
        Graph g(t + 1);
        for (Vertex v = 1; v <= t; ++v) g.add_edge(0, v);
        return g;
    }
    case PatternKind::ComplementOf:
        if (!spec.inner) throw Error(Errc::InvalidPattern, "complement pattern without operand");
        return complement(make_pattern(*spec.inner));
    }
    throw Error(Errc::InvalidPattern, "unknown pattern kind");
}

/// Parses K<t>, I<t>, P<t>, C<t>, S<t> (star with t leaves; K1,<t> also
/// accepted) with an optional "co" prefix for the complement.
inline PatternSpec parse_pattern(std::string_view text) {
    if (text.starts_with("co")) return PatternSpec::complement_of(parse_pattern(text.substr(2)));
    auto number = [&](std::string_view digits) -> std::size_t {
        if (digits.empty()) throw Error(Errc::InvalidPattern, "missing size in '" + std::string(text) + "'");
        std::size_t v = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(Errc::InvalidPattern, "bad size in '" + std::string(text) + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
            if (v > 4096) throw Error(Errc::InvalidPattern, "pattern too large");
        }
        return v;
    };
    if (text.starts_with("K1,")) return PatternSpec::star(number(text.substr(3)));
    if (text.empty()) throw Error(Errc::InvalidPattern, "empty pattern name");
    PatternSpec spec;
    switch (text.front()) {
    case 'K': spec = PatternSpec::complete(number(text.substr(1))); break;
    case 'I': spec = PatternSpec::empty(number(text.substr(1))); break;
    case 'P': spec = PatternSpec::path(number(text.substr(1))); break;
    case 'C': spec = PatternSpec::cycle(number(text.substr(1))); break;
    case 'S': spec = PatternSpec::star(number(text.substr(1))); break;
    default: throw Error(Errc::InvalidPattern, "unknown pattern '" + std::string(text) + "'");
    }
    make_pattern(spec); // validates size constraints
    return spec;
}

} // namespace sc
