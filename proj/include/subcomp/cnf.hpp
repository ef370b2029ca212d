#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace sc {

/// A literal over variable `var` (1-based, as in DIMACS).
struct Literal {
    int var = 1;
    bool positive = true;

    int dimacs() const noexcept { return positive ? var : -var; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Exact-k CNF: every clause has k literals over k distinct variables.
/// Literals inside a clause are kept sorted by variable index.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(int num_vars, int width, std::vector<Clause> clauses)
        : n_(num_vars), k_(width), clauses_(std::move(clauses)) {
        if (n_ < 0 || k_ < 0) throw Error(Errc::InvalidArgs, "negative variable count or width");
        for (std::size_t i = 0; i < clauses_.size(); ++i) normalize_and_check(clauses_[i], i + 1);
    }

    int num_vars() const noexcept { return n_; }
    int width() const noexcept { return k_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    const Clause& clause(std::size_t i) const { return clauses_.at(i); }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    void normalize_and_check(Clause& c, std::size_t index) const {
        if (static_cast<int>(c.size()) != k_)
            throw Error(Errc::NonUniformClause, "clause " + std::to_string(index) + " has " +
                                                    std::to_string(c.size()) + " literals, expected " +
                                                    std::to_string(k_));
        std::sort(c.begin(), c.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].var < 1 || c[j].var > n_)
                throw Error(Errc::InvalidArgs, "clause " + std::to_string(index) + " uses variable " +
                                                   std::to_string(c[j].var) + " outside 1.." + std::to_string(n_));
            if (j > 0 && c[j].var == c[j - 1].var)
                throw Error(Errc::RepeatedVariable, "clause " + std::to_string(index) + " repeats variable " +
                                                        std::to_string(c[j].var));
        }
    }

    int n_ = 0;
    int k_ = 0;
    std::vector<Clause> clauses_;
};

/// Truth values of variables 1..n, stored 0-based.
struct Assignment {
    std::vector<bool> values;

    bool value(int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
    bool satisfies(const Literal& l) const { return value(l.var) == l.positive; }
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Parses DIMACS CNF. Clauses may span lines; the width k is the common
/// clause length (0 for a formula without clauses).
inline CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    int n = -1;
    long declared_m = -1;
    std::vector<Clause> clauses;
    Clause current;
    std::size_t current_line = 0;
    auto fail = [&](const std::string& why) { return Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why); };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c' || line[first] == '%') continue;
        std::istringstream tokens(line.substr(first));
        if (line[first] == 'p') {
            if (n >= 0) throw fail("duplicate problem line");
            std::string p, fmt;
            if (!(tokens >> p >> fmt >> n >> declared_m) || fmt != "cnf" || n < 0 || declared_m < 0)
                throw fail("malformed problem line");
            continue;
        }
        if (n < 0) throw fail("clause before problem line");
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') throw fail("bad literal '" + tok + "'");
            if (lit == 0) {
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(lit) > n) throw fail("variable " + std::to_string(std::labs(lit)) + " exceeds declared " + std::to_string(n));
            if (current.empty()) current_line = line_no;
            current.push_back(Literal{static_cast<int>(std::labs(lit)), lit > 0});
        }
    }
    if (n < 0) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": missing problem line");
    if (!current.empty())
        throw Error(Errc::ParseError, "line " + std::to_string(current_line) + ": clause not terminated by 0");
    if (static_cast<long>(clauses.size()) != declared_m)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": declared " + std::to_string(declared_m) +
                                          " clauses, found " + std::to_string(clauses.size()));
    const int k = clauses.empty() ? 0 : static_cast<int>(clauses.front().size());
    return CnfFormula(n, k, std::move(clauses));
}

inline std::string emit_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars() << ' ' << phi.num_clauses() << '\n';
    for (const auto& c : phi.clauses()) {
        for (const auto& l : c) out << l.dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

inline void require_length(const CnfFormula& phi, const Assignment& a) {
    if (a.values.size() != static_cast<std::size_t>(phi.num_vars()))
        throw Error(Errc::LengthMismatch, "assignment has " + std::to_string(a.values.size()) +
                                              " values for " + std::to_string(phi.num_vars()) + " variables");
}

inline std::size_t true_literals(const Clause& c, const Assignment& a) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [&](const Literal& l) { return a.satisfies(l); }));
}

/// True iff every clause has at least r true literals under a.
inline bool check_threshold(const CnfFormula& phi, const Assignment& a, int r) {
    require_length(phi, a);
    if (r < 0 || r > phi.width())
        throw Error(Errc::InvalidArgs, "threshold " + std::to_string(r) + " outside 0.." + std::to_string(phi.width()));
    return std::all_of(phi.clauses().begin(), phi.clauses().end(),
                       [&](const Clause& c) { return true_literals(c, a) >= static_cast<std::size_t>(r); });
}

inline constexpr int kMaxBruteVars = 24;

/// Lexicographically least assignment (x1 first, false < true) with at
/// least r true literals per clause.
inline std::optional<Assignment> brute_sat(const CnfFormula& phi, int r) {
    const int n = phi.num_vars();
    if (n > kMaxBruteVars)
        throw Error(Errc::TooManyVariables, std::to_string(n) + " variables exceed the limit of " +
                                                std::to_string(kMaxBruteVars));
    Assignment a{std::vector<bool>(static_cast<std::size_t>(n))};
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i) a.values[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1U) != 0;
        if (check_threshold(phi, a, r)) return a;
    }
    return std::nullopt;
}

/// (s+1)-SAT formula with a fresh positive variable Y_i = n + i appended to
/// clause i. An assignment with >= s-2 true literals per clause of phi
/// exists iff one with >= s-1 exists for the result.
inline CnfFormula lift(const CnfFormula& phi) {
    if (phi.width() < 3)
        throw Error(Errc::WidthTooSmall, "lift needs clause width >= 3, got " + std::to_string(phi.width()));
    const int n = phi.num_vars();
    std::vector<Clause> out;
    out.reserve(phi.num_clauses());
    for (std::size_t i = 0; i < phi.num_clauses(); ++i) {
        Clause c = phi.clause(i);
        c.push_back(Literal{n + static_cast<int>(i) + 1, true});
        out.push_back(std::move(c));
    }
    return CnfFormula(n + static_cast<int>(phi.num_clauses()), phi.width() + 1, std::move(out));
}

} // namespace sc
