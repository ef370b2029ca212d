#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subcomp.hpp"

namespace sctool {

// exit codes
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

inline std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sc::Error(sc::Errc::InvalidArgs, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw sc::Error(sc::Errc::InvalidArgs, "cannot write '" + path + "'");
}

/// A graph from graph6 or, for *.json paths, the JSON graph schema.
inline sc::Graph load_graph(const std::string& path) {
    const std::string text = read_input(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return sc::graph_from_json_text(text);
    const auto graphs = sc::g6_decode_lines(text);
    if (graphs.size() != 1)
        throw sc::Error(sc::Errc::MalformedG6, "expected exactly one graph, found " + std::to_string(graphs.size()));
    return graphs.front();
}

inline int status_exit(sc::Status s) {
    switch (s) {
    case sc::Status::Yes: return kExitYes;
    case sc::Status::No: return kExitNo;
    case sc::Status::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

struct SolveArgs {
    std::string target = "kt";
    int t = 0;
    std::string pattern;
    std::string recognizer = "ktfree";
    bool brute = false;
    std::uint64_t budget = sc::kDefaultSubsetBudget;
    std::string input;
};

/// Membership in the K_t-free subclass picked by --recognizer.
inline sc::Recognizer make_recognizer(const std::string& name, int t) {
    const auto tt = static_cast<std::size_t>(t);
    if (name == "ktfree") return [tt](const sc::Graph& x) { return sc::is_kt_free(x, tt); };
    // (t-2)-degenerate graphs cannot contain K_t
    return [t](const sc::Graph& x) { return x.n() == 0 || static_cast<int>(sc::degeneracy(x)) <= t - 2; };
}

inline int run_solve(const SolveArgs& a, bool human, std::ostream& out) {
    const sc::Graph g = load_graph(a.input);
    sc::SolveReport report;
    std::string method;
    if (a.target == "kt" || a.target == "kt-bar") {
        if (a.t < 1) throw sc::Error(sc::Errc::InvalidT, "-t must be >= 1, got " + std::to_string(a.t));
        const sc::Recognizer member = make_recognizer(a.recognizer, a.t);
        auto base = [&](const sc::Graph& x) {
            if (a.brute) return sc::brute_solve_class(x, member, a.budget);
            return sc::solve_kt_free(x, a.t, member);
        };
        if (a.t == 1 && a.brute) {
            // only the null graph avoids K_1
            report = sc::brute_solve(g, sc::make_pattern(sc::PatternSpec::complete(1)), a.budget);
        } else if (a.target == "kt") {
            report = base(g);
        } else {
            report = sc::solve_complement_class(g, base, member);
        }
        method = a.brute ? "brute" : "kt-free";
    } else {
        const sc::PatternSpec spec = sc::parse_pattern(a.pattern);
        const sc::Graph h = sc::make_pattern(spec);
        if (spec.kind == sc::PatternKind::Complete && !a.brute) {
            report = sc::solve_kt_free(g, static_cast<int>(spec.size));
            method = "kt-free";
        } else {
            report = sc::brute_solve(g, h, a.budget);
            method = "brute";
        }
    }
    if (human) {
        out << "status    " << sc::status_name(report.status) << '\n';
        out << "solution  ";
        if (report.solution) {
            for (auto v : report.solution->to_vector()) out << v << ' ';
        } else {
            out << '-';
        }
        out << "\nverified  " << (report.verified ? "yes" : "no") << '\n';
        out << "method    " << method << '\n';
        out << "subsets   " << report.stats.subsets_examined << '\n';
        out << "pairs     " << report.stats.pairs_examined << '\n';
        out << "time      " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double, std::milli>(report.stats.elapsed).count() << " ms\n";
    } else {
        out << sc::report_to_json(report).dump() << '\n';
    }
    return status_exit(report.status);
}

struct GenArgs {
    std::string kind;
    int t = 0;
    std::string input;
    std::string output;
    bool dummy_clause = false;
};

inline int run_gen(const GenArgs& a, std::ostream& out) {
    sc::GadgetInstance inst;
    if (a.kind == "star" || a.kind == "path" || a.kind == "cycle") {
        const sc::Graph gp = load_graph(a.input);
        inst = a.kind == "star" ? sc::star_inductive(gp, a.t)
               : a.kind == "path" ? sc::path_inductive(gp, a.t)
                                  : sc::cycle_inductive(gp, a.t);
    } else {
        const sc::CnfFormula phi = sc::parse_dimacs(read_input(a.input));
        if (a.kind == "k15") inst = sc::k15_gadget(phi, sc::GadgetOptions{a.dummy_clause});
        else if (a.kind == "p7") inst = sc::p7_gadget(phi);
        else if (a.kind == "p8") inst = sc::p8_gadget(phi);
        else inst = sc::c8_gadget(phi);
    }
    std::string prefix = a.output;
    if (prefix.empty()) {
        const std::filesystem::path p = a.input == "-" ? std::filesystem::path("instance") : std::filesystem::path(a.input);
        prefix = (p.parent_path() / p.stem()).string() + "." + a.kind;
    }
    write_file(prefix + ".g6", sc::g6_encode(inst.graph) + "\n");
    write_file(prefix + ".cert.json", sc::certificate_to_json(inst).dump(2) + "\n");
    out << "vertices=" << inst.graph.n() << '\n';
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int max_n = -1;
    std::uint64_t seed = 1;
    std::uint64_t samples = 0;
};

inline int run_verify(const VerifyArgs& a, bool human, std::ostream& out) {
    const sc::SuiteResult r = sc::run_verify_suite(a.suite, sc::VerifyOptions{a.max_n, a.seed, a.samples});
    if (human) {
        out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  cases=" << r.cases << " failures=" << r.failures
            << '\n';
        for (const auto& [k, v] : r.details.items()) out << "  " << k << " = " << v.dump() << '\n';
        if (!r.passed()) out << "  counterexample: " << r.counterexample.dump() << '\n';
    } else {
        out << r.to_json().dump() << '\n';
    }
    return r.passed() ? 0 : kExitVerifyFailed;
}

struct ConvertArgs {
    std::string from;
    std::string to;
    std::string input = "-";
    std::string output = "-";
};

inline int run_convert(const ConvertArgs& a, std::ostream& out) {
    const std::string text = read_input(a.input);
    std::vector<sc::Graph> graphs;
    if (a.from == "g6") {
        graphs = sc::g6_decode_lines(text);
    } else {
        sc::json j;
        try {
            j = sc::json::parse(text);
        } catch (const sc::json::parse_error& e) {
            throw sc::Error(sc::Errc::MalformedJson, "byte " + std::to_string(e.byte) + ": invalid JSON");
        }
        if (j.is_array())
            for (const auto& x : j) graphs.push_back(sc::graph_from_json(x));
        else
            graphs.push_back(sc::graph_from_json(j));
    }
    std::string result;
    if (a.to == "g6") {
        for (const auto& g : graphs) result += sc::g6_encode(g) + "\n";
    } else {
        sc::json j = sc::json::array();
        for (const auto& g : graphs) j.push_back(sc::graph_to_json(g));
        result = (graphs.size() == 1 ? j[0] : j).dump() + "\n";
    }
    if (a.output == "-")
        out << result;
    else
        write_file(a.output, result);
    return 0;
}

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Subgraph complementation solvers, instance generators and property checks", "sctool"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "Print tables instead of JSON");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Decide SC to a target class for one graph");
    solve->add_option("--target", sa.target, "kt, kt-bar or pattern")->check(CLI::IsMember({"kt", "kt-bar", "pattern"}));
    auto* t_opt = solve->add_option("-t", sa.t, "Clique size t of the K_t-free target");
    auto* p_opt = solve->add_option("--pattern", sa.pattern, "Forbidden pattern, e.g. K3, P4, C5, K1,3, coP3");
    t_opt->excludes(p_opt);
    solve->add_option("--recognizer", sa.recognizer, "Target subclass of K_t-free graphs")
        ->check(CLI::IsMember({"ktfree", "degenerate"}));
    solve->add_flag("--brute", sa.brute, "Use exhaustive search");
    solve->add_option("--budget", sa.budget, "Maximum number of subsets for exhaustive search")
        ->check(CLI::PositiveNumber);
    solve->add_option("input", sa.input, "Graph in graph6 (or .json); - for stdin")->required();

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate a reduction instance and its certificate");
    gen->add_option("kind", ga.kind, "star, path, cycle, k15, p7, p8 or c8")
        ->required()
        ->check(CLI::IsMember({"star", "path", "cycle", "k15", "p7", "p8", "c8"}));
    gen->add_option("input", ga.input, "Source graph (graph6) or formula (DIMACS)")->required();
    gen->add_option("-t", ga.t, "Parameter t of the inductive constructions");
    gen->add_option("-o,--output", ga.output, "Output prefix for .g6 and .cert.json");
    gen->add_flag("--dummy-clause", ga.dummy_clause, "k15: add a clause over four fresh variables first");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(sc::verify_suite_names()));
    verify->add_option("--max-n", va.max_n, "Largest order for the suite")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", va.seed, "Seed of the randomized parts");
    verify->add_option("--samples", va.samples, "Number of random cases")->check(CLI::PositiveNumber);

    ConvertArgs ca;
    auto* convert = app.add_subcommand("convert", "Convert graphs between graph6 and JSON");
    convert->add_option("--from", ca.from)->required()->check(CLI::IsMember({"g6", "json"}));
    convert->add_option("--to", ca.to)->required()->check(CLI::IsMember({"g6", "json"}));
    convert->add_option("input", ca.input, "Input file; - for stdin");
    convert->add_option("-o,--output", ca.output, "Output file; - for stdout");

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*solve) {
            if (sa.target == "pattern" && sa.pattern.empty()) {
                err << "usage error: --target pattern needs --pattern\n";
                return kExitUsage;
            }
            if (sa.target != "pattern" && t_opt->count() == 0) {
                err << "usage error: --target " << sa.target << " needs -t\n";
                return kExitUsage;
            }
            return run_solve(sa, human, out);
        }
        if (*gen) {
            const bool inductive = ga.kind == "star" || ga.kind == "path" || ga.kind == "cycle";
            if (inductive && gen->count("-t") == 0) {
                err << "usage error: gen " << ga.kind << " needs -t\n";
                return kExitUsage;
            }
            return run_gen(ga, out);
        }
        if (*verify) return run_verify(va, human, out);
        if (*convert) return run_convert(ca, out);
    } catch (const sc::Error& e) {
        err << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace sctool
