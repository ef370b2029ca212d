#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sctool_app.hpp"

namespace fs = std::filesystem;
using sc::json;

namespace {

const fs::path kSamples = SAMPLES_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run sctool_run(std::vector<std::string> args) {
    args.insert(args.begin(), "sctool");
    std::ostringstream out, err;
    const int code = sctool::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return (kSamples / name).string(); }

// per-test scratch directory, removed on exit
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("sctool_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        std::ofstream(path / name, std::ios::binary) << text;
        return (path / name).string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("solve K3-free on C5") {
    const auto r = sctool_run({"solve", "--target", "kt", "-t", "3", sample("c5.g6")});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["status"] == "Yes");
    CHECK(j["solution"] == json::array());
    CHECK(j["verified"] == true);
}

TEST_CASE("solve by brute force on the K3 no-instance") {
    TempDir tmp("noinst");
    const auto no = sc::no_instance(sc::make_pattern(sc::PatternSpec::complete(3)));
    const auto path = tmp.file("no.g6", sc::g6_encode(no) + "\n");
    const auto r = sctool_run({"solve", "--target", "pattern", "--pattern", "K3", "--brute", path});
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    CHECK(j["status"] == "No");
    CHECK(j["solution"].is_null());
    CHECK(j["stats"]["subsets_examined"] == 512);

    CHECK(sctool_run({"solve", "--target", "kt", "-t", "3", path}).code == 1);
    const auto capped = sctool_run({"solve", "--target", "pattern", "--pattern", "K3", "--brute", "--budget", "10", path});
    CHECK(capped.code == 2);
    CHECK(json::parse(capped.out)["status"] == "Unknown");
}

TEST_CASE("solve with t = 1 needs a null graph") {
    CHECK(sctool_run({"solve", "--target", "kt", "-t", "1", sample("c5.g6")}).code == 1);
    TempDir tmp("null");
    CHECK(sctool_run({"solve", "--target", "kt", "-t", "1", tmp.file("e.g6", "?\n")}).code == 0);
}

TEST_CASE("solve other targets") {
    const auto bar = sctool_run({"solve", "--target", "kt-bar", "-t", "3", sample("c5.g6")});
    CHECK(bar.code == 0);
    const auto deg = sctool_run({"solve", "--target", "kt", "-t", "3", "--recognizer", "degenerate", sample("c5.g6")});
    CHECK(deg.code == 0);
    CHECK(json::parse(deg.out)["verified"] == true);
    const auto pat = sctool_run({"solve", "--target", "pattern", "--pattern", "P3", sample("p4.json")});
    CHECK(pat.code == 0);
    const auto human = sctool_run({"--human", "solve", "--target", "kt", "-t", "3", sample("c5.g6")});
    CHECK(human.code == 0);
    CHECK(human.out.find("Yes") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(sctool_run({}).code == 64);
    CHECK(sctool_run({"frobnicate"}).code == 64);
    CHECK(sctool_run({"solve", "--target", "kt", sample("c5.g6")}).code == 64);
    CHECK(sctool_run({"solve", "--target", "pattern", sample("c5.g6")}).code == 64);
    CHECK(sctool_run({"solve", "--target", "bogus", "-t", "3", sample("c5.g6")}).code == 64);
    CHECK(sctool_run({"solve", "-t", "3", "--pattern", "K3", sample("c5.g6")}).code == 64);
    CHECK(sctool_run({"solve", "--target", "kt", "-t", "3", "--budget", "0", sample("c5.g6")}).code == 64);
    CHECK(sctool_run({"gen", "star", sample("k14.g6")}).code == 64);
    CHECK(sctool_run({"verify", "nope"}).code == 64);
    const auto r = sctool_run({"convert", "--from", "g6"});
    CHECK(r.code == 64);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("gen prints the closed-form size") {
    TempDir tmp("gen");
    auto r = sctool_run({"gen", "c8", sample("one_clause.cnf"), "-o", tmp.at("c8")});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices=80\n");
    const auto graphs = sc::g6_decode_lines(slurp(tmp.at("c8.g6")));
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].n() == 80);
    const json cert = json::parse(slurp(tmp.at("c8.cert.json")));
    CHECK(cert["kind"] == "c8");
    CHECK(cert["size_formula_check"]["ok"] == true);

    r = sctool_run({"gen", "star", "-t", "4", sample("k14.g6"), "-o", tmp.at("star")});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices=35\n");

    CHECK(sctool_run({"gen", "k15", sample("figure.cnf"), "-o", tmp.at("k15")}).out == "vertices=125\n");
    CHECK(sctool_run({"gen", "k15", "--dummy-clause", sample("one_clause.cnf"), "-o", tmp.at("d")}).out ==
          "vertices=186\n");
    CHECK(sctool_run({"gen", "p7", sample("one_clause.cnf"), "-o", tmp.at("p7")}).out == "vertices=197\n");
    CHECK(sctool_run({"gen", "p8", sample("one_clause.cnf"), "-o", tmp.at("p8")}).out == "vertices=232\n");
    CHECK(sctool_run({"gen", "cycle", "-t", "5", sample("k14.g6"), "-o", tmp.at("cy")}).out == "vertices=40\n");
}

TEST_CASE("gen precondition violations exit 65") {
    TempDir tmp("genbad");
    const auto r = sctool_run({"gen", "path", "-t", "2", sample("k14.g6"), "-o", tmp.at("x")});
    CHECK(r.code == 65);
    CHECK(r.err.find("InvalidT") != std::string::npos);
    const auto cnf3 = tmp.file("three.cnf", "p cnf 3 1\n1 2 3 0\n");
    CHECK(sctool_run({"gen", "k15", cnf3, "-o", tmp.at("y")}).code == 65);
    CHECK(sctool_run({"gen", "k15", tmp.at("missing.cnf")}).code == 65);
}

TEST_CASE("verify suites") {
    auto r = sctool_run({"verify", "gs", "--max-n", "5"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["suite"] == "gs");
    CHECK(j["failures"] == 0);
    CHECK(j["cases"].get<std::uint64_t>() > 0);

    r = sctool_run({"verify", "kt-oracle", "--max-n", "5", "--samples", "50"});
    CHECK(r.code == 0);
    CHECK(sctool_run({"verify", "split", "--max-n", "6", "--samples", "50"}).code == 0);
    CHECK(sctool_run({"verify", "dual", "--max-n", "4"}).code == 0);
    CHECK(sctool_run({"verify", "inductive", "--max-n", "2"}).code == 0);

    const auto a = sctool_run({"verify", "split", "--max-n", "6", "--samples", "30", "--seed", "9"});
    const auto b = sctool_run({"verify", "split", "--max-n", "6", "--samples", "30", "--seed", "9"});
    CHECK(json::parse(a.out)["cases"] == json::parse(b.out)["cases"]);
    CHECK(sctool_run({"--human", "verify", "gs", "--max-n", "3"}).out.find("PASS") != std::string::npos);
}

TEST_CASE("convert round trip") {
    TempDir tmp("conv");
    auto r = sctool_run({"convert", "--from", "g6", "--to", "json", sample("c5.g6")});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 5);
    CHECK(j["edges"].size() == 5);
    const auto json_path = tmp.file("c5.json", r.out);
    r = sctool_run({"convert", "--from", "json", "--to", "g6", json_path});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(sample("c5.g6")));

    const auto many = tmp.file("many.g6", "Dhc\nCh\n?\n");
    r = sctool_run({"convert", "--from", "g6", "--to", "json", many, "-o", tmp.at("many.json")});
    CHECK(r.code == 0);
    const json arr = json::parse(slurp(tmp.at("many.json")));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 3);
    r = sctool_run({"convert", "--from", "json", "--to", "g6", tmp.at("many.json")});
    CHECK(r.out == "Dhc\nCh\n?\n");
}

TEST_CASE("convert rejects bad input with exit 65") {
    TempDir tmp("convbad");
    const auto bad = tmp.file("bad.g6", "D~~~~~\n");
    auto r = sctool_run({"convert", "--from", "g6", "--to", "json", bad});
    CHECK(r.code == 65);
    CHECK(r.err.find("byte") != std::string::npos);

    const auto asym = tmp.file("asym.json", R"({"n":3,"adj":[[0,1,0],[0,0,1],[0,1,0]]})");
    r = sctool_run({"convert", "--from", "json", "--to", "g6", asym});
    CHECK(r.code == 65);
    CHECK(r.err.find("asymmetric") != std::string::npos);

    const auto dup = tmp.file("dup.json", R"({"n":3,"edges":[[0,1],[1,0]]})");
    CHECK(sctool_run({"convert", "--from", "json", "--to", "g6", dup}).code == 65);
    CHECK(sctool_run({"solve", "--target", "kt", "-t", "3", bad}).code == 65);
}
