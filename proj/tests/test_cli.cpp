#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollsmith/json_io.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace scrollsmith;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string fresh_temp_file(const std::string& stem) {
    const auto ticks = std::chrono::steady_clock::now().time_since_epoch().count();
    return (std::filesystem::temp_directory_path() /
            (stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(ticks)))
        .string();
}

// Runs the CLI with stderr routed to a scratch file so the exit status and
// stdout arrive unmixed.  `env_prefix` may carry VAR=value assignments.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string errfile = fresh_temp_file("scrollsmith_stderr");
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += "\"" SCROLLSMITH_CLI_PATH "\" " + args + " 2>\"" + errfile + "\"";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.code = WEXITSTATUS(status);
    std::ifstream err(errfile);
    std::stringstream es;
    es << err.rdbuf();
    r.err = es.str();
    std::filesystem::remove(errfile);
    return r;
}

ordered_json parse_stdout(const RunResult& r) { return parse_json_text(r.out, "cli stdout"); }

std::string write_temp_json(const std::string& stem, const std::string& text) {
    const std::string path = fresh_temp_file(stem) + ".json";
    std::ofstream out(path);
    out << text;
    return path;
}

const std::string kSourceDir = SCROLLSMITH_SOURCE_DIR;

i64 line_count(const std::string& s) {
    return static_cast<i64>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("cohomology prints exact values as one line of text") {
    const RunResult r = run_cli("cohomology --surface F1 --class 2,3");
    CHECK(r.code == 0);
    CHECK(r.out == "h0=9 h1=0 h2=0 chi=9\n");

    const RunResult p = run_cli("cohomology --surface P2 --class 4");
    CHECK(p.code == 0);
    CHECK(p.out == "h0=15 h1=0 h2=0 chi=15\n");

    const RunResult tw = run_cli("cohomology --surface F1 --class 0,-4");
    CHECK(tw.code == 0);
    CHECK(tw.out == "h0=0 h1=3 h2=0 chi=-3\n");
}

TEST_CASE("cohomology --json carries the surface label and the class") {
    const RunResult r = run_cli("cohomology --surface F1 --class 2,3 --json");
    REQUIRE(r.code == 0);
    const ordered_json j = parse_stdout(r);
    CHECK(j["surface"] == "F1");
    CHECK(j["class"] == ordered_json::array({2, 3}));
    CHECK(j["h0"] == 9);
    CHECK(j["h1"] == 0);
    CHECK(j["h2"] == 0);
    CHECK(j["chi"] == 9);

    const RunResult p = run_cli("cohomology --surface P2 --class 4 --json");
    REQUIRE(p.code == 0);
    const ordered_json pj = parse_stdout(p);
    CHECK(pj["class"] == 4);
    CHECK(pj["h0"] == 15);
}

TEST_CASE("cohomology rejects malformed surfaces and classes with exit 2") {
    const RunResult bad_surface = run_cli("cohomology --surface P3 --class 4");
    CHECK(bad_surface.code == 2);
    CHECK(bad_surface.err.find("expected P2, F<e>, E<e>d or E<e>i") != std::string::npos);

    const RunResult bad_arity = run_cli("cohomology --surface F1 --class 3");
    CHECK(bad_arity.code == 2);
    CHECK(bad_arity.err.find("expected 'a,b' on a ruled base") != std::string::npos);

    const RunResult not_int = run_cli("cohomology --surface F1 --class x,y");
    CHECK(not_int.code == 2);
    CHECK(not_int.err.find("is not an integer") != std::string::npos);

    // elliptic bases have no exact dispatcher, and the CLI reports that honestly
    const RunResult elliptic = run_cli("cohomology --surface E1d --class 1,1");
    CHECK(elliptic.code == 2);
    CHECK(elliptic.err.find("error:") != std::string::npos);
}

TEST_CASE("check valma scans the shipped spec to its first witness") {
    const RunResult r =
        run_cli("check --criterion valma --scan --spec \"" + kSourceDir +
                "/data/scroll43_spec.json\"");
    REQUIRE(r.code == 0);
    const ordered_json j = parse_stdout(r);
    CHECK(j["bundle"]["w"] == 2);
    CHECK(j["pairs_scanned"] == 2);
    CHECK(j["report"]["verdict"] == "established");
    CHECK(j["report"]["witness"]["x"] == 3);
    CHECK(j["report"]["witness"]["z"] == 2);
    CHECK(j["report"]["conditions"].size() == 6);
}

TEST_CASE("check valma at a fixed level reports the silent condition") {
    const RunResult good = run_cli("check --criterion valma --x 3 --z 2 --spec \"" +
                                   kSourceDir + "/data/scroll43_spec.json\"");
    CHECK(good.code == 0);

    const RunResult silent = run_cli("check --criterion valma --x 3 --z 1 --spec \"" +
                                     kSourceDir + "/data/scroll43_spec.json\"");
    CHECK(silent.code == 1);
    const ordered_json j = parse_stdout(silent);
    CHECK(j["report"]["verdict"] == "inconclusive");
    CHECK(j["report"]["witness"].is_null());
}

TEST_CASE("check cinque separates doubled unisecant systems") {
    const RunResult ok = run_cli("check --criterion cinque --surface F1 --D 3,7 --A 1,2 --z 2");
    CHECK(ok.code == 0);
    const RunResult lines = run_cli("check --criterion cinque --surface F1 --D 3,5 --A 1,2 --z 1");
    CHECK(lines.code == 1);
}

TEST_CASE("check brosius reports the forced splitting") {
    const RunResult ok = run_cli("check --criterion brosius --e 1 --t 5 --k 5");
    REQUIRE(ok.code == 0);
    const ordered_json j = parse_stdout(ok);
    CHECK(j["forced_L"] == ordered_json::array({2, 3}));
    CHECK(j["forced_M"] == ordered_json::array({1, 2}));
    CHECK(j["report"]["kind"] == "necessary");

    const RunResult bad = run_cli("check --criterion brosius --e 1 --t 5 --k 4");
    CHECK(bad.code == 3);
}

TEST_CASE("check due and uno-b accept a plane bundle spec") {
    const std::string spec = write_temp_json("ten_point_spec", R"({
        "base": {"kind": "plane"},
        "L": 1, "M": 4, "w": 10, "lm": 1,
        "general_position": true,
        "label": "ten-point-plane-bundle"
    })");

    const RunResult due = run_cli("check --criterion due --A 1 --spec \"" + spec + "\"");
    CHECK(due.code == 0);

    const RunResult unob = run_cli("check --criterion uno-b --A 1 --eps 0 --spec \"" + spec + "\"");
    CHECK(unob.code == 0);
    const ordered_json j = parse_stdout(unob);
    CHECK(j["eps"] == 0);
    CHECK(j["report"]["verdict"] == "established");

    const RunResult eps1 = run_cli("check --criterion uno-b --A 1 --eps 1 --spec \"" + spec + "\"");
    CHECK(eps1.code == 0);

    const RunResult eps2 = run_cli("check --criterion uno-b --A 1 --eps 2 --spec \"" + spec + "\"");
    CHECK(eps2.code == 2);

    std::filesystem::remove(spec);
}

TEST_CASE("check reports usage problems with exit 2") {
    const RunResult unknown = run_cli("check --criterion zeta --x 1 --z 1");
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("expected valma, valmae, cinque, brosius, due or uno-b") !=
          std::string::npos);

    const RunResult missing = run_cli("check --criterion valma --x 3 --z 2 --spec /nonexistent.json");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const std::string broken = write_temp_json("broken_spec", "{nope");
    const RunResult malformed =
        run_cli("check --criterion valma --x 3 --z 2 --spec \"" + broken + "\"");
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("invalid JSON") != std::string::npos);
    std::filesystem::remove(broken);
}

TEST_CASE("ey prints the family study and exits by verdict") {
    const RunResult all = run_cli("ey --y 3 --h 4");
    REQUIRE(all.code == 0);
    const ordered_json j = parse_stdout(all);
    CHECK(j["bundle"]["base"]["kind"] == "rational");
    CHECK(j["invariants"]["degree"] == 10);
    CHECK(j["invariants"]["sectional_genus"] == 5);
    CHECK(j["invariants"]["ambient_dim"] == 7);
    CHECK(j["verdict"]["verdict"] == "established");
    CHECK(j.contains("restriction_props"));

    const RunResult nva = run_cli("ey --y 4 --h 4 --verdict");
    CHECK(nva.code == 3);
    const ordered_json nj = parse_stdout(nva);
    CHECK(nj["verdict"]["verdict"] == "not_very_ample");
    CHECK_FALSE(nj.contains("invariants"));

    // at h = 5 the restriction study is out of range, so all-mode omits it
    const RunResult tall = run_cli("ey --y 0 --h 5");
    CHECK(tall.code == 1);
    const ordered_json tj = parse_stdout(tall);
    CHECK_FALSE(tj.contains("restriction_props"));
    CHECK(tj["verdict"]["verdict"] == "inconclusive");

    const RunResult inv_only = run_cli("ey --y 3 --h 4 --invariants");
    CHECK(inv_only.code == 0);
    const ordered_json ij = parse_stdout(inv_only);
    CHECK(ij.contains("invariants"));
    CHECK_FALSE(ij.contains("verdict"));

    const RunResult out_of_range = run_cli("ey --y 9 --h 3");
    CHECK(out_of_range.code == 2);
}

TEST_CASE("reider expands multiplicity shorthand and counts candidates") {
    const RunResult r = run_cli("reider --d 7 --mults 2x9");
    REQUIRE(r.code == 0);
    const ordered_json j = parse_stdout(r);
    CHECK(j["m_squared"] == 13);
    CHECK(j["candidates"] == 3654);
    CHECK(j["report"]["verdict"] == "established");

    const RunResult listed = run_cli("reider --d 7 --mults 2,2,2,2,2,2,2,2,2");
    REQUIRE(listed.code == 0);
    CHECK(parse_stdout(listed)["m_squared"] == 13);

    const RunResult eight = run_cli("reider --d 7 --mults 2x8");
    CHECK(eight.code == 2);
}

TEST_CASE("finalno compares the claimed section count to the forced floor") {
    const RunResult refuted = run_cli("finalno --x 2 --points 21 --h0 8");
    CHECK(refuted.code == 3);
    const ordered_json j = parse_stdout(refuted);
    CHECK(j["forced_h0"] == 9);
    CHECK(j["claimed_h0"] == 8);
    CHECK(j["class"]["d"] == 7);

    const RunResult fine = run_cli("finalno --x 0 --points 9 --h0 11");
    CHECK(fine.code == 0);
    CHECK(parse_stdout(fine)["forced_h0"] == 11);

    const RunResult no_points = run_cli("finalno --x 0 --points 0 --h0 20");
    CHECK(no_points.code == 0);
    CHECK(parse_stdout(no_points)["forced_h0"] == 20);
}

TEST_CASE("search fills a catalog and query reads it back") {
    const std::string catalog = fresh_temp_file("scrollsmith_catalog") + ".jsonl";
    const std::string box_arg =
        "search --box \"" + kSourceDir + "/data/f1_degree43_box.json\" --out \"" + catalog + "\"";

    const RunResult first = run_cli("--deterministic " + box_arg);
    REQUIRE(first.code == 0);
    const ordered_json j = parse_stdout(first);
    CHECK(j["tuples_scanned"] == 54);
    CHECK(j["bundles_searched"] == 36);
    CHECK(j["witnesses_found"] == 23);
    CHECK(j["appended"] == 23);
    CHECK(j["duplicates"] == 0);

    // a second identical run only finds duplicates
    const RunResult again = run_cli("--deterministic " + box_arg);
    REQUIRE(again.code == 0);
    const ordered_json j2 = parse_stdout(again);
    CHECK(j2["appended"] == 0);
    CHECK(j2["duplicates"] == 23);

    const RunResult q = run_cli("query --path \"" + catalog + "\" --criterion valma");
    REQUIRE(q.code == 0);
    CHECK(line_count(q.out) == 23);
    CHECK(q.err == "matched=23 corrupt_skipped=0\n");

    // every line is a full entry; --deterministic left the timestamps null
    std::stringstream lines(q.out);
    std::string line;
    i64 degree43 = 0;
    while (std::getline(lines, line)) {
        const ordered_json entry = parse_json_text(line, "catalog line");
        CHECK(entry["timestamp"].is_null());
        CHECK(entry["invariants"]["base"] == "F1");
        const std::string digest = entry["digest"].get<std::string>();
        CHECK(digest.rfind("fnv1a:", 0) == 0);
        if (entry["invariants"]["degree"] == 43) ++degree43;
    }
    CHECK(degree43 >= 1);

    const RunResult deg = run_cli("query --path \"" + catalog +
                                  "\" --degree-min 43 --degree-max 43");
    REQUIRE(deg.code == 0);
    CHECK(line_count(deg.out) == degree43);

    std::filesystem::remove(catalog);
}

TEST_CASE("the catalog path falls back to the environment variable") {
    const std::string catalog = fresh_temp_file("scrollsmith_env_catalog") + ".jsonl";
    const RunResult fill =
        run_cli("--deterministic search --box \"" + kSourceDir +
                    "/data/f1_degree43_box.json\"",
                "SCROLLSMITH_CATALOG=\"" + catalog + "\"");
    REQUIRE(fill.code == 0);
    CHECK(parse_stdout(fill)["catalog"] == catalog);

    const RunResult q =
        run_cli("query --criterion valma", "SCROLLSMITH_CATALOG=\"" + catalog + "\"");
    REQUIRE(q.code == 0);
    CHECK(line_count(q.out) == 23);
    std::filesystem::remove(catalog);
}

TEST_CASE("without --deterministic the catalog lines carry timestamps") {
    const std::string catalog = fresh_temp_file("scrollsmith_stamped_catalog") + ".jsonl";
    const RunResult fill = run_cli("search --box \"" + kSourceDir +
                                   "/data/f1_degree43_box.json\" --out \"" + catalog + "\"");
    REQUIRE(fill.code == 0);
    std::ifstream in(catalog);
    std::string line;
    REQUIRE(std::getline(in, line));
    const ordered_json entry = parse_json_text(line, "catalog line");
    CHECK(entry["timestamp"].is_string());
    std::filesystem::remove(catalog);
}

TEST_CASE("bare or unknown invocations exit with the usage code") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("cohomology").code == 2); // required options missing
}
