#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#ifndef CONCORDIA_CLI_PATH
#error "CONCORDIA_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int code;
    std::string out;
};

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s)
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    return q + "'";
}

// Runs the CLI with the given arguments; captures stdout, discards stderr.
RunResult run(const std::vector<std::string>& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += shell_quote(CONCORDIA_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

json run_json(const std::vector<std::string>& args) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "." + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("invariants subcommand") {
    auto j = run_json({"invariants", "T(3,4)"});
    CHECK(j["expression"] == "T(3,4)");
    CHECK(j["nu_plus"] == 3);
    CHECK(j["tau"] == 3);
    CHECK(j["v_sequence"] == json::array({1, 1, 1, 0}));
    CHECK(j["genus_bound"] == 3);

    auto u = run_json({"invariants", "U"});
    CHECK(u["nu_plus"] == 0);
    CHECK(u["tau"] == 0);
    CHECK(u["v_sequence"] == json::array({0}));
}

TEST_CASE("invariants of the tau separating example") {
    auto j = run_json({"invariants", "T(2,5)+2*T(2,3)-C(2,5;T(2,3))"});
    CHECK(j["tau"] == 0);
    CHECK(j["nu_plus"] == 2);
    CHECK(j["v_sequence"] == json::array({1, 1, 0}));
}

TEST_CASE("csv format") {
    auto r = run({"invariants", "--format", "csv", "T(2,3)"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "expression,nu_plus,tau,v_sequence,genus_bound\n"
          "\"T(2,3)\",1,1,\"1 0\",1\n");
}

TEST_CASE("leading-dash expressions need the separator") {
    auto direct = run({"invariants", "-T(2,3)"});
    CHECK(direct.code == 2);

    auto r = run({"invariants", "--", "-T(2,3)"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["nu_plus"] == 0);
    CHECK(j["tau"] == -1);
}

TEST_CASE("output lands in the requested file") {
    auto path = temp_file("concordia_inv");
    auto direct = run({"invariants", "T(2,3)"});
    auto redirected = run({"invariants", "T(2,3)", "--out", path.string()});
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(slurp(path) == direct.out);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes follow the scripting contract") {
    CHECK(run({"invariants", "T(4,6)"}).code == 2);          // parse error
    CHECK(run({"invariants"}).code == 2);                    // missing argument
    CHECK(run({"surgery-d", "U", "--p", "4", "--q", "2"}).code == 2);
    CHECK(run({"invariants", "C(2,1;T(2,3))"}).code == 3);   // uncertified atom
    CHECK(run({"poset", "T(2,3)", "T(2,5)", "--max-coeff", "2", "--budget", "10"}).code == 4);
    CHECK(run({"verify", "torus"}).code == 0);
}

TEST_CASE("full twist obstruction sweep") {
    auto j = run_json({"obstruct-fulltwist", "--from", "U", "--to", "T(2,3)",
                       "--linking", "0..4"});
    CHECK(j["difference"] == "T(2,3)");
    REQUIRE(j["reports"].size() == 5);
    std::vector<std::string> verdicts;
    for (const auto& row : j["reports"]) verdicts.push_back(row["verdict"]);
    CHECK(verdicts == std::vector<std::string>{"obstructed", "obstructed", "consistent",
                                               "consistent", "obstructed"});
    CHECK(j["admissible"] == json::array({2, 3}));

    auto self = run_json({"obstruct-fulltwist", "--from", "T(3,4)", "--to", "T(3,4)",
                          "--linking", "0"});
    CHECK(self["reports"][0]["verdict"] == "consistent");
    CHECK(self["reports"][0]["nu_diff"] == 0);

    CHECK(run({"obstruct-fulltwist", "--from", "U", "--to", "U", "--linking", "5..2"}).code == 2);
}

TEST_CASE("cable bounds table") {
    auto j = run_json({"cable-bounds", "T(2,3)", "--p", "2", "--q", "7"});
    CHECK(j["nu_plus"] == 1);
    bool found = false;
    for (const auto& row : j["rows"])
        if (row["p"] == 2 && row["q"] == 7) {
            found = true;
            CHECK(row["nu_exact"] == 5);
            CHECK(row["nu_lower"] == 5);
            CHECK(row["route"] == "engine");
            CHECK(row["g4_if_nu_is_g4"] == 5);
        }
    CHECK(found);
}

TEST_CASE("surgery correction term tables") {
    auto j = run_json({"surgery-d", "T(2,3)", "--p", "1", "--q", "1"});
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["i"] == 0);
    CHECK(j["rows"][0]["d"] == "-2");

    auto big = run_json({"surgery-d", "U", "--p", "9", "--q", "1"});
    CHECK(big["rows"][3]["i"] == 3);
    CHECK(big["rows"][3]["d"] == "0");

    auto frac = run_json({"surgery-d", "U", "--p", "3", "--q", "2"});
    CHECK(frac["rows"][0]["d"] == "1/6");
}

TEST_CASE("poset outputs are deterministic and land in files") {
    std::vector<std::string> args = {"poset", "T(2,3)", "--max-coeff", "1"};
    auto first = run(args);
    auto second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    auto j = json::parse(first.out);
    CHECK(j["elements"] == json::array({"-T(2,3)", "T(2,3)", "U"}));
    CHECK(j["classes"].size() == 3);
    CHECK(j["hasse_edges"].size() == 2);
    CHECK(j["rule_edges"].empty());

    auto prefix = temp_file("concordia_poset");
    auto filed = run({"poset", "T(2,3)", "--max-coeff", "1", "--out", prefix.string()});
    CHECK(filed.code == 0);
    auto dot = slurp(prefix.string() + ".dot");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"U\" -> \"T(2,3)\"") != std::string::npos);
    auto jj = json::parse(slurp(prefix.string() + ".json"));
    CHECK(jj["elements"] == j["elements"]);
    std::filesystem::remove(prefix.string() + ".json");
    std::filesystem::remove(prefix.string() + ".dot");
}

TEST_CASE("verify subcommand reports suites") {
    auto r = run({"verify", "parity", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("parity,true,") != std::string::npos);

    // the fulltwist suite pins the published admissible set {2}, which the
    // engine honestly contradicts (it also admits n = 3), so this suite fails
    auto ft = run({"verify", "fulltwist"});
    CHECK(ft.code == 1);
    auto j = json::parse(ft.out);
    CHECK(j["all_passed"] == false);

    CHECK(run({"verify", "no-such-suite"}).code == 2);
}

TEST_CASE("thread width override does not change results") {
    auto base = run({"invariants", "2*T(2,3)-T(2,5)"});
    auto forced = run({"invariants", "2*T(2,3)-T(2,5)"}, "CONCORDIA_THREADS=2");
    CHECK(base.code == 0);
    CHECK(base.out == forced.out);
}
