#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "ringgb/commands.hpp"

using nlohmann::json;
using ringgb::CommandResult;
using ringgb::run_command;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("ringgb_cli_" + std::to_string(++counter) + ".gbp");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    std::string str() const { return path.string(); }
};

json run_json(const std::vector<std::string>& args, int expect_code) {
    CommandResult res = run_command(args);
    CHECK(res.exit_code == expect_code);
    return json::parse(res.output);
}

const char* FREE_FILE =
    "ring Z\n"
    "vars x1, x2\n"
    "order lex\n"
    "3*x1^2\n"
    "5*x1^2\n"
    "x2\n"
    "\n"
    "[probe]\n"
    "7*x1^2 + x1 + 3\n";

const char* TORSION_FILE =
    "ring Z\n"
    "vars x1, x2\n"
    "order lex\n"
    "2*x1\n"
    "3*x2\n";

} // namespace

TEST_CASE("gb reports a certified basis") {
    TempFile f(FREE_FILE);
    json j = run_json({"gb", "--check", f.str()}, 0);
    CHECK(j["certification"] == "strong_pid");
    CHECK(j["verified"] == true);
}

TEST_CASE("short-reduce emits the canonical basis") {
    TempFile f(FREE_FILE);
    json j = run_json({"short-reduce", f.str()}, 0);
    CHECK(j["basis"] == json::array({"x1^2", "x2"}));
    CHECK(j["certification"] == "short_reduced");
}

TEST_CASE("is-free on a free quotient") {
    TempFile f(FREE_FILE);
    json j = run_json({"is-free", f.str()}, 0);
    CHECK(j["free"] == true);
    CHECK(j["short_reduced_basis"] == json::array({"x1^2", "x2"}));
}

TEST_CASE("module-basis lists the standard monomials") {
    TempFile f(FREE_FILE);
    json j = run_json({"module-basis", f.str()}, 0);
    CHECK(j["free"] == true);
    CHECK(j["rank"] == 2);
    CHECK(j["basis"] == json::array({"1", "x1"}));
    CHECK(j["complete"] == true);
}

TEST_CASE("module-basis refuses torsion quotients") {
    TempFile f(TORSION_FILE);
    json j = run_json({"module-basis", f.str()}, 2);
    CHECK(j["error"] == "NotMonic");
}

TEST_CASE("module-basis caps infinite staircases") {
    TempFile f("ring Z\nvars x1, x2\norder lex\nx1^2\n");
    json j = run_json({"module-basis", "--cap", "2", f.str()}, 0);
    CHECK(j["rank"] == "infinite");
    CHECK(j["complete"] == false);
    CHECK(j["basis"].size() == 5);

    json no_cap = run_json({"module-basis", f.str()}, 2);
    CHECK(no_cap["error"] == "CapRequired");
}

TEST_CASE("nf reduces each probe and reports cofactors") {
    TempFile f(FREE_FILE);
    json j = run_json({"nf", f.str()}, 0);
    CHECK(j["basis"] == json::array({"x1^2", "x2"}));
    REQUIRE(j["probes"].size() == 1);
    CHECK(j["probes"][0]["remainder"] == "x1 + 3");
    CHECK(j["probes"][0]["quotients"] == json::array({"7", "0"}));

    TempFile g("ring Z\nvars x1\nx1\n");
    json err = run_json({"nf", g.str()}, 1);
    CHECK(err["error"] == "SyntaxError"); // no [probe] section
}

TEST_CASE("border-basis round trip") {
    TempFile f(
        "ring Z\n"
        "vars x, y\n"
        "order lex\n"
        "x^2 - 1\n"
        "y - 1\n"
        "\n"
        "[order_ideal]\n"
        "1\n"
        "x\n");
    json j = run_json({"border-basis", "--check", f.str()}, 0);
    CHECK(j["order_ideal"] == json::array({"1", "x"}));
    CHECK(j["border"] == json::array({"y", "x*y", "x^2"}));
    CHECK(j["basis"] == json::array({"y - 1", "x*y - x", "x^2 - 1"}));
    CHECK(j["verified"] == true);
}

TEST_CASE("strong-check over Z finds the combination witness") {
    TempFile f(TORSION_FILE);
    json j = run_json({"strong-check", f.str()}, 0);
    CHECK(j["groebner"] == true);
    CHECK(j["strong"] == false);
    CHECK(j["counterexample"] == "x1*x2");
}

TEST_CASE("strong-check over a tower reports the reduced conditions") {
    TempFile f(
        "ring Q[a] order lex\n"
        "vars x\n"
        "order lex\n"
        "a^2*x - a^2\n"
        "(a^3 - 1)*x - a^3 + 1\n");
    json j = run_json({"strong-check", f.str()}, 0);
    CHECK(j["groebner"] == true);
    CHECK(j["strong"] == true);
    CHECK(j["strong_reduced"]["holds"] == false);
    CHECK(j["strong_reduced"]["failed_condition"] == 3);
}

TEST_CASE("lattice vectors feed the pipeline") {
    TempFile f(
        "ring Z\n"
        "vars x, y, z\n"
        "order lex\n"
        "\n"
        "[lattice_vectors]\n"
        "1 1 -2\n"
        "0 2 -3\n");
    json j = run_json({"is-free", f.str()}, 0);
    CHECK(j["free"] == true);
}

TEST_CASE("parse problems exit 1 with positions") {
    TempFile f("ring Z\nvars x\nx + z\n");
    json j = run_json({"gb", f.str()}, 1);
    CHECK(j["error"] == "UnknownVariable");
    CHECK(j["line"] == 3);

    CommandResult missing = run_command({"gb", "/nonexistent/path.gbp"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("IoError") != std::string::npos);

    CommandResult usage = run_command({"frobnicate"});
    CHECK(usage.exit_code == 1);

    CommandResult help = run_command({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("gb") != std::string::npos);
}

TEST_CASE("text mode prints key-value lines") {
    TempFile f(FREE_FILE);
    CommandResult res = run_command({"is-free", "--text", f.str()});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("free: true") != std::string::npos);
    CHECK(res.output.find("x1^2") != std::string::npos);
}
