#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "cpoly/golden.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cli_binary() {
    if (const char* env = std::getenv("CPOLY_CLI_BIN")) return env;
#ifdef CPOLY_CLI_BIN_PATH
    return CPOLY_CLI_BIN_PATH;
#else
    return "cpoly";
#endif
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + cli_binary() + "' " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.output.append(buf, got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help text lists the subcommands") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "exchange-graph"));
    CHECK(contains(r.output, "verify-all"));
    CHECK(contains(r.output, "reduced-words"));
}

TEST_CASE("unknown flags are usage errors") {
    CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
    CHECK(run_cli("exchange-graph --n 7").exit_code == 2);
    CHECK(run_cli("verify-all --only no-such-check").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("exchange graph summaries") {
    const RunResult small = run_cli("exchange-graph --n 3");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "2 seed classes, 1 exchange edges"));

    const RunResult big = run_cli("exchange-graph --n 4");
    CHECK(big.exit_code == 0);
    CHECK(contains(big.output, "14 seed classes, 21 exchange edges"));

    const RunResult js = run_cli("exchange-graph --n 4 --json");
    CHECK(js.exit_code == 0);
    const json parsed = json::parse(js.output);
    CHECK(parsed.at("n") == 4);
    CHECK(parsed.at("nodes").size() == 14);
    CHECK(parsed.at("edges").size() == 21);
}

TEST_CASE("reduced words output") {
    const RunResult r = run_cli("reduced-words --n 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2 reduced words"));
    CHECK(contains(r.output, "1 2 1"));
    CHECK(contains(r.output, "2 1 2"));

    const RunResult js = run_cli("reduced-words --n 4 --json");
    CHECK(js.exit_code == 0);
    const json parsed = json::parse(js.output);
    CHECK(parsed.at("count") == 16);
    CHECK(parsed.at("words").size() == 16);
    CHECK(parsed.at("two_move_classes") == 8);
    CHECK(parsed.at("moves_connect_all") == true);
}

TEST_CASE("single verification checks run standalone") {
    const RunResult r = run_cli("verify-all --only reduced-words");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS reduced-words"));
}

TEST_CASE("output can be redirected to a file") {
    const fs::path out = fs::temp_directory_path() / "cpoly_cli_words.json";
    fs::remove(out);
    const RunResult r =
        run_cli("reduced-words --n 2 --json --out '" + out.string() + "'");
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    const json parsed = json::parse(in);
    CHECK(parsed.at("count") == 1);
    fs::remove(out);
}

TEST_CASE("corrupted reference data turns verification into a failure") {
    /* Copy the data directory, flip one sign in a stored facet normal, and
     * point the tool at the copy. */
    const fs::path src = cpoly::golden_dir();
    const fs::path dst =
        fs::temp_directory_path() / ("cpoly_bad_golden_" + std::to_string(getpid()));
    fs::remove_all(dst);
    fs::create_directories(dst);
    for (const auto& entry : fs::directory_iterator(src)) {
        fs::copy_file(entry.path(), dst / entry.path().filename());
    }

    const fs::path target = dst / "eq2_2.json";
    json doc;
    {
        std::ifstream in(target);
        REQUIRE(in.good());
        in >> doc;
    }
    const long old = doc.at("normals").at(0).at(0).get<long>();
    doc["normals"][0][0] = old == 0 ? 1 : -old;
    {
        std::ofstream outf(target);
        outf << doc.dump(1);
    }

    const RunResult r = run_cli("verify-all --only base-polytope",
                                "CP_GOLDEN_DIR='" + dst.string() + "' ");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "FAIL base-polytope"));
    fs::remove_all(dst);
}
