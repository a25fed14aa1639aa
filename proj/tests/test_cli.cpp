#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "sdseq/json_io.hpp"

using sdseq::io::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped unless the
// command merges it.
RunResult run(const std::string& args) {
    std::string cmd = std::string(SDSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json run_json(const std::string& args, int expected_exit = 0) {
    auto res = run(args);
    CHECK(res.exit_code == expected_exit);
    return json::parse(res.out);
}

}  // namespace

TEST_CASE("gen emits the prefix as decimal strings") {
    auto doc = run_json("gen -P 1 -Q -1 -R 1 -n 8");
    CHECK(doc.at("values") ==
          json::array({"1", "1", "2", "3", "5", "8", "13", "21"}));
    CHECK(doc.at("params").at("Q") == json("-1"));
}

TEST_CASE("both negative-flag spellings parse") {
    auto spaced = run_json("gen -P -1 -Q 1 -R 1 -n 7");
    auto equals = run_json("gen --P=-1 --Q=1 --R=1 -n 7");
    CHECK(spaced == equals);
    CHECK(spaced.at("values") ==
          json::array({"1", "1", "-2", "1", "1", "-2", "1"}));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("gen -P 1 -Q 1 -n 8").exit_code == 2);          // missing -R
    CHECK(run("gen -P 1x -Q 1 -R 1 -n 8").exit_code == 2);    // malformed integer
    CHECK(run("gen -P 1 -Q 1 -R 1 -n 1").exit_code == 2);     // N below the contract
    CHECK(run("frobnicate").exit_code == 2);                  // unknown subcommand
    CHECK(run("").exit_code == 2);                            // missing subcommand
    CHECK(run("check sideways -P 1 -Q 1 -R 1").exit_code == 2);
}

TEST_CASE("lucas evaluates both routes") {
    auto fast = run_json("lucas -P 1 -Q -1 -n 10");
    CHECK(fast.at("U") == json("55"));
    CHECK(fast.at("U_next") == json("89"));
    auto iter = run_json("lucas -P 1 -Q -1 -n 10 --method iter");
    CHECK(iter == fast);
}

TEST_CASE("classify reports families") {
    auto doc = run_json("classify -P 0 -Q -1 -R 5");
    CHECK(doc.at("strong_divisible") == json(true));
    CHECK(doc.at("families") == json::array({"PulseFamily"}));
    CHECK(doc.at("epsilon") == json("1"));
    CHECK(doc.at("r") == json("5"));
}

TEST_CASE("check returns the report and signals witnesses via the exit code") {
    auto ok = run_json("check strong -P 1 -Q -1 -R 1 -n 20");
    CHECK(ok.at("holds") == json(true));

    auto res = run("check strong -P 3 -Q 6 -R 3 -n 6");
    CHECK(res.exit_code == 1);
    auto doc = json::parse(res.out);
    CHECK(doc.at("holds") == json(false));
    CHECK(doc.at("witness").at("i") == json(2));
    CHECK(doc.at("witness").at("j") == json(3));

    auto weak = run_json("check weak -P 2 -Q 4 -R 2 -n 10");
    CHECK(weak.at("holds") == json(true));
}

TEST_CASE("criterion subcommands") {
    auto ind = run_json("criterion ind34 -P 1 -Q -1 -R 1");
    CHECK(ind.at("ind34") == json(true));
    auto hs = run_json("criterion hs -P -1 -Q 1 -R 1");
    CHECK(hs.at("passed") == json(true));
    CHECK(hs.at("f") == json("-1"));
    CHECK(hs.at("reason") == json("ok"));
}

TEST_CASE("divrp and period") {
    auto div = run_json("divrp -P 1 -Q 1 -R -1 -n 3");
    CHECK(div.at("holds") == json(true));

    auto per = run_json("period -P -1 -Q 1 -R 1 -n 30");
    CHECK(per.at("detected") == json(true));
    CHECK(per.at("preperiod") == json(0));
    CHECK(per.at("period") == json(3));

    auto fib = run_json("period -P 1 -Q -1 -R 1 -n 30");
    CHECK(fib.at("detected") == json(false));
}

TEST_CASE("recover covers all three outcomes") {
    auto unique = run_json("recover --u2 2 --u3 3 --u4 5");
    CHECK(unique.at("kind") == json("unique"));
    CHECK(unique.at("params") == json({{"P", "1"}, {"Q", "-1"}, {"R", "2"}}));
    auto geom = run_json("recover --u2 3 --u3 9 --u4 27");
    CHECK(geom.at("kind") == json("geometric"));
    CHECK(geom.at("ratio") == json("3"));
    auto bad = run_json("recover --u2 2 --u3 4 --u4 9");
    CHECK(bad.at("kind") == json("inconsistent"));
}

TEST_CASE("sweep emits a report and honors SDSEQ_THREADS") {
    auto doc = run_json("sweep --pmax 2 --qmax 2 --rmax 2 --depth 24");
    CHECK(doc.at("mismatches") == json::array());
    CHECK(doc.at("stats").at("triples_tested") == json(125));
    CHECK(!doc.at("stats").contains("elapsed_ms"));
    CHECK(doc.at("survivors").size() == 32);

    auto res1 = run("sweep --pmax 2 --qmax 2 --rmax 2 --depth 24");
    std::string threaded = "SDSEQ_THREADS=3 " + std::string(SDSEQ_CLI_PATH) +
                           " sweep --pmax 2 --qmax 2 --rmax 2 --depth 24 2>/dev/null";
    RunResult res2;
    FILE* pipe = popen(threaded.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res2.out.append(buf.data(), got);
    res2.exit_code = WEXITSTATUS(pclose(pipe));
    CHECK(res2.exit_code == 0);
    CHECK(res1.out == res2.out);  // byte-for-byte deterministic

    auto timing = run_json("sweep --pmax 1 --qmax 1 --rmax 1 --depth 10 --timing");
    CHECK(timing.at("stats").contains("elapsed_ms"));
}

TEST_CASE("sweep rejects a malformed SDSEQ_THREADS") {
    std::string cmd = "SDSEQ_THREADS=zero " + std::string(SDSEQ_CLI_PATH) +
                      " sweep --pmax 1 --qmax 1 --rmax 1 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("sweep csv format") {
    auto res = run("sweep --pmax 1 --qmax 1 --rmax 1 --depth 12 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("P,Q,R,families,period\n", 0) == 0);
    CHECK(res.out.find("-1,1,1,PeriodSixFamily,3") != std::string::npos);
}

TEST_CASE("identities suite passes end to end") {
    auto doc = run_json("identities");
    CHECK(doc.at("passed") == json(true));
    for (const auto& check : doc.at("checks")) CHECK(check.at("passed") == json(true));
}

TEST_CASE("json output round-trips through the parsers") {
    auto doc = run_json("classify -P 5 -Q 4 -R 1");
    auto c = sdseq::io::classification_from_json(doc);
    CHECK(sdseq::io::to_json(c) == doc);

    auto rep = run_json("sweep --pmax 1 --qmax 1 --rmax 1 --depth 10");
    auto parsed = sdseq::io::search_report_from_json(rep);
    CHECK(sdseq::io::to_json(parsed) == rep);
}
