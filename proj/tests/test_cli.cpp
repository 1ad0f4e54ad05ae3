#include <catch_amalgamated.hpp>

#include "commands.hpp"
#include "helpers.hpp"

#include <filesystem>

using namespace tourney;
using tourney::cli::CliConfig;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(CliConfig config)
{
    std::ostringstream out, err;
    const int code = tourney::cli::run(config, out, err);
    return {code, out.str(), err.str()};
}

CliConfig config(const std::string& sub, const std::string& input)
{
    CliConfig c;
    c.subcommand = sub;
    c.input = input;
    return c;
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("tourney_cli_" + name)).string();
}

const std::string kExample5 = testing_support::data_path("example5.tournament");
const std::string kThreeClauses = testing_support::data_path("three_clauses.cnf");

} // namespace

TEST_CASE("solve prints sorted sets for every method", "[cli]")
{
    auto c = config("solve", kExample5);
    CHECK(run(c).out == "a b c\n");
    c.method = "teq-heuristic";
    CHECK(run(c).out == "a b c\n");
    c.method = "banks";
    CHECK(run(c).out == "a b c d\n");
    c.method = "topcycle";
    CHECK(run(c).out == "a b c d e\n");
    c.method = "copeland";
    CHECK(run(c).code == tourney::cli::kInputError);
}

TEST_CASE("solve --member prints a verdict and a witness", "[cli]")
{
    auto c = config("solve", kExample5);
    c.method = "banks";
    c.member = "e";
    CHECK(run(c).out == "false\n");
    c.member = "d";
    const auto d = run(c);
    CHECK(d.out.rfind("true\nchain: d > ", 0) == 0);

    c.method = "teq-exact";
    c.member = "a";
    CHECK(run(c).out == "true\npath: a => b => c => a\n");
    c.member = "e";
    CHECK(run(c).out == "false\npath: a => e\n");
    c.member = "zz";
    CHECK(run(c).code == tourney::cli::kInputError);
}

TEST_CASE("solve --trace prints the recursion tree", "[cli]")
{
    auto c = config("solve", kExample5);
    c.trace_depth = 1;
    const auto r = run(c);
    CHECK(r.out.rfind("{a,b,c,d,e} -> TEQ {a,b,c}\n  D(a) = {c}", 0) == 0);
}

TEST_CASE("parse errors exit with code 2 and name the line", "[cli]")
{
    const auto r = run(config("solve", kThreeClauses));
    CHECK(r.code == tourney::cli::kInputError);
    CHECK(r.err.find("line 1:") != std::string::npos);
    const auto missing = run(config("solve", temp_path("does_not_exist")));
    CHECK(missing.code == tourney::cli::kInputError);

    const std::string bad = temp_path("bad.cnf");
    std::ofstream(bad) << "p cnf 3 1\n1 -1 2 0\n";
    const auto reduce = run(config("reduce", bad));
    CHECK(reduce.code == tourney::cli::kInputError);
    CHECK(reduce.err.find("clause 1:") != std::string::npos);
}

TEST_CASE("reduce writes deterministic, re-readable tournaments and sidecars", "[cli]")
{
    auto c = config("reduce", kThreeClauses);
    const auto banks = run(c);
    CHECK(banks.code == 0);
    CHECK(parse_tournament(banks.out).size() == 17);
    CHECK(run(c).out == banks.out);
    c.target = "teq";
    c.labels = temp_path("labels.tsv");
    c.dot = temp_path("layout.dot");
    c.output = temp_path("teq.tournament");
    REQUIRE(run(c).code == 0);
    CHECK(parse_tournament(testing_support::slurp(c.output)).size() == 29);
    CHECK(testing_support::slurp(c.labels).find("z1_1\tz1^1\n") != std::string::npos);
    CHECK(testing_support::slurp(c.dot).rfind("digraph tstar", 0) == 0);

    auto solve = config("solve", c.output);
    solve.method = "teq-heuristic";
    solve.member = "d";
    CHECK(run(solve).out.rfind("true\n", 0) == 0);
}

TEST_CASE("verify prints the verdict line", "[cli]")
{
    auto c = config("verify", kThreeClauses);
    const auto banks = run(c);
    CHECK(banks.out == "SAT=true MEMBER=true VERDICT=AGREE\n");
    CHECK(banks.code == 0);
    c.witness = true;
    CHECK(run(c).out.find("\nchain: d > ") != std::string::npos);

    c.target = "teq";
    c.witness = false;
    const auto teq = run(c);
    CHECK(teq.out == "SAT=true MEMBER=true VERDICT=UNVERIFIED\n");
    CHECK(teq.code == 0);
    CHECK(teq.err.rfind("warning:", 0) == 0);

    const std::string small = temp_path("one.cnf");
    std::ofstream(small) << "p cnf 3 1\n1 2 3 0\n";
    auto one = config("verify", small);
    one.target = "teq";
    CHECK(run(one).out == "SAT=true MEMBER=true VERDICT=AGREE\n");
}

TEST_CASE("sweep writes a report that replays", "[cli]")
{
    auto c = config("sweep", "");
    c.n_range = "3";
    const auto r = run(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: 8 instances, 0 failures\n") != std::string::npos);
    CHECK(r.out.find("timing workers=1") != std::string::npos);
    c.n_range = "1";
    c.canonical = true;
    CHECK(run(c).out.find("summary: 1 instance, 0 failures\n") != std::string::npos);
    CHECK(run(c).out.find("timing") == std::string::npos);

    c.n_range = "2..5";
    c.workers = 3;
    c.output = temp_path("report.txt");
    REQUIRE(run(c).code == 0);
    auto canonical_one = config("sweep", "");
    canonical_one.n_range = "2..5";
    canonical_one.canonical = true;
    CHECK(run(canonical_one).out == testing_support::slurp(c.output));

    const std::string planted = temp_path("planted.txt");
    std::ofstream(planted) << "sweep mode=exhaustive n=3..3 checks=nonempty samples=0 seed=1\n"
                           << "FAIL nonempty 3:5\n"
                           << "check nonempty pass=7 fail=1\n"
                           << "summary: 8 instances, 1 failure\n";
    auto replay = config("sweep", "");
    replay.replay = planted;
    const auto rr = run(replay);
    CHECK(rr.code == 0);
    CHECK(rr.out == "replayed 1 counterexamples, 0 failures reproduced\n");

    c.n_range = "9";
    c.output.clear();
    CHECK(run(c).code == tourney::cli::kInputError);
}

TEST_CASE("bench prints a table for a size list", "[cli]")
{
    auto c = config("bench", "");
    c.sizes = "4..6:2";
    c.samples = 2;
    const auto r = run(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("teq-heuristic") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    c.sizes = "6..4";
    CHECK(run(c).code == tourney::cli::kInputError);
}

TEST_CASE("time budget exhaustion exits with code 3", "[cli]")
{
    const std::string big = temp_path("big.tournament");
    std::ofstream(big) << to_text(random_tournament(40, 3));
    auto c = config("solve", big);
    c.time_budget_ms = 1;
    const auto r = run(c);
    CHECK(r.code == tourney::cli::kTimeout);
    CHECK(r.err.find("recursive_calls=") != std::string::npos);
}

TEST_CASE("size lists accept single values, lists and stepped ranges", "[cli]")
{
    using tourney::cli::detail::parse_sizes;
    CHECK(parse_sizes("7") == std::vector<std::size_t>{7});
    CHECK(parse_sizes("10..14") == std::vector<std::size_t>{10, 11, 12, 13, 14});
    CHECK(parse_sizes("10,12,14") == std::vector<std::size_t>{10, 12, 14});
    CHECK(parse_sizes("10..14:2") == std::vector<std::size_t>{10, 12, 14});
    CHECK_THROWS_AS(parse_sizes("a"), InputError);
    CHECK_THROWS_AS(parse_sizes("3..x"), InputError);
}
