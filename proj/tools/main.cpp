#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using namespace tourney::cli;
    CliConfig config;
    CLI::App app{"Tournament solutions: TEQ, Banks set and hardness reductions"};
    app.require_subcommand(1);

    auto global = [&config](CLI::App* sub) {
        sub->add_option("--input,-i", config.input, "Input file (default: stdin)");
        sub->add_option("--output,-o", config.output, "Output file (default: stdout)");
        sub->add_option("--seed", config.seed, "Random seed");
        sub->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--time-budget-ms", config.time_budget_ms, "Abort after this many ms (0 = none)");
    };

    auto* solve = app.add_subcommand("solve", "Compute a tournament solution");
    global(solve);
    solve->add_option("--method", config.method, "teq-exact | teq-heuristic | banks | topcycle");
    solve->add_option("--member", config.member, "Decide membership of one alternative and print a witness");
    solve->add_option("--trace", config.trace_depth, "Print the TEQ recursion tree to this depth");
    solve->add_flag("--exact-inner", config.exact_inner, "Heuristic: use exact recursion for inner calls");

    auto* reduce = app.add_subcommand("reduce", "Build the reduction tournament for a 3-CNF formula");
    global(reduce);
    reduce->add_option("--target", config.target, "banks | teq");
    reduce->add_option("--labels", config.labels, "Write name<TAB>role sidecar");
    reduce->add_option("--dot", config.dot, "Write layered Graphviz rendering");

    auto* verify = app.add_subcommand("verify", "Check the reduction against a brute-force SAT oracle");
    global(verify);
    verify->add_option("--target", config.target, "banks | teq");
    verify->add_flag("--witness", config.witness, "Print the Banks chain witness");

    auto* sweep = app.add_subcommand("sweep", "Check invariants over many tournaments");
    global(sweep);
    sweep->add_option("--n", config.n_range, "Size or range, e.g. 5 or 3..6");
    sweep->add_flag("--exhaustive", "Enumerate every labelled tournament (default)");
    sweep->add_flag("--random", config.random, "Sample random tournaments");
    sweep->add_option("--samples", config.samples, "Samples per size in random mode");
    sweep->add_option("--checks", config.checks, "Comma list or 'all'");
    sweep->add_flag("--canonical", config.canonical, "Omit the timing line");
    sweep->add_option("--replay", config.replay, "Re-run counterexamples from a saved report");

    auto* bench = app.add_subcommand("bench", "Time exact vs heuristic TEQ");
    global(bench);
    bench->add_option("--sizes", config.sizes, "e.g. 10..14, 10,12,14 or 10..14:2");
    bench->add_option("--samples", config.samples, "Samples per size (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    return run(config, std::cout, std::cerr);
}
