#pragma once

#include <tourney/tourney.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace tourney::cli {

enum ExitCode : int { kOk = 0, kFindings = 1, kInputError = 2, kTimeout = 3 };

struct CliConfig {
    std::string subcommand;
    std::string input;
    std::string output;
    std::uint64_t seed = kDefaultSeed;
    std::size_t workers = 1;
    std::uint64_t time_budget_ms = 0; // 0 = unlimited

    // solve
    std::string method = "teq-exact";
    std::string member;
    int trace_depth = -1;
    bool exact_inner = false;

    // reduce / verify
    std::string target = "banks";
    std::string labels;
    std::string dot;
    bool witness = false;

    // sweep
    std::string n_range = "1";
    bool random = false;
    std::uint64_t samples = 0;
    std::string checks = "all";
    bool canonical = false;
    std::string replay;

    // bench
    std::string sizes = "10,12,14";
};

namespace detail {

inline std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file '" + path + "'");
    }
    out << text;
}

/// Writes to --output when given, otherwise to the command's stdout.
inline void emit(const CliConfig& config, std::ostream& out, const std::string& text)
{
    if (config.output.empty() || config.output == "-") {
        out << text;
    } else {
        write_file(config.output, text);
    }
}

/// "7", "3..6", "10,12,14" or "10..14:2".
inline std::vector<std::size_t> parse_sizes(const std::string& spec)
{
    std::vector<std::size_t> out;
    auto number = [&spec](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw InputError("bad size list '" + spec + "'");
        }
        return v;
    };
    std::istringstream list(spec);
    for (std::string item; std::getline(list, item, ',');) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        std::string hi = item.substr(dots + 2);
        std::size_t step = 1;
        if (const auto colon = hi.find(':'); colon != std::string::npos) {
            step = number(hi.substr(colon + 1));
            hi = hi.substr(0, colon);
        }
        const std::size_t lo = number(item.substr(0, dots));
        const std::size_t top = number(hi);
        if (step == 0 || top < lo) {
            throw InputError("bad size range '" + item + "'");
        }
        for (std::size_t n = lo; n <= top; n += step) {
            out.push_back(n);
        }
    }
    if (out.empty()) {
        throw InputError("empty size list");
    }
    return out;
}

inline std::string sorted_names(const Tournament& t, const AlternativeSet& x)
{
    std::string out;
    for (const auto& name : t.names_of(x)) {
        out += (out.empty() ? "" : " ") + name;
    }
    return out;
}

/// Shortest path in r from any alternative of `from` to `to` (inclusive), or nothing.
inline std::optional<std::vector<std::size_t>> shortest_path(const Relation& r, const AlternativeSet& from,
                                                             std::size_t to)
{
    std::vector<std::size_t> parent(r.universe(), r.universe());
    std::vector<bool> seen(r.universe(), false);
    std::deque<std::size_t> queue;
    for (std::size_t s : from) {
        seen[s] = true;
        parent[s] = s;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (v == to) {
            std::vector<std::size_t> path{v};
            while (parent[path.back()] != path.back()) {
                path.push_back(parent[path.back()]);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (std::size_t w : r.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

/// "path: b => c => a => b" for a top-cycle member on a cycle, "path: a" for a lone winner,
/// "path: a => d" from the top cycle down to a non-member.
inline std::optional<std::string> relation_witness(const Tournament& t, const Relation& r, const AlternativeSet& top,
                                                   std::size_t a)
{
    std::optional<std::vector<std::size_t>> path;
    if (!r.carrier().contains(a)) {
        return std::nullopt;
    }
    if (top.contains(a)) {
        const AlternativeSet next = r.successors(a) & top;
        std::optional<std::vector<std::size_t>> back;
        for (std::size_t s : next) {
            auto p = shortest_path(r.restricted_to(top), AlternativeSet::of(r.universe(), {s}), a);
            if (p && (!back || p->size() < back->size())) {
                back = p;
            }
        }
        path = std::vector<std::size_t>{a};
        if (back) {
            path->insert(path->end(), back->begin(), back->end());
        }
    } else {
        path = shortest_path(r, top, a);
    }
    if (!path) {
        return std::nullopt;
    }
    std::string out = "path: ";
    for (std::size_t i = 0; i < path->size(); ++i) {
        out += (i ? " => " : "") + t.name((*path)[i]);
    }
    return out;
}

/// Runs work() with a watchdog that raises the cancel flag once the budget elapses.
template <typename Work>
void with_budget(std::uint64_t budget_ms, std::atomic<bool>& cancel, Work&& work)
{
    if (budget_ms == 0) {
        work();
        return;
    }
    std::mutex mutex;
    std::condition_variable cv;
    bool finished = false;
    std::thread watchdog([&] {
        std::unique_lock lock(mutex);
        if (!cv.wait_for(lock, std::chrono::milliseconds(budget_ms), [&] { return finished; })) {
            cancel.store(true);
        }
    });
    auto stop = [&] {
        {
            std::lock_guard lock(mutex);
            finished = true;
        }
        cv.notify_all();
        watchdog.join();
    };
    try {
        work();
    } catch (...) {
        stop();
        throw;
    }
    stop();
}

inline SweepConfig sweep_config(const CliConfig& config)
{
    SweepConfig sc;
    const auto sizes = parse_sizes(config.n_range);
    sc.n_min = *std::min_element(sizes.begin(), sizes.end());
    sc.n_max = *std::max_element(sizes.begin(), sizes.end());
    sc.mode = config.random ? SweepMode::Random : SweepMode::Exhaustive;
    sc.samples = config.random ? config.samples : 0;
    sc.seed = config.seed;
    sc.workers = config.workers;
    if (config.checks != "all") {
        sc.checks.fill(false);
        std::istringstream list(config.checks);
        for (std::string name; std::getline(list, name, ',');) {
            auto c = parse_check(name);
            if (!c) {
                throw InputError("unknown check '" + name + "'");
            }
            sc.checks[static_cast<std::size_t>(*c)] = true;
        }
    }
    return sc;
}

} // namespace detail

inline int run_solve(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    const Tournament t = parse_tournament(detail::read_input(config.input));
    const AlternativeSet all = t.all();
    std::optional<std::size_t> member;
    if (!config.member.empty()) {
        member = t.require_index(config.member);
    }
    const std::string& method = config.method;
    if (method != "teq-exact" && method != "teq-heuristic" && method != "banks" && method != "topcycle") {
        throw InputError("unknown method '" + method + "' (teq-exact, teq-heuristic, banks, topcycle)");
    }

    std::atomic<bool> cancel{false};
    TeqOptions options;
    options.cancel = &cancel;
    options.exact_inner = config.exact_inner;
    TeqSolver solver(t, options);
    std::ostringstream text;
    try {
        detail::with_budget(config.time_budget_ms, cancel, [&] {
            if (config.trace_depth >= 0) {
                text << teq_trace(t, all, static_cast<std::size_t>(config.trace_depth));
                return;
            }
            if (method == "banks") {
                if (member) {
                    auto chain = banks_member(t, all, *member, &cancel);
                    text << (chain ? "true" : "false") << '\n';
                    if (chain) {
                        text << "chain: " << format_chain(t, *chain) << '\n';
                    }
                } else {
                    text << detail::sorted_names(t, banks_set(t, all, &cancel)) << '\n';
                }
                return;
            }
            Relation relation;
            AlternativeSet top;
            if (method == "topcycle") {
                relation = dominance_relation(t, all);
                top = top_cycle(relation);
            } else if (method == "teq-exact") {
                relation = solver.exact_relation(all);
                top = top_cycle(relation);
            } else {
                top = solver.heuristic_with_relation(all, relation);
            }
            if (member) {
                text << (top.contains(*member) ? "true" : "false") << '\n';
                if (auto w = detail::relation_witness(t, relation, top, *member)) {
                    text << *w << '\n';
                }
            } else {
                text << detail::sorted_names(t, top) << '\n';
            }
        });
    } catch (const Cancelled&) {
        err << "time budget of " << config.time_budget_ms << " ms exceeded; partial stats: recursive_calls="
            << solver.stats().recursive_calls << " memoized_subsets=" << solver.stats().memoized_subsets << '\n';
        return kTimeout;
    }
    detail::emit(config, out, text.str());
    return kOk;
}

inline int run_reduce(const CliConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    const Cnf formula = parse_dimacs(detail::read_input(config.input));
    TStarLayout layout;
    if (config.target == "banks") {
        layout = build_banks_tournament(formula);
    } else if (config.target == "teq") {
        layout = build_teq_tournament(formula);
    } else {
        throw InputError("unknown target '" + config.target + "' (banks, teq)");
    }
    detail::emit(config, out, to_text(layout.tournament));
    if (!config.labels.empty()) {
        std::ostringstream labels;
        write_labels(labels, layout);
        detail::write_file(config.labels, labels.str());
    }
    if (!config.dot.empty()) {
        std::ostringstream dot;
        write_layout_dot(dot, layout);
        detail::write_file(config.dot, dot.str());
    }
    return kOk;
}

inline int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    const Cnf formula = parse_dimacs(detail::read_input(config.input));
    ReductionVerdict verdict;
    std::atomic<bool> cancel{false};
    try {
        detail::with_budget(config.time_budget_ms, cancel, [&] {
            if (config.target == "banks") {
                verdict = verify_banks_reduction(formula);
            } else if (config.target == "teq") {
                verdict = verify_teq_reduction(formula, kExactTeqAlternativeCap, &cancel);
            } else {
                throw InputError("unknown target '" + config.target + "' (banks, teq)");
            }
        });
    } catch (const Cancelled&) {
        err << "time budget of " << config.time_budget_ms << " ms exceeded\n";
        return kTimeout;
    }
    std::ostringstream text;
    text << "SAT=" << (verdict.satisfiable ? "true" : "false") << " MEMBER=" << (verdict.member ? "true" : "false")
         << " VERDICT=" << to_string(verdict.verdict) << '\n';
    if (config.witness && verdict.witness) {
        text << "chain: " << format_chain(build_banks_tournament(formula).tournament, *verdict.witness) << '\n';
    }
    detail::emit(config, out, text.str());
    if (verdict.verdict == Verdict::Unverified) {
        err << "warning: " << verdict.alternatives << " alternatives exceed the exact TEQ cap of "
            << kExactTeqAlternativeCap << "; membership decided by the heuristic only\n";
    }
    return verdict.verdict == Verdict::Disagree ? kFindings : kOk;
}

inline int run_sweep(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    if (!config.replay.empty()) {
        const SweepReport previous = parse_sweep_report(detail::read_input(config.replay));
        SweepConfig sc = previous.config;
        tourney::detail::Partial partial;
        for (const auto& ce : previous.counterexamples) {
            tourney::detail::check_instance(sc, decode_instance(ce.instance), partial);
        }
        std::ostringstream text;
        for (const auto& ce : partial.counterexamples) {
            text << "FAIL " << check_name(ce.check) << ' ' << ce.instance << '\n';
        }
        text << "replayed " << previous.counterexamples.size() << " counterexamples, " << partial.counterexamples.size()
             << " failures reproduced\n";
        detail::emit(config, out, text.str());
        return partial.counterexamples.empty() ? kOk : kFindings;
    }
    const SweepReport report = sweep(detail::sweep_config(config));
    detail::emit(config, out, serialize(report, !config.canonical));
    if (!config.output.empty() && config.output != "-") {
        err << summary_line(report) << '\n';
    }
    return report.failures() == 0 ? kOk : kFindings;
}

inline int run_bench(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    BenchConfig bc;
    bc.sizes = detail::parse_sizes(config.sizes);
    bc.samples = config.samples == 0 ? 20 : config.samples;
    bc.seed = config.seed;
    std::atomic<bool> cancel{false};
    bc.cancel = &cancel;
    BenchReport report;
    try {
        detail::with_budget(config.time_budget_ms, cancel, [&] { report = tourney::run_bench(bc); });
    } catch (const Cancelled&) {
        err << "time budget of " << config.time_budget_ms << " ms exceeded\n";
        return kTimeout;
    }
    detail::emit(config, out, format_bench(report));
    return kOk;
}

/// Dispatches on config.subcommand; input errors become exit code 2.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.subcommand == "solve") {
            return run_solve(config, out, err);
        }
        if (config.subcommand == "reduce") {
            return run_reduce(config, out, err);
        }
        if (config.subcommand == "verify") {
            return run_verify(config, out, err);
        }
        if (config.subcommand == "sweep") {
            return run_sweep(config, out, err);
        }
        if (config.subcommand == "bench") {
            return run_bench(config, out, err);
        }
        throw InputError("unknown subcommand '" + config.subcommand + "'");
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace tourney::cli
