#pragma once

#include <tourney/banks.hpp>
#include <tourney/error.hpp>
#include <tourney/generate.hpp>
#include <tourney/relation.hpp>
#include <tourney/teq.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace tourney {

inline constexpr std::uint64_t kDefaultSeed = 20080415;

enum class Check : std::size_t { TeqInBanks = 0, Nonempty, Condorcet, HeuristicEq, SingleScc };
inline constexpr std::size_t kCheckCount = 5;
inline constexpr std::array<Check, kCheckCount> kAllChecks = {Check::TeqInBanks, Check::Nonempty, Check::Condorcet,
                                                              Check::HeuristicEq, Check::SingleScc};

inline const char* check_name(Check c)
{
    static constexpr std::array<const char*, kCheckCount> names = {"teq-in-banks", "nonempty", "condorcet",
                                                                   "heuristic-eq", "single-scc"};
    return names[static_cast<std::size_t>(c)];
}

inline std::optional<Check> parse_check(const std::string& name)
{
    for (Check c : kAllChecks) {
        if (name == check_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

/// Stateless 64-bit mixer used to derive per-instance seeds.
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t sample)
{
    return splitmix64(splitmix64(seed ^ splitmix64(n)) + sample);
}

/// "<n>:<hex>" where the hex number's bit k orients the k-th upper-triangle pair.
inline std::string encode_instance(const Tournament& t)
{
    const std::vector<bool> bits = orientation_bits(t);
    std::string hex;
    const std::size_t digits = bits.empty() ? 1 : (bits.size() + 3) / 4;
    for (std::size_t d = digits; d-- > 0;) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t k = 4 * d + b;
            if (k < bits.size() && bits[k]) {
                nibble |= 1U << b;
            }
        }
        hex += "0123456789abcdef"[nibble];
    }
    return std::to_string(t.size()) + ":" + hex;
}

inline Tournament decode_instance(const std::string& code)
{
    const auto colon = code.find(':');
    if (colon == std::string::npos || colon == 0) {
        throw InputError("bad instance encoding '" + code + "'");
    }
    std::size_t n = 0;
    try {
        n = std::stoul(code.substr(0, colon));
    } catch (const std::exception&) {
        throw InputError("bad instance size in '" + code + "'");
    }
    if (n < 1) {
        throw InputError("bad instance size in '" + code + "'");
    }
    const std::string hex = code.substr(colon + 1);
    std::vector<bool> bits(pair_count(n), false);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char ch = hex[hex.size() - 1 - i];
        unsigned nibble = 0;
        if (ch >= '0' && ch <= '9') {
            nibble = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'f') {
            nibble = static_cast<unsigned>(ch - 'a' + 10);
        } else {
            throw InputError("bad hex digit in '" + code + "'");
        }
        for (std::size_t b = 0; b < 4; ++b) {
            if ((nibble >> b) & 1U) {
                const std::size_t k = 4 * i + b;
                if (k >= bits.size()) {
                    throw InputError("instance encoding '" + code + "' has too many bits");
                }
                bits[k] = true;
            }
        }
    }
    return tournament_from_bits(n, bits);
}

enum class SweepMode { Exhaustive, Random };

struct SweepConfig {
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    std::array<bool, kCheckCount> checks = {true, true, true, true, true};
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t samples = 0; // random mode: instances per size
    std::uint64_t seed = kDefaultSeed;
    std::size_t workers = 1;
    std::size_t exhaustive_cap = kDefaultEnumerationCap;
};

struct CheckTally {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct Counterexample {
    Check check = Check::Nonempty;
    std::string instance;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
    SweepConfig config;
    std::uint64_t instances = 0;
    std::array<CheckTally, kCheckCount> tallies{};
    std::vector<Counterexample> counterexamples;
    double duration_ms = 0.0;

    std::uint64_t failures() const
    {
        std::uint64_t n = 0;
        for (const auto& t : tallies) {
            n += t.fail;
        }
        return n;
    }
};

namespace detail {

inline void validate_sweep(const SweepConfig& config)
{
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw InputError("sweep size range must satisfy 1 <= min <= max");
    }
    if (config.mode == SweepMode::Exhaustive && config.n_max > config.exhaustive_cap) {
        throw InputError("exhaustive sweep is capped at n = " + std::to_string(config.exhaustive_cap));
    }
    if (config.mode == SweepMode::Random && config.samples == 0) {
        throw InputError("random sweep needs a positive sample count");
    }
    if (config.workers < 1) {
        throw InputError("sweep needs at least one worker");
    }
}

struct InstanceRef {
    std::size_t n;
    std::uint64_t index;
};

inline Tournament materialize(const SweepConfig& config, const InstanceRef& ref)
{
    if (config.mode == SweepMode::Exhaustive) {
        return tournament_from_index(ref.n, ref.index);
    }
    return random_tournament(ref.n, derive_seed(config.seed, ref.n, ref.index));
}

struct Partial {
    std::uint64_t instances = 0;
    std::array<CheckTally, kCheckCount> tallies{};
    std::vector<Counterexample> counterexamples;
};

inline void record(Partial& p, Check c, bool ok, const Tournament& t)
{
    auto& tally = p.tallies[static_cast<std::size_t>(c)];
    if (ok) {
        ++tally.pass;
    } else {
        ++tally.fail;
        p.counterexamples.push_back({c, encode_instance(t)});
    }
}

inline void check_instance(const SweepConfig& config, const Tournament& t, Partial& p)
{
    auto on = [&config](Check c) { return config.checks[static_cast<std::size_t>(c)]; };
    const AlternativeSet all = t.all();
    TeqSolver solver(t);
    const Relation relation = solver.exact_relation(all);
    const AlternativeSet teq = top_cycle(relation);
    std::optional<AlternativeSet> banks;
    if (on(Check::TeqInBanks) || on(Check::Condorcet) || on(Check::Nonempty)) {
        banks = banks_set(t, all);
    }
    ++p.instances;
    if (on(Check::TeqInBanks)) {
        record(p, Check::TeqInBanks, teq.is_subset_of(*banks), t);
    }
    if (on(Check::Nonempty)) {
        record(p, Check::Nonempty, !teq.empty() && !banks->empty(), t);
    }
    if (on(Check::Condorcet)) {
        bool ok = true;
        if (auto w = condorcet_winner(t, all)) {
            const AlternativeSet only = AlternativeSet::of(t.size(), {*w});
            ok = teq == only && *banks == only;
        }
        record(p, Check::Condorcet, ok, t);
    }
    if (on(Check::HeuristicEq)) {
        TeqSolver heuristic_solver(t);
        record(p, Check::HeuristicEq, heuristic_solver.heuristic(all) == teq, t);
    }
    if (on(Check::SingleScc)) {
        record(p, Check::SingleScc, is_strongly_connected(relation.restricted_to(teq)), t);
    }
}

} // namespace detail

/// Runs the selected checks over every instance in the size range. Instances are split into
/// contiguous index ranges, one per worker, and merged in range order, so the report does not
/// depend on the worker count.
inline SweepReport sweep(const SweepConfig& config)
{
    detail::validate_sweep(config);
    const auto start = std::chrono::steady_clock::now();

    std::vector<detail::InstanceRef> refs;
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
        const std::uint64_t count =
            config.mode == SweepMode::Exhaustive ? TournamentEnumerator(n, config.exhaustive_cap).count() : config.samples;
        for (std::uint64_t i = 0; i < count; ++i) {
            refs.push_back({n, i});
        }
    }

    const std::size_t workers = std::min<std::size_t>(config.workers, std::max<std::size_t>(refs.size(), 1));
    std::vector<detail::Partial> partials(workers);
    auto run_range = [&](std::size_t w) {
        const std::size_t begin = refs.size() * w / workers;
        const std::size_t end = refs.size() * (w + 1) / workers;
        for (std::size_t k = begin; k < end; ++k) {
            detail::check_instance(config, detail::materialize(config, refs[k]), partials[w]);
        }
    };
    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(run_range, w);
        }
        for (auto& th : threads) {
            th.join();
        }
    }

    SweepReport report;
    report.config = config;
    for (const auto& p : partials) {
        report.instances += p.instances;
        for (std::size_t c = 0; c < kCheckCount; ++c) {
            report.tallies[c].pass += p.tallies[c].pass;
            report.tallies[c].fail += p.tallies[c].fail;
        }
        report.counterexamples.insert(report.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
    }
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline std::string summary_line(const SweepReport& r)
{
    const std::uint64_t f = r.failures();
    return "summary: " + std::to_string(r.instances) + (r.instances == 1 ? " instance, " : " instances, ") +
           std::to_string(f) + (f == 1 ? " failure" : " failures");
}

/// Line-oriented report. Without timing the text is a pure function of the sweep
/// parameters; the timing line carries the worker count and wall-clock duration.
inline std::string serialize(const SweepReport& r, bool include_timing = true)
{
    std::ostringstream out;
    const SweepConfig& c = r.config;
    out << "sweep mode=" << (c.mode == SweepMode::Exhaustive ? "exhaustive" : "random") << " n=" << c.n_min << ".."
        << c.n_max << " checks=";
    bool first = true;
    for (Check ch : kAllChecks) {
        if (c.checks[static_cast<std::size_t>(ch)]) {
            out << (first ? "" : ",") << check_name(ch);
            first = false;
        }
    }
    out << " samples=" << c.samples << " seed=" << c.seed << '\n';
    for (const auto& ce : r.counterexamples) {
        out << "FAIL " << check_name(ce.check) << ' ' << ce.instance << '\n';
    }
    for (Check ch : kAllChecks) {
        if (c.checks[static_cast<std::size_t>(ch)]) {
            const auto& t = r.tallies[static_cast<std::size_t>(ch)];
            out << "check " << check_name(ch) << " pass=" << t.pass << " fail=" << t.fail << '\n';
        }
    }
    out << summary_line(r) << '\n';
    if (include_timing) {
        out << "timing workers=" << c.workers << " duration_ms=" << static_cast<std::uint64_t>(r.duration_ms) << '\n';
    }
    return out.str();
}

inline SweepReport parse_sweep_report(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& what) {
        return InputError("report line " + std::to_string(line_no) + ": " + what);
    };
    auto value_of = [&](const std::string& token, const std::string& key) {
        if (token.rfind(key + "=", 0) != 0) {
            throw fail("expected '" + key + "='");
        }
        return token.substr(key.size() + 1);
    };
    auto number = [&](const std::string& s) -> std::uint64_t {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(s, &used);
            if (used != s.size()) {
                throw fail("bad number '" + s + "'");
            }
            return v;
        } catch (const std::logic_error&) {
            throw fail("bad number '" + s + "'");
        }
    };

    SweepReport r;
    bool header = false;
    bool summary = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tok(line);
        std::string kind;
        tok >> kind;
        if (kind == "sweep") {
            std::string mode, range, checks, samples, seed;
            if (!(tok >> mode >> range >> checks >> samples >> seed)) {
                throw fail("incomplete header");
            }
            const std::string m = value_of(mode, "mode");
            if (m != "exhaustive" && m != "random") {
                throw fail("unknown mode '" + m + "'");
            }
            r.config.mode = m == "exhaustive" ? SweepMode::Exhaustive : SweepMode::Random;
            const std::string rng = value_of(range, "n");
            const auto dots = rng.find("..");
            if (dots == std::string::npos) {
                throw fail("bad size range");
            }
            r.config.n_min = number(rng.substr(0, dots));
            r.config.n_max = number(rng.substr(dots + 2));
            r.config.checks.fill(false);
            std::istringstream list(value_of(checks, "checks"));
            for (std::string name; std::getline(list, name, ',');) {
                auto ch = parse_check(name);
                if (!ch) {
                    throw fail("unknown check '" + name + "'");
                }
                r.config.checks[static_cast<std::size_t>(*ch)] = true;
            }
            r.config.samples = number(value_of(samples, "samples"));
            r.config.seed = number(value_of(seed, "seed"));
            header = true;
        } else if (kind == "FAIL") {
            std::string name, instance;
            if (!(tok >> name >> instance)) {
                throw fail("incomplete FAIL line");
            }
            auto ch = parse_check(name);
            if (!ch) {
                throw fail("unknown check '" + name + "'");
            }
            r.counterexamples.push_back({*ch, instance});
        } else if (kind == "check") {
            std::string name, pass, failed;
            if (!(tok >> name >> pass >> failed)) {
                throw fail("incomplete check line");
            }
            auto ch = parse_check(name);
            if (!ch) {
                throw fail("unknown check '" + name + "'");
            }
            auto& t = r.tallies[static_cast<std::size_t>(*ch)];
            t.pass = number(value_of(pass, "pass"));
            t.fail = number(value_of(failed, "fail"));
        } else if (kind == "summary:") {
            std::string count;
            tok >> count;
            r.instances = number(count);
            summary = true;
        } else if (kind == "timing") {
            std::string workers, duration;
            if (!(tok >> workers >> duration)) {
                throw fail("incomplete timing line");
            }
            r.config.workers = number(value_of(workers, "workers"));
            r.duration_ms = static_cast<double>(number(value_of(duration, "duration_ms")));
        } else if (!kind.empty()) {
            throw fail("unrecognized line '" + line + "'");
        }
    }
    if (!header || !summary) {
        throw InputError("report is missing its header or summary line");
    }
    return r;
}

} // namespace tourney
