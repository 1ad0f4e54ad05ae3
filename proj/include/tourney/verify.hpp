#pragma once

#include <tourney/banks.hpp>
#include <tourney/cnf.hpp>
#include <tourney/error.hpp>
#include <tourney/relation.hpp>
#include <tourney/teq.hpp>
#include <tourney/tstar.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

inline constexpr int kSatVariableCap = 24;
inline constexpr std::size_t kChoiceClauseCap = 16;
/// Largest TEQ-construction instance verified with the exact recursion (m <= 2).
inline constexpr std::size_t kExactTeqAlternativeCap = 17;

/// First satisfying assignment in lexicographic order (variable 1 most significant, false
/// before true); index v-1 holds variable v.
inline std::optional<std::vector<bool>> sat_brute_force(const Cnf& formula)
{
    const int v = formula.variable_count();
    if (v > kSatVariableCap) {
        throw InputError("brute-force SAT is capped at " + std::to_string(kSatVariableCap) + " variables, formula has " +
                         std::to_string(v));
    }
    std::vector<bool> assignment(static_cast<std::size_t>(v));
    const std::uint64_t total = std::uint64_t{1} << v;
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int k = 0; k < v; ++k) {
            assignment[static_cast<std::size_t>(k)] = ((code >> (v - 1 - k)) & 1U) != 0;
        }
        if (formula.satisfied_by(assignment)) {
            return assignment;
        }
    }
    return std::nullopt;
}

/// One literal position (0..2) per clause.
struct ChoiceSet {
    std::vector<std::size_t> picks;
    bool consistent = false;

    friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;
};

inline bool is_consistent(const Cnf& formula, const std::vector<std::size_t>& picks)
{
    for (std::size_t i = 0; i < picks.size(); ++i) {
        const Literal a = formula.clause(i)[picks[i]];
        for (std::size_t j = 0; j < i; ++j) {
            if (formula.clause(j)[picks[j]] == a.complement()) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

inline void require_choice_cap(const Cnf& formula)
{
    if (formula.clause_count() > kChoiceClauseCap) {
        throw InputError("choice-set search is capped at " + std::to_string(kChoiceClauseCap) + " clauses");
    }
}

// Lexicographic walk over the 3^m choice sets, skipping prefixes that already clash.
template <typename Visit>
bool walk_choice_sets(const Cnf& formula, std::vector<std::size_t>& picks, Visit&& visit)
{
    const std::size_t i = picks.size();
    if (i == formula.clause_count()) {
        return visit(picks);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        picks.push_back(k);
        const Literal lit = formula.clause(i)[k];
        bool clash = false;
        for (std::size_t j = 0; j < i && !clash; ++j) {
            clash = formula.clause(j)[picks[j]] == lit.complement();
        }
        if (!clash && walk_choice_sets(formula, picks, visit)) {
            return true;
        }
        picks.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically first choice set without a complementary pair, if any.
inline std::optional<ChoiceSet> consistent_choice_set(const Cnf& formula)
{
    detail::require_choice_cap(formula);
    std::vector<std::size_t> picks;
    std::optional<ChoiceSet> found;
    detail::walk_choice_sets(formula, picks, [&found](const std::vector<std::size_t>& p) {
        found = ChoiceSet{p, true};
        return true;
    });
    return found;
}

inline std::vector<ChoiceSet> all_consistent_choice_sets(const Cnf& formula)
{
    detail::require_choice_cap(formula);
    std::vector<std::size_t> picks;
    std::vector<ChoiceSet> out;
    detail::walk_choice_sets(formula, picks, [&out](const std::vector<std::size_t>& p) {
        out.push_back(ChoiceSet{p, true});
        return false;
    });
    return out;
}

/// Satisfiability decided by both the assignment sweep and the choice-set sweep; a
/// disagreement between them is an internal error.
inline bool cross_checked_satisfiable(const Cnf& formula, std::optional<std::vector<bool>>* assignment = nullptr)
{
    auto model = sat_brute_force(formula);
    const bool by_choice = consistent_choice_set(formula).has_value();
    if (model.has_value() != by_choice) {
        throw std::logic_error("satisfiability oracles disagree on formula:\n" + to_dimacs(formula));
    }
    if (assignment != nullptr) {
        *assignment = std::move(model);
    }
    return by_choice;
}

enum class Verdict { Agree, Disagree, Unverified };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Agree:
        return "AGREE";
    case Verdict::Disagree:
        return "DISAGREE";
    case Verdict::Unverified:
        return "UNVERIFIED";
    }
    return "?";
}

struct ReductionVerdict {
    bool satisfiable = false;
    bool member = false;
    Verdict verdict = Verdict::Disagree;
    std::size_t alternatives = 0;
    std::optional<std::vector<bool>> assignment;
    std::optional<TransitiveChain> witness; // Banks reduction only
    TeqStats stats;                         // TEQ reduction only
};

/// Formula satisfiable iff d is a Banks winner of the Banks construction.
inline ReductionVerdict verify_banks_reduction(const Cnf& formula)
{
    ReductionVerdict out;
    out.satisfiable = cross_checked_satisfiable(formula, &out.assignment);
    const TStarLayout layout = build_banks_tournament(formula);
    const Tournament& t = layout.tournament;
    out.alternatives = t.size();
    out.witness = banks_member(t, t.all(), decision_node(layout));
    out.member = out.witness.has_value();
    out.verdict = out.member == out.satisfiable ? Verdict::Agree : Verdict::Disagree;
    return out;
}

/// Formula satisfiable iff d is in TEQ of the TEQ construction. Instances above
/// exact_cap alternatives are decided by the heuristic only and reported as unverified.
inline ReductionVerdict verify_teq_reduction(const Cnf& formula, std::size_t exact_cap = kExactTeqAlternativeCap,
                                             const std::atomic<bool>* cancel = nullptr)
{
    ReductionVerdict out;
    out.satisfiable = cross_checked_satisfiable(formula, &out.assignment);
    const TStarLayout layout = build_teq_tournament(formula);
    const Tournament& t = layout.tournament;
    out.alternatives = t.size();
    TeqOptions options;
    options.cancel = cancel;
    TeqSolver solver(t, options);
    if (t.size() <= exact_cap) {
        out.member = solver.exact(t.all()).contains(decision_node(layout));
        out.verdict = out.member == out.satisfiable ? Verdict::Agree : Verdict::Disagree;
    } else {
        out.member = solver.heuristic(t.all()).contains(decision_node(layout));
        out.verdict = Verdict::Unverified;
    }
    out.stats = solver.stats();
    return out;
}

struct ReachabilityResult {
    bool pass = true;
    std::vector<std::size_t> unreached; // members of U in B not reachable from C in B
};

/// Every layered-level alternative of b is reachable, in the TEQ relation on b, from some
/// chain alternative of b. `solver` must be built on layout.tournament.
inline ReachabilityResult check_chain_reachability(const TStarLayout& layout, const AlternativeSet& b, TeqSolver& solver)
{
    const Tournament& t = layout.tournament;
    detail::require_subset(t, b);
    if (!b.contains(decision_node(layout))) {
        throw InputError("subset must contain the decision node d");
    }
    AlternativeSet chain_in_b(t.size());
    for (std::size_t c : layout.chain) {
        if (b.contains(c)) {
            chain_in_b.insert(c);
        }
    }
    const Relation reach = transitive_closure(solver.exact_relation(b));
    ReachabilityResult out;
    for (std::size_t u : b - chain_in_b) {
        bool reached = false;
        for (std::size_t c : chain_in_b) {
            reached = reached || reach.contains(c, u);
        }
        if (!reached) {
            out.pass = false;
            out.unreached.push_back(u);
        }
    }
    return out;
}

inline ReachabilityResult check_chain_reachability(const TStarLayout& layout, const AlternativeSet& b)
{
    TeqSolver solver(layout.tournament);
    return check_chain_reachability(layout, b, solver);
}

struct ReachabilitySampling {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::vector<AlternativeSet> failing_sets;
};

/// Random subsets with every alternative kept with probability 1/2 and d always kept.
inline ReachabilitySampling check_chain_reachability_sampled(const TStarLayout& layout, std::size_t samples, std::uint64_t seed)
{
    const Tournament& t = layout.tournament;
    TeqSolver solver(t);
    std::mt19937_64 rng(seed);
    ReachabilitySampling out;
    out.seed = seed;
    out.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        AlternativeSet b(t.size());
        for (std::size_t a = 0; a < t.size(); ++a) {
            if ((rng() >> 63) != 0) {
                b.insert(a);
            }
        }
        b.insert(decision_node(layout));
        if (!check_chain_reachability(layout, b, solver).pass) {
            ++out.failures;
            out.failing_sets.push_back(b);
        }
    }
    return out;
}

struct ProofTraceResult {
    bool pass = true;
    std::size_t levels_checked = 0;
    std::vector<std::string> failures;
};

/// Replays the nested-dominator argument for a satisfiable formula and a consistent
/// choice set: builds the transitive chain u_1..u_n through the TEQ construction, the
/// nested sets D_{n+1} = A and D_i = D_{i+1} ∩ dominators(u_i), and checks strict nesting,
/// the four membership/relation observations, and d ∈ TEQ(D_k) at every level.
inline ProofTraceResult check_proof_trace(const TStarLayout& layout, const Cnf& formula, const ChoiceSet& choice,
                                          TeqSolver& solver)
{
    if (choice.picks.size() != formula.clause_count()) {
        throw InputError("choice set needs one pick per clause");
    }
    for (std::size_t p : choice.picks) {
        if (p > 2) {
            throw InputError("choice set pick out of range 0..2");
        }
    }
    if (!is_consistent(formula, choice.picks)) {
        throw InputError("choice set contains a complementary pair");
    }
    const Tournament& t = layout.tournament;
    const std::size_t n = layout.size;
    ProofTraceResult out;
    auto fail = [&out](const std::string& what) {
        out.pass = false;
        out.failures.push_back(what);
    };

    // u[i] for 1 <= i <= n
    std::vector<std::size_t> u(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Level& level = layout.level(i);
        if (!level.triple) {
            u[i] = level.members[0];
        } else {
            const Role& role = layout.roles[level.members[0]];
            u[i] = level.members[choice.picks.at(role.group - 1)];
        }
    }
    std::vector<AlternativeSet> nested(n + 2);
    nested[n + 1] = t.all();
    for (std::size_t i = n; i >= 1; --i) {
        nested[i] = nested[i + 1] & t.dominators_of(u[i]);
    }
    const std::size_t d = decision_node(layout);
    auto name = [&t](std::size_t a) { return t.name(a); };
    auto in_teq = [&](std::size_t a, const AlternativeSet& x) { return solver.exact(x).contains(a); };

    for (std::size_t i = 1; i <= n; ++i) {
        if (!(nested[i].is_subset_of(nested[i + 1]) && !(nested[i] == nested[i + 1]))) {
            fail("D_" + std::to_string(i) + " is not a proper subset of D_" + std::to_string(i + 1));
        }
    }
    for (std::size_t i = 1; i <= n + 1; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (nested[i].contains(u[j]) != (j < i)) {
                fail("u_" + std::to_string(j) + "=" + name(u[j]) + " membership in D_" + std::to_string(i));
            }
        }
        for (std::size_t j = 0; j <= n; ++j) {
            if (nested[i].contains(layout.chain[j]) != (j < i)) {
                fail("c_" + std::to_string(j) + " membership in D_" + std::to_string(i));
            }
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const AlternativeSet& outer = nested[i + 1];
        const std::size_t ci = layout.chain[i];
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t cj = layout.chain[j];
            if (!in_teq(ci, t.dominators_of(cj) & outer)) {
                fail("c_" + std::to_string(i) + " does not TEQ-dominate c_" + std::to_string(j) + " in D_" +
                     std::to_string(i + 1));
            }
        }
        if (!in_teq(u[i], t.dominators_of(ci) & outer)) {
            fail("u_" + std::to_string(i) + "=" + name(u[i]) + " does not TEQ-dominate c_" + std::to_string(i) +
                 " in D_" + std::to_string(i + 1));
        }
    }
    if (condorcet_winner(t, nested[1]) != d) {
        fail("d is not the Condorcet winner of D_1");
    }
    for (std::size_t k = 1; k <= n + 1; ++k) {
        if (!in_teq(d, nested[k])) {
            fail("d is not in TEQ(D_" + std::to_string(k) + ")");
        }
    }
    out.levels_checked = n + 1;
    return out;
}

inline ProofTraceResult check_proof_trace(const Cnf& formula, const ChoiceSet& choice, std::size_t max_clauses = 2)
{
    if (formula.clause_count() > max_clauses) {
        throw InputError("proof trace is capped at " + std::to_string(max_clauses) + " clauses");
    }
    const TStarLayout layout = build_teq_tournament(formula);
    TeqSolver solver(layout.tournament);
    return check_proof_trace(layout, formula, choice, solver);
}

} // namespace tourney
