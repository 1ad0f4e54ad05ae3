#pragma once

#include <tourney/alternative_set.hpp>
#include <tourney/error.hpp>
#include <tourney/relation.hpp>
#include <tourney/tournament.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_map>

namespace tourney {

struct TeqStats {
    std::uint64_t recursive_calls = 0;
    std::uint64_t memoized_subsets = 0;
    /// Total loop iterations of the heuristic, over all (sub)calls.
    std::uint64_t heuristic_iterations = 0;
    /// Heuristic calls whose loop ran more than |X| times (expected to stay zero).
    std::uint64_t heuristic_bound_violations = 0;
};

struct TeqResult {
    AlternativeSet teq_set;
    Relation teq_relation;
    TeqStats stats;
};

struct TeqOptions {
    bool memoize = true;
    /// Heuristic only: resolve inner dominator-set queries with the exact recursion.
    bool exact_inner = false;
    const std::atomic<bool>* cancel = nullptr;
};

/// Recursive TEQ evaluation over subsets of one tournament, with a per-solver memo table.
///
/// Exact and heuristic values are memoized separately. A solver can be reused across many
/// queries on the same tournament; the free functions below create a fresh one per call.
class TeqSolver {
public:
    explicit TeqSolver(const Tournament& t, TeqOptions options = {}) : t_(t), options_(options) {}

    const Tournament& tournament() const { return t_; }
    const TeqStats& stats() const { return stats_; }

    /// TEQ of the subtournament on x, straight from the recursive definition.
    AlternativeSet exact(const AlternativeSet& x)
    {
        tick();
        if (x.empty()) {
            return x;
        }
        if (options_.memoize) {
            if (auto it = exact_memo_.find(x); it != exact_memo_.end()) {
                return it->second;
            }
        }
        AlternativeSet result = top_cycle(exact_relation_unchecked(x));
        if (options_.memoize) {
            exact_memo_.emplace(x, result);
            stats_.memoized_subsets = exact_memo_.size() + heuristic_memo_.size();
        }
        return result;
    }

    /// The TEQ relation on x: (b, a) iff b is in TEQ of a's dominators within x.
    Relation exact_relation(const AlternativeSet& x)
    {
        detail::require_subset(t_, x);
        return exact_relation_unchecked(x);
    }

    /// TEQ of x by iterative expansion from the alternatives with fewest dominators.
    AlternativeSet heuristic(const AlternativeSet& x)
    {
        tick();
        if (x.empty()) {
            return x;
        }
        if (options_.memoize) {
            if (auto it = heuristic_memo_.find(x); it != heuristic_memo_.end()) {
                return it->second;
            }
        }
        Relation explored;
        AlternativeSet result = heuristic_expand(x, explored);
        if (options_.memoize) {
            heuristic_memo_.emplace(x, result);
            stats_.memoized_subsets = exact_memo_.size() + heuristic_memo_.size();
        }
        return result;
    }

    /// Heuristic value together with the relation it explored (carrier = the explored set B).
    AlternativeSet heuristic_with_relation(const AlternativeSet& x, Relation& explored)
    {
        detail::require_subset(t_, x);
        tick();
        return heuristic_expand(x, explored);
    }

private:
    void tick()
    {
        ++stats_.recursive_calls;
        if (options_.cancel != nullptr && options_.cancel->load(std::memory_order_relaxed)) {
            throw Cancelled();
        }
    }

    Relation exact_relation_unchecked(const AlternativeSet& x)
    {
        Relation r(x);
        for (std::size_t a : x) {
            const AlternativeSet doms = t_.dominators_of(a) & x;
            if (!doms.empty()) {
                r.add_all_to(exact(doms), a);
            }
        }
        return r;
    }

    AlternativeSet inner(const AlternativeSet& doms)
    {
        return options_.exact_inner ? exact(doms) : heuristic(doms);
    }

    AlternativeSet heuristic_expand(const AlternativeSet& x, Relation& explored)
    {
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t a : x) {
            fewest = std::min(fewest, (t_.dominators_of(a) & x).size());
        }
        AlternativeSet frontier(t_.size());
        for (std::size_t a : x) {
            if ((t_.dominators_of(a) & x).size() == fewest) {
                frontier.insert(a);
            }
        }
        AlternativeSet explored_set = frontier;
        Relation r(x);
        std::size_t iterations = 0;
        for (;;) {
            ++iterations;
            AlternativeSet reached(t_.size());
            for (std::size_t a : frontier) {
                const AlternativeSet doms = t_.dominators_of(a) & x;
                if (doms.empty()) {
                    continue;
                }
                const AlternativeSet winners = inner(doms);
                r.add_all_to(winners, a);
                reached |= winners;
            }
            if (reached.is_subset_of(explored_set)) {
                break;
            }
            frontier = reached;
            explored_set |= frontier;
        }
        stats_.heuristic_iterations += iterations;
        if (iterations > x.size()) {
            ++stats_.heuristic_bound_violations;
        }
        explored = r.restricted_to(explored_set);
        return top_cycle(explored);
    }

    const Tournament& t_;
    TeqOptions options_;
    TeqStats stats_;
    std::unordered_map<AlternativeSet, AlternativeSet, AlternativeSetHash> exact_memo_;
    std::unordered_map<AlternativeSet, AlternativeSet, AlternativeSetHash> heuristic_memo_;
};

/// TEQ of the subtournament on x with its TEQ relation, using a cache scoped to this call.
inline TeqResult teq_exact(const Tournament& t, const AlternativeSet& x, TeqOptions options = {})
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("TEQ of an empty set is undefined");
    }
    TeqSolver solver(t, options);
    Relation relation = solver.exact_relation(x);
    AlternativeSet set = top_cycle(relation);
    return {std::move(set), std::move(relation), solver.stats()};
}

inline bool teq_member(const Tournament& t, const AlternativeSet& x, std::size_t a, TeqOptions options = {})
{
    detail::require_member(t, x, a);
    return TeqSolver(t, options).exact(x).contains(a);
}

/// Heuristic TEQ; agrees with teq_exact whenever every TEQ top cycle is strongly connected.
inline TeqResult teq_heuristic(const Tournament& t, const AlternativeSet& x, TeqOptions options = {})
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("TEQ of an empty set is undefined");
    }
    TeqSolver solver(t, options);
    Relation relation;
    AlternativeSet set = solver.heuristic_with_relation(x, relation);
    return {std::move(set), std::move(relation), solver.stats()};
}

inline std::string format_set(const Tournament& t, const AlternativeSet& x)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i : x) {
        out += (first ? "" : ",") + t.name(i);
        first = false;
    }
    return out + "}";
}

namespace detail {

inline void trace_children(TeqSolver& solver, const AlternativeSet& x, std::size_t depth, std::size_t limit,
                           std::ostringstream& out)
{
    if (depth > limit) {
        return;
    }
    const Tournament& t = solver.tournament();
    for (std::size_t a : x) {
        const AlternativeSet doms = t.dominators_of(a) & x;
        out << std::string(2 * depth, ' ') << "D(" << t.name(a) << ") = " << format_set(t, doms) << " -> TEQ "
            << format_set(t, solver.exact(doms)) << '\n';
        if (!doms.empty()) {
            trace_children(solver, doms, depth + 1, limit, out);
        }
    }
}

} // namespace detail

/// Indented recursion trace: the root line for x, then one line per alternative giving its
/// dominator set and that set's TEQ, nested down to depth_limit.
inline std::string teq_trace(const Tournament& t, const AlternativeSet& x, std::size_t depth_limit)
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("TEQ of an empty set is undefined");
    }
    TeqSolver solver(t);
    std::ostringstream out;
    out << format_set(t, x) << " -> TEQ " << format_set(t, solver.exact(x)) << '\n';
    detail::trace_children(solver, x, 1, depth_limit, out);
    return out.str();
}

} // namespace tourney
