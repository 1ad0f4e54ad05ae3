#pragma once

#include <tourney/alternative_set.hpp>
#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

/// A directed relation over a carrier subset of some universe of alternatives.
///
/// Pairs are stored as successor rows indexed by the global alternative index. Reflexive
/// pairs are allowed (closures are reflexive).
class Relation {
public:
    Relation() = default;

    explicit Relation(AlternativeSet carrier)
        : carrier_(std::move(carrier)), successors_(carrier_.universe(), AlternativeSet(carrier_.universe()))
    {
    }

    const AlternativeSet& carrier() const { return carrier_; }
    std::size_t universe() const { return carrier_.universe(); }

    void add(std::size_t from, std::size_t to)
    {
        if (!carrier_.contains(from) || !carrier_.contains(to)) {
            throw InputError("relation pair (" + std::to_string(from) + "," + std::to_string(to) +
                             ") leaves the carrier");
        }
        successors_[from].insert(to);
    }

    /// Adds (from, to) for every from in sources.
    void add_all_to(const AlternativeSet& sources, std::size_t to)
    {
        if (!sources.is_subset_of(carrier_) || !carrier_.contains(to)) {
            throw InputError("relation pairs leave the carrier");
        }
        for (std::size_t from : sources) {
            successors_[from].insert(to);
        }
    }

    bool contains(std::size_t from, std::size_t to) const
    {
        return from < successors_.size() && successors_[from].contains(to);
    }

    const AlternativeSet& successors(std::size_t from) const { return successors_.at(from); }

    AlternativeSet predecessors(std::size_t to) const
    {
        AlternativeSet out(universe());
        for (std::size_t from : carrier_) {
            if (successors_[from].contains(to)) {
                out.insert(from);
            }
        }
        return out;
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t from : carrier_) {
            for (std::size_t to : successors_[from]) {
                out.emplace_back(from, to);
            }
        }
        return out;
    }

    std::size_t pair_count() const
    {
        std::size_t n = 0;
        for (std::size_t from : carrier_) {
            n += successors_[from].size();
        }
        return n;
    }

    /// The sub-relation induced on subset (which becomes the new carrier).
    Relation restricted_to(const AlternativeSet& subset) const
    {
        Relation out(subset & carrier_);
        for (std::size_t from : out.carrier_) {
            out.successors_[from] = successors_[from] & out.carrier_;
        }
        return out;
    }

    friend bool operator==(const Relation& a, const Relation& b)
    {
        if (!(a.carrier_ == b.carrier_)) {
            return false;
        }
        for (std::size_t from : a.carrier_) {
            if (!(a.successors_[from] == b.successors_[from])) {
                return false;
            }
        }
        return true;
    }

private:
    AlternativeSet carrier_;
    std::vector<AlternativeSet> successors_;
};

/// Reflexive-transitive closure, computed Warshall-style on bit rows.
inline Relation transitive_closure(const Relation& r)
{
    Relation closed(r.carrier());
    std::vector<AlternativeSet> reach(r.universe(), AlternativeSet(r.universe()));
    for (std::size_t i : r.carrier()) {
        reach[i] = r.successors(i);
        reach[i].insert(i);
    }
    for (std::size_t k : r.carrier()) {
        for (std::size_t i : r.carrier()) {
            if (reach[i].contains(k)) {
                reach[i] |= reach[k];
            }
        }
    }
    for (std::size_t i : r.carrier()) {
        for (std::size_t j : reach[i]) {
            closed.add(i, j);
        }
    }
    return closed;
}

/// Maximal elements of the asymmetric part of the reflexive-transitive closure: x belongs
/// iff every y reaching x is reached back from x. For relations whose condensation has
/// several source components this is their union.
inline AlternativeSet top_cycle(const Relation& r)
{
    if (r.carrier().empty()) {
        throw InputError("top cycle of a relation with empty carrier is undefined");
    }
    const Relation closed = transitive_closure(r);
    AlternativeSet out(r.universe());
    for (std::size_t x : r.carrier()) {
        bool maximal = true;
        for (std::size_t y : r.carrier()) {
            if (closed.contains(y, x) && !closed.contains(x, y)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            out.insert(x);
        }
    }
    return out;
}

/// True iff every carrier element reaches every other one.
inline bool is_strongly_connected(const Relation& r)
{
    if (r.carrier().empty()) {
        return true;
    }
    const Relation closed = transitive_closure(r);
    for (std::size_t x : r.carrier()) {
        if (!(closed.successors(x) == r.carrier())) {
            return false;
        }
    }
    return true;
}

/// The dominance relation of t restricted to x, as a Relation.
inline Relation dominance_relation(const Tournament& t, const AlternativeSet& x)
{
    detail::require_subset(t, x);
    Relation r(x);
    for (std::size_t a : x) {
        for (std::size_t b : t.dominated_by(a) & x) {
            r.add(a, b);
        }
    }
    return r;
}

} // namespace tourney
