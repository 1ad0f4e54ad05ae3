#pragma once

#include <tourney/alternative_set.hpp>
#include <tourney/error.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tourney {

/// A complete, irreflexive, antisymmetric dominance relation over named alternatives.
///
/// Alternatives are identified by their index; the index order is the canonical order and
/// the order in which names are written back out. Row i of the dominance matrix is kept as
/// a bit set (the alternatives i beats), and so is column i (the dominators of i), so that
/// dominator sets of a subset are a single AND.
class Tournament {
public:
    Tournament() = default;

    /// Validates every invariant and throws InputError on the first violation.
    Tournament(std::vector<std::string> names, std::vector<AlternativeSet> beats)
        : names_(std::move(names)), beats_(std::move(beats))
    {
        const std::size_t n = names_.size();
        if (beats_.size() != n) {
            throw InputError("dominance matrix has " + std::to_string(beats_.size()) + " rows for " +
                             std::to_string(n) + " alternatives");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& name = names_[i];
            if (name.empty()) {
                throw InputError("alternative " + std::to_string(i) + " has an empty name");
            }
            if (std::any_of(name.begin(), name.end(), [](unsigned char ch) { return std::isspace(ch); })) {
                throw InputError("alternative name '" + name + "' contains whitespace");
            }
            if (!index_.emplace(name, i).second) {
                throw InputError("duplicate alternative name '" + name + "'");
            }
        }
        dominators_.assign(n, AlternativeSet(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (beats_[i].universe() != n) {
                throw InputError("dominance row " + std::to_string(i) + " has the wrong width");
            }
            if (beats_[i].contains(i)) {
                throw InputError("alternative '" + names_[i] + "' dominates itself");
            }
            for (std::size_t j : beats_[i]) {
                dominators_[j].insert(i);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool ij = beats_[i].contains(j);
                const bool ji = beats_[j].contains(i);
                if (ij == ji) {
                    throw InputError("alternatives '" + names_[i] + "' and '" + names_[j] + "' " +
                                     (ij ? "dominate each other" : "are not compared"));
                }
            }
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// Index of a named alternative; throws InputError if no such alternative exists.
    std::size_t require_index(std::string_view name) const
    {
        if (auto i = index_of(name)) {
            return *i;
        }
        throw InputError("unknown alternative '" + std::string(name) + "'");
    }

    bool beats(std::size_t i, std::size_t j) const { return beats_.at(i).contains(j); }

    /// The alternatives that i dominates.
    const AlternativeSet& dominated_by(std::size_t i) const { return beats_.at(i); }

    /// The dominators of i in the whole tournament.
    const AlternativeSet& dominators_of(std::size_t i) const { return dominators_.at(i); }

    AlternativeSet all() const { return AlternativeSet::full(size()); }

    /// Same tournament with the edge between i and j reversed.
    Tournament with_flipped(std::size_t i, std::size_t j) const
    {
        if (i >= size() || j >= size() || i == j) {
            throw InputError("cannot flip edge between " + std::to_string(i) + " and " + std::to_string(j));
        }
        auto rows = beats_;
        if (rows[i].contains(j)) {
            rows[i].erase(j);
            rows[j].insert(i);
        } else {
            rows[j].erase(i);
            rows[i].insert(j);
        }
        return Tournament(names_, std::move(rows));
    }

    /// Set of names for the given indices, useful for stable comparisons across relabelings.
    std::vector<std::string> names_of(const AlternativeSet& x) const
    {
        std::vector<std::string> out;
        for (std::size_t i : x) {
            out.push_back(names_[i]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Tournament& a, const Tournament& b)
    {
        return a.names_ == b.names_ && a.beats_ == b.beats_;
    }

private:
    std::vector<std::string> names_;
    std::vector<AlternativeSet> beats_;
    std::vector<AlternativeSet> dominators_;
    std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline void require_subset(const Tournament& t, const AlternativeSet& x)
{
    if (x.universe() != t.size()) {
        throw InputError("alternative set ranges over " + std::to_string(x.universe()) +
                         " alternatives, tournament has " + std::to_string(t.size()));
    }
}

inline void require_member(const Tournament& t, const AlternativeSet& x, std::size_t a)
{
    require_subset(t, x);
    if (!x.contains(a)) {
        throw InputError("alternative " + (a < t.size() ? "'" + t.name(a) + "'" : std::to_string(a)) +
                         " is not in the queried set");
    }
}

} // namespace detail

/// The subtournament induced by x, keeping names and their relative order.
inline Tournament restrict(const Tournament& t, const AlternativeSet& x)
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("cannot restrict a tournament to the empty set");
    }
    const auto kept = x.to_vector();
    std::vector<std::size_t> position(t.size(), 0);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        position[kept[k]] = k;
    }
    std::vector<std::string> names;
    std::vector<AlternativeSet> rows(kept.size(), AlternativeSet(kept.size()));
    for (std::size_t k = 0; k < kept.size(); ++k) {
        names.push_back(t.name(kept[k]));
        for (std::size_t j : t.dominated_by(kept[k]) & x) {
            rows[k].insert(position[j]);
        }
    }
    return Tournament(std::move(names), std::move(rows));
}

/// Dominators of a within x.
inline AlternativeSet dominators(const Tournament& t, const AlternativeSet& x, std::size_t a)
{
    detail::require_member(t, x, a);
    return t.dominators_of(a) & x;
}

inline std::optional<std::size_t> condorcet_winner(const Tournament& t, const AlternativeSet& x)
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("Condorcet winner of an empty set is undefined");
    }
    for (std::size_t b : x) {
        if (!t.dominators_of(b).intersects(x)) {
            return b;
        }
    }
    return std::nullopt;
}

/// A subtournament is transitive iff its scores (out-degrees within x) are pairwise distinct.
inline bool is_transitive(const Tournament& t, const AlternativeSet& x)
{
    detail::require_subset(t, x);
    std::vector<bool> seen(x.size(), false);
    for (std::size_t a : x) {
        const std::size_t score = (t.dominated_by(a) & x).size();
        if (seen[score]) {
            return false;
        }
        seen[score] = true;
    }
    return true;
}

} // namespace tourney
