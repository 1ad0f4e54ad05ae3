#pragma once

#include <tourney/alternative_set.hpp>
#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tourney {

/// Alternatives in decreasing dominance order: each element beats every later one.
struct TransitiveChain {
    std::vector<std::size_t> elements;

    std::size_t head() const { return elements.front(); }
    bool empty() const { return elements.empty(); }

    friend bool operator==(const TransitiveChain&, const TransitiveChain&) = default;
};

inline bool is_valid_chain(const Tournament& t, const TransitiveChain& chain)
{
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
        if (chain.elements[i] >= t.size()) {
            return false;
        }
        for (std::size_t j = i + 1; j < chain.elements.size(); ++j) {
            if (!t.beats(chain.elements[i], chain.elements[j])) {
                return false;
            }
        }
    }
    return true;
}

/// "d > c3 > y1"
inline std::string format_chain(const Tournament& t, const TransitiveChain& chain)
{
    std::string out;
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
        out += (i ? " > " : "") + t.name(chain.elements[i]);
    }
    return out;
}

/// Some alternative of `within` outside the chain that beats every chain element (lowest index),
/// or nothing if the chain cannot be extended on top.
inline std::optional<std::size_t> is_top_extendable(const Tournament& t, const TransitiveChain& chain,
                                                    const AlternativeSet& within)
{
    detail::require_subset(t, within);
    if (!is_valid_chain(t, chain)) {
        throw InputError("not a transitive chain in decreasing dominance order");
    }
    AlternativeSet above = within;
    for (std::size_t c : chain.elements) {
        above &= t.dominators_of(c);
    }
    return above.first();
}

inline std::optional<std::size_t> is_top_extendable(const Tournament& t, const TransitiveChain& chain)
{
    return is_top_extendable(t, chain, t.all());
}

namespace detail {

class BanksSearch {
public:
    BanksSearch(const Tournament& t, const AlternativeSet& x, const std::atomic<bool>* cancel)
        : t_(t), x_(x), cancel_(cancel)
    {
    }

    std::optional<TransitiveChain> run(std::size_t head)
    {
        chain_.elements.assign(1, head);
        if (extend(t_.dominated_by(head) & x_, t_.dominators_of(head) & x_)) {
            return chain_;
        }
        return std::nullopt;
    }

private:
    // pool: alternatives beaten by every chain member (legal next elements).
    // above: alternatives beating every chain member (must become empty).
    bool extend(const AlternativeSet& pool, const AlternativeSet& above)
    {
        if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
            throw Cancelled();
        }
        if (above.empty()) {
            return true;
        }
        // An alternative above the chain that beats the whole pool stays above it forever.
        for (std::size_t z : above) {
            if (!t_.dominators_of(z).intersects(pool)) {
                return false;
            }
        }

        std::vector<std::size_t> candidates = pool.to_vector();
        std::vector<std::size_t> score(t_.size(), 0);
        for (std::size_t c : candidates) {
            score[c] = (t_.dominated_by(c) & pool).size();
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&score](std::size_t a, std::size_t b) { return score[a] > score[b]; });

        for (std::size_t c : candidates) {
            chain_.elements.push_back(c);
            if (extend(pool & t_.dominated_by(c), above & t_.dominators_of(c))) {
                return true;
            }
            chain_.elements.pop_back();
        }
        return false;
    }

    const Tournament& t_;
    const AlternativeSet& x_;
    const std::atomic<bool>* cancel_;
    TransitiveChain chain_;
};

} // namespace detail

/// A chain inside x headed by a that no alternative of x beats entirely, if one exists.
///
/// Such a chain exists iff a is in the Banks set of the subtournament on x: any maximal
/// transitive superset of a non-extendable chain keeps a as its maximum.
inline std::optional<TransitiveChain> banks_member(const Tournament& t, const AlternativeSet& x, std::size_t a,
                                                   const std::atomic<bool>* cancel = nullptr)
{
    detail::require_member(t, x, a);
    return detail::BanksSearch(t, x, cancel).run(a);
}

inline AlternativeSet banks_set(const Tournament& t, const AlternativeSet& x,
                                const std::atomic<bool>* cancel = nullptr)
{
    detail::require_subset(t, x);
    if (x.empty()) {
        throw InputError("Banks set of an empty set is undefined");
    }
    AlternativeSet out(t.size());
    detail::BanksSearch search(t, x, cancel);
    for (std::size_t a : x) {
        if (search.run(a)) {
            out.insert(a);
        }
    }
    return out;
}

} // namespace tourney
