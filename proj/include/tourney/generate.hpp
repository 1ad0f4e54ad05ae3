#pragma once

#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tourney {

inline constexpr std::size_t kDefaultEnumerationCap = 7;

/// Number of unordered pairs, i.e. bits in the upper-triangle encoding of an n-tournament.
inline constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Default names: a, b, ..., z, then a1, b1, ...
inline std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string name(1, static_cast<char>('a' + i % 26));
        if (i >= 26) {
            name += std::to_string(i / 26);
        }
        names.push_back(std::move(name));
    }
    return names;
}

/// Tournament whose upper-triangle pairs (i<j, row-major) are oriented by the given bits:
/// bit k set means i beats j for the k-th pair.
inline Tournament tournament_from_bits(std::size_t n, const std::vector<bool>& bits)
{
    if (bits.size() != pair_count(n)) {
        throw InputError("expected " + std::to_string(pair_count(n)) + " orientation bits");
    }
    std::vector<AlternativeSet> beats(n, AlternativeSet(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            if (bits[k]) {
                beats[i].insert(j);
            } else {
                beats[j].insert(i);
            }
        }
    }
    return Tournament(default_names(n), std::move(beats));
}

/// The labeled tournament with enumeration index `index` (bit k of index orients pair k).
inline Tournament tournament_from_index(std::size_t n, std::uint64_t index)
{
    std::vector<bool> bits(pair_count(n));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        bits[k] = ((index >> k) & 1U) != 0;
    }
    return tournament_from_bits(n, bits);
}

inline std::vector<bool> orientation_bits(const Tournament& t)
{
    std::vector<bool> bits;
    bits.reserve(pair_count(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            bits.push_back(t.beats(i, j));
        }
    }
    return bits;
}

/// Single-consumer stream over all 2^(n(n-1)/2) labeled tournaments on n alternatives, in
/// increasing order of their upper-triangle bit pattern.
class TournamentEnumerator {
public:
    explicit TournamentEnumerator(std::size_t n, std::size_t cap = kDefaultEnumerationCap)
        : n_(n), count_(0)
    {
        if (n < 1 || n > cap) {
            throw InputError("enumeration size " + std::to_string(n) + " outside 1.." + std::to_string(cap));
        }
        count_ = std::uint64_t{1} << pair_count(n);
    }

    std::uint64_t count() const { return count_; }
    bool done() const { return next_ >= count_; }
    std::uint64_t position() const { return next_; }

    Tournament next()
    {
        if (done()) {
            throw InputError("tournament enumeration exhausted");
        }
        return tournament_from_index(n_, next_++);
    }

private:
    std::size_t n_;
    std::uint64_t count_;
    std::uint64_t next_ = 0;
};

inline TournamentEnumerator enumerate_tournaments(std::size_t n, std::size_t cap = kDefaultEnumerationCap)
{
    return TournamentEnumerator(n, cap);
}

/// Each pair oriented by the top bit of one std::mt19937_64 draw, pairs in upper-triangle order.
inline Tournament random_tournament(std::size_t n, std::uint64_t seed)
{
    if (n < 1) {
        throw InputError("random tournament needs at least one alternative");
    }
    std::mt19937_64 rng(seed);
    std::vector<bool> bits(pair_count(n));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        bits[k] = (rng() >> 63) != 0;
    }
    return tournament_from_bits(n, bits);
}

} // namespace tourney
