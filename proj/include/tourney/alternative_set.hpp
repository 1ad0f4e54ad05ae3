#pragma once

#include <tourney/error.hpp>

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tourney {

/// A subset of the alternatives {0, ..., universe-1}, stored as packed 64-bit words.
///
/// Set algebra (intersection, union, difference) is word-parallel. Every set knows the size
/// of its universe; combining sets of different universes is a programming error.
class AlternativeSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        const_iterator() = default;
        const_iterator(const AlternativeSet* set, std::size_t word, Word rest)
            : set_(set), word_(word), rest_(rest)
        {
            settle();
        }

        std::size_t operator*() const
        {
            return word_ * kWordBits + static_cast<std::size_t>(std::countr_zero(rest_));
        }
        const_iterator& operator++()
        {
            rest_ &= rest_ - 1;
            settle();
            return *this;
        }
        const_iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const
        {
            return word_ == other.word_ && rest_ == other.rest_;
        }

    private:
        void settle()
        {
            while (rest_ == 0 && word_ + 1 < set_->words_.size()) {
                ++word_;
                rest_ = set_->words_[word_];
            }
            if (rest_ == 0) {
                word_ = set_->words_.size();
            }
        }

        const AlternativeSet* set_ = nullptr;
        std::size_t word_ = 0;
        Word rest_ = 0;
    };

    AlternativeSet() = default;

    /// The empty subset of a universe of the given size.
    explicit AlternativeSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0)
    {
    }

    static AlternativeSet full(std::size_t universe)
    {
        AlternativeSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) {
            s.words_[w] = ~Word{0};
        }
        s.trim();
        return s;
    }

    /// Builds a set from explicit indices; throws InputError on an out-of-range index.
    static AlternativeSet of(std::size_t universe, std::initializer_list<std::size_t> indices)
    {
        return from_range(universe, indices);
    }

    template <typename Range>
    static AlternativeSet from_range(std::size_t universe, const Range& indices)
    {
        AlternativeSet s(universe);
        for (std::size_t i : indices) {
            if (i >= universe) {
                throw InputError("alternative index " + std::to_string(i) + " out of range for " +
                                 std::to_string(universe) + " alternatives");
            }
            s.insert(i);
        }
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::span<const Word> words() const { return {words_.data(), words_.size()}; }

    bool contains(std::size_t i) const
    {
        return i < universe_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
    }

    void insert(std::size_t i)
    {
        assert(i < universe_);
        words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }

    void erase(std::size_t i)
    {
        assert(i < universe_);
        words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (Word w : words_) {
            n += static_cast<std::size_t>(std::popcount(w));
        }
        return n;
    }

    bool empty() const
    {
        for (Word w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_subset_of(const AlternativeSet& other) const
    {
        assert(universe_ == other.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if ((words_[w] & ~other.words_[w]) != 0) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const AlternativeSet& other) const
    {
        assert(universe_ == other.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if ((words_[w] & other.words_[w]) != 0) {
                return true;
            }
        }
        return false;
    }

    std::optional<std::size_t> first() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return std::nullopt;
    }

    AlternativeSet& operator&=(const AlternativeSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }

    AlternativeSet& operator|=(const AlternativeSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }

    AlternativeSet& operator-=(const AlternativeSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= ~other.words_[w];
        }
        return *this;
    }

    friend AlternativeSet operator&(AlternativeSet a, const AlternativeSet& b) { return a &= b; }
    friend AlternativeSet operator|(AlternativeSet a, const AlternativeSet& b) { return a |= b; }
    friend AlternativeSet operator-(AlternativeSet a, const AlternativeSet& b) { return a -= b; }

    friend bool operator==(const AlternativeSet& a, const AlternativeSet& b)
    {
        return a.universe_ == b.universe_ &&
               std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
    }

    const_iterator begin() const { return {this, 0, words_.empty() ? Word{0} : words_[0]}; }
    const_iterator end() const { return {this, words_.size(), 0}; }

    std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

    std::size_t hash() const
    {
        // splitmix64 finalizer folded over the words
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
        for (Word w : words_) {
            std::uint64_t z = h + w + 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            h = z ^ (z >> 31);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim()
    {
        const std::size_t tail = universe_ % kWordBits;
        if (tail != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << tail) - 1;
        }
    }

    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

struct AlternativeSetHash {
    std::size_t operator()(const AlternativeSet& s) const { return s.hash(); }
};

} // namespace tourney
