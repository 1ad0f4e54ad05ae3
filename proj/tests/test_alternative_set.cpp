#include <catch_amalgamated.hpp>

#include <tourney/alternative_set.hpp>
#include <tourney/error.hpp>

#include <unordered_set>
#include <vector>

using tourney::AlternativeSet;

TEST_CASE("set algebra on a single word", "[core]")
{
    const auto a = AlternativeSet::of(10, {1, 3, 5});
    const auto b = AlternativeSet::of(10, {3, 4});
    CHECK((a & b) == AlternativeSet::of(10, {3}));
    CHECK((a | b) == AlternativeSet::of(10, {1, 3, 4, 5}));
    CHECK((a - b) == AlternativeSet::of(10, {1, 5}));
    CHECK(a.size() == 3);
    CHECK(a.intersects(b));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(AlternativeSet::of(10, {3}).is_subset_of(a));
    CHECK(a.first() == 1u);
    CHECK_FALSE(AlternativeSet(10).first().has_value());
    CHECK(AlternativeSet(10).empty());
    CHECK(AlternativeSet::full(10).size() == 10);
}

TEST_CASE("sets spanning several words iterate in order", "[core]")
{
    auto s = AlternativeSet::of(130, {0, 63, 64, 127, 129});
    CHECK(s.to_vector() == std::vector<std::size_t>{0, 63, 64, 127, 129});
    s.erase(64);
    CHECK_FALSE(s.contains(64));
    CHECK(AlternativeSet::full(130).size() == 130);
    CHECK((AlternativeSet::full(130) - s).size() == 126);
}

TEST_CASE("out-of-range members are rejected", "[core]")
{
    CHECK_THROWS_AS(AlternativeSet::of(4, {4}), tourney::InputError);
    CHECK_THROWS_AS(AlternativeSet::from_range(4, std::vector<std::size_t>{0, 7}), tourney::InputError);
}

TEST_CASE("equal sets hash equally", "[core]")
{
    std::unordered_set<AlternativeSet, tourney::AlternativeSetHash> seen;
    seen.insert(AlternativeSet::of(70, {1, 65}));
    auto again = AlternativeSet(70);
    again.insert(65);
    again.insert(1);
    CHECK(seen.count(again) == 1);
    CHECK(seen.count(AlternativeSet::of(70, {1})) == 0);
}
