#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace tourney;
using testing_support::example5;
using testing_support::named;

TEST_CASE("five-alternative example: Banks set excludes only e", "[banks]")
{
    const Tournament t = example5();
    CHECK(t.names_of(banks_set(t, t.all())) == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK_FALSE(banks_member(t, t.all(), t.require_index("e")).has_value());
    for (const char* name : {"a", "b", "c", "d"}) {
        const auto chain = banks_member(t, t.all(), t.require_index(name));
        REQUIRE(chain.has_value());
        CHECK(t.name(chain->head()) == name);
        CHECK(is_valid_chain(t, *chain));
        CHECK_FALSE(is_top_extendable(t, *chain).has_value());
    }
}

TEST_CASE("chain helpers", "[banks]")
{
    const Tournament t = example5();
    const TransitiveChain ok{{t.require_index("a"), t.require_index("b"), t.require_index("d")}};
    CHECK(is_valid_chain(t, ok));
    CHECK(format_chain(t, ok) == "a > b > d");
    const TransitiveChain e_only{{t.require_index("e")}};
    CHECK(is_top_extendable(t, e_only) == t.require_index("a"));
    const TransitiveChain bad{{t.require_index("b"), t.require_index("a")}};
    CHECK_FALSE(is_valid_chain(t, bad));
    CHECK_THROWS_AS(is_top_extendable(t, bad), InputError);
}

TEST_CASE("Banks set matches subset enumeration for n <= 5 and sampled n = 6, 7", "[banks]")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto e = enumerate_tournaments(n);
        while (!e.done()) {
            const Tournament t = e.next();
            REQUIRE(oracle::to_set(banks_set(t, t.all())) == oracle::banks(oracle::matrix(t), oracle::all(n)));
        }
    }
    for (std::size_t n : {6u, 7u}) {
        for (std::uint64_t s = 0; s < 300; ++s) {
            const Tournament t = random_tournament(n, derive_seed(17, n, s));
            REQUIRE(oracle::to_set(banks_set(t, t.all())) == oracle::banks(oracle::matrix(t), oracle::all(n)));
        }
    }
}

TEST_CASE("Banks witnesses are valid non-extendable chains inside the queried set", "[banks]")
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t n = 4 + s % 9;
        const Tournament t = random_tournament(n, derive_seed(23, n, s));
        AlternativeSet x = t.all();
        x.erase(s % n);
        for (std::size_t a : x) {
            if (const auto chain = banks_member(t, x, a)) {
                REQUIRE(chain->head() == a);
                REQUIRE(is_valid_chain(t, *chain));
                for (std::size_t c : chain->elements) {
                    REQUIRE(x.contains(c));
                }
                REQUIRE_FALSE(is_top_extendable(t, *chain, x).has_value());
            }
        }
    }
}

TEST_CASE("TEQ is contained in the Banks set", "[banks]")
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        const std::size_t n = 1 + s % 11;
        const Tournament t = random_tournament(n, derive_seed(29, n, s));
        const AlternativeSet teq = teq_exact(t, t.all()).teq_set;
        REQUIRE_FALSE(teq.empty());
        REQUIRE(teq.is_subset_of(banks_set(t, t.all())));
    }
}

TEST_CASE("Banks membership rejects alternatives outside the set", "[banks]")
{
    const Tournament t = example5();
    CHECK_THROWS_AS(banks_member(t, named(t, {"a", "b"}), t.require_index("c")), InputError);
    CHECK_THROWS_AS(banks_set(t, AlternativeSet(5)), InputError);
}
