#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

#include <set>

using namespace tourney;
using testing_support::example5;
using testing_support::named;

TEST_CASE("five-alternative example parses with the drawn edges", "[core]")
{
    const Tournament t = example5();
    REQUIRE(t.size() == 5);
    const std::set<std::pair<std::string, std::string>> edges = {
        {"a", "b"}, {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"},
        {"c", "a"}, {"c", "e"}, {"d", "c"}, {"d", "e"}, {"e", "b"}};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            if (i != j) {
                CHECK(t.beats(i, j) == (edges.count({t.name(i), t.name(j)}) == 1));
            }
        }
    }
}

TEST_CASE("dominator sets of the five-alternative example", "[core]")
{
    const Tournament t = example5();
    const auto all = t.all();
    CHECK(dominators(t, all, t.require_index("a")) == named(t, {"c"}));
    CHECK(dominators(t, all, t.require_index("b")) == named(t, {"a", "e"}));
    CHECK(dominators(t, all, t.require_index("c")) == named(t, {"b", "d"}));
    CHECK(dominators(t, all, t.require_index("d")) == named(t, {"a", "b"}));
    CHECK(dominators(t, all, t.require_index("e")) == named(t, {"a", "c", "d"}));
    CHECK_THROWS_AS(dominators(t, named(t, {"a", "b"}), t.require_index("c")), InputError);
}

TEST_CASE("text format round-trips and rejects malformed input with a line number", "[core]")
{
    const Tournament t = example5();
    CHECK(parse_tournament(to_text(t)) == t);
    CHECK(to_text(parse_tournament(to_text(t))) == to_text(t));

    auto message = [](const std::string& text) {
        try {
            parse_tournament(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("tourney 2\na b\n-1\n0-\n").rfind("line 1:", 0) == 0);
    CHECK(message("tournament 2\na\n-1\n0-\n").rfind("line 2:", 0) == 0);
    CHECK(message("tournament 2\na b\n-1\n1-\n").rfind("line 4:", 0) == 0);
    CHECK(message("tournament 2\na b\n-x\n0-\n").rfind("line 3:", 0) == 0);
    CHECK(message("tournament 2\na b\n-1\n").rfind("line 4:", 0) == 0);
    CHECK(message("tournament 2\na a\n-1\n0-\n").find("duplicate") != std::string::npos);
    CHECK(message("tournament 0\n").rfind("line 1:", 0) == 0);
}

TEST_CASE("constructor enforces completeness and irreflexivity", "[core]")
{
    CHECK_THROWS_AS(Tournament({"a", "b"}, {AlternativeSet(2), AlternativeSet(2)}), InputError);
    CHECK_THROWS_AS(Tournament({"a", "b"}, {AlternativeSet::of(2, {1}), AlternativeSet::of(2, {0})}), InputError);
    CHECK_THROWS_AS(Tournament({"a"}, {AlternativeSet::of(1, {0})}), InputError);
    CHECK_THROWS_AS(Tournament({"a b", "c"}, {AlternativeSet::of(2, {1}), AlternativeSet(2)}), InputError);
    CHECK_NOTHROW(Tournament({"a"}, {AlternativeSet(1)}));
}

TEST_CASE("restriction keeps names and induced edges", "[core]")
{
    const Tournament t = example5();
    const Tournament r = restrict(t, named(t, {"a", "c", "e"}));
    CHECK(r.names() == std::vector<std::string>{"a", "c", "e"});
    CHECK(r.beats(r.require_index("c"), r.require_index("a")));
    CHECK(r.beats(r.require_index("a"), r.require_index("e")));
    CHECK(r.beats(r.require_index("c"), r.require_index("e")));
    CHECK(condorcet_winner(r, r.all()) == r.require_index("c"));
    CHECK(is_transitive(r, r.all()));
    CHECK_FALSE(is_transitive(t, t.all()));
    CHECK_FALSE(condorcet_winner(t, t.all()).has_value());
}

TEST_CASE("flipping an edge swaps exactly one pair", "[core]")
{
    const Tournament t = example5();
    const Tournament f = t.with_flipped(t.require_index("a"), t.require_index("b"));
    CHECK(f.beats(f.require_index("b"), f.require_index("a")));
    CHECK(orientation_bits(f) != orientation_bits(t));
    CHECK(f.with_flipped(0, 1) == t);
}

TEST_CASE("enumeration covers every labelled tournament once", "[core]")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto e = enumerate_tournaments(n);
        CHECK(e.count() == (std::uint64_t{1} << pair_count(n)));
        std::set<std::vector<bool>> seen;
        while (!e.done()) {
            seen.insert(orientation_bits(e.next()));
        }
        CHECK(seen.size() == (std::size_t{1} << pair_count(n)));
    }
    CHECK_THROWS_AS(enumerate_tournaments(8), InputError);
    CHECK_NOTHROW(enumerate_tournaments(8, 8));
}

TEST_CASE("bit encoding puts pair (i,j) in row-major upper-triangle order", "[core]")
{
    const Tournament t = tournament_from_index(3, 0b001);
    CHECK(t.beats(0, 1));
    CHECK(t.beats(2, 0));
    CHECK(t.beats(2, 1));
    for (std::uint64_t k = 0; k < 64; ++k) {
        CHECK(tournament_from_bits(4, orientation_bits(tournament_from_index(4, k))) == tournament_from_index(4, k));
    }
}

TEST_CASE("seeded random tournaments are reproducible", "[core]")
{
    CHECK(random_tournament(9, 42) == random_tournament(9, 42));
    CHECK_FALSE(random_tournament(9, 42) == random_tournament(9, 43));
    const std::string golden = testing_support::slurp(std::string(TOURNEY_GOLDEN_DIR) + "/random_5_42.tournament");
    CHECK(to_text(random_tournament(5, 42)) == golden);
}

TEST_CASE("top cycle matches the source components found by Tarjan", "[core]")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto e = enumerate_tournaments(n);
        while (!e.done()) {
            const Tournament t = e.next();
            const Relation r = dominance_relation(t, t.all());
            oracle::Pairs edges;
            for (const auto& p : r.pairs()) {
                edges.insert(p);
            }
            CHECK(oracle::to_set(top_cycle(r)) == oracle::source_components(oracle::all(n), edges));
        }
    }
}

TEST_CASE("relation helpers", "[core]")
{
    const Tournament t = example5();
    Relation r(named(t, {"a", "b", "c"}));
    r.add(0, 1);
    r.add(1, 2);
    CHECK_THROWS_AS(r.add(0, 3), InputError);
    CHECK(r.pair_count() == 2);
    CHECK_FALSE(is_strongly_connected(r));
    CHECK(top_cycle(r) == named(t, {"a"}));
    const Relation closed = transitive_closure(r);
    CHECK(closed.contains(0, 2));
    CHECK(closed.contains(1, 1));
    r.add(2, 0);
    CHECK(is_strongly_connected(r));
    CHECK(top_cycle(r) == named(t, {"a", "b", "c"}));
    CHECK_THROWS_AS(top_cycle(Relation(AlternativeSet(3))), InputError);
}

TEST_CASE("DOT output lists one edge per dominant pair", "[core]")
{
    std::ostringstream out;
    write_dot(out, example5());
    const std::string dot = out.str();
    CHECK(dot.rfind("digraph", 0) == 0);
    std::size_t arrows = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) {
        ++arrows;
    }
    CHECK(arrows == 10);
}
