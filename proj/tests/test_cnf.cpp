#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace tourney;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_dimacs(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "no error";
}

} // namespace

TEST_CASE("three-clause formula parses into three clauses over four variables", "[reductions]")
{
    const Cnf f = testing_support::three_clause_formula();
    CHECK(f.variable_count() == 4);
    REQUIRE(f.clause_count() == 3);
    CHECK(f.clause(0)[0] == Literal{1, true});
    CHECK(f.clause(0)[1] == Literal{4, false});
    CHECK(f.clause(2)[2] == Literal{3, true});
    CHECK(to_dimacs(f) == "p cnf 4 3\n-1 4 2 0\n1 4 3 0\n1 2 -3 0\n");
    CHECK(to_dimacs(parse_dimacs(to_dimacs(f))) == to_dimacs(f));
}

TEST_CASE("DIMACS parser accepts comments and clauses split over lines", "[reductions]")
{
    const Cnf f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n3 0 -1 2 3\n0\n%\n");
    CHECK(f.clause_count() == 2);
    CHECK(f.clause(1)[0] == Literal{1, true});
}

TEST_CASE("DIMACS parser names the offending clause", "[reductions]")
{
    CHECK(error_of("p cnf 3 1\n1 2 0\n") == "clause 1: expected exactly 3 literals, found 2");
    CHECK(error_of("p cnf 3 2\n1 2 3 0\n1 -1 2 0\n") == "clause 2: complementary literals 1 and -1");
    CHECK(error_of("p cnf 3 2\n1 2 3 0\n2 2 3 0\n") == "clause 2: duplicate literal 2");
    CHECK(error_of("p cnf 3 1\n1 2 4 0\n").rfind("clause 1: variable 4", 0) == 0);
    CHECK(error_of("p cnf 3 1\n1 2 x 0\n") == "clause 1: bad literal 'x'");
    CHECK(error_of("p cnf 3 1\n1 2 3\n") == "clause 1: missing terminating 0");
    CHECK(error_of("p cnf 3 2\n1 2 3 0\n") == "header declares 2 clauses, found 1");
    CHECK(error_of("p dnf 3 1\n1 2 3 0\n").rfind("malformed DIMACS header", 0) == 0);
    CHECK(error_of("1 2 3 0\n") == "clause data before the 'p cnf' header");
    CHECK(error_of("") == "missing DIMACS header 'p cnf <variables> <clauses>'");
}

TEST_CASE("assignments evaluate clauses by literal sign", "[reductions]")
{
    const Cnf f = Cnf::from_ints(3, {{1, 2, 3}, {-1, -2, -3}});
    CHECK(f.satisfied_by({true, false, false}));
    CHECK_FALSE(f.satisfied_by({true, true, true}));
    CHECK_FALSE(f.satisfied_by({false, false, false}));
    CHECK_THROWS_AS(Cnf::from_ints(3, {{1, 0, 2}}), InputError);
    CHECK_THROWS_AS(Cnf(3, {}), InputError);
}
