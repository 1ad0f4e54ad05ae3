#pragma once

#include <tourney/error.hpp>

#include <array>
#include <cstddef>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tourney {

/// A propositional literal over a 1-based DIMACS variable.
struct Literal {
    int variable = 1;
    bool negated = false;

    Literal complement() const { return {variable, !negated}; }
    int dimacs() const { return negated ? -variable : variable; }

    static Literal from_dimacs(int value) { return {std::abs(value), value < 0}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A 3CNF formula: an ordered list of clauses, each with three distinct literals and no
/// complementary pair.
class Cnf {
public:
    Cnf() = default;

    /// Throws InputError naming the first offending clause (1-based).
    Cnf(int variable_count, std::vector<Clause> clauses) : variables_(variable_count), clauses_(std::move(clauses))
    {
        if (variables_ < 1) {
            throw InputError("formula needs at least one variable");
        }
        if (clauses_.empty()) {
            throw InputError("formula needs at least one clause");
        }
        for (std::size_t i = 0; i < clauses_.size(); ++i) {
            check_clause(clauses_[i], i + 1);
        }
    }

    /// Convenience constructor from DIMACS-style integers, three per clause.
    static Cnf from_ints(int variable_count, const std::vector<std::array<int, 3>>& clauses)
    {
        std::vector<Clause> out;
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            Clause c;
            for (std::size_t k = 0; k < 3; ++k) {
                if (clauses[i][k] == 0) {
                    throw InputError("clause " + std::to_string(i + 1) + ": literal 0 is not allowed");
                }
                c[k] = Literal::from_dimacs(clauses[i][k]);
            }
            out.push_back(c);
        }
        return Cnf(variable_count, std::move(out));
    }

    int variable_count() const { return variables_; }
    std::size_t clause_count() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause& clause(std::size_t i) const { return clauses_.at(i); }

    /// True iff the assignment (index v-1 holds variable v) makes every clause true.
    bool satisfied_by(const std::vector<bool>& assignment) const
    {
        for (const Clause& c : clauses_) {
            bool sat = false;
            for (const Literal& l : c) {
                sat = sat || (assignment.at(static_cast<std::size_t>(l.variable - 1)) != l.negated);
            }
            if (!sat) {
                return false;
            }
        }
        return true;
    }

private:
    void check_clause(const Clause& c, std::size_t number) const
    {
        const std::string where = "clause " + std::to_string(number) + ": ";
        for (std::size_t k = 0; k < 3; ++k) {
            if (c[k].variable < 1 || c[k].variable > variables_) {
                throw InputError(where + "variable " + std::to_string(c[k].variable) + " out of range 1.." +
                                 std::to_string(variables_));
            }
            for (std::size_t l = 0; l < k; ++l) {
                if (c[k] == c[l]) {
                    throw InputError(where + "duplicate literal " + std::to_string(c[k].dimacs()));
                }
                if (c[k] == c[l].complement()) {
                    throw InputError(where + "complementary literals " + std::to_string(c[l].dimacs()) + " and " +
                                     std::to_string(c[k].dimacs()));
                }
            }
        }
    }

    int variables_ = 0;
    std::vector<Clause> clauses_;
};

/// Parses DIMACS CNF ("p cnf V C", clauses terminated by 0, 'c' comment lines). Every clause
/// must have exactly three literals.
inline Cnf read_dimacs(std::istream& in)
{
    std::string line;
    long long variables = -1;
    long long declared = -1;
    std::vector<Clause> clauses;
    std::vector<int> pending;

    auto finish_clause = [&]() {
        const std::string where = "clause " + std::to_string(clauses.size() + 1) + ": ";
        if (pending.size() != 3) {
            throw InputError(where + "expected exactly 3 literals, found " + std::to_string(pending.size()));
        }
        Clause c;
        for (std::size_t k = 0; k < 3; ++k) {
            c[k] = Literal::from_dimacs(pending[k]);
        }
        clauses.push_back(c);
        pending.clear();
    };

    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first[0] == 'c' || first[0] == '%') {
            continue;
        }
        if (first == "p") {
            std::string format;
            std::string extra;
            if (variables >= 0 || !(tokens >> format >> variables >> declared) || format != "cnf" ||
                variables < 1 || declared < 1 || (tokens >> extra)) {
                throw InputError("malformed DIMACS header '" + line + "'");
            }
            continue;
        }
        if (variables < 0) {
            throw InputError("clause data before the 'p cnf' header");
        }
        std::istringstream body(line);
        for (std::string token; body >> token;) {
            char* end = nullptr;
            const long value = std::strtol(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0') {
                throw InputError("clause " + std::to_string(clauses.size() + 1) + ": bad literal '" + token + "'");
            }
            if (value == 0) {
                finish_clause();
            } else {
                if (value > variables || -value > variables) {
                    throw InputError("clause " + std::to_string(clauses.size() + 1) + ": variable " +
                                     std::to_string(value < 0 ? -value : value) + " exceeds header count " +
                                     std::to_string(variables));
                }
                pending.push_back(static_cast<int>(value));
            }
        }
    }
    if (variables < 0) {
        throw InputError("missing DIMACS header 'p cnf <variables> <clauses>'");
    }
    if (!pending.empty()) {
        throw InputError("clause " + std::to_string(clauses.size() + 1) + ": missing terminating 0");
    }
    if (static_cast<long long>(clauses.size()) != declared) {
        throw InputError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(clauses.size()));
    }
    return Cnf(static_cast<int>(variables), std::move(clauses));
}

inline Cnf parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    return read_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Cnf& f)
{
    out << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
    for (const Clause& c : f.clauses()) {
        out << c[0].dimacs() << ' ' << c[1].dimacs() << ' ' << c[2].dimacs() << " 0\n";
    }
}

inline std::string to_dimacs(const Cnf& f)
{
    std::ostringstream out;
    write_dimacs(out, f);
    return out.str();
}

} // namespace tourney
