#pragma once

#include <tourney/tourney.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace testing_support {

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(TOURNEY_DATA_DIR) + "/" + name; }

inline tourney::Tournament example5() { return tourney::parse_tournament(slurp(data_path("example5.tournament"))); }

inline tourney::Cnf three_clause_formula() { return tourney::parse_dimacs(slurp(data_path("three_clauses.cnf"))); }

inline tourney::AlternativeSet named(const tourney::Tournament& t, std::initializer_list<const char*> names)
{
    tourney::AlternativeSet s(t.size());
    for (const char* n : names) {
        s.insert(t.require_index(n));
    }
    return s;
}

} // namespace testing_support
