#pragma once

#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tourney {

// Text format:
//
//   tournament <n>
//   <name_0> <name_1> ... <name_{n-1}>
//   <row 0>
//   ...
//   <row n-1>
//
// Row i has n characters: '1' at column j iff i beats j, '0' iff j beats i, '-' on the diagonal.

inline void write_tournament(std::ostream& out, const Tournament& t)
{
    const std::size_t n = t.size();
    out << "tournament " << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out << (i ? " " : "") << t.name(i);
    }
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        std::string row(n, '0');
        row[i] = '-';
        for (std::size_t j : t.dominated_by(i)) {
            row[j] = '1';
        }
        out << row << '\n';
    }
}

inline std::string to_text(const Tournament& t)
{
    std::ostringstream out;
    write_tournament(out, t);
    return out.str();
}

inline Tournament read_tournament(std::istream& in)
{
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& what) -> InputError {
        return InputError("line " + std::to_string(line_no) + ": " + what);
    };
    auto next_line = [&](std::string& line) {
        ++line_no;
        if (!std::getline(in, line)) {
            throw fail("unexpected end of input");
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
    };

    std::string line;
    next_line(line);
    std::size_t n = 0;
    {
        std::istringstream header(line);
        std::string keyword;
        long long count = -1;
        std::string extra;
        if (!(header >> keyword >> count) || keyword != "tournament" || (header >> extra)) {
            throw fail("expected header 'tournament <n>'");
        }
        if (count < 1) {
            throw fail("tournament needs at least one alternative");
        }
        n = static_cast<std::size_t>(count);
    }

    next_line(line);
    std::vector<std::string> names;
    {
        std::istringstream row(line);
        for (std::string name; row >> name;) {
            names.push_back(name);
        }
        if (names.size() != n) {
            throw fail("expected " + std::to_string(n) + " names, found " + std::to_string(names.size()));
        }
    }

    std::vector<std::string> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        next_line(rows[i]);
        const std::string& row = rows[i];
        if (row.size() != n) {
            throw fail("row has " + std::to_string(row.size()) + " characters, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const char c = row[j];
            if (i == j ? c != '-' : (c != '0' && c != '1')) {
                throw fail(std::string("invalid character '") + c + "' at column " + std::to_string(j + 1));
            }
            if (j < i && (c == '1') == (rows[j][i] == '1')) {
                throw fail("entry for (" + names[i] + "," + names[j] + ") contradicts row " + std::to_string(j + 3));
            }
        }
    }

    std::vector<AlternativeSet> beats(n, AlternativeSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] == '1') {
                beats[i].insert(j);
            }
        }
    }
    try {
        return Tournament(std::move(names), std::move(beats));
    } catch (const InputError& e) {
        line_no = 2;
        throw fail(e.what());
    }
}

inline Tournament parse_tournament(const std::string& text)
{
    std::istringstream in(text);
    return read_tournament(in);
}

/// Graphviz digraph with one edge per dominant pair.
inline void write_dot(std::ostream& out, const Tournament& t)
{
    out << "digraph tournament {\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << "  n" << i << " [label=\"" << t.name(i) << "\"];\n";
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j : t.dominated_by(i)) {
            out << "  n" << i << " -> n" << j << ";\n";
        }
    }
    out << "}\n";
}

} // namespace tourney
