#pragma once

#include <tourney/cnf.hpp>
#include <tourney/error.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

enum class RoleKind { Decision, Chain, Separator, Literal, Guard };

/// What an alternative stands for in a layered gadget tournament.
///
/// Decision is c_0 (named d), Chain is c_i, Separator is y_k on even levels, Literal is the
/// k-th literal x_i^k of clause i, Guard is the k-th member z_i^k of the guard triple that
/// follows clause i in the TEQ construction.
struct Role {
    RoleKind kind = RoleKind::Decision;
    std::size_t level = 0;    // chain index for d/c_i, level number (1-based) for U members
    std::size_t group = 0;    // clause i for x/z, k for y_k
    std::size_t position = 0; // k in 1..3 for triple members
    std::optional<Literal> literal;
};

struct Level {
    bool triple = false;
    std::vector<std::size_t> members; // u^1, u^2, u^3 order for triples
};

/// A tournament of the layered class: chain C = {c_0, ..., c_n} and levels U_1..U_n, where
/// odd levels are 3-cycles and even levels are single separating nodes.
struct TStarLayout {
    std::size_t size = 0;
    std::vector<Level> levels;      // levels[i-1] is U_i
    std::vector<std::size_t> chain; // chain[i] is c_i, chain[0] is d
    std::vector<Role> roles;        // indexed by alternative
    Tournament tournament;

    const Level& level(std::size_t i) const { return levels.at(i - 1); }
};

inline std::size_t decision_node(const TStarLayout& layout)
{
    if (layout.chain.empty()) {
        throw InputError("layout has no chain");
    }
    return layout.chain.front();
}

inline std::string role_label(const Role& role)
{
    switch (role.kind) {
    case RoleKind::Decision:
        return "d";
    case RoleKind::Chain:
        return "c" + std::to_string(role.level);
    case RoleKind::Separator:
        return "y" + std::to_string(role.group);
    case RoleKind::Literal:
        return "x" + std::to_string(role.group) + "^" + std::to_string(role.position) + "=" +
               std::to_string(role.literal ? role.literal->dimacs() : 0);
    case RoleKind::Guard:
        return "z" + std::to_string(role.group) + "^" + std::to_string(role.position);
    }
    return "?";
}

namespace detail {

class TStarBuilder {
public:
    explicit TStarBuilder(std::size_t size)
    {
        layout_.size = size;
        add_chain_node("d", RoleKind::Decision, 0);
        for (std::size_t i = 1; i <= size; ++i) {
            add_chain_node("c" + std::to_string(i), RoleKind::Chain, i);
        }
    }

    void add_separator(std::size_t k)
    {
        Level level;
        Role role{RoleKind::Separator, layout_.levels.size() + 1, k, 0, std::nullopt};
        level.members.push_back(add("y" + std::to_string(k), role));
        layout_.levels.push_back(std::move(level));
    }

    void add_triple(char prefix, RoleKind kind, std::size_t group, const std::optional<Clause>& literals)
    {
        Level level;
        level.triple = true;
        for (std::size_t k = 1; k <= 3; ++k) {
            Role role{kind, layout_.levels.size() + 1, group, k, std::nullopt};
            if (literals) {
                role.literal = (*literals)[k - 1];
            }
            level.members.push_back(add(std::string(1, prefix) + std::to_string(group) + "_" + std::to_string(k), role));
        }
        layout_.levels.push_back(std::move(level));
    }

    const Role& role(std::size_t a) const { return layout_.roles[a]; }
    std::size_t count() const { return names_.size(); }

    /// Fixes every pair that the layered class determines.
    void apply_class_rules()
    {
        beats_.assign(count(), std::vector<signed char>(count(), -1));
        const auto& chain = layout_.chain;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                set(chain[i], chain[j]);
            }
        }
        for (std::size_t li = 1; li <= layout_.levels.size(); ++li) {
            for (std::size_t u : layout_.level(li).members) {
                for (std::size_t j = 0; j < chain.size(); ++j) {
                    if (j == li) {
                        set(u, chain[j]);
                    } else {
                        set(chain[j], u);
                    }
                }
            }
        }
        for (std::size_t li = 1; li <= layout_.levels.size(); ++li) {
            for (std::size_t lj = li + 1; lj <= layout_.levels.size(); ++lj) {
                if (li % 2 == 0 || lj % 2 == 0) {
                    for (std::size_t u : layout_.level(li).members) {
                        for (std::size_t v : layout_.level(lj).members) {
                            set(u, v);
                        }
                    }
                }
            }
            const Level& level = layout_.level(li);
            if (level.triple) {
                set(level.members[0], level.members[1]);
                set(level.members[1], level.members[2]);
                set(level.members[2], level.members[0]);
            }
        }
    }

    void set(std::size_t winner, std::size_t loser)
    {
        beats_[winner][loser] = 1;
        beats_[loser][winner] = 0;
    }

    TStarLayout finish()
    {
        std::vector<AlternativeSet> rows(count(), AlternativeSet(count()));
        for (std::size_t i = 0; i < count(); ++i) {
            for (std::size_t j = 0; j < count(); ++j) {
                if (i != j && beats_[i][j] < 0) {
                    throw std::logic_error("gadget construction left pair (" + names_[i] + "," + names_[j] +
                                           ") unoriented");
                }
                if (beats_[i][j] == 1) {
                    rows[i].insert(j);
                }
            }
        }
        layout_.tournament = Tournament(names_, std::move(rows));
        return std::move(layout_);
    }

private:
    void add_chain_node(const std::string& name, RoleKind kind, std::size_t index)
    {
        layout_.chain.push_back(add(name, Role{kind, index, 0, 0, std::nullopt}));
    }

    std::size_t add(const std::string& name, const Role& role)
    {
        names_.push_back(name);
        layout_.roles.push_back(role);
        return names_.size() - 1;
    }

    TStarLayout layout_;
    std::vector<std::string> names_;
    std::vector<std::vector<signed char>> beats_;
};

/// Literal-vs-literal rule shared by both constructions, for x in an earlier clause than x':
/// the earlier literal wins unless x' is its complement.
inline void orient_literal_pair(TStarBuilder& b, std::size_t earlier, std::size_t later)
{
    const Literal& x = *b.role(earlier).literal;
    const Literal& y = *b.role(later).literal;
    if (y == x.complement()) {
        b.set(later, earlier);
    } else {
        b.set(earlier, later);
    }
}

} // namespace detail

/// Layered tournament of size 2m-1 whose decision node is a Banks winner iff the formula is
/// satisfiable: U_{2i-1} holds clause i's literals, U_{2i} the separator y_i.
inline TStarLayout build_banks_tournament(const Cnf& formula)
{
    const std::size_t m = formula.clause_count();
    if (m == 0) {
        throw InputError("formula has no clauses");
    }
    detail::TStarBuilder b(2 * m - 1);
    for (std::size_t i = 1; i <= m; ++i) {
        b.add_triple('x', RoleKind::Literal, i, formula.clause(i - 1));
        if (i < m) {
            b.add_separator(i);
        }
    }
    b.apply_class_rules();
    for (std::size_t a = 0; a < b.count(); ++a) {
        for (std::size_t c = 0; c < b.count(); ++c) {
            const Role& ra = b.role(a);
            const Role& rc = b.role(c);
            if (ra.kind == RoleKind::Literal && rc.kind == RoleKind::Literal && ra.group < rc.group) {
                detail::orient_literal_pair(b, a, c);
            }
        }
    }
    return b.finish();
}

/// Layered tournament of size 4m-3 whose decision node is in TEQ iff the formula is
/// satisfiable: U_{4i-3} holds clause i's literals, U_{4i-1} the guard triple Z_i (i < m),
/// and every even level a separator.
inline TStarLayout build_teq_tournament(const Cnf& formula)
{
    const std::size_t m = formula.clause_count();
    if (m == 0) {
        throw InputError("formula has no clauses");
    }
    const std::size_t n = 4 * m - 3;
    detail::TStarBuilder b(n);
    for (std::size_t j = 1; j <= n; ++j) {
        if (j % 2 == 0) {
            b.add_separator(j / 2);
        } else if (j % 4 == 1) {
            const std::size_t i = (j + 3) / 4;
            b.add_triple('x', RoleKind::Literal, i, formula.clause(i - 1));
        } else {
            b.add_triple('z', RoleKind::Guard, (j + 1) / 4, std::nullopt);
        }
    }
    b.apply_class_rules();
    for (std::size_t a = 0; a < b.count(); ++a) {
        for (std::size_t c = 0; c < b.count(); ++c) {
            const Role& ra = b.role(a);
            const Role& rc = b.role(c);
            if (ra.kind == RoleKind::Literal && rc.kind == RoleKind::Literal && ra.group < rc.group) {
                detail::orient_literal_pair(b, a, c);
            } else if (ra.kind == RoleKind::Literal && rc.kind == RoleKind::Guard) {
                const bool literal_wins =
                    ra.group < rc.group || (ra.group == rc.group && ra.position == rc.position);
                if (literal_wins) {
                    b.set(a, c);
                } else {
                    b.set(c, a);
                }
            } else if (ra.kind == RoleKind::Guard && rc.kind == RoleKind::Guard && ra.group < rc.group) {
                // not fixed by the construction; oriented downwards like every other omitted edge
                b.set(a, c);
            }
        }
    }
    return b.finish();
}

struct TStarViolation {
    std::size_t winner = 0; // alternative that should dominate (or first of the pair for structure errors)
    std::size_t loser = 0;
    std::string rule;       // "(i)".."(v)" or "structure"
    std::string message;
};

/// Checks the level/parity structure and every pair rule (i)-(v) of the layered class,
/// independently of how the layout was built.
inline std::vector<TStarViolation> validate_tstar(const TStarLayout& layout)
{
    std::vector<TStarViolation> out;
    const Tournament& t = layout.tournament;
    const std::size_t count = t.size();
    auto structure = [&out](const std::string& message) { out.push_back({0, 0, "structure", message}); };

    if (layout.size % 2 == 0) {
        structure("size " + std::to_string(layout.size) + " is not odd");
    }
    if (layout.levels.size() != layout.size) {
        structure("expected " + std::to_string(layout.size) + " levels, found " + std::to_string(layout.levels.size()));
    }
    if (layout.chain.size() != layout.size + 1) {
        structure("expected " + std::to_string(layout.size + 1) + " chain nodes, found " +
                  std::to_string(layout.chain.size()));
    }
    if (layout.roles.size() != count) {
        structure("role table does not cover every alternative");
    }

    // level_of: 0 for chain nodes, i for members of U_i; position within a triple.
    std::vector<int> seen(count, 0);
    std::vector<std::size_t> level_of(count, 0);
    std::vector<std::size_t> chain_index(count, 0);
    std::vector<std::size_t> position(count, 0);
    std::vector<bool> in_chain(count, false);
    for (std::size_t i = 0; i < layout.chain.size(); ++i) {
        const std::size_t c = layout.chain[i];
        if (c >= count) {
            structure("chain node index out of range");
            return out;
        }
        ++seen[c];
        in_chain[c] = true;
        chain_index[c] = i;
    }
    for (std::size_t li = 1; li <= layout.levels.size(); ++li) {
        const Level& level = layout.level(li);
        const bool odd = li % 2 == 1;
        if (level.triple != odd || level.members.size() != (odd ? 3U : 1U)) {
            structure("level " + std::to_string(li) + " must be a " + (odd ? "triple" : "singleton"));
        }
        for (std::size_t k = 0; k < level.members.size(); ++k) {
            const std::size_t u = level.members[k];
            if (u >= count) {
                structure("level member index out of range");
                return out;
            }
            ++seen[u];
            level_of[u] = li;
            position[u] = k;
        }
    }
    for (std::size_t a = 0; a < count; ++a) {
        if (seen[a] != 1) {
            structure("alternative '" + t.name(a) + "' appears " + std::to_string(seen[a]) + " times in the layout");
        }
    }
    if (!out.empty()) {
        return out;
    }
    if (!layout.chain.empty() && t.name(layout.chain[0]) != "d") {
        structure("decision node is not named d");
    }

    auto expect = [&](std::size_t winner, std::size_t loser, const char* rule) {
        if (!t.beats(winner, loser)) {
            out.push_back({winner, loser, rule, std::string(rule) + ": " + t.name(winner) + " should dominate " +
                                                    t.name(loser)});
        }
    };

    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (in_chain[a] && in_chain[b]) {
                if (chain_index[a] > chain_index[b]) {
                    expect(a, b, "(i)");
                } else {
                    expect(b, a, "(i)");
                }
            } else if (in_chain[a] != in_chain[b]) {
                const std::size_t c = in_chain[a] ? a : b;
                const std::size_t u = in_chain[a] ? b : a;
                if (chain_index[c] == level_of[u]) {
                    expect(u, c, "(ii)");
                } else {
                    expect(c, u, "(iii)");
                }
            } else if (level_of[a] != level_of[b]) {
                const std::size_t upper = level_of[a] < level_of[b] ? a : b;
                const std::size_t lower = upper == a ? b : a;
                if (level_of[upper] % 2 == 0 || level_of[lower] % 2 == 0) {
                    expect(upper, lower, "(iv)");
                }
            } else if (level_of[a] % 2 == 1) {
                if ((position[a] + 1) % 3 == position[b]) {
                    expect(a, b, "(v)");
                } else {
                    expect(b, a, "(v)");
                }
            }
        }
    }
    return out;
}

/// "name<TAB>role" per alternative, in index order.
inline void write_labels(std::ostream& out, const TStarLayout& layout)
{
    for (std::size_t a = 0; a < layout.tournament.size(); ++a) {
        out << layout.tournament.name(a) << '\t' << role_label(layout.roles[a]) << '\n';
    }
}

/// Graphviz output with the chain and each level rendered as a ranked cluster.
inline void write_layout_dot(std::ostream& out, const TStarLayout& layout)
{
    const Tournament& t = layout.tournament;
    out << "digraph tstar {\n  rankdir=TB;\n";
    out << "  subgraph cluster_chain {\n    label=\"C\";\n";
    for (std::size_t c : layout.chain) {
        out << "    n" << c << " [label=\"" << t.name(c) << "\"];\n";
    }
    out << "  }\n";
    for (std::size_t li = 1; li <= layout.levels.size(); ++li) {
        out << "  subgraph cluster_u" << li << " {\n    label=\"U" << li << "\";\n    rank=same;\n";
        for (std::size_t u : layout.level(li).members) {
            out << "    n" << u << " [label=\"" << t.name(u) << "\"];\n";
        }
        out << "  }\n";
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j : t.dominated_by(i)) {
            out << "  n" << i << " -> n" << j << ";\n";
        }
    }
    out << "}\n";
}

} // namespace tourney
