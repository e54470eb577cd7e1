#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aulist/engine.hpp"

namespace aulist {

struct ProblemFile {
  std::vector<Var> declarations;
  std::vector<std::pair<Expression, Expression>> equations;
};

// Line-oriented problem format. '#' starts a comment, 'vars:' lines declare
// comma-separated name:type pairs (type in int|string|atom|list), and each
// 'eq:' line holds one equation of colon-separated units. Units are decimal
// integers, double-quoted strings, the keyword 'empty', or declared
// identifiers; declarations precede use. Validates simplicity, list-variable
// linearity per equation, and variable disjointness across equations.
ProblemFile parse_problem(std::string_view text);

// Deterministic rendering, bindings sorted by variable name:
//   {x -> a:y'1, y -> empty}
std::string format_substitution(const Substitution& s);

// Parses "{x -> 1:2, y -> a:1}" against the given declarations. Primed names
// (x'3) are accepted as list variables, and negative integer literals are
// allowed here (host values), unlike in equations.
Substitution parse_substitution(std::string_view text, const std::vector<Var>& declared);

// GraphViz rendering of a derivation tree: nodes carry the equation and the
// accumulated substitution, edges the rule name; solved leaves are marked
// 'solved' and failed leaves carry their failure rule.
std::string to_dot(const DerivationTree& tree);

}  // namespace aulist
