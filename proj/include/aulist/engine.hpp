#pragma once

#include <deque>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "aulist/expr.hpp"
#include "aulist/subst.hpp"

namespace aulist {

// The fourteen transformation rules. Matching is at the heads of a normalized
// equation; each rule yields at most one child per problem.
enum class Rule : std::uint8_t {
  Remove,
  Decomp1,
  Decomp1P,
  Decomp2,
  Decomp2P,
  Decomp3,
  Decomp4,
  Subst1,
  Subst2,
  Subst3,
  Orient1,
  Orient2,
  Orient3,
  Orient4,
};

enum class FailRule : std::uint8_t { Occur, Clash1, Clash2, Clash3, Clash4 };

std::string_view to_string(Rule r);
std::string_view to_string(FailRule r);
std::optional<Rule> rule_from(std::string_view name);

struct Equation {
  NormalExpr lhs, rhs;
  bool operator==(const Equation&) const = default;
};

// One search state: an equation plus the substitution accumulated so far.
// Exactly one of these holds: active (an equation still to be solved), solved
// (the equation has been discharged), or failed (a failure rule fired on the
// equation, which is kept for reporting).
struct Problem {
  Equation eq;
  Substitution accumulated;
  bool solved = false;
  std::optional<FailRule> failed;

  bool active() const { return !solved && !failed; }
};

// Lexicographic termination measure of a problem. Solved problems measure
// (0,0,0,0). n3 flags a mis-oriented equation whose head type is strictly
// below the right-hand head type, which is what the Orient rules repair.
struct Measure {
  std::size_t n1 = 0;  // term size of both sides
  std::size_t n2 = 0;  // 0 iff the left side starts with a variable
  std::size_t n3 = 0;  // 1 iff type(left head) < type(right head)
  std::size_t n4 = 0;  // term size of the left side
  auto operator<=>(const Measure&) const = default;
};

Measure measure(const Problem& p);

// Deterministic supply of fresh list variables: root base name plus a primed
// global counter ("x" -> "x'7"). The apostrophe is reserved; user identifiers
// cannot contain it.
class FreshVars {
 public:
  Var next(const Var& base);
  // Bumps the counter past any primed suffix already present.
  void seed(const VarSet& vars);

 private:
  unsigned long counter_ = 0;
};

// First applicable failure rule, probed in the order Occur, Clash1, Clash2,
// Clash3, Clash4.
std::optional<FailRule> check_failure(const Equation& eq);

// All rule instances applicable to an active problem, in Rule order, each
// with its (normalized) conclusion. Fresh list variables are drawn from the
// supplied source.
std::vector<std::pair<Rule, Problem>> successors(const Problem& p, FreshVars& fresh);

// Throws InputError naming the violated assumption: a side that is not
// simple, a list variable occurring on both sides, or one name used at two
// types. Non-list variables may be shared between the sides.
void validate_problem(const NormalExpr& lhs, const NormalExpr& rhs);

struct DerivationTree {
  struct Node {
    Problem problem;
    int parent = -1;               // -1 for the root
    std::optional<Rule> via;       // rule labelling the edge from the parent
    std::vector<int> children;
  };
  std::vector<Node> nodes;

  std::size_t solved_leaves() const;
  std::size_t failed_leaves() const;
};

struct UnifierSet {
  std::vector<Substitution> unifiers;  // discovery order, duplicates removed
  VarSet problem_vars;
};

struct UnifyOptions {
  std::size_t node_cap = 100000;
};

struct UnifyResult {
  UnifierSet unifiers;
  DerivationTree tree;
};

// Breadth-first search of the derivation tree under the transformation rules,
// failure rules taking precedence. Solved nodes contribute their accumulated
// substitution restricted to the problem variables; duplicates equal up to
// renaming of fresh variables are dropped. Deterministic: fixed rule order,
// fixed fresh-variable supply, FIFO queue.
UnifyResult unify(const NormalExpr& lhs, const NormalExpr& rhs,
                  const UnifyOptions& options = {});
UnifyResult unify(const Expression& lhs, const Expression& rhs,
                  const UnifyOptions& options = {});

// Solves a conjunction of pairwise variable-disjoint equations and combines
// the per-equation answers by disjoint union (cross product). The empty
// system has the single empty solution.
UnifierSet solve_system(const std::vector<std::pair<Expression, Expression>>& eqs,
                        const UnifyOptions& options = {});

// Greedily removes every unifier that is an instance of another retained one;
// the survivors are pairwise incomparable under the generality preorder on
// the problem variables.
UnifierSet minimize(const UnifierSet& set);

}  // namespace aulist
