#pragma once

#include <optional>
#include <vector>

#include "aulist/engine.hpp"

namespace aulist {

// Bounded ground universe for brute-force checks. The default keeps the
// assignment space small enough for exhaustive enumeration at desk scale
// while still separating the interesting cases.
struct GroundConfig {
  std::vector<long long> int_pool{1, 2};
  std::vector<std::string> str_pool{"a"};
  std::size_t max_list_len = 2;
};

// Lazily enumerates every well-typed ground assignment over `vars`: integer
// variables range over the int pool, string variables over the string pool,
// atom variables over both, and list variables over all atom sequences up to
// max_list_len, including the empty one.
class GroundStream {
 public:
  GroundStream(const VarSet& vars, const GroundConfig& cfg);

  std::optional<Substitution> next();
  // Exact number of assignments: the product of the per-variable choices.
  unsigned long long total() const;

 private:
  std::vector<Var> vars_;
  std::vector<std::vector<NormalExpr>> choices_;
  std::vector<std::size_t> index_;
  bool exhausted_ = false;
};

std::vector<Substitution> ground_unifiers(const NormalExpr& lhs, const NormalExpr& rhs,
                                          const GroundConfig& cfg);
// Ground solutions of a conjunction of equations.
std::vector<Substitution> ground_unifiers(const std::vector<Equation>& eqs,
                                          const GroundConfig& cfg);

struct CompletenessVerdict {
  bool complete = true;
  std::optional<Substitution> counterexample;  // first uncovered ground unifier
  unsigned long long checked = 0;              // ground unifiers examined
};

// Every ground unifier must be an instance of some member of `set` on the
// problem variables; enumeration stops at the first counterexample.
CompletenessVerdict check_completeness(const UnifierSet& set, const NormalExpr& lhs,
                                       const NormalExpr& rhs, const GroundConfig& cfg);
CompletenessVerdict check_completeness(const UnifierSet& set, const std::vector<Equation>& eqs,
                                       const GroundConfig& cfg);

}  // namespace aulist
