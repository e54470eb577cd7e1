#pragma once

#include <map>
#include <optional>
#include <string>

#include "aulist/expr.hpp"

namespace aulist {

// A finite, well-typed map from variables to normalized expressions.
// Invariants: every binding x -> e satisfies type_of(e) <= type(x), and no
// identity binding x -> x is ever stored.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Var, NormalExpr>> bindings);

  // Inserts or replaces a binding; drops identities; throws Error on an
  // ill-typed value or a rebinding of the same name at another type.
  void bind(const Var& v, NormalExpr value);

  const NormalExpr* lookup(const Var& v) const;
  // The image of v: its binding, or v itself.
  NormalExpr get(const Var& v) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  VarSet domain() const;
  // Variables occurring in the bound expressions.
  VarSet range_variables() const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<Var, NormalExpr> bindings_;
};

// Simultaneous replacement of every variable by its image; the result is
// normalized.
NormalExpr apply(const Substitution& s, const NormalExpr& e);
NormalExpr apply(const Substitution& s, const Expression& e);
NormalExpr apply(const Substitution& s, const Var& v);

// Composition: x(compose(s1, s2)) = apply(s2, s1(x)) for x in Dom(s1), and
// s2(x) otherwise. Identity bindings produced along the way are dropped.
Substitution compose(const Substitution& s1, const Substitution& s2);

// Dom and VRan do not intersect.
bool is_idempotent(const Substitution& s);

// Plain union of substitutions with disjoint domains; the ranges must not
// mention the other side's domain. Throws InputError otherwise.
Substitution union_disjoint(const Substitution& s1, const Substitution& s2);

// Keeps only the bindings of variables in `keep`.
Substitution restrict_to(const Substitution& s, const VarSet& keep);

// Decides the generality preorder s <= t on the variable set `on`: returns an
// instantiation w with apply(w, apply(s, x)) AU-equal to apply(t, x) for every
// x in `on`, if one exists. Implemented by AU-matching: each apply(s, x) is
// unified against apply(t, x) with the target's variables frozen, and the
// per-variable solutions are merged, exploring all branch combinations.
// The returned witness is re-checked against its defining property.
std::optional<Substitution> more_general(const Substitution& s,
                                         const Substitution& t,
                                         const VarSet& on);

}  // namespace aulist
