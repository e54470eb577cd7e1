#include <functional>

#include "aulist/engine.hpp"
#include "aulist/error.hpp"
#include "aulist/subst.hpp"

namespace aulist {

namespace {

NormalExpr freeze(const NormalExpr& e) {
  std::vector<Unit> out;
  out.reserve(e.length());
  for (const Unit& u : e.units())
    out.push_back(u.is_var() ? Unit::frozen(u.as_var()) : u);
  return NormalExpr(std::move(out));
}

NormalExpr unfreeze(const NormalExpr& e) {
  std::vector<Unit> out;
  out.reserve(e.length());
  for (const Unit& u : e.units())
    out.push_back(u.kind() == Unit::Kind::Frozen ? Unit::var(u.as_var()) : u);
  return NormalExpr(std::move(out));
}

Substitution unfreeze(const Substitution& s) {
  Substitution out;
  for (const auto& [v, e] : s) out.bind(v, unfreeze(e));  // identities vanish
  return out;
}

}  // namespace

std::optional<Substitution> more_general(const Substitution& s, const Substitution& t,
                                         const VarSet& on) {
  // One matching problem per comparison variable: the image under s against
  // the image under t with t's variables frozen. Only s-side variables can
  // be instantiated, so each solution is a partial witness.
  std::vector<std::vector<Substitution>> branches;
  for (const Var& x : on) {
    UnifyResult r = unify(apply(s, x), freeze(apply(t, x)));
    if (r.unifiers.unifiers.empty()) return std::nullopt;
    branches.push_back(std::move(r.unifiers.unifiers));
  }

  std::optional<Substitution> found;
  std::function<bool(std::size_t, const Substitution&)> search =
      [&](std::size_t i, const Substitution& acc) -> bool {
    if (i == branches.size()) {
      Substitution witness = unfreeze(acc);
      for (const Var& x : on)
        if (!au_equal(apply(witness, apply(s, x)), apply(t, x))) return false;
      found = std::move(witness);
      return true;
    }
    for (const Substitution& candidate : branches[i]) {
      Substitution merged = acc;
      bool consistent = true;
      for (const auto& [v, e] : candidate) {
        if (const NormalExpr* have = merged.lookup(v)) {
          if (*have != e) {
            consistent = false;
            break;
          }
        } else {
          merged.bind(v, e);
        }
      }
      if (consistent && search(i + 1, merged)) return true;
    }
    return false;
  };
  if (search(0, Substitution{})) return found;
  return std::nullopt;
}

}  // namespace aulist
