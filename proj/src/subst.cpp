#include "aulist/subst.hpp"

#include "aulist/error.hpp"

namespace aulist {

Substitution::Substitution(std::initializer_list<std::pair<Var, NormalExpr>> bindings) {
  for (const auto& [v, e] : bindings) bind(v, e);
}

void Substitution::bind(const Var& v, NormalExpr value) {
  if (value.length() == 1 && value.head().is_var() && value.head().as_var() == v)
    return;  // identity
  if (!subtype_le(type_of(value), v.type))
    throw Error("ill-typed binding: " + v.name + " -> " + to_string(value) +
                " (" + std::string(to_string(type_of(value))) + " above " +
                std::string(to_string(v.type)) + ")");
  auto same_name = bindings_.lower_bound(Var{v.name, VarType::Int});
  if (same_name != bindings_.end() && same_name->first.name == v.name &&
      same_name->first.type != v.type)
    throw Error("variable '" + v.name + "' bound at two types");
  bindings_[v] = std::move(value);
}

const NormalExpr* Substitution::lookup(const Var& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

NormalExpr Substitution::get(const Var& v) const {
  if (const NormalExpr* e = lookup(v)) return *e;
  return NormalExpr::single(Unit::var(v));
}

VarSet Substitution::domain() const {
  VarSet out;
  for (const auto& [v, e] : bindings_) out.insert(v);
  return out;
}

VarSet Substitution::range_variables() const {
  VarSet out;
  for (const auto& [v, e] : bindings_) {
    VarSet vs = variables(e);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

NormalExpr apply(const Substitution& s, const NormalExpr& e) {
  std::vector<Unit> out;
  out.reserve(e.length());
  for (const Unit& u : e.units()) {
    if (u.is_var()) {
      if (const NormalExpr* image = s.lookup(u.as_var())) {
        out.insert(out.end(), image->units().begin(), image->units().end());
        continue;
      }
    }
    out.push_back(u);
  }
  return NormalExpr(std::move(out));
}

NormalExpr apply(const Substitution& s, const Expression& e) {
  return apply(s, normalize(e));
}

NormalExpr apply(const Substitution& s, const Var& v) { return s.get(v); }

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [v, e] : s1) out.bind(v, apply(s2, e));
  for (const auto& [v, e] : s2)
    if (!s1.lookup(v)) out.bind(v, e);
  return out;
}

bool is_idempotent(const Substitution& s) {
  VarSet dom = s.domain();
  for (const Var& v : s.range_variables())
    if (dom.count(v)) return false;
  return true;
}

Substitution union_disjoint(const Substitution& s1, const Substitution& s2) {
  for (const auto& [v, e] : s2)
    if (s1.lookup(v))
      throw InputError("union of substitutions with overlapping domains: '" +
                       v.name + "' is bound by both");
  VarSet dom1 = s1.domain(), dom2 = s2.domain();
  for (const Var& v : s1.range_variables())
    if (dom2.count(v))
      throw InputError("substitution range mentions the other domain: '" + v.name + "'");
  for (const Var& v : s2.range_variables())
    if (dom1.count(v))
      throw InputError("substitution range mentions the other domain: '" + v.name + "'");
  Substitution out = s1;
  for (const auto& [v, e] : s2) out.bind(v, e);
  return out;
}

Substitution restrict_to(const Substitution& s, const VarSet& keep) {
  Substitution out;
  for (const auto& [v, e] : s)
    if (keep.count(v)) out.bind(v, e);
  return out;
}

}  // namespace aulist
