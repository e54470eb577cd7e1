#include "aulist/oracle.hpp"

#include "aulist/error.hpp"

namespace aulist {

namespace {

std::vector<Unit> atom_pool(const GroundConfig& cfg) {
  std::vector<Unit> atoms;
  for (long long v : cfg.int_pool) atoms.push_back(Unit::int_const(v));
  for (const std::string& s : cfg.str_pool) atoms.push_back(Unit::str_const(s));
  return atoms;
}

std::vector<NormalExpr> choices_for(const Var& v, const GroundConfig& cfg) {
  std::vector<NormalExpr> out;
  switch (v.type) {
    case VarType::Int:
      for (long long i : cfg.int_pool) out.push_back(NormalExpr::single(Unit::int_const(i)));
      break;
    case VarType::String:
      for (const std::string& s : cfg.str_pool)
        out.push_back(NormalExpr::single(Unit::str_const(s)));
      break;
    case VarType::Atom:
      for (const Unit& a : atom_pool(cfg)) out.push_back(NormalExpr::single(a));
      break;
    case VarType::List: {
      std::vector<Unit> atoms = atom_pool(cfg);
      std::vector<NormalExpr> level{NormalExpr{}};
      out.push_back(NormalExpr{});
      for (std::size_t len = 1; len <= cfg.max_list_len; ++len) {
        std::vector<NormalExpr> next;
        for (const NormalExpr& prefix : level)
          for (const Unit& a : atoms) {
            next.push_back(prefix.concat(NormalExpr::single(a)));
            out.push_back(next.back());
          }
        level = std::move(next);
      }
      break;
    }
  }
  return out;
}

}  // namespace

GroundStream::GroundStream(const VarSet& vars, const GroundConfig& cfg)
    : vars_(vars.begin(), vars.end()) {
  if (cfg.int_pool.empty() || cfg.str_pool.empty())
    throw InputError("ground enumeration needs non-empty integer and string pools");
  for (const Var& v : vars_) choices_.push_back(choices_for(v, cfg));
  index_.assign(vars_.size(), 0);
}

unsigned long long GroundStream::total() const {
  unsigned long long n = 1;
  for (const auto& c : choices_) n *= static_cast<unsigned long long>(c.size());
  return n;
}

std::optional<Substitution> GroundStream::next() {
  if (exhausted_) return std::nullopt;
  Substitution out;
  for (std::size_t i = 0; i < vars_.size(); ++i) out.bind(vars_[i], choices_[i][index_[i]]);
  // odometer, rightmost digit fastest
  std::size_t i = vars_.size();
  while (i > 0) {
    --i;
    if (++index_[i] < choices_[i].size()) return out;
    index_[i] = 0;
  }
  exhausted_ = true;
  return out;
}

std::vector<Substitution> ground_unifiers(const std::vector<Equation>& eqs,
                                          const GroundConfig& cfg) {
  VarSet vars;
  for (const Equation& eq : eqs) {
    VarSet lv = variables(eq.lhs), rv = variables(eq.rhs);
    vars.insert(lv.begin(), lv.end());
    vars.insert(rv.begin(), rv.end());
  }
  std::vector<Substitution> out;
  GroundStream stream(vars, cfg);
  while (auto candidate = stream.next()) {
    bool unifies = true;
    for (const Equation& eq : eqs)
      if (!au_equal(apply(*candidate, eq.lhs), apply(*candidate, eq.rhs))) {
        unifies = false;
        break;
      }
    if (unifies) out.push_back(std::move(*candidate));
  }
  return out;
}

std::vector<Substitution> ground_unifiers(const NormalExpr& lhs, const NormalExpr& rhs,
                                          const GroundConfig& cfg) {
  return ground_unifiers(std::vector<Equation>{{lhs, rhs}}, cfg);
}

CompletenessVerdict check_completeness(const UnifierSet& set, const std::vector<Equation>& eqs,
                                       const GroundConfig& cfg) {
  CompletenessVerdict verdict;
  VarSet vars;
  for (const Equation& eq : eqs) {
    VarSet lv = variables(eq.lhs), rv = variables(eq.rhs);
    vars.insert(lv.begin(), lv.end());
    vars.insert(rv.begin(), rv.end());
  }
  GroundStream stream(vars, cfg);
  while (auto candidate = stream.next()) {
    bool unifies = true;
    for (const Equation& eq : eqs)
      if (!au_equal(apply(*candidate, eq.lhs), apply(*candidate, eq.rhs))) {
        unifies = false;
        break;
      }
    if (!unifies) continue;
    ++verdict.checked;
    bool covered = false;
    for (const Substitution& sigma : set.unifiers)
      if (more_general(sigma, *candidate, set.problem_vars)) {
        covered = true;
        break;
      }
    if (!covered) {
      verdict.complete = false;
      verdict.counterexample = std::move(*candidate);
      return verdict;
    }
  }
  return verdict;
}

CompletenessVerdict check_completeness(const UnifierSet& set, const NormalExpr& lhs,
                                       const NormalExpr& rhs, const GroundConfig& cfg) {
  return check_completeness(set, std::vector<Equation>{{lhs, rhs}}, cfg);
}

}  // namespace aulist
