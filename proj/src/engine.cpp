#include "aulist/engine.hpp"

#include <map>
#include <set>
#include <string>

#include "aulist/error.hpp"

namespace aulist {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::Remove: return "Remove";
    case Rule::Decomp1: return "Decomp1";
    case Rule::Decomp1P: return "Decomp1'";
    case Rule::Decomp2: return "Decomp2";
    case Rule::Decomp2P: return "Decomp2'";
    case Rule::Decomp3: return "Decomp3";
    case Rule::Decomp4: return "Decomp4";
    case Rule::Subst1: return "Subst1";
    case Rule::Subst2: return "Subst2";
    case Rule::Subst3: return "Subst3";
    case Rule::Orient1: return "Orient1";
    case Rule::Orient2: return "Orient2";
    case Rule::Orient3: return "Orient3";
    case Rule::Orient4: return "Orient4";
  }
  return "?";
}

std::string_view to_string(FailRule r) {
  switch (r) {
    case FailRule::Occur: return "Occur";
    case FailRule::Clash1: return "Clash1";
    case FailRule::Clash2: return "Clash2";
    case FailRule::Clash3: return "Clash3";
    case FailRule::Clash4: return "Clash4";
  }
  return "?";
}

std::optional<Rule> rule_from(std::string_view name) {
  static const Rule all[] = {
      Rule::Remove,  Rule::Decomp1, Rule::Decomp1P, Rule::Decomp2, Rule::Decomp2P,
      Rule::Decomp3, Rule::Decomp4, Rule::Subst1,   Rule::Subst2,  Rule::Subst3,
      Rule::Orient1, Rule::Orient2, Rule::Orient3,  Rule::Orient4};
  for (Rule r : all)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

namespace {

// Head type of a side; an empty side reads as the empty constant (a
// non-variable of list type).
VarType head_type(const NormalExpr& e) {
  return e.is_empty() ? VarType::List : e.head().type();
}

// Units admissible as the 'a'/'b' symbols of the rules: rigid symbols and
// variables below list type. A frozen list variable counts as rigid.
bool a_class(const Unit& u) {
  return u.is_rigid() || subtype_le(u.type(), VarType::Atom);
}

bool list_var_head(const NormalExpr& e) {
  return !e.is_empty() && e.head().is_var() && e.head().type() == VarType::List;
}

}  // namespace

Measure measure(const Problem& p) {
  if (p.solved) return Measure{};
  const NormalExpr& l = p.eq.lhs;
  const NormalExpr& r = p.eq.rhs;
  Measure m;
  m.n1 = term_size(l) + term_size(r);
  m.n2 = (!l.is_empty() && l.head().is_var()) ? 0 : 1;
  m.n3 = compare_types(head_type(l), head_type(r)) == TypeOrder::Less ? 1 : 0;
  m.n4 = term_size(l);
  return m;
}

Var FreshVars::next(const Var& base) {
  std::string root = base.name.substr(0, base.name.find('\''));
  return Var{root + "'" + std::to_string(++counter_), VarType::List};
}

void FreshVars::seed(const VarSet& vars) {
  for (const Var& v : vars) {
    auto pos = v.name.rfind('\'');
    if (pos == std::string::npos || pos + 1 >= v.name.size()) continue;
    unsigned long n = 0;
    bool digits = true;
    for (std::size_t i = pos + 1; i < v.name.size(); ++i) {
      if (v.name[i] < '0' || v.name[i] > '9') { digits = false; break; }
      n = n * 10 + static_cast<unsigned long>(v.name[i] - '0');
    }
    if (digits && n > counter_) counter_ = n;
  }
}

std::optional<FailRule> check_failure(const Equation& eq) {
  const NormalExpr& l = eq.lhs;
  const NormalExpr& r = eq.rhs;
  if (l.length() == 1 && l.head().is_var()) {
    Var x = l.head().as_var();
    if (x.type == VarType::List && r != l && variables(r).count(x))
      return FailRule::Occur;
  }
  if (!l.is_empty() && !r.is_empty() && l.head().is_rigid() && r.head().is_rigid() &&
      l.head() != r.head())
    return FailRule::Clash1;
  if (r.is_empty() && !l.is_empty() && a_class(l.head())) return FailRule::Clash2;
  if (l.is_empty() && !r.is_empty() && a_class(r.head())) return FailRule::Clash3;
  if (l.length() == 1 && l.head().is_var() &&
      compare_types(l.head().type(), type_of(r)) == TypeOrder::Incomparable)
    return FailRule::Clash4;
  return std::nullopt;
}

std::vector<std::pair<Rule, Problem>> successors(const Problem& p, FreshVars& fresh) {
  std::vector<std::pair<Rule, Problem>> out;
  if (!p.active()) return out;
  const NormalExpr& l = p.eq.lhs;
  const NormalExpr& r = p.eq.rhs;

  auto child = [&](Rule rule, Equation eq, const Substitution& binding, bool solved = false) {
    out.emplace_back(rule, Problem{std::move(eq), compose(p.accumulated, binding), solved,
                                   std::nullopt});
  };
  auto single_binding = [](const Var& v, NormalExpr value) {
    Substitution b;
    b.bind(v, std::move(value));
    return b;
  };
  // A right side that is one bare list variable is a mis-oriented problem;
  // it is handled by Orient2/Orient3 (and Decomp2/Decomp2'), never consumed
  // head-first.
  const bool bare_list_rhs = r.length() == 1 && r.head().is_var() &&
                             r.head().type() == VarType::List;

  // Remove: a trivial equation is discharged.
  if (l == r) child(Rule::Remove, Equation{}, {}, true);

  // Decomp1: a leading list variable takes the right-hand head symbol.
  if (l.length() >= 2 && list_var_head(l) && !r.is_empty() && !bare_list_rhs)
    child(Rule::Decomp1, Equation{l.tail(), r.tail()},
          single_binding(l.head().as_var(), NormalExpr::single(r.head())));

  // Decomp1': a leading variable below list type takes a head of smaller or
  // equal type; the binding is applied to the remainder, since such a
  // variable may recur.
  if (l.length() >= 2 && l.head().is_var() && subtype_le(l.head().type(), VarType::Atom) &&
      !r.is_empty() && a_class(r.head()) && subtype_le(r.head().type(), l.head().type())) {
    Substitution b = single_binding(l.head().as_var(), NormalExpr::single(r.head()));
    child(Rule::Decomp1P, Equation{apply(b, l.tail()), apply(b, r.tail())}, b);
  }

  // Decomp2 / Decomp2': one list variable starts with the other.
  if (l.length() >= 2 && list_var_head(l) && list_var_head(r)) {
    {
      Var xp = fresh.next(l.head().as_var());
      Substitution b = single_binding(l.head().as_var(), NormalExpr({r.head(), Unit::var(xp)}));
      child(Rule::Decomp2, Equation{NormalExpr::single(Unit::var(xp)).concat(l.tail()), r.tail()}, b);
    }
    {
      Var yp = fresh.next(r.head().as_var());
      Substitution b = single_binding(r.head().as_var(), NormalExpr({l.head(), Unit::var(yp)}));
      child(Rule::Decomp2P, Equation{l.tail(), NormalExpr::single(Unit::var(yp)).concat(r.tail())}, b);
    }
  }

  // Decomp3: identical head symbols cancel.
  if (!l.is_empty() && !r.is_empty() && l.head() == r.head())
    child(Rule::Decomp3, Equation{l.tail(), r.tail()}, {});

  // Decomp4: a lone non-list variable absorbs the head of a two-symbol right
  // side whose trailing list variable must then be empty.
  if (l.length() == 1 && l.head().is_var() && subtype_le(l.head().type(), VarType::Atom) &&
      r.length() == 2 && a_class(r.units()[0]) &&
      subtype_le(r.units()[0].type(), l.head().type()) && r.units()[1].is_var() &&
      r.units()[1].type() == VarType::List)
    child(Rule::Decomp4, Equation{NormalExpr{}, NormalExpr::single(r.units()[1])},
          single_binding(l.head().as_var(), NormalExpr::single(r.units()[0])));

  // Subst1: a lone variable is solved by the whole right side. The occurs
  // restriction does not bite on the trivial x = x.
  if (l.length() == 1 && l.head().is_var()) {
    Var x = l.head().as_var();
    if ((r == l || !variables(r).count(x)) && subtype_le(type_of(r), x.type))
      child(Rule::Subst1, Equation{}, single_binding(x, r), true);
  }

  // Subst2: a leading list variable vanishes.
  if (l.length() >= 2 && list_var_head(l) && !bare_list_rhs)
    child(Rule::Subst2, Equation{l.tail(), r}, single_binding(l.head().as_var(), NormalExpr{}));

  // Subst3: a leading list variable starts with the right-hand head symbol.
  if (l.length() >= 2 && list_var_head(l) && !r.is_empty() && !bare_list_rhs &&
      a_class(r.head())) {
    Var xp = fresh.next(l.head().as_var());
    Substitution b = single_binding(l.head().as_var(), NormalExpr({r.head(), Unit::var(xp)}));
    child(Rule::Subst3, Equation{NormalExpr::single(Unit::var(xp)).concat(l.tail()), r.tail()}, b);
  }

  // Orient1: constant head left, variable head right.
  if (!l.is_empty() && l.head().is_rigid() && !r.is_empty() && r.head().is_var())
    child(Rule::Orient1, Equation{r, l}, {});

  // Orient2: a lone equal-typed variable moves left.
  if (l.length() >= 2 && l.head().is_var() && r.length() == 1 && r.head().is_var() &&
      l.head().type() == r.head().type())
    child(Rule::Orient2, Equation{r, l}, {});

  // Orient3: the strictly larger-typed variable head moves left.
  if (!l.is_empty() && l.head().is_var() && !r.is_empty() && r.head().is_var() &&
      compare_types(l.head().type(), r.head().type()) == TypeOrder::Less)
    child(Rule::Orient3, Equation{r, l}, {});

  // Orient4: a list-variable side moves left of empty.
  if (l.is_empty() && !r.is_empty() && r.head().is_var() && r.head().type() == VarType::List)
    child(Rule::Orient4, Equation{r, l}, {});

  return out;
}

void validate_problem(const NormalExpr& lhs, const NormalExpr& rhs) {
  auto list_var_occurrences = [](const NormalExpr& e) {
    std::size_t n = 0;
    for (const Unit& u : e.units())
      if (u.is_var() && u.type() == VarType::List) ++n;
    return n;
  };
  if (list_var_occurrences(lhs) > 1)
    throw InputError("left-hand side '" + to_string(lhs) +
                     "' is not simple: more than one list variable occurrence");
  if (list_var_occurrences(rhs) > 1)
    throw InputError("right-hand side '" + to_string(rhs) +
                     "' is not simple: more than one list variable occurrence");
  VarSet rv = variables(rhs);
  for (const Var& v : variables(lhs))
    if (v.type == VarType::List && rv.count(v))
      throw InputError("list variable '" + v.name + "' occurs on both sides of the equation");
  std::map<std::string, VarType> types;
  for (const NormalExpr* side : {&lhs, &rhs})
    for (const Unit& u : side->units())
      if (u.is_var()) {
        auto [it, inserted] = types.emplace(u.text(), u.type());
        if (!inserted && it->second != u.type())
          throw InputError("variable '" + u.text() + "' is used at two types");
      }
}

std::size_t DerivationTree::solved_leaves() const {
  std::size_t n = 0;
  for (const Node& node : nodes)
    if (node.problem.solved) ++n;
  return n;
}

std::size_t DerivationTree::failed_leaves() const {
  std::size_t n = 0;
  for (const Node& node : nodes)
    if (node.problem.failed) ++n;
  return n;
}

namespace {

// Canonical rendering with fresh (non-problem) variables renamed by first
// occurrence; two unifiers equal up to fresh renaming get the same key.
std::string dedup_key(const Substitution& s, const VarSet& problem_vars) {
  std::map<std::string, std::string> renamed;
  int counter = 0;
  std::string out;
  for (const auto& [v, e] : s) {
    out += v.name;
    out += '\x1d';
    for (const Unit& u : e.units()) {
      if (u.is_var() && !problem_vars.count(u.as_var())) {
        auto it = renamed.find(u.text());
        if (it == renamed.end())
          it = renamed.emplace(u.text(), "%" + std::to_string(++counter)).first;
        out += it->second;
      } else {
        out += to_string(u);
      }
      out += '\x1e';
    }
    out += '\x1f';
  }
  return out;
}

}  // namespace

UnifyResult unify(const NormalExpr& lhs, const NormalExpr& rhs, const UnifyOptions& options) {
  validate_problem(lhs, rhs);
  UnifyResult result;
  VarSet problem_vars = variables(lhs);
  {
    VarSet rv = variables(rhs);
    problem_vars.insert(rv.begin(), rv.end());
  }
  result.unifiers.problem_vars = problem_vars;

  FreshVars fresh;
  fresh.seed(problem_vars);

  auto& nodes = result.tree.nodes;
  nodes.push_back({Problem{Equation{lhs, rhs}, {}, false, std::nullopt}, -1, std::nullopt, {}});
  std::deque<int> queue;
  queue.push_back(0);
  std::set<std::string> seen;

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    Problem current = nodes[static_cast<std::size_t>(id)].problem;
    if (current.solved) {
      Substitution answer = restrict_to(current.accumulated, problem_vars);
      if (seen.insert(dedup_key(answer, problem_vars)).second)
        result.unifiers.unifiers.push_back(std::move(answer));
      continue;
    }
    if (auto fail = check_failure(current.eq)) {
      nodes[static_cast<std::size_t>(id)].problem.failed = fail;
      continue;
    }
    Measure parent = measure(current);
    for (auto& [rule, child] : successors(current, fresh)) {
      if (!(measure(child) < parent))
        throw Error(std::string("termination measure did not decrease under ") +
                    std::string(to_string(rule)));
      if (nodes.size() >= options.node_cap)
        throw Error("derivation tree exceeded the node cap");
      int cid = static_cast<int>(nodes.size());
      nodes.push_back({std::move(child), id, rule, {}});
      nodes[static_cast<std::size_t>(id)].children.push_back(cid);
      queue.push_back(cid);
    }
  }
  return result;
}

UnifyResult unify(const Expression& lhs, const Expression& rhs, const UnifyOptions& options) {
  return unify(normalize(lhs), normalize(rhs), options);
}

UnifierSet solve_system(const std::vector<std::pair<Expression, Expression>>& eqs,
                        const UnifyOptions& options) {
  std::map<std::string, std::size_t> first_seen;
  UnifierSet out;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    VarSet vars = variables(eqs[i].first);
    VarSet rv = variables(eqs[i].second);
    vars.insert(rv.begin(), rv.end());
    for (const Var& v : vars) {
      auto [it, inserted] = first_seen.emplace(v.name, i);
      if (!inserted && it->second != i)
        throw InputError("variable '" + v.name + "' is shared between equations " +
                         std::to_string(it->second + 1) + " and " + std::to_string(i + 1));
      out.problem_vars.insert(v);
    }
  }
  out.unifiers.push_back(Substitution{});
  for (const auto& [lhs, rhs] : eqs) {
    UnifyResult r = unify(lhs, rhs, options);
    if (r.unifiers.unifiers.empty()) {
      out.unifiers.clear();
      return out;
    }
    std::vector<Substitution> combined;
    combined.reserve(out.unifiers.size() * r.unifiers.unifiers.size());
    for (const Substitution& acc : out.unifiers)
      for (const Substitution& u : r.unifiers.unifiers)
        combined.push_back(union_disjoint(acc, u));
    out.unifiers = std::move(combined);
  }
  return out;
}

UnifierSet minimize(const UnifierSet& set) {
  UnifierSet out;
  out.problem_vars = set.problem_vars;
  std::vector<Substitution> retained;
  for (const Substitution& candidate : set.unifiers) {
    bool covered = false;
    for (const Substitution& r : retained)
      if (more_general(r, candidate, set.problem_vars)) {
        covered = true;
        break;
      }
    if (covered) continue;
    std::vector<Substitution> keep;
    for (const Substitution& r : retained)
      if (!more_general(candidate, r, set.problem_vars)) keep.push_back(r);
    keep.push_back(candidate);
    retained = std::move(keep);
  }
  out.unifiers = std::move(retained);
  return out;
}

}  // namespace aulist
