#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "aulist/engine.hpp"
#include "aulist/error.hpp"
#include "aulist/oracle.hpp"

namespace testsup {

using namespace aulist;

inline Var lv(const std::string& n) { return Var{n, VarType::List}; }
inline Var av(const std::string& n) { return Var{n, VarType::Atom}; }
inline Var iv(const std::string& n) { return Var{n, VarType::Int}; }
inline Var sv(const std::string& n) { return Var{n, VarType::String}; }

inline Unit vu(const Var& v) { return Unit::var(v); }
inline Unit iu(long long i) { return Unit::int_const(i); }
inline Unit su(const std::string& s) { return Unit::str_const(s); }

inline NormalExpr ne(std::vector<Unit> units) { return NormalExpr(std::move(units)); }

// Renders a substitution with non-problem variables renamed by first
// occurrence, so two results equal up to fresh renaming compare equal.
// Re-derived here, independent of the engine's internal deduplication.
inline std::string canonical_render(const Substitution& s, const VarSet& problem_vars) {
  std::map<std::string, std::string> renamed;
  int counter = 0;
  std::string out;
  for (const auto& [v, e] : s) {
    out += v.name;
    out += "=";
    for (const Unit& u : e.units()) {
      if (u.is_var() && !problem_vars.count(u.as_var())) {
        auto it = renamed.find(u.text());
        if (it == renamed.end())
          it = renamed.emplace(u.text(), "$" + std::to_string(++counter)).first;
        out += it->second;
      } else {
        out += to_string(u);
      }
      out += ",";
    }
    out += ";";
  }
  return out;
}

inline bool same_up_to_fresh(const Substitution& a, const Substitution& b,
                             const VarSet& problem_vars) {
  return canonical_render(a, problem_vars) == canonical_render(b, problem_vars);
}

// Mutual-instance equivalence on the problem variables.
inline bool equivalent_on(const Substitution& a, const Substitution& b, const VarSet& on) {
  return more_general(a, b, on).has_value() && more_general(b, a, on).has_value();
}

// Deterministic generator of valid random problems: at most three variables
// per side, at most one list variable occurrence per side, no list variable
// shared between sides, occasionally a shared non-list variable.
class ProblemGen {
 public:
  explicit ProblemGen(unsigned seed) : rng_(seed) {}

  Equation next() {
    for (;;) {
      Equation eq = candidate();
      try {
        validate_problem(eq.lhs, eq.rhs);
        return eq;
      } catch (const Error&) {
        // shared-name/type collision from the shared-variable draw; retry
      }
    }
  }

 private:
  std::mt19937 rng_;

  VarType random_type() {
    switch (rng_() % 4) {
      case 0: return VarType::Int;
      case 1: return VarType::String;
      case 2: return VarType::Atom;
      default: return VarType::List;
    }
  }

  Unit random_const() {
    switch (rng_() % 3) {
      case 0: return Unit::int_const(1);
      case 1: return Unit::int_const(2);
      default: return Unit::str_const("a");
    }
  }

  std::vector<Var> side_pool(const std::string& prefix) {
    std::vector<Var> pool;
    std::size_t n = 1 + rng_() % 3;
    for (std::size_t i = 0; i < n; ++i)
      pool.push_back(Var{prefix + std::to_string(i), random_type()});
    return pool;
  }

  NormalExpr side(const std::vector<Var>& pool) {
    std::size_t len = rng_() % 5;  // 0..4 units
    std::vector<Unit> units;
    bool list_used = false;
    for (std::size_t i = 0; i < len; ++i) {
      if (rng_() % 100 < 45 || pool.empty()) {
        units.push_back(random_const());
        continue;
      }
      const Var& v = pool[rng_() % pool.size()];
      if (v.type == VarType::List) {
        if (list_used) {
          units.push_back(random_const());
          continue;
        }
        list_used = true;
      }
      units.push_back(Unit::var(v));
    }
    return NormalExpr(std::move(units));
  }

  Equation candidate() {
    std::vector<Var> left = side_pool("u");
    std::vector<Var> right = side_pool("w");
    if (rng_() % 100 < 25) {
      // share one non-list variable between the sides
      for (const Var& v : left)
        if (v.type != VarType::List) {
          right.push_back(v);
          break;
        }
    }
    return Equation{side(left), side(right)};
  }
};

}  // namespace testsup
