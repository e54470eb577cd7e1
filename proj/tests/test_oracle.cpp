#include <doctest.h>

#include <algorithm>

#include "aulist/error.hpp"
#include "aulist/oracle.hpp"
#include "support.hpp"

using namespace aulist;
using namespace testsup;

namespace {

const Var A = av("a");
const Var X = lv("x");
const Var Y = lv("y");

std::size_t drain_count(GroundStream& s) {
  std::size_t n = 0;
  while (s.next()) ++n;
  return n;
}

}  // namespace

TEST_CASE("ground enumeration counts") {
  GroundConfig cfg;

  GroundStream ints({iv("n")}, cfg);
  CHECK(ints.total() == 2);
  CHECK(drain_count(ints) == 2);

  GroundConfig tiny;
  tiny.int_pool = {1};
  tiny.str_pool = {"a"};
  tiny.max_list_len = 2;
  GroundStream lists({X}, tiny);
  // empty, 1, "a", and the four two-symbol lists
  CHECK(lists.total() == 7);

  GroundConfig ints_only = tiny;
  GroundStream no_vars({}, ints_only);
  CHECK(no_vars.total() == 1);
  auto first = no_vars.next();
  REQUIRE(first);
  CHECK(first->empty());
  CHECK(!no_vars.next());

  // product over several variables
  GroundStream mixed({iv("n"), A, X}, cfg);
  // 2 ints * 3 atoms * (1 + 3 + 9) lists
  CHECK(mixed.total() == 2u * 3u * 13u);
  CHECK(drain_count(mixed) == 2u * 3u * 13u);
}

TEST_CASE("pools must not be empty") {
  GroundConfig broken;
  broken.int_pool.clear();
  CHECK_THROWS_AS(GroundStream({X}, broken), InputError);
}

TEST_CASE("ground_unifiers filters assignments through the equation") {
  GroundConfig cfg;
  CHECK(ground_unifiers(ne({iu(1), vu(X)}), ne({iu(2), vu(Y)}), cfg).empty());

  GroundConfig three = cfg;
  three.max_list_len = 3;
  CHECK(ground_unifiers(ne({vu(X)}), ne({iu(1), vu(X), iu(2)}), three).empty());

  GroundConfig narrow;
  narrow.int_pool = {2};
  narrow.str_pool = {"s"};
  narrow.max_list_len = 1;
  auto found = ground_unifiers(ne({vu(A), vu(X)}), ne({vu(Y), iu(2)}), narrow);
  Substitution flat{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  bool has_flat = false;
  for (const auto& d : found) has_flat |= (d == flat);
  CHECK(has_flat);
}

TEST_CASE("check_completeness accepts the computed set and rejects a pruned one") {
  NormalExpr l = ne({vu(A), vu(X)}), r = ne({vu(Y), iu(2)});
  GroundConfig cfg;
  UnifyResult solved = unify(l, r);
  CHECK(check_completeness(solved.unifiers, l, r, cfg).complete);

  // keep only the flat solution: unifiers sending x to longer lists escape
  UnifierSet pruned;
  pruned.problem_vars = solved.unifiers.problem_vars;
  pruned.unifiers = {Substitution{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}}};
  CompletenessVerdict verdict = check_completeness(pruned, l, r, cfg);
  CHECK(!verdict.complete);
  REQUIRE(verdict.counterexample);
  bool some_two_wide = false;
  for (const Substitution& d : ground_unifiers(l, r, cfg)) {
    if (more_general(pruned.unifiers[0], d, pruned.problem_vars)) continue;
    if (const NormalExpr* xv = d.lookup(X); xv && xv->length() == 2) some_two_wide = true;
  }
  CHECK(some_two_wide);

  // vacuously complete: nothing to cover
  UnifierSet empty_set;
  empty_set.problem_vars = {X, Y};
  CompletenessVerdict vac =
      check_completeness(empty_set, ne({iu(1), vu(X)}), ne({iu(2), vu(Y)}), cfg);
  CHECK(vac.complete);
  CHECK(vac.checked == 0);
}

TEST_CASE("failure rules are confirmed by the ground oracle") {
  GroundConfig cfg;
  cfg.max_list_len = 3;
  std::vector<Equation> rejected = {
      {ne({vu(X)}), ne({iu(1), vu(X), iu(2)})},           // occurs
      {ne({iu(1), vu(X)}), ne({iu(2), vu(Y)})},           // head clash
      {ne({iu(1), vu(X)}), NormalExpr{}},                 // nonempty vs empty
      {NormalExpr{}, ne({su("a"), vu(X)})},               // empty vs nonempty
      {ne({vu(iv("n"))}), ne({vu(sv("s"))})},             // incomparable types
  };
  for (const Equation& eq : rejected) {
    REQUIRE(check_failure(eq));
    CHECK(ground_unifiers(eq.lhs, eq.rhs, cfg).empty());
  }
}

TEST_CASE("engine unifiers ground-instantiate into the oracle set") {
  NormalExpr l = ne({vu(A), vu(X)}), r = ne({vu(Y), iu(2)});
  GroundConfig cfg;
  UnifyResult solved = unify(l, r);
  auto members = ground_unifiers(l, r, cfg);
  for (const Substitution& sigma : solved.unifiers.unifiers) {
    VarSet free = sigma.range_variables();
    for (const Var& v : solved.unifiers.problem_vars)
      if (!sigma.lookup(v)) free.insert(v);
    GroundStream grounding(free, cfg);
    std::size_t tried = 0;
    while (auto gamma = grounding.next()) {
      if (++tried > 5) break;
      Substitution delta = restrict_to(compose(sigma, *gamma), solved.unifiers.problem_vars);
      CHECK(au_equal(apply(delta, l), apply(delta, r)));
      bool within_bounds = true;
      for (const auto& [v, e] : delta)
        if (e.length() > cfg.max_list_len) within_bounds = false;
      if (within_bounds)
        CHECK(std::find(members.begin(), members.end(), delta) != members.end());
    }
  }
}
