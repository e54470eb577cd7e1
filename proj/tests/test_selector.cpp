#include <doctest.h>

#include "aulist/error.hpp"
#include "aulist/oracle.hpp"
#include "aulist/selector.hpp"
#include "support.hpp"

using namespace aulist;
using namespace testsup;

namespace {

const Var A = av("a");
const Var B = av("b");
const Var X = lv("x");
const Var Y = lv("y");

Problem initial(const NormalExpr& l, const NormalExpr& r) {
  return Problem{Equation{l, r}, {}, false, {}};
}

std::vector<SymbolKind> kinds(const Tape& t, std::size_t upto) {
  std::vector<SymbolKind> out;
  for (std::size_t k = 0; k < upto; ++k) out.push_back(symbol_type(t, k));
  return out;
}

}  // namespace

TEST_CASE("preprocess expands variables to their image width") {
  // a:x = y:b under {x -> 1:2:b, y -> a:1:2}
  Substitution delta{{X, ne({iu(1), iu(2), vu(B)})}, {Y, ne({vu(A), iu(1), iu(2)})}};
  auto [s, t] = preprocess(ne({vu(A), vu(X)}), ne({vu(Y), vu(B)}), delta);
  REQUIRE(s.real_size() == 4);
  REQUIRE(t.real_size() == 4);
  CHECK(kinds(s, 4) == std::vector<SymbolKind>{SymbolKind::AtomVar, SymbolKind::ListVar,
                                               SymbolKind::ListVar, SymbolKind::ListVar});
  CHECK(s.cells()[1].parent == X);
  CHECK(s.cells()[3].index == 3);
  CHECK(kinds(t, 4) == std::vector<SymbolKind>{SymbolKind::ListVar, SymbolKind::ListVar,
                                               SymbolKind::ListVar, SymbolKind::AtomVar});

  // y:2 = a:x under {a -> 2, x -> empty, y -> empty}: both tapes two cells,
  // everything beyond reads Empty
  Substitution d2{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  auto [s2, t2] = preprocess(ne({vu(Y), iu(2)}), ne({vu(A), vu(X)}), d2);
  CHECK(s2.real_size() == 2);
  CHECK(kinds(s2, 3) == std::vector<SymbolKind>{SymbolKind::EmptyListVar, SymbolKind::AtomExpr,
                                                SymbolKind::Empty});
  CHECK(kinds(t2, 3) == std::vector<SymbolKind>{SymbolKind::AtomVar, SymbolKind::EmptyListVar,
                                                SymbolKind::Empty});

  // the empty problem expands to empty tapes
  auto [s3, t3] = preprocess(NormalExpr{}, NormalExpr{}, Substitution{});
  CHECK(s3.padded_size() == 0);
  CHECK(t3.padded_size() == 0);

  // unequal expansion widths are padded
  Substitution d4{{X, NormalExpr{}}, {Y, ne({iu(1), iu(2)})}};
  auto [s4, t4] = preprocess(ne({vu(X), iu(1), iu(2)}), ne({vu(Y)}), d4);
  CHECK(s4.real_size() == 3);
  CHECK(t4.real_size() == 2);
  CHECK(t4.padded_size() == 3);
  CHECK(symbol_type(t4, 2) == SymbolKind::Empty);

  CHECK_THROWS_AS(preprocess(ne({vu(X)}), ne({iu(1)}), Substitution{}), InputError);
}

TEST_CASE("lookahead_count counts the remaining block") {
  Substitution delta{{X, ne({iu(1), iu(2), vu(B)})}, {Y, ne({vu(A), iu(1), iu(2)})}};
  auto [s, t] = preprocess(ne({vu(A), vu(X)}), ne({vu(Y), vu(B)}), delta);
  CHECK(lookahead_count(s, 0) == 0);  // a is a single-symbol variable
  CHECK(lookahead_count(s, 1) == 2);
  CHECK(lookahead_count(s, 2) == 1);
  CHECK(lookahead_count(s, 3) == 0);
  CHECK(lookahead_count(t, 0) == 2);
  CHECK(lookahead_count(t, 1) == 1);
  CHECK(lookahead_count(t, 2) == 0);
  CHECK(lookahead_count(t, 3) == 0);
  CHECK(lookahead_count(t, 9) == 0);

  // an emptied variable has no block
  Substitution d2{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  auto [s2, t2] = preprocess(ne({vu(Y), iu(2)}), ne({vu(A), vu(X)}), d2);
  CHECK(lookahead_count(s2, 0) == 0);
}

TEST_CASE("symbol_type covers all five kinds") {
  // a : "a" : x : y with x emptied and y left alone
  Substitution delta{{X, NormalExpr{}}};
  NormalExpr e = ne({vu(A), su("a"), vu(X), vu(Y)});
  auto [s, t] = preprocess(e, e, delta);
  CHECK(kinds(s, 5) == std::vector<SymbolKind>{SymbolKind::AtomVar, SymbolKind::AtomExpr,
                                               SymbolKind::EmptyListVar, SymbolKind::ListVar,
                                               SymbolKind::Empty});
}

TEST_CASE("look_ahead skips the whole remaining block") {
  // x:a under {x -> 1:2}: x1, x2, a
  Substitution delta{{X, ne({iu(1), iu(2)})}};
  NormalExpr e = ne({vu(X), vu(A)});
  auto [s, t] = preprocess(e, e, delta);
  CHECK(look_ahead(s, 0));   // the block is followed by a
  CHECK(look_ahead(s, 1));   // still followed by a
  CHECK(!look_ahead(s, 2));  // a sits at the end
  CHECK(!look_ahead(s, 7));

  // a single-cell tape has nothing after its symbol
  Substitution none;
  NormalExpr just_a = ne({vu(A)});
  auto [sa, ta] = preprocess(just_a, just_a, none);
  CHECK(!look_ahead(sa, 0));
}

TEST_CASE("select reproduces the three published traces") {
  // y:2 = a:x with delta = {x -> 1:2, y -> a:1}
  Substitution d1{{X, ne({iu(1), iu(2)})}, {Y, ne({vu(A), iu(1)})}};
  CHECK(select(ne({vu(Y), iu(2)}), ne({vu(A), vu(X)}), d1) ==
        std::vector<Rule>{Rule::Subst3, Rule::Decomp2P, Rule::Orient1, Rule::Subst1});

  // y:2 = a:x with delta = {a -> 2, x -> empty, y -> empty}
  Substitution d2{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  CHECK(select(ne({vu(Y), iu(2)}), ne({vu(A), vu(X)}), d2) ==
        std::vector<Rule>{Rule::Subst2, Rule::Orient1, Rule::Decomp1P, Rule::Subst1});

  // n = y:n with delta = {y -> empty}
  Var n = av("n");
  Substitution d3{{Y, NormalExpr{}}};
  CHECK(select(ne({vu(n)}), ne({vu(Y), vu(n)}), d3) ==
        std::vector<Rule>{Rule::Orient3, Rule::Subst2, Rule::Subst1});
}

TEST_CASE("verify_selection replays a path to its unifier and witness") {
  NormalExpr l = ne({vu(Y), iu(2)}), r = ne({vu(A), vu(X)});
  Substitution d1{{X, ne({iu(1), iu(2)})}, {Y, ne({vu(A), iu(1)})}};
  auto path = select(l, r, d1);
  SelectionOutcome out = verify_selection(initial(l, r), path, d1);

  // sigma = {x -> f:2, y -> a:f} for one fresh f, lambda = {f -> 1}
  REQUIRE(out.unifier.size() == 2);
  const NormalExpr* xv = out.unifier.lookup(X);
  const NormalExpr* yv = out.unifier.lookup(Y);
  REQUIRE(xv);
  REQUIRE(yv);
  REQUIRE(xv->length() == 2);
  REQUIRE(yv->length() == 2);
  Var f = xv->head().as_var();
  CHECK(*xv == ne({vu(f), iu(2)}));
  CHECK(*yv == ne({vu(A), vu(f)}));
  CHECK(out.witness == Substitution{{f, ne({iu(1)})}});

  // replay of the second published trace ends in sigma3 with an empty witness
  Substitution d2{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  SelectionOutcome out2 = verify_selection(initial(l, r), select(l, r, d2), d2);
  CHECK(out2.unifier == d2);
  CHECK(out2.witness.empty());

  // the trivial problem solves by Remove alone
  SelectionOutcome out3 =
      verify_selection(initial(NormalExpr{}, NormalExpr{}), {Rule::Remove}, Substitution{});
  CHECK(out3.unifier.empty());
  CHECK(out3.witness.empty());
  CHECK(select(NormalExpr{}, NormalExpr{}, Substitution{}) == std::vector<Rule>{Rule::Remove});
}

TEST_CASE("verify_selection reports broken paths") {
  NormalExpr l = ne({vu(Y), iu(2)}), r = ne({vu(A), vu(X)});
  Substitution d{{A, ne({iu(2)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}};
  CHECK_THROWS_AS(verify_selection(initial(l, r), {Rule::Orient4}, d), VerifyError);
  CHECK_THROWS_AS(verify_selection(initial(l, r), {Rule::Subst2}, d), VerifyError);  // not solved
  CHECK_THROWS_AS(
      verify_selection(initial(l, r), {Rule::Subst2, Rule::Orient1, Rule::Decomp1P, Rule::Subst1},
                       Substitution{{A, ne({iu(1)})}, {X, NormalExpr{}}, {Y, NormalExpr{}}}),
      VerifyError);  // path unifier does not cover this delta
}

TEST_CASE("select handles re-oriented and emptied shapes") {
  // empty = x
  Substitution d{{X, NormalExpr{}}};
  auto path = select(NormalExpr{}, ne({vu(X)}), d);
  CHECK(path == std::vector<Rule>{Rule::Orient4, Rule::Subst1});
  verify_selection(initial(NormalExpr{}, ne({vu(X)})), path, d);

  // x:1:2 = y with the left list variable emptied: re-orient, then solve
  Substitution d2{{X, NormalExpr{}}, {Y, ne({iu(1), iu(2)})}};
  NormalExpr l2 = ne({vu(X), iu(1), iu(2)}), r2 = ne({vu(Y)});
  auto path2 = select(l2, r2, d2);
  CHECK(path2 == std::vector<Rule>{Rule::Orient2, Rule::Subst1});
  SelectionOutcome out2 = verify_selection(initial(l2, r2), path2, d2);
  CHECK(out2.unifier == Substitution{{Y, ne({vu(X), iu(1), iu(2)})}});

  // 1 = 1 needs the trailing Remove after cancelling the constants
  auto path3 = select(ne({iu(1)}), ne({iu(1)}), Substitution{});
  CHECK(path3.back() == Rule::Remove);
  verify_selection(initial(ne({iu(1)}), ne({iu(1)})), path3, Substitution{});
}

TEST_CASE("select and verify cover enumerated unifiers of a mixed problem") {
  NormalExpr l = ne({vu(A), vu(X)}), r = ne({vu(Y), iu(2)});
  GroundConfig cfg;
  for (const Substitution& delta : ground_unifiers(l, r, cfg)) {
    auto path = select(l, r, delta);
    REQUIRE(!path.empty());
    SelectionOutcome out = verify_selection(initial(l, r), path, delta);
    for (const Var& v : VarSet{A, X, Y})
      CHECK(au_equal(apply(out.witness, apply(out.unifier, v)), apply(delta, v)));
  }
}
