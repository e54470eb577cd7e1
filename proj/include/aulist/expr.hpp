#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aulist {

// The four label types. Subtype order: Int < Atom, String < Atom, Atom < List;
// Int and String are incomparable.
enum class VarType : std::uint8_t { Int, String, Atom, List };

enum class TypeOrder : std::uint8_t { Less, Equal, Greater, Incomparable };

TypeOrder compare_types(VarType a, VarType b);

// a <= b in the subtype order.
inline bool subtype_le(VarType a, VarType b) {
  TypeOrder c = compare_types(a, b);
  return c == TypeOrder::Less || c == TypeOrder::Equal;
}

std::string_view to_string(VarType t);
std::optional<VarType> var_type_from(std::string_view name);

struct Var {
  std::string name;
  VarType type = VarType::List;
  auto operator<=>(const Var&) const = default;
};

using VarSet = std::set<Var>;

// One symbol of a flattened list expression: an integer or string constant,
// a typed variable, or a frozen variable. A frozen variable is a variable
// demoted to a rigid constant of its declared type; the matcher freezes
// target-side variables so they cannot be instantiated. There is no symbol
// for the empty list: empty is the empty symbol sequence.
class Unit {
 public:
  enum class Kind : std::uint8_t { IntConst, StrConst, Variable, Frozen };

  Unit() = default;  // IntConst 0
  static Unit int_const(long long v);
  static Unit str_const(std::string s);
  static Unit var(Var v);
  static Unit frozen(Var v);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Variable; }
  // Variable-free symbol: a constant or a frozen variable.
  bool is_rigid() const { return kind_ != Kind::Variable; }

  VarType type() const;
  long long int_value() const { return int_value_; }
  // String constant text, or the name of a (frozen) variable.
  const std::string& text() const { return text_; }
  // The underlying variable of a Variable or Frozen unit.
  Var as_var() const { return Var{text_, vtype_}; }

  auto operator<=>(const Unit&) const = default;

 private:
  Kind kind_ = Kind::IntConst;
  long long int_value_ = 0;
  std::string text_;
  VarType vtype_ = VarType::List;
};

// AU-canonical form of an expression: a flat symbol sequence. Unit has no
// empty-list symbol and associativity is implicit in the sequence, so every
// NormalExpr is canonical by construction.
class NormalExpr {
 public:
  NormalExpr() = default;
  explicit NormalExpr(std::vector<Unit> units) : units_(std::move(units)) {}
  static NormalExpr single(Unit u) { return NormalExpr({std::move(u)}); }

  const std::vector<Unit>& units() const { return units_; }
  bool is_empty() const { return units_.empty(); }
  std::size_t length() const { return units_.size(); }
  const Unit& head() const { return units_.front(); }
  // Drops the first `from` symbols.
  NormalExpr tail(std::size_t from = 1) const;
  NormalExpr concat(const NormalExpr& other) const;

  auto operator<=>(const NormalExpr&) const = default;

 private:
  std::vector<Unit> units_;
};

// Expression tree over constants, typed variables, empty, and concatenation.
// Immutable; nodes are shared.
class Expression {
 public:
  enum class Kind : std::uint8_t { Empty, Leaf, Concat };

  Expression();  // empty
  static Expression empty();
  static Expression leaf(Unit u);
  static Expression var(Var v);
  static Expression int_const(long long v);
  static Expression str_const(std::string s);
  static Expression concat(Expression left, Expression right);

  Kind kind() const;
  const Unit& as_leaf() const;
  const Expression& left() const;
  const Expression& right() const;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Flattens concatenations and erases unit elements.
NormalExpr normalize(const Expression& e);
// Right-nested concatenation tree; empty sequence becomes the empty leaf.
Expression denormalize(const NormalExpr& e);

// Unique smallest type of a normalized expression: empty and sequences of
// length >= 2 are lists, a single symbol has the symbol's type.
VarType type_of(const NormalExpr& e);

// Term size: each symbol counts 1 and each concatenation in the right-nested
// reading counts 1, so k symbols weigh 2k-1; empty weighs 0.
std::size_t term_size(const NormalExpr& e);

// At most one list-variable occurrence in the whole expression.
bool is_simple(const Expression& e);
bool is_simple(const NormalExpr& e);

// Equality modulo associativity and the empty-list unit laws, decided by
// comparing canonical forms.
bool au_equal(const Expression& a, const Expression& b);
inline bool au_equal(const NormalExpr& a, const NormalExpr& b) { return a == b; }

VarSet variables(const Expression& e);
VarSet variables(const NormalExpr& e);

std::string to_string(const Unit& u);
std::string to_string(const NormalExpr& e);  // "empty" for the empty sequence

}  // namespace aulist
