#include "aulist/expr.hpp"

#include <stdexcept>

namespace aulist {

TypeOrder compare_types(VarType a, VarType b) {
  if (a == b) return TypeOrder::Equal;
  auto rank_le = [](VarType x, VarType y) {
    if (y == VarType::List) return true;
    if (y == VarType::Atom) return x == VarType::Int || x == VarType::String;
    return false;  // nothing is strictly below Int or String
  };
  if (rank_le(a, b)) return TypeOrder::Less;
  if (rank_le(b, a)) return TypeOrder::Greater;
  return TypeOrder::Incomparable;  // Int vs String
}

std::string_view to_string(VarType t) {
  switch (t) {
    case VarType::Int: return "int";
    case VarType::String: return "string";
    case VarType::Atom: return "atom";
    case VarType::List: return "list";
  }
  return "?";
}

std::optional<VarType> var_type_from(std::string_view name) {
  if (name == "int") return VarType::Int;
  if (name == "string") return VarType::String;
  if (name == "atom") return VarType::Atom;
  if (name == "list") return VarType::List;
  return std::nullopt;
}

Unit Unit::int_const(long long v) {
  Unit u;
  u.kind_ = Kind::IntConst;
  u.int_value_ = v;
  return u;
}

Unit Unit::str_const(std::string s) {
  Unit u;
  u.kind_ = Kind::StrConst;
  u.text_ = std::move(s);
  return u;
}

Unit Unit::var(Var v) {
  Unit u;
  u.kind_ = Kind::Variable;
  u.text_ = std::move(v.name);
  u.vtype_ = v.type;
  return u;
}

Unit Unit::frozen(Var v) {
  Unit u;
  u.kind_ = Kind::Frozen;
  u.text_ = std::move(v.name);
  u.vtype_ = v.type;
  return u;
}

VarType Unit::type() const {
  switch (kind_) {
    case Kind::IntConst: return VarType::Int;
    case Kind::StrConst: return VarType::String;
    case Kind::Variable:
    case Kind::Frozen: return vtype_;
  }
  return VarType::List;
}

NormalExpr NormalExpr::tail(std::size_t from) const {
  if (from >= units_.size()) return NormalExpr{};
  return NormalExpr(std::vector<Unit>(units_.begin() + static_cast<long>(from),
                                      units_.end()));
}

NormalExpr NormalExpr::concat(const NormalExpr& other) const {
  std::vector<Unit> out = units_;
  out.insert(out.end(), other.units_.begin(), other.units_.end());
  return NormalExpr(std::move(out));
}

struct Expression::Node {
  Kind kind;
  Unit unit;  // Leaf only
  Expression left;
  Expression right;
};

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression::Expression() : Expression(empty()) {}

Expression Expression::empty() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::Empty, Unit{}, Expression{nullptr}, Expression{nullptr}});
  return Expression(node);
}

Expression Expression::leaf(Unit u) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Leaf, std::move(u), Expression{nullptr}, Expression{nullptr}}));
}

Expression Expression::var(Var v) { return leaf(Unit::var(std::move(v))); }
Expression Expression::int_const(long long v) { return leaf(Unit::int_const(v)); }
Expression Expression::str_const(std::string s) { return leaf(Unit::str_const(std::move(s))); }

Expression Expression::concat(Expression left, Expression right) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Concat, Unit{}, std::move(left), std::move(right)}));
}

Expression::Kind Expression::kind() const { return node_->kind; }
const Unit& Expression::as_leaf() const { return node_->unit; }
const Expression& Expression::left() const { return node_->left; }
const Expression& Expression::right() const { return node_->right; }

namespace {

void flatten(const Expression& e, std::vector<Unit>& out) {
  switch (e.kind()) {
    case Expression::Kind::Empty: return;
    case Expression::Kind::Leaf: out.push_back(e.as_leaf()); return;
    case Expression::Kind::Concat:
      flatten(e.left(), out);
      flatten(e.right(), out);
      return;
  }
}

}  // namespace

NormalExpr normalize(const Expression& e) {
  std::vector<Unit> units;
  flatten(e, units);
  return NormalExpr(std::move(units));
}

Expression denormalize(const NormalExpr& e) {
  if (e.is_empty()) return Expression::empty();
  const auto& units = e.units();
  Expression out = Expression::leaf(units.back());
  for (std::size_t i = units.size() - 1; i-- > 0;)
    out = Expression::concat(Expression::leaf(units[i]), out);
  return out;
}

VarType type_of(const NormalExpr& e) {
  if (e.length() == 1) return e.head().type();
  return VarType::List;
}

std::size_t term_size(const NormalExpr& e) {
  return e.is_empty() ? 0 : 2 * e.length() - 1;
}

bool is_simple(const NormalExpr& e) {
  std::size_t list_vars = 0;
  for (const Unit& u : e.units())
    if (u.is_var() && u.type() == VarType::List) ++list_vars;
  return list_vars <= 1;
}

bool is_simple(const Expression& e) { return is_simple(normalize(e)); }

bool au_equal(const Expression& a, const Expression& b) {
  return normalize(a) == normalize(b);
}

VarSet variables(const NormalExpr& e) {
  VarSet vars;
  for (const Unit& u : e.units())
    if (u.is_var()) vars.insert(u.as_var());
  return vars;
}

VarSet variables(const Expression& e) { return variables(normalize(e)); }

std::string to_string(const Unit& u) {
  switch (u.kind()) {
    case Unit::Kind::IntConst: return std::to_string(u.int_value());
    case Unit::Kind::StrConst: return "\"" + u.text() + "\"";
    case Unit::Kind::Variable: return u.text();
    case Unit::Kind::Frozen: return "#" + u.text();
  }
  return "?";
}

std::string to_string(const NormalExpr& e) {
  if (e.is_empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < e.units().size(); ++i) {
    if (i) out += ":";
    out += to_string(e.units()[i]);
  }
  return out;
}

}  // namespace aulist
