#include "aulist/problem_io.hpp"

#include <cctype>
#include <map>

#include "aulist/error.hpp"

namespace aulist {

namespace {

struct Token {
  enum class Kind { Ident, Int, Str, Colon, Comma, Equals, Arrow, LBrace, RBrace, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 1;
};

// Tokenizer for one logical chunk of input (a line, or a unifier literal).
// Identifiers may carry primed suffixes (x'3); whether those are accepted is
// the parser's business.
class Scanner {
 public:
  Scanner(std::string_view text, int line) : text_(text), line_(line) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, tok_.column);
  }
  int line() const { return line_; }

 private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    tok_ = Token{};
    tok_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (c == ':') { tok_.kind = Token::Kind::Colon; ++pos_; return; }
    if (c == ',') { tok_.kind = Token::Kind::Comma; ++pos_; return; }
    if (c == '{') { tok_.kind = Token::Kind::LBrace; ++pos_; return; }
    if (c == '}') { tok_.kind = Token::Kind::RBrace; ++pos_; return; }
    if (c == '=') { tok_.kind = Token::Kind::Equals; ++pos_; return; }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        tok_.kind = Token::Kind::Arrow;
        pos_ += 2;
        return;
      }
      if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        std::size_t start = pos_++;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.kind = Token::Kind::Int;
        tok_.text = std::string(text_.substr(start, pos_ - start));
        return;
      }
      throw ParseError("unexpected '-'", line_, tok_.column);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '"') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) throw ParseError("unterminated string literal", line_, tok_.column);
      tok_.kind = Token::Kind::Str;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      ++pos_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      // primed fresh-variable suffixes: name('digits)*
      while (pos_ + 1 < text_.size() && text_[pos_] == '\'' &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, tok_.column);
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Cuts a '#' comment, ignoring '#' inside string literals.
std::string_view strip_comment(std::string_view line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    else if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

bool all_space(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

struct ExprOptions {
  bool allow_negative = false;
  bool allow_primed = false;
};

Expression parse_unit(Scanner& sc, const std::map<std::string, VarType>& declared,
                      const ExprOptions& opt) {
  Token t = sc.take();
  switch (t.kind) {
    case Token::Kind::Int:
      if (!opt.allow_negative && t.text[0] == '-')
        sc.fail("negative literals are not allowed in equations");
      return Expression::int_const(std::stoll(t.text));
    case Token::Kind::Str: return Expression::str_const(t.text);
    case Token::Kind::Ident: {
      if (t.text == "empty") return Expression::empty();
      auto it = declared.find(t.text);
      if (it != declared.end()) return Expression::var(Var{t.text, it->second});
      if (opt.allow_primed && t.text.find('\'') != std::string::npos)
        return Expression::var(Var{t.text, VarType::List});
      sc.fail("undeclared variable '" + t.text + "'");
    }
    default: sc.fail("expected an integer, string, 'empty', or a variable");
  }
}

Expression parse_expr(Scanner& sc, const std::map<std::string, VarType>& declared,
                      const ExprOptions& opt) {
  Expression e = parse_unit(sc, declared, opt);
  while (sc.peek().kind == Token::Kind::Colon) {
    sc.take();
    e = Expression::concat(e, parse_unit(sc, declared, opt));
  }
  return e;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  std::map<std::string, VarType> declared;

  int line_no = 0;
  std::size_t pos = 0;
  std::vector<std::pair<int, std::string>> eq_lines;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (all_space(line)) continue;

    std::size_t indent = line.find_first_not_of(" \t");
    std::string_view body = line.substr(indent);
    if (body.rfind("vars:", 0) == 0) {
      Scanner sc(line.substr(indent + 5), line_no);
      while (true) {
        Token name = sc.take();
        if (name.kind != Token::Kind::Ident) sc.fail("expected a variable name");
        if (name.text == "empty") sc.fail("'empty' is a reserved word");
        if (name.text.find('\'') != std::string::npos)
          sc.fail("the apostrophe is reserved for generated variables");
        if (sc.take().kind != Token::Kind::Colon) sc.fail("expected ':' after the variable name");
        Token type = sc.take();
        if (type.kind != Token::Kind::Ident) sc.fail("expected a type name");
        auto vt = var_type_from(type.text);
        if (!vt) sc.fail("unknown type '" + type.text + "' (use int, string, atom, or list)");
        if (declared.count(name.text))
          throw InputError("duplicate declaration of variable '" + name.text + "'");
        declared.emplace(name.text, *vt);
        out.declarations.push_back(Var{name.text, *vt});
        if (sc.peek().kind == Token::Kind::End) break;
        if (sc.take().kind != Token::Kind::Comma) sc.fail("expected ',' between declarations");
      }
      continue;
    }
    if (body.rfind("eq:", 0) == 0) {
      eq_lines.emplace_back(line_no, std::string(line.substr(indent + 3)));
      continue;
    }
    throw ParseError("expected a 'vars:' or 'eq:' line", line_no, static_cast<int>(indent) + 1);
  }

  std::map<std::string, std::size_t> var_owner;  // variable name -> equation index
  for (const auto& [ln, src] : eq_lines) {
    Scanner sc(src, ln);
    ExprOptions opt;  // equations: no negatives, no primed names
    Expression lhs = parse_expr(sc, declared, opt);
    if (sc.take().kind != Token::Kind::Equals) sc.fail("expected '=' between the two sides");
    Expression rhs = parse_expr(sc, declared, opt);
    if (sc.peek().kind != Token::Kind::End) sc.fail("trailing input after the equation");

    validate_problem(normalize(lhs), normalize(rhs));
    std::size_t index = out.equations.size();
    VarSet vars = variables(lhs);
    VarSet rv = variables(rhs);
    vars.insert(rv.begin(), rv.end());
    for (const Var& v : vars) {
      auto [it, inserted] = var_owner.emplace(v.name, index);
      if (!inserted && it->second != index)
        throw InputError("variable '" + v.name + "' is shared between equations " +
                         std::to_string(it->second + 1) + " and " + std::to_string(index + 1));
    }
    out.equations.emplace_back(std::move(lhs), std::move(rhs));
  }
  if (out.equations.empty()) throw InputError("the problem file contains no equation");
  return out;
}

std::string format_substitution(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, e] : s) {
    if (!first) out += ", ";
    first = false;
    out += v.name + " -> " + to_string(e);
  }
  return out + "}";
}

Substitution parse_substitution(std::string_view text, const std::vector<Var>& declared) {
  std::map<std::string, VarType> table;
  for (const Var& v : declared) table.emplace(v.name, v.type);
  Scanner sc(text, 1);
  ExprOptions opt;
  opt.allow_negative = true;
  opt.allow_primed = true;
  if (sc.take().kind != Token::Kind::LBrace) sc.fail("expected '{'");
  Substitution out;
  if (sc.peek().kind == Token::Kind::RBrace) {
    sc.take();
  } else {
    while (true) {
      Token name = sc.take();
      if (name.kind != Token::Kind::Ident) sc.fail("expected a variable name");
      VarType vt;
      auto it = table.find(name.text);
      if (it != table.end()) vt = it->second;
      else if (name.text.find('\'') != std::string::npos) vt = VarType::List;
      else sc.fail("undeclared variable '" + name.text + "'");
      if (sc.take().kind != Token::Kind::Arrow) sc.fail("expected '->'");
      Expression value = parse_expr(sc, table, opt);
      try {
        out.bind(Var{name.text, vt}, normalize(value));
      } catch (const Error& e) {
        throw InputError(e.what());
      }
      Token sep = sc.take();
      if (sep.kind == Token::Kind::RBrace) break;
      if (sep.kind != Token::Kind::Comma) sc.fail("expected ',' or '}'");
    }
  }
  if (sc.peek().kind != Token::Kind::End) sc.fail("trailing input after the substitution");
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_label(const Problem& p) {
  std::string label;
  if (p.solved) label = "solved";
  else label = dot_escape(to_string(p.eq.lhs) + " = " + to_string(p.eq.rhs));
  label += "\\n" + dot_escape(format_substitution(p.accumulated));
  if (p.failed) label += "\\n" + std::string(to_string(*p.failed));
  return label;
}

}  // namespace

std::string to_dot(const DerivationTree& tree) {
  std::string out = "digraph derivation {\n";
  out += "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"";
    if (node.problem.solved) out += node_label(node.problem) + "\", color=blue";
    else if (node.problem.failed) out += node_label(node.problem) + "\", color=red";
    else out += node_label(node.problem) + "\"";
    out += "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.parent >= 0)
      out += "  n" + std::to_string(node.parent) + " -> n" + std::to_string(i) + " [label=\"" +
             std::string(to_string(*node.via)) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace aulist
