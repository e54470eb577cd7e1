#include "aulist/selector.hpp"

#include <algorithm>

#include "aulist/error.hpp"

namespace aulist {

std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::ListVar: return "ListVar";
    case SymbolKind::AtomVar: return "AtomVar";
    case SymbolKind::AtomExpr: return "AtomExpr";
    case SymbolKind::EmptyListVar: return "EmptyListVar";
    case SymbolKind::Empty: return "Empty";
  }
  return "?";
}

Tape::Tape(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (const Cell& c : cells_)
    if (c.kind != Cell::Kind::Pad) ++real_size_;
}

void Tape::pad_to(std::size_t n) {
  while (cells_.size() < n) cells_.push_back(Cell{});
}

namespace {

Tape expand(const NormalExpr& side, const Substitution& delta) {
  std::vector<Tape::Cell> cells;
  for (const Unit& u : side.units()) {
    if (!u.is_var()) {
      cells.push_back({Tape::Cell::Kind::Atom, Var{}, 0, u});
      continue;
    }
    Var x = u.as_var();
    NormalExpr image = delta.get(x);
    if (image.is_empty()) {
      cells.push_back({Tape::Cell::Kind::EmptyMark, x, 0, Unit{}});
      continue;
    }
    for (std::size_t i = 1; i <= image.length(); ++i)
      cells.push_back({Tape::Cell::Kind::Pseudo, x, i, Unit{}});
  }
  return Tape(std::move(cells));
}

}  // namespace

std::pair<Tape, Tape> preprocess(const NormalExpr& s, const NormalExpr& t,
                                 const Substitution& delta) {
  NormalExpr ls = apply(delta, s), rt = apply(delta, t);
  if (!au_equal(ls, rt))
    throw InputError("the given substitution does not unify the equation: it maps the sides to '" +
                     to_string(ls) + "' and '" + to_string(rt) + "'");
  Tape tape_s = expand(s, delta);
  Tape tape_t = expand(t, delta);
  std::size_t width = std::max(tape_s.real_size(), tape_t.real_size());
  tape_s.pad_to(width);
  tape_t.pad_to(width);
  return {std::move(tape_s), std::move(tape_t)};
}

std::size_t lookahead_count(const Tape& tape, std::size_t k) {
  const auto& cs = tape.cells();
  if (k >= cs.size() || cs[k].kind != Tape::Cell::Kind::Pseudo) return 0;
  std::size_t n = 0;
  for (std::size_t j = k + 1;
       j < cs.size() && cs[j].kind == Tape::Cell::Kind::Pseudo && cs[j].parent == cs[k].parent;
       ++j)
    ++n;
  return n;
}

SymbolKind symbol_type(const Tape& tape, std::size_t k) {
  if (k >= tape.padded_size()) return SymbolKind::Empty;
  const Tape::Cell& c = tape.cells()[k];
  switch (c.kind) {
    case Tape::Cell::Kind::Pad: return SymbolKind::Empty;
    case Tape::Cell::Kind::EmptyMark: return SymbolKind::EmptyListVar;
    case Tape::Cell::Kind::Atom: return SymbolKind::AtomExpr;
    case Tape::Cell::Kind::Pseudo:
      return c.parent.type == VarType::List ? SymbolKind::ListVar : SymbolKind::AtomVar;
  }
  return SymbolKind::Empty;
}

bool look_ahead(const Tape& tape, std::size_t k) {
  if (k >= tape.padded_size()) return false;
  std::size_t after = k + 1;
  if (symbol_type(tape, k) == SymbolKind::ListVar) after = k + 1 + lookahead_count(tape, k);
  return symbol_type(tape, after) != SymbolKind::Empty;
}

std::vector<Rule> select(const NormalExpr& s, const NormalExpr& t, const Substitution& delta) {
  validate_problem(s, t);
  auto tapes = preprocess(s, t, delta);
  Tape* left = &tapes.first;
  Tape* right = &tapes.second;
  std::size_t m = 0, n = 0;
  std::vector<Rule> out;

  // Type of the symbol's source: the parent variable for pseudo and
  // empty-marker cells, the unit itself for constants.
  auto head_type = [](const Tape& tape, std::size_t k) {
    const Tape::Cell& c = tape.cells()[k];
    return c.kind == Tape::Cell::Kind::Atom ? c.unit.type() : c.parent.type;
  };
  auto swap_views = [&] {
    std::swap(left, right);
    std::swap(m, n);
  };
  auto impossible = [&](const char* where) -> Error {
    return Error(std::string("selection reached an impossible state (") + where + ")");
  };
  // Decides between keeping the orientation and an Orient3 swap when both
  // heads are variable-or-constant symbols of atom-or-below type.
  auto right_fits_left = [&]() {
    VarType ls = head_type(*left, m), rs = head_type(*right, n);
    if (subtype_le(rs, ls)) return true;
    if (compare_types(ls, rs) == TypeOrder::Less) return false;
    throw impossible("incomparable head types");
  };

  const std::size_t step_cap = 4 * (left->padded_size() + right->padded_size() + 2) + 8;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > step_cap) throw Error("selection did not terminate");
    std::size_t count_left = lookahead_count(*left, m);
    std::size_t count_right = lookahead_count(*right, n);

    if (count_left < count_right) {
      switch (symbol_type(*left, m)) {
        case SymbolKind::ListVar:
          out.push_back(Rule::Decomp2P);
          m += 1 + count_left;
          n += 1 + count_left;
          break;
        case SymbolKind::AtomVar:
          out.push_back(Rule::Orient3);
          swap_views();
          break;
        case SymbolKind::AtomExpr:
          out.push_back(Rule::Orient1);
          swap_views();
          break;
        case SymbolKind::EmptyListVar:
          if (!look_ahead(*right, n)) {
            // The right side is one bare list variable; re-orient instead of
            // consuming the emptied head.
            out.push_back(Rule::Orient2);
            swap_views();
            break;
          }
          out.push_back(Rule::Subst2);
          ++m;
          break;
        case SymbolKind::Empty: throw impossible("shorter block against exhausted side");
      }
      continue;
    }

    if (count_left > count_right) {
      if (!look_ahead(*left, m)) {
        out.push_back(Rule::Subst1);
        return out;
      }
      switch (symbol_type(*right, n)) {
        case SymbolKind::ListVar:
          out.push_back(Rule::Decomp2);
          m += 1 + count_right;
          n += 1 + count_right;
          break;
        case SymbolKind::AtomVar:
        case SymbolKind::AtomExpr:
          out.push_back(Rule::Subst3);
          ++m;
          ++n;
          break;
        case SymbolKind::EmptyListVar:
          // The emptied variable is consumed; the left block carries over to
          // the fresh variable, so only the right head advances.
          out.push_back(Rule::Decomp2);
          ++n;
          break;
        case SymbolKind::Empty: throw impossible("longer block against exhausted side");
      }
      continue;
    }

    // Equal look-ahead counts.
    if (count_left > 0) {
      if (!look_ahead(*left, m)) {
        out.push_back(Rule::Subst1);
        return out;
      }
      out.push_back(Rule::Decomp1);
      m += 1 + count_left;
      n += 1 + count_left;
      continue;
    }

    SymbolKind ks = symbol_type(*left, m);
    SymbolKind kt = symbol_type(*right, n);
    switch (ks) {
      case SymbolKind::ListVar:
        switch (kt) {
          case SymbolKind::ListVar:
          case SymbolKind::AtomVar:
          case SymbolKind::AtomExpr:
            if (!look_ahead(*left, m)) {
              out.push_back(Rule::Subst1);
              return out;
            }
            out.push_back(Rule::Decomp1);
            ++m;
            ++n;
            break;
          case SymbolKind::EmptyListVar:
            if (!look_ahead(*left, m)) {
              out.push_back(Rule::Subst1);
              return out;
            }
            // As with the longer-block case: the left block carries over.
            out.push_back(Rule::Decomp2);
            ++n;
            break;
          case SymbolKind::Empty: throw impossible("list block against exhausted side");
        }
        break;

      case SymbolKind::AtomVar:
        switch (kt) {
          case SymbolKind::ListVar:
          case SymbolKind::EmptyListVar:
            out.push_back(Rule::Orient3);
            swap_views();
            break;
          case SymbolKind::AtomVar:
          case SymbolKind::AtomExpr:
            if (!right_fits_left()) {
              out.push_back(Rule::Orient3);
              swap_views();
              break;
            }
            if (!look_ahead(*left, m)) {
              if (!look_ahead(*right, n)) {
                out.push_back(Rule::Subst1);
                return out;
              }
              out.push_back(Rule::Decomp4);
              ++m;
              ++n;
            } else {
              out.push_back(Rule::Decomp1P);
              ++m;
              ++n;
            }
            break;
          case SymbolKind::Empty: throw impossible("atom variable against exhausted side");
        }
        break;

      case SymbolKind::AtomExpr:
        switch (kt) {
          case SymbolKind::ListVar:
          case SymbolKind::AtomVar:
          case SymbolKind::EmptyListVar:
            out.push_back(Rule::Orient1);
            swap_views();
            break;
          case SymbolKind::AtomExpr:
            if (left->cells()[m].unit != right->cells()[n].unit)
              throw impossible("distinct constants at aligned positions");
            out.push_back(Rule::Decomp3);
            ++m;
            ++n;
            break;
          case SymbolKind::Empty: throw impossible("constant against exhausted side");
        }
        break;

      case SymbolKind::EmptyListVar:
        switch (kt) {
          case SymbolKind::ListVar:
            if (!look_ahead(*right, n)) {
              out.push_back(Rule::Orient2);
              swap_views();
              break;
            }
            out.push_back(Rule::Subst2);
            ++m;
            break;
          case SymbolKind::AtomVar:
          case SymbolKind::AtomExpr:
            out.push_back(Rule::Subst2);
            ++m;
            break;
          case SymbolKind::EmptyListVar:
            if (!look_ahead(*left, m)) {
              out.push_back(Rule::Subst1);
              return out;
            }
            out.push_back(Rule::Decomp1);
            ++m;
            ++n;
            break;
          case SymbolKind::Empty:
            out.push_back(Rule::Subst1);
            return out;
        }
        break;

      case SymbolKind::Empty:
        switch (kt) {
          case SymbolKind::ListVar:
          case SymbolKind::AtomVar:
          case SymbolKind::AtomExpr: throw impossible("exhausted side against live symbol");
          case SymbolKind::EmptyListVar:
            out.push_back(Rule::Orient4);
            swap_views();
            break;
          case SymbolKind::Empty:
            out.push_back(Rule::Remove);
            return out;
        }
        break;
    }
  }
}

SelectionOutcome verify_selection(const Problem& initial, const std::vector<Rule>& path,
                                  const Substitution& delta) {
  VarSet problem_vars = variables(initial.eq.lhs);
  {
    VarSet rv = variables(initial.eq.rhs);
    problem_vars.insert(rv.begin(), rv.end());
    VarSet dom = initial.accumulated.domain();
    problem_vars.insert(dom.begin(), dom.end());
  }
  FreshVars fresh;
  {
    VarSet all = problem_vars;
    VarSet ran = initial.accumulated.range_variables();
    all.insert(ran.begin(), ran.end());
    fresh.seed(all);
  }

  Problem current = initial;
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::string step = "step " + std::to_string(i + 1) + " (" +
                       std::string(to_string(path[i])) + ")";
    if (current.solved) throw VerifyError(step + ": the path continues past a solved problem");
    if (auto fail = check_failure(current.eq))
      throw VerifyError(step + ": the problem already failed by " +
                        std::string(to_string(*fail)));
    const Problem* next = nullptr;
    auto succ = successors(current, fresh);
    for (const auto& [rule, child] : succ)
      if (rule == path[i]) {
        next = &child;
        break;
      }
    if (!next)
      throw VerifyError(step + ": rule not applicable to '" + to_string(current.eq.lhs) +
                        " = " + to_string(current.eq.rhs) + "'");
    current = *next;
  }
  if (!current.solved)
    throw VerifyError("the selection path does not end in a solved problem");

  SelectionOutcome outcome;
  outcome.unifier = restrict_to(current.accumulated, problem_vars);
  auto witness = more_general(outcome.unifier, delta, problem_vars);
  if (!witness)
    throw VerifyError("the path unifier is not more general than the given one");
  outcome.witness = std::move(*witness);
  return outcome;
}

}  // namespace aulist
