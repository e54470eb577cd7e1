#pragma once

#include <utility>
#include <vector>

#include "aulist/engine.hpp"

namespace aulist {

enum class SymbolKind : std::uint8_t { ListVar, AtomVar, AtomExpr, EmptyListVar, Empty };
std::string_view to_string(SymbolKind k);

// Per-symbol tape of one side of an equation expanded under a known unifier:
// a variable whose image has n >= 1 symbols becomes n pseudo-variable cells
// that keep it as parent, a variable with the empty image becomes a single
// empty-marker cell, and a constant stays itself. The shorter tape is padded;
// positions at or beyond real_size() read as the Empty symbol.
class Tape {
 public:
  struct Cell {
    enum class Kind : std::uint8_t { Pseudo, EmptyMark, Atom, Pad };
    Kind kind = Kind::Pad;
    Var parent;             // Pseudo, EmptyMark
    std::size_t index = 0;  // 1-based position of a Pseudo cell in its block
    Unit unit;              // Atom
  };

  explicit Tape(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t real_size() const { return real_size_; }
  std::size_t padded_size() const { return cells_.size(); }
  void pad_to(std::size_t n);

 private:
  std::vector<Cell> cells_;
  std::size_t real_size_ = 0;
};

// Expands both sides under delta; throws InputError if delta does not unify
// s = t.
std::pair<Tape, Tape> preprocess(const NormalExpr& s, const NormalExpr& t,
                                 const Substitution& delta);

// Number of pseudo-variable cells with the same parent immediately right of
// position k (0-based); 0 unless position k holds a pseudo-variable.
std::size_t lookahead_count(const Tape& tape, std::size_t k);

SymbolKind symbol_type(const Tape& tape, std::size_t k);

// True iff the first cell after the symbol at k (after the whole remaining
// block when k sits in a list-variable block) is neither a pad nor past the
// end.
bool look_ahead(const Tape& tape, std::size_t k);

// Computes a selection sequence tracing one root-to-leaf path of the
// derivation tree of <s = t> whose final unifier is at least as general as
// delta. Orient selections swap the tapes together with both head positions.
std::vector<Rule> select(const NormalExpr& s, const NormalExpr& t,
                         const Substitution& delta);

struct SelectionOutcome {
  Substitution unifier;  // the path's unifier, restricted to the problem variables
  Substitution witness;  // instantiation turning `unifier` into delta
};

// Replays a selection sequence through the transformation rules from the
// given problem. The path must stay failure-free, end solved, and yield a
// unifier more general than delta; throws VerifyError naming the failing
// step otherwise.
SelectionOutcome verify_selection(const Problem& initial, const std::vector<Rule>& path,
                                  const Substitution& delta);

}  // namespace aulist
