#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monader/functions.hpp"
#include "monader/weight.hpp"

namespace monader {

using Symbol = char;
using Word = std::string;

enum class ExprKind { Sym, Epsilon, Empty, Sum, Cat, Star, LAct, RAct, Apply };

// Immutable monadic expression over a single weight semiring. Every node
// knows its semiring and caches its partial nullability, so properness and
// Null are O(1) on any subterm.
class Expr {
 public:
  static Expr sym(Symbol a, SemiringId sr);
  static Expr epsilon(SemiringId sr);
  static Expr empty(SemiringId sr);
  static Expr sum(Expr l, Expr r);
  static Expr cat(Expr l, Expr r);
  static Expr star(Expr e);
  static Expr lact(Weight k, Expr e);
  static Expr ract(Expr e, Weight k);
  // Throws ArityMismatch / SemiringMismatch.
  static Expr apply(FnRef f, std::vector<Expr> args);

  ExprKind kind() const;
  bool is(ExprKind k) const { return kind() == k; }
  SemiringId semiring() const;

  Symbol symbol() const;                     // Sym
  const Weight& weight() const;              // LAct / RAct
  const FnRef& fn() const;                   // Apply
  const std::vector<Expr>& children() const; // Sum/Cat: {l, r}; Star/LAct/RAct: {e}; Apply: args
  const Expr& left() const { return children()[0]; }
  const Expr& right() const { return children()[1]; }
  const Expr& child() const { return children()[0]; }

  // PartNull: present iff the expression is proper.
  const std::optional<Weight>& part_null() const;
  bool is_proper() const { return part_null().has_value(); }

  std::size_t size() const;                // node count
  std::size_t symbol_occurrences() const;  // number of Sym leaves

  friend std::strong_ordering compare(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Structural total order: constructor tag, then children left to right;
// weights compare by canonical text, functions by name.
std::strong_ordering compare(const Expr& a, const Expr& b);

// True for expressions built only from symbols, ε, ∅, +, · and *.
bool is_plain(const Expr& e);

std::set<Symbol> symbols_of(const Expr& e);

// Ordered, duplicate-free set of lowercase letters.
class Alphabet {
 public:
  explicit Alphabet(std::set<Symbol> symbols);
  // Symbols occurring in e plus `extra`; {a} when both are empty.
  static Alphabet infer(const Expr& e, const std::set<Symbol>& extra = {});

  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool contains(Symbol a) const;
  std::string to_string() const { return std::string(symbols_.begin(), symbols_.end()); }

  // Every word of length <= max_len in length-lexicographic order.
  std::vector<Word> words_up_to(std::size_t max_len) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Concrete syntax with minimal parentheses; parse(pretty(e)) == e.
std::string pretty(const Expr& e);

// Canonical form used for state identity. Series-preserving rewrites applied
// bottom-up: ∅ and ε units, ∅ annihilation, right-nested concatenation, unit/zero/nested scalar actions,
// flattened sorted sums (duplicates merged only when + is idempotent),
// ∅* = ε, and ε* = ε in starred semirings.
Expr normalize(const Expr& e);

// Constructors that assume normalized operands and return normalized results.
namespace canon {
Expr sum(const Expr& l, const Expr& r);
Expr sum_of(std::vector<Expr> operands, SemiringId sr);
Expr cat(const Expr& l, const Expr& r);
Expr star(const Expr& e);
Expr lact(const Weight& k, const Expr& e);
Expr ract(const Expr& e, const Weight& k);
Expr apply(const FnRef& f, std::vector<Expr> args);
}  // namespace canon

}  // namespace monader
