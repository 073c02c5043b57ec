#include "monader/expr.hpp"

#include <algorithm>

#include "monader/error.hpp"
#include "monader/lift.hpp"

namespace monader {

struct Expr::Node {
  ExprKind kind;
  SemiringId sr;
  Symbol sym = 0;
  std::optional<Weight> weight;
  std::optional<FnRef> fn;
  std::vector<Expr> kids;
  std::optional<Weight> part_null;
  std::size_t size = 1;
  std::size_t occurrences = 0;
};

namespace {

void require_same(SemiringId a, SemiringId b, const char* what) {
  if (a != b) {
    throw SemiringMismatch(std::string(what) + ": operands over " +
                           std::string(semiring_name(a)) + " and " +
                           std::string(semiring_name(b)));
  }
}

}  // namespace

Expr Expr::sym(Symbol a, SemiringId sr) {
  if (a < 'a' || a > 'z') throw SyntaxError(0, std::string("'") + a + "' is not a symbol");
  Node n{ExprKind::Sym, sr};
  n.sym = a;
  n.part_null = Weight::zero(sr);
  n.occurrences = 1;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::epsilon(SemiringId sr) {
  Node n{ExprKind::Epsilon, sr};
  n.part_null = Weight::one(sr);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::empty(SemiringId sr) {
  Node n{ExprKind::Empty, sr};
  n.part_null = Weight::zero(sr);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::sum(Expr l, Expr r) {
  require_same(l.semiring(), r.semiring(), "sum");
  Node n{ExprKind::Sum, l.semiring()};
  n.part_null = lift_2(sr_add, l.part_null(), r.part_null());
  n.size = 1 + l.size() + r.size();
  n.occurrences = l.symbol_occurrences() + r.symbol_occurrences();
  n.kids = {std::move(l), std::move(r)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::cat(Expr l, Expr r) {
  require_same(l.semiring(), r.semiring(), "concatenation");
  Node n{ExprKind::Cat, l.semiring()};
  n.part_null = lift_2(sr_mul, l.part_null(), r.part_null());
  n.size = 1 + l.size() + r.size();
  n.occurrences = l.symbol_occurrences() + r.symbol_occurrences();
  n.kids = {std::move(l), std::move(r)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::star(Expr e) {
  Node n{ExprKind::Star, e.semiring()};
  const auto& inner = e.part_null();
  if (inner) {
    // Starred semirings take k*; otherwise only 0* = 1 is admissible.
    if (is_starred(e.semiring()) || inner->is_zero()) n.part_null = sr_star(*inner);
  }
  n.size = 1 + e.size();
  n.occurrences = e.symbol_occurrences();
  n.kids = {std::move(e)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::lact(Weight k, Expr e) {
  require_same(k.semiring(), e.semiring(), "left action");
  Node n{ExprKind::LAct, e.semiring()};
  if (e.part_null()) n.part_null = sr_mul(k, *e.part_null());
  n.size = 1 + e.size();
  n.occurrences = e.symbol_occurrences();
  n.weight = std::move(k);
  n.kids = {std::move(e)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::ract(Expr e, Weight k) {
  require_same(k.semiring(), e.semiring(), "right action");
  Node n{ExprKind::RAct, e.semiring()};
  if (e.part_null()) n.part_null = sr_mul(*e.part_null(), k);
  n.size = 1 + e.size();
  n.occurrences = e.symbol_occurrences();
  n.weight = std::move(k);
  n.kids = {std::move(e)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::apply(FnRef f, std::vector<Expr> args) {
  if (args.size() != f.arity()) {
    throw ArityMismatch(f.name() + " expects " + std::to_string(f.arity()) + " arguments, got " +
                        std::to_string(args.size()));
  }
  if (args.empty()) throw ArityMismatch(f.name() + " must take at least one argument");
  for (const auto& a : args) require_same(f.semiring(), a.semiring(), f.name().c_str());
  Node n{ExprKind::Apply, f.semiring()};
  std::vector<std::optional<Weight>> nulls;
  for (const auto& a : args) {
    nulls.push_back(a.part_null());
    n.size += a.size();
    n.occurrences += a.symbol_occurrences();
  }
  n.part_null = lift_n<Weight>([&](std::span<const Weight> xs) { return f(xs); },
                               std::span<const std::optional<Weight>>(nulls));
  n.fn = std::move(f);
  n.kids = std::move(args);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

ExprKind Expr::kind() const { return node_->kind; }
SemiringId Expr::semiring() const { return node_->sr; }
Symbol Expr::symbol() const { return node_->sym; }
const Weight& Expr::weight() const { return *node_->weight; }
const FnRef& Expr::fn() const { return *node_->fn; }
const std::vector<Expr>& Expr::children() const { return node_->kids; }
const std::optional<Weight>& Expr::part_null() const { return node_->part_null; }
std::size_t Expr::size() const { return node_->size; }
std::size_t Expr::symbol_occurrences() const { return node_->occurrences; }

std::strong_ordering compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ExprKind::Sym: return a.symbol() <=> b.symbol();
    case ExprKind::Epsilon:
    case ExprKind::Empty: return std::strong_ordering::equal;
    case ExprKind::LAct:
      if (auto c = text_compare(a.weight(), b.weight()); c != 0) return c;
      return compare(a.child(), b.child());
    case ExprKind::RAct:
      if (auto c = compare(a.child(), b.child()); c != 0) return c;
      return text_compare(a.weight(), b.weight());
    case ExprKind::Apply:
      if (auto c = a.fn().name() <=> b.fn().name(); c != 0) return c;
      break;
    default: break;
  }
  const auto& xs = a.children();
  const auto& ys = b.children();
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    if (auto c = compare(xs[i], ys[i]); c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) { return compare(a, b); }
bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

bool is_plain(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::LAct:
    case ExprKind::RAct:
    case ExprKind::Apply: return false;
    default:
      return std::all_of(e.children().begin(), e.children().end(), is_plain);
  }
}

namespace {

void collect_symbols(const Expr& e, std::set<Symbol>& out) {
  if (e.is(ExprKind::Sym)) out.insert(e.symbol());
  for (const auto& c : e.children()) collect_symbols(c, out);
}

}  // namespace

std::set<Symbol> symbols_of(const Expr& e) {
  std::set<Symbol> out;
  collect_symbols(e, out);
  return out;
}

Alphabet::Alphabet(std::set<Symbol> symbols) : symbols_(symbols.begin(), symbols.end()) {
  if (symbols_.empty()) throw Error("alphabet must not be empty");
  for (Symbol a : symbols_) {
    if (a < 'a' || a > 'z') throw Error(std::string("'") + a + "' is not a lowercase letter");
  }
}

Alphabet Alphabet::infer(const Expr& e, const std::set<Symbol>& extra) {
  std::set<Symbol> all = symbols_of(e);
  all.insert(extra.begin(), extra.end());
  if (all.empty()) all.insert('a');
  return Alphabet(std::move(all));
}

bool Alphabet::contains(Symbol a) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), a);
}

std::vector<Word> Alphabet::words_up_to(std::size_t max_len) const {
  std::vector<Word> out{""};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol a : symbols_) out.push_back(out[i] + a);
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

// 0: sum, 1: concatenation, 2: scalar action, 3: atom with postfix stars.
int level(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Sum: return 0;
    case ExprKind::Cat: return 1;
    case ExprKind::LAct:
    case ExprKind::RAct: return 2;
    default: return 3;
  }
}

void print(const Expr& e, std::string& out);

void print_at(const Expr& e, bool bare, std::string& out) {
  if (!bare) out += '(';
  print(e, out);
  if (!bare) out += ')';
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Sym: out += e.symbol(); return;
    case ExprKind::Epsilon: out += "eps"; return;
    case ExprKind::Empty: out += "nil"; return;
    case ExprKind::Sum:
      print_at(e.left(), level(e.left()) >= 1, out);
      out += '+';
      print(e.right(), out);
      return;
    case ExprKind::Cat:
      print_at(e.left(), level(e.left()) >= 2, out);
      out += '.';
      print_at(e.right(), level(e.right()) >= 1, out);
      return;
    case ExprKind::Star:
      print_at(e.child(), level(e.child()) == 3, out);
      out += '*';
      return;
    case ExprKind::LAct: {
      out += '{' + e.weight().to_string() + '}';
      const Expr& c = e.child();
      bool bare = level(c) == 3 || (c.is(ExprKind::RAct) && level(c.child()) == 3);
      print_at(c, bare, out);
      return;
    }
    case ExprKind::RAct:
      print_at(e.child(), level(e.child()) == 3, out);
      out += '{' + e.weight().to_string() + '}';
      return;
    case ExprKind::Apply:
      out += e.fn().name();
      out += '(';
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ',';
        print(e.children()[i], out);
      }
      out += ')';
      return;
  }
}

}  // namespace

std::string pretty(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace canon {

namespace {

void flatten_sum(const Expr& e, std::vector<Expr>& out) {
  if (e.is(ExprKind::Sum)) {
    flatten_sum(e.left(), out);
    flatten_sum(e.right(), out);
  } else if (!e.is(ExprKind::Empty)) {
    out.push_back(e);
  }
}

}  // namespace

Expr sum_of(std::vector<Expr> operands, SemiringId sr) {
  std::vector<Expr> flat;
  for (const auto& o : operands) flatten_sum(o, flat);
  std::sort(flat.begin(), flat.end());
  if (is_idempotent(sr)) flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return Expr::empty(sr);
  Expr acc = flat.back();
  for (auto it = flat.rbegin() + 1; it != flat.rend(); ++it) acc = Expr::sum(*it, acc);
  return acc;
}

Expr sum(const Expr& l, const Expr& r) {
  if (l.semiring() != r.semiring()) return Expr::sum(l, r);  // throws
  return sum_of({l, r}, l.semiring());
}

Expr cat(const Expr& l, const Expr& r) {
  if (l.is(ExprKind::Empty) || r.is(ExprKind::Empty)) {
    if (l.semiring() != r.semiring()) return Expr::cat(l, r);  // throws
    return Expr::empty(l.semiring());
  }
  if (l.is(ExprKind::Epsilon)) return r;
  if (r.is(ExprKind::Epsilon)) return l;
  if (l.is(ExprKind::Cat)) return cat(l.left(), cat(l.right(), r));
  return Expr::cat(l, r);
}

Expr star(const Expr& e) {
  if (e.is(ExprKind::Empty)) return Expr::epsilon(e.semiring());
  if (e.is(ExprKind::Epsilon) && is_starred(e.semiring())) return e;
  return Expr::star(e);
}

Expr lact(const Weight& k, const Expr& e) {
  if (k.semiring() != e.semiring()) return Expr::lact(k, e);  // throws
  if (k.is_zero() || e.is(ExprKind::Empty)) return Expr::empty(e.semiring());
  if (k.is_one()) return e;
  if (e.is(ExprKind::LAct)) return lact(sr_mul(k, e.weight()), e.child());
  return Expr::lact(k, e);
}

Expr ract(const Expr& e, const Weight& k) {
  if (k.semiring() != e.semiring()) return Expr::ract(e, k);  // throws
  if (k.is_zero() || e.is(ExprKind::Empty)) return Expr::empty(e.semiring());
  if (k.is_one()) return e;
  if (e.is(ExprKind::RAct)) return ract(e.child(), sr_mul(e.weight(), k));
  return Expr::ract(e, k);
}

Expr apply(const FnRef& f, std::vector<Expr> args) { return Expr::apply(f, std::move(args)); }

}  // namespace canon

Expr normalize(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Sym:
    case ExprKind::Epsilon:
    case ExprKind::Empty: return e;
    case ExprKind::Sum: return canon::sum(normalize(e.left()), normalize(e.right()));
    case ExprKind::Cat: return canon::cat(normalize(e.left()), normalize(e.right()));
    case ExprKind::Star: return canon::star(normalize(e.child()));
    case ExprKind::LAct: return canon::lact(e.weight(), normalize(e.child()));
    case ExprKind::RAct: return canon::ract(normalize(e.child()), e.weight());
    case ExprKind::Apply: {
      std::vector<Expr> args;
      args.reserve(e.children().size());
      for (const auto& c : e.children()) args.push_back(normalize(c));
      return canon::apply(e.fn(), std::move(args));
    }
  }
  return e;
}

}  // namespace monader
