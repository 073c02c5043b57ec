#include "monader/operad.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "monader/error.hpp"

namespace monader {

struct OperadTerm::Node {
  Kind kind;
  std::size_t arity;
  std::optional<FnRef> fn;
  std::optional<Weight> scalar;
  std::vector<OperadTerm> head;  // Comp: exactly one element
  std::vector<OperadTerm> kids;
};

OperadTerm OperadTerm::id() {
  static const OperadTerm t(std::make_shared<const Node>(Node{Kind::Id, 1, {}, {}, {}, {}}));
  return t;
}

OperadTerm OperadTerm::prim(FnRef f) {
  std::size_t n = f.arity();
  return OperadTerm(std::make_shared<const Node>(Node{Kind::Prim, n, std::move(f), {}, {}, {}}));
}

OperadTerm OperadTerm::sum(std::size_t n) {
  return OperadTerm(std::make_shared<const Node>(Node{Kind::Sum, n, {}, {}, {}, {}}));
}

OperadTerm OperadTerm::scale_left(Weight k) {
  return OperadTerm(std::make_shared<const Node>(Node{Kind::ScaleLeft, 1, {}, std::move(k), {}, {}}));
}

OperadTerm OperadTerm::scale_right(Weight k) {
  return OperadTerm(
      std::make_shared<const Node>(Node{Kind::ScaleRight, 1, {}, std::move(k), {}, {}}));
}

OperadTerm OperadTerm::prod(OperadTerm left, OperadTerm right) {
  std::size_t n = left.arity() + right.arity();
  return OperadTerm(std::make_shared<const Node>(
      Node{Kind::Prod, n, {}, {}, {}, {std::move(left), std::move(right)}}));
}

OperadTerm OperadTerm::comp(OperadTerm head, std::vector<OperadTerm> children) {
  if (children.size() != head.arity()) {
    throw ArityMismatch("composing " + to_string(head) + " of arity " +
                        std::to_string(head.arity()) + " with " +
                        std::to_string(children.size()) + " terms");
  }
  std::size_t n = 0;
  for (const auto& c : children) n += c.arity();
  return OperadTerm(std::make_shared<const Node>(
      Node{Kind::Comp, n, {}, {}, {std::move(head)}, std::move(children)}));
}

OperadTerm::Kind OperadTerm::kind() const { return node_->kind; }
std::size_t OperadTerm::arity() const { return node_->arity; }
const FnRef& OperadTerm::fn() const { return *node_->fn; }
std::size_t OperadTerm::sum_arity() const { return node_->arity; }
const Weight& OperadTerm::scalar() const { return *node_->scalar; }
const OperadTerm& OperadTerm::head() const { return node_->head.front(); }
const std::vector<OperadTerm>& OperadTerm::children() const { return node_->kids; }

bool operator==(const OperadTerm& a, const OperadTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  switch (a.kind()) {
    case OperadTerm::Kind::Id:
    case OperadTerm::Kind::Sum: return true;
    case OperadTerm::Kind::Prim: return a.fn() == b.fn();
    case OperadTerm::Kind::ScaleLeft:
    case OperadTerm::Kind::ScaleRight: return a.scalar() == b.scalar();
    case OperadTerm::Kind::Prod: return a.children() == b.children();
    case OperadTerm::Kind::Comp: return a.head() == b.head() && a.children() == b.children();
  }
  return false;
}

std::size_t op_arity(const OperadTerm& o) { return o.arity(); }

namespace {

using Kind = OperadTerm::Kind;

bool all_id(const std::vector<OperadTerm>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const OperadTerm& c) { return c.is(Kind::Id); });
}

bool is_node_with(const OperadTerm& t, Kind head_kind) {
  return t.is(Kind::Comp) && t.head().is(head_kind);
}

OperadTerm make_node(const OperadTerm& head, std::vector<OperadTerm> cs);

// Scalar leaf with the unit collapsed to Id.
OperadTerm scale_leaf(Kind k, Weight w) {
  if (w.is_one()) return OperadTerm::id();
  return k == Kind::ScaleLeft ? OperadTerm::scale_left(std::move(w))
                              : OperadTerm::scale_right(std::move(w));
}

// k (k' x) = (k k') x;  (x k') k = x (k' k).
Weight fuse(Kind k, const Weight& outer, const Weight& inner) {
  return k == Kind::ScaleLeft ? sr_mul(outer, inner) : sr_mul(inner, outer);
}

OperadTerm make_scale(const OperadTerm& head, const OperadTerm& c) {
  Kind k = head.kind();
  if (c.is(Kind::Sum) && c.sum_arity() == 0) return c;  // k * 0 = 0
  if (c.is(k)) return scale_leaf(k, fuse(k, head.scalar(), c.scalar()));
  if (is_node_with(c, k)) {
    OperadTerm fused = scale_leaf(k, fuse(k, head.scalar(), c.head().scalar()));
    const OperadTerm& inner = c.children().front();
    if (fused.is(Kind::Id)) return inner;
    return make_node(fused, {inner});
  }
  if (c.is(Kind::Id)) return head;
  return OperadTerm::comp(head, {c});
}

OperadTerm make_sum(std::vector<OperadTerm> cs) {
  std::vector<OperadTerm> flat;
  for (auto& c : cs) {
    if (c.is(Kind::Sum)) {
      for (std::size_t i = 0; i < c.sum_arity(); ++i) flat.push_back(OperadTerm::id());
    } else if (is_node_with(c, Kind::Sum)) {
      for (const auto& d : c.children()) flat.push_back(d);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) return flat.front();
  if (all_id(flat)) return OperadTerm::sum(flat.size());
  OperadTerm head = OperadTerm::sum(flat.size());
  return OperadTerm::comp(head, std::move(flat));
}

// `head` is a normalized leaf other than Id; every child is normalized.
OperadTerm make_node(const OperadTerm& head, std::vector<OperadTerm> cs) {
  switch (head.kind()) {
    case Kind::Sum: return make_sum(std::move(cs));
    case Kind::ScaleLeft:
    case Kind::ScaleRight: return make_scale(head, cs.front());
    default: break;
  }
  if (all_id(cs)) return head;
  return OperadTerm::comp(head, std::move(cs));
}

// Both sides already normalized.
OperadTerm compose_nf(const OperadTerm& h, std::vector<OperadTerm> cs) {
  switch (h.kind()) {
    case Kind::Id: return std::move(cs.front());
    case Kind::Prod: {
      const OperadTerm& l = h.children()[0];
      const OperadTerm& r = h.children()[1];
      auto mid = cs.begin() + static_cast<std::ptrdiff_t>(l.arity());
      std::vector<OperadTerm> lcs(cs.begin(), mid);
      std::vector<OperadTerm> rcs(mid, cs.end());
      return OperadTerm::prod(compose_nf(l, std::move(lcs)), compose_nf(r, std::move(rcs)));
    }
    case Kind::Comp: {
      std::vector<OperadTerm> inner;
      auto it = cs.begin();
      for (const auto& d : h.children()) {
        auto next = it + static_cast<std::ptrdiff_t>(d.arity());
        inner.push_back(compose_nf(d, std::vector<OperadTerm>(it, next)));
        it = next;
      }
      return make_node(h.head(), std::move(inner));
    }
    default: return make_node(h, std::move(cs));
  }
}

}  // namespace

OperadTerm op_normalize(const OperadTerm& o) {
  switch (o.kind()) {
    case Kind::Id:
    case Kind::Prim: return o;
    case Kind::Sum: return o.sum_arity() == 1 ? OperadTerm::id() : o;
    case Kind::ScaleLeft:
    case Kind::ScaleRight: return scale_leaf(o.kind(), o.scalar());
    case Kind::Prod:
      return OperadTerm::prod(op_normalize(o.children()[0]), op_normalize(o.children()[1]));
    case Kind::Comp: {
      std::vector<OperadTerm> cs;
      cs.reserve(o.children().size());
      for (const auto& c : o.children()) cs.push_back(op_normalize(c));
      return compose_nf(op_normalize(o.head()), std::move(cs));
    }
  }
  return o;
}

OperadTerm op_compose(const OperadTerm& o, std::vector<OperadTerm> children) {
  return op_normalize(OperadTerm::comp(o, std::move(children)));
}

OperadTerm op_compose_at(const OperadTerm& o, std::size_t j, const OperadTerm& p) {
  if (j < 1 || j > o.arity()) {
    throw IndexOutOfRange("slot " + std::to_string(j) + " of a term of arity " +
                          std::to_string(o.arity()));
  }
  std::vector<OperadTerm> cs(o.arity(), OperadTerm::id());
  cs[j - 1] = p;
  return op_compose(o, std::move(cs));
}

namespace {

Weight eval_at(const OperadTerm& o, std::span<const Weight> args, SemiringId sr) {
  switch (o.kind()) {
    case Kind::Id: return args.front();
    case Kind::Prim: return o.fn()(args);
    case Kind::Sum: {
      Weight acc = Weight::zero(sr);
      for (const auto& a : args) acc = sr_add(acc, a);
      return acc;
    }
    case Kind::ScaleLeft: return sr_mul(o.scalar(), args.front());
    case Kind::ScaleRight: return sr_mul(args.front(), o.scalar());
    case Kind::Prod: {
      std::size_t n = o.children()[0].arity();
      return sr_mul(eval_at(o.children()[0], args.first(n), sr),
                    eval_at(o.children()[1], args.subspan(n), sr));
    }
    case Kind::Comp: {
      std::vector<Weight> inner;
      std::size_t at = 0;
      for (const auto& c : o.children()) {
        inner.push_back(eval_at(c, args.subspan(at, c.arity()), sr));
        at += c.arity();
      }
      return eval_at(o.head(), inner, sr);
    }
  }
  throw Error("unreachable operad kind");
}

}  // namespace

Weight op_eval(const OperadTerm& o, std::span<const Weight> args, SemiringId sr) {
  if (args.size() != o.arity()) {
    throw ArityMismatch("evaluating a term of arity " + std::to_string(o.arity()) + " on " +
                        std::to_string(args.size()) + " arguments");
  }
  for (const auto& a : args) {
    if (a.semiring() != sr) throw SemiringMismatch("operad argument outside the active semiring");
  }
  return eval_at(o, args, sr);
}

std::string to_string(const OperadTerm& o) {
  switch (o.kind()) {
    case Kind::Id: return "Id";
    case Kind::Prim: return o.fn().name();
    case Kind::Sum: return "Sum" + std::to_string(o.sum_arity());
    case Kind::ScaleLeft: return "L[" + o.scalar().to_string() + "]";
    case Kind::ScaleRight: return "R[" + o.scalar().to_string() + "]";
    case Kind::Prod:
      return "Prod(" + to_string(o.children()[0]) + ", " + to_string(o.children()[1]) + ")";
    case Kind::Comp: {
      std::string h = to_string(o.head());
      if (o.head().is(Kind::Comp)) h = "(" + h + ")";
      std::string out = h + " o (";
      for (std::size_t i = 0; i < o.children().size(); ++i) {
        if (i) out += ", ";
        out += to_string(o.children()[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

class OperadParser {
 public:
  OperadParser(std::string_view text, const FnRegistry& reg) : s_(text), reg_(reg) {}

  OperadTerm parse() {
    OperadTerm t = term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  // A lone "o" followed by "(" introduces a composition.
  bool composition_follows() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != 'o') return false;
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    if (p < s_.size() && s_[p] == '(') {
      pos_ = p + 1;
      return true;
    }
    return false;
  }

  OperadTerm term() {
    OperadTerm h = head();
    if (!composition_follows()) return h;
    std::vector<OperadTerm> cs;
    do {
      cs.push_back(term());
    } while (eat(','));
    expect(')');
    return OperadTerm::comp(std::move(h), std::move(cs));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an operad term");
    return std::string(s_.substr(start, pos_ - start));
  }

  Weight bracketed_weight() {
    expect('[');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
    if (pos_ >= s_.size()) fail("unterminated scalar");
    std::string_view lit = s_.substr(start, pos_ - start);
    ++pos_;
    return Weight::parse(reg_.semiring(), lit);
  }

  OperadTerm head() {
    if (eat('(')) {
      OperadTerm t = term();
      expect(')');
      return t;
    }
    std::string name = identifier();
    if (name == "Id") return OperadTerm::id();
    if (name.size() > 3 && name.compare(0, 3, "Sum") == 0 &&
        std::all_of(name.begin() + 3, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return OperadTerm::sum(std::stoul(name.substr(3)));
    }
    if (name == "L") return OperadTerm::scale_left(bracketed_weight());
    if (name == "R") return OperadTerm::scale_right(bracketed_weight());
    if (name == "Prod") {
      expect('(');
      OperadTerm l = term();
      expect(',');
      OperadTerm r = term();
      expect(')');
      return OperadTerm::prod(std::move(l), std::move(r));
    }
    return OperadTerm::prim(reg_.lookup(name));
  }

  std::string_view s_;
  const FnRegistry& reg_;
  std::size_t pos_ = 0;
};

}  // namespace

OperadTerm parse_operad(std::string_view text, const FnRegistry& registry) {
  return OperadParser(text, registry).parse();
}

}  // namespace monader
