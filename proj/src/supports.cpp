#include "monader/supports.hpp"

#include <sstream>

namespace monader {

std::string_view support_name(SupportKind k) {
  switch (k) {
    case SupportKind::Maybe: return "maybe";
    case SupportKind::Set: return "set";
    case SupportKind::LinComb: return "lincomb";
    case SupportKind::GradComb: return "gradcomb";
  }
  return "?";
}

std::optional<SupportKind> support_from_name(std::string_view name) {
  for (auto k : {SupportKind::Maybe, SupportKind::Set, SupportKind::LinComb, SupportKind::GradComb}) {
    if (support_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

void require_bool(const Weight& k) {
  if (k.semiring() != SemiringId::Boolean) throw SemiringMismatch("boolean support expects a boolean weight");
}

void require(SemiringId sr, const Weight& k) {
  if (k.semiring() != sr) throw SemiringMismatch("weight is over " + std::string(semiring_name(k.semiring())));
}

void check_arity(const FnRef& f, std::size_t n) {
  if (f.arity() != n) {
    throw ArityMismatch(f.name() + " expects " + std::to_string(f.arity()) + " arguments, got " +
                        std::to_string(n));
  }
}

template <class S>
std::vector<Expr> exps_of(const S& s, const std::vector<typename S::template M<Expr>>& args) {
  std::vector<Expr> out;
  for (const auto& a : args) out.push_back(s.to_exp(a));
  return out;
}

Expr linear_to_exp(const LinComb<Expr>& l) {
  std::vector<Expr> terms;
  for (const auto& [e, k] : l) terms.push_back(canon::lact(k, e));
  return canon::sum_of(std::move(terms), l.semiring());
}

Expr render_op(const OperadTerm& o, std::span<const Expr> in, SemiringId sr) {
  using K = OperadTerm::Kind;
  switch (o.kind()) {
    case K::Id: return in[0];
    case K::Prim: return canon::apply(o.fn(), std::vector<Expr>(in.begin(), in.end()));
    case K::Sum: return canon::sum_of(std::vector<Expr>(in.begin(), in.end()), sr);
    case K::ScaleLeft: return canon::lact(o.scalar(), in[0]);
    case K::ScaleRight: return canon::ract(in[0], o.scalar());
    case K::Prod: {
      const OperadTerm& l = o.children()[0];
      const OperadTerm& r = o.children()[1];
      return canon::apply(product_function(sr), {render_op(l, in.subspan(0, l.arity()), sr),
                                                 render_op(r, in.subspan(l.arity()), sr)});
    }
    case K::Comp: break;
  }
  std::vector<Expr> args;
  std::size_t pos = 0;
  for (const auto& c : o.children()) {
    args.push_back(render_op(c, in.subspan(pos, c.arity()), sr));
    pos += c.arity();
  }
  return render_op(o.head(), args, sr);
}

}  // namespace

// Maybe ---------------------------------------------------------------------

Maybe<Expr> MaybeSupport::plus(const Maybe<Expr>& a, const Maybe<Expr>& b) const {
  if (!a) return b;
  if (!b) return a;
  return pure(canon::sum(*a, *b));
}

Maybe<Expr> MaybeSupport::rtimes(const Maybe<Expr>& m, const Expr& f) const {
  Expr nf = normalize(f);
  return fmap(m, [&](const Expr& e) { return canon::cat(e, nf); });
}

Maybe<Expr> MaybeSupport::lact(const Weight& k, const Maybe<Expr>& m) const {
  require_bool(k);
  return k.as_bool() ? m : std::nullopt;
}

Maybe<Expr> MaybeSupport::ract(const Maybe<Expr>& m, const Weight& k) const {
  require_bool(k);
  return k.as_bool() ? m : std::nullopt;
}

Maybe<Expr> MaybeSupport::fapply(const FnRef& f, const std::vector<Maybe<Expr>>& args) const {
  check_arity(f, args.size());
  return pure(canon::apply(f, exps_of(*this, args)));
}

Expr MaybeSupport::to_exp(const Maybe<Expr>& m) const {
  return m ? *m : Expr::empty(SemiringId::Boolean);
}

Maybe<Top> MaybeSupport::embed(const Weight& k) const {
  require_bool(k);
  if (!k.as_bool()) return std::nullopt;
  return Top{};
}

Weight MaybeSupport::weight_value(const Maybe<Top>& m) const { return Weight::boolean(m.has_value()); }

// Set -----------------------------------------------------------------------

std::set<Expr> SetSupport::plus(const std::set<Expr>& a, const std::set<Expr>& b) const {
  std::set<Expr> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<Expr> SetSupport::rtimes(const std::set<Expr>& m, const Expr& f) const {
  Expr nf = normalize(f);
  return fmap(m, [&](const Expr& e) { return canon::cat(e, nf); });
}

std::set<Expr> SetSupport::lact(const Weight& k, const std::set<Expr>& m) const {
  require_bool(k);
  return k.as_bool() ? m : std::set<Expr>{};
}

std::set<Expr> SetSupport::ract(const std::set<Expr>& m, const Weight& k) const {
  require_bool(k);
  return k.as_bool() ? m : std::set<Expr>{};
}

std::set<Expr> SetSupport::fapply(const FnRef& f, const std::vector<std::set<Expr>>& args) const {
  check_arity(f, args.size());
  return pure(canon::apply(f, exps_of(*this, args)));
}

Expr SetSupport::to_exp(const std::set<Expr>& m) const {
  return canon::sum_of({m.begin(), m.end()}, SemiringId::Boolean);
}

std::set<Top> SetSupport::embed(const Weight& k) const {
  require_bool(k);
  if (!k.as_bool()) return {};
  return {Top{}};
}

Weight SetSupport::weight_value(const std::set<Top>& m) const { return Weight::boolean(!m.empty()); }

// LinComb -------------------------------------------------------------------

LinComb<Expr> LinCombSupport::plus(const LinComb<Expr>& a, const LinComb<Expr>& b) const {
  LinComb<Expr> out = a;
  out.add_all(b);
  return out;
}

LinComb<Expr> LinCombSupport::rtimes(const LinComb<Expr>& m, const Expr& f) const {
  Expr nf = normalize(f);
  return fmap(m, [&](const Expr& e) { return canon::cat(e, nf); });
}

LinComb<Expr> LinCombSupport::lact(const Weight& k, const LinComb<Expr>& m) const {
  require(sr, k);
  return m.scaled(k);
}

LinComb<Expr> LinCombSupport::ract(const LinComb<Expr>& m, const Weight& k) const {
  require(sr, k);
  return fmap(m, [&](const Expr& e) { return canon::ract(e, k); });
}

LinComb<Expr> LinCombSupport::fapply(const FnRef& f, const std::vector<LinComb<Expr>>& args) const {
  check_arity(f, args.size());
  return pure(canon::apply(f, exps_of(*this, args)));
}

Expr LinCombSupport::to_exp(const LinComb<Expr>& m) const { return linear_to_exp(m); }

LinComb<Top> LinCombSupport::embed(const Weight& k) const {
  require(sr, k);
  return LinComb<Top>::single(sr, Top{}, k);
}

Weight LinCombSupport::weight_value(const LinComb<Top>& m) const { return m.coefficient_sum(); }

// GradComb ------------------------------------------------------------------

Graded<Expr> GradCombSupport::plus(const Graded<Expr>& a, const Graded<Expr>& b) const {
  Graded<Expr> out{sr, op_compose(OperadTerm::sum(2), {a.op, b.op}), a.slots};
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  return tidy(out);
}

Graded<Expr> GradCombSupport::rtimes(const Graded<Expr>& m, const Expr& f) const {
  return pure(canon::cat(to_exp(m), normalize(f)));
}

Graded<Expr> GradCombSupport::lact(const Weight& k, const Graded<Expr>& m) const {
  require(sr, k);
  return tidy(Graded<Expr>{sr, op_compose(OperadTerm::scale_left(k), {m.op}), m.slots});
}

Graded<Expr> GradCombSupport::ract(const Graded<Expr>& m, const Weight& k) const {
  require(sr, k);
  return tidy(Graded<Expr>{sr, op_compose(OperadTerm::scale_right(k), {m.op}), m.slots});
}

Graded<Expr> GradCombSupport::fapply(const FnRef& f, const std::vector<Graded<Expr>>& args) const {
  check_arity(f, args.size());
  if (f.semiring() != sr) throw SemiringMismatch(f.name() + " is over " + std::string(semiring_name(f.semiring())));
  Graded<Expr> out{sr, OperadTerm::id(), {}};
  std::vector<OperadTerm> ops;
  for (const auto& a : args) {
    ops.push_back(a.op);
    out.slots.insert(out.slots.end(), a.slots.begin(), a.slots.end());
  }
  out.op = op_compose(OperadTerm::prim(f), std::move(ops));
  return tidy(out);
}

Expr GradCombSupport::to_exp(const Graded<Expr>& m) const { return graded_to_exp(m); }

Graded<Top> GradCombSupport::embed(const Weight& k) const {
  require(sr, k);
  return tidy(Graded<Top>{sr, OperadTerm::id(), {LinComb<Top>::single(sr, Top{}, k)}});
}

Weight GradCombSupport::weight_value(const Graded<Top>& m) const {
  std::vector<Weight> sums;
  for (const auto& slot : m.slots) sums.push_back(slot.coefficient_sum());
  return op_eval(m.op, sums, sr);
}

Graded<Top> GradCombSupport::times(const Graded<Top>& a, const Graded<Top>& b) const {
  Graded<Top> out{sr, OperadTerm::prod(a.op, b.op), a.slots};
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  return tidy(out);
}

Expr graded_to_exp(const Graded<Expr>& g) {
  std::vector<Expr> args;
  for (const auto& slot : g.slots) args.push_back(linear_to_exp(slot));
  return normalize(render_op(g.op, args, g.sr));
}

// Runtime facade ------------------------------------------------------------

void validate(const SupportId& id) {
  if ((id.kind == SupportKind::Maybe || id.kind == SupportKind::Set) && id.semiring != SemiringId::Boolean) {
    throw SupportMismatch(std::string(support_name(id.kind)) + " support requires the bool semiring");
  }
}

std::string to_string(const SupportId& id) {
  return std::string(support_name(id.kind)) + "/" + std::string(semiring_name(id.semiring));
}

AnySupport make_support(const SupportId& id) {
  validate(id);
  switch (id.kind) {
    case SupportKind::Maybe: return MaybeSupport{};
    case SupportKind::Set: return SetSupport{};
    case SupportKind::LinComb: return LinCombSupport{id.semiring};
    case SupportKind::GradComb: return GradCombSupport{id.semiring};
  }
  throw SupportMismatch("unknown support");
}

SupportKind kind_of(const SupportValue& v) { return static_cast<SupportKind>(v.index()); }

SupportValue sv_pure(const SupportId& id, const Expr& e) {
  return with_support(id, [&](const auto& s) -> SupportValue { return s.pure(e); });
}

SupportValue sv_zero(const SupportId& id) {
  return with_support(id, [&](const auto& s) -> SupportValue { return s.zero(); });
}

SupportValue sv_plus(const SupportId& id, const SupportValue& a, const SupportValue& b) {
  return with_support(id, [&](const auto& s) -> SupportValue {
    using S = std::decay_t<decltype(s)>;
    return s.plus(value_as<S>(a), value_as<S>(b));
  });
}

SupportValue sv_rtimes(const SupportId& id, const SupportValue& m, const Expr& f) {
  return with_support(id, [&](const auto& s) -> SupportValue {
    using S = std::decay_t<decltype(s)>;
    return s.rtimes(value_as<S>(m), f);
  });
}

SupportValue sv_lact(const SupportId& id, const Weight& k, const SupportValue& m) {
  return with_support(id, [&](const auto& s) -> SupportValue {
    using S = std::decay_t<decltype(s)>;
    return s.lact(k, value_as<S>(m));
  });
}

SupportValue sv_ract(const SupportId& id, const SupportValue& m, const Weight& k) {
  return with_support(id, [&](const auto& s) -> SupportValue {
    using S = std::decay_t<decltype(s)>;
    return s.ract(value_as<S>(m), k);
  });
}

SupportValue sv_fapply(const SupportId& id, const FnRef& f, const std::vector<SupportValue>& args) {
  return with_support(id, [&](const auto& s) -> SupportValue {
    using S = std::decay_t<decltype(s)>;
    std::vector<typename S::template M<Expr>> vs;
    for (const auto& a : args) vs.push_back(value_as<S>(a));
    return s.fapply(f, vs);
  });
}

Expr sv_to_exp(const SupportId& id, const SupportValue& m) {
  return with_support(id, [&](const auto& s) -> Expr {
    using S = std::decay_t<decltype(s)>;
    return s.to_exp(value_as<S>(m));
  });
}

std::vector<Expr> sv_carriers(const SupportValue& m) {
  return std::visit(
      [](const auto& v) -> std::vector<Expr> {
        using V = std::decay_t<decltype(v)>;
        std::vector<Expr> out;
        if constexpr (std::is_same_v<V, Maybe<Expr>>) {
          if (v) out.push_back(*v);
        } else if constexpr (std::is_same_v<V, std::set<Expr>>) {
          out.assign(v.begin(), v.end());
        } else if constexpr (std::is_same_v<V, LinComb<Expr>>) {
          for (const auto& [e, _] : v) out.push_back(e);
        } else {
          for (const auto& slot : v.slots)
            for (const auto& [e, _] : slot) out.push_back(e);
        }
        return out;
      },
      m);
}

namespace {

std::string render_linear(const LinComb<Expr>& l) {
  std::string out;
  for (const auto& [e, k] : l) {
    if (!out.empty()) out += " + ";
    out += k.to_string() + " ⊙ " + pretty(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render(const SupportValue& m) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Maybe<Expr>>) {
          os << (v ? pretty(*v) : "nil") << '\n';
        } else if constexpr (std::is_same_v<V, std::set<Expr>>) {
          for (const auto& e : v) os << pretty(e) << '\n';
        } else if constexpr (std::is_same_v<V, LinComb<Expr>>) {
          for (const auto& [e, k] : v) os << k.to_string() << " ⊙ " << pretty(e) << '\n';
        } else {
          os << "op: " << to_string(v.op) << '\n';
          for (std::size_t i = 0; i < v.slots.size(); ++i) {
            os << "slot " << i + 1 << ": " << render_linear(v.slots[i]) << '\n';
          }
        }
      },
      m);
  return os.str();
}

}  // namespace monader
