// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "helpers.hpp"
#include "monader/automaton.hpp"

using namespace monader;
using testing_helpers::ex;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const SupportId kLinNat{SupportKind::LinComb, SemiringId::Nat};
const SupportId kGradNat{SupportKind::GradComb, SemiringId::Nat};

Weight nat(long long v) { return Weight::from_int(SemiringId::Nat, v); }

// The four support/semiring pairs of the random corpus.
const std::vector<SupportId>& corpus_pairs() {
  static const std::vector<SupportId> p{{SupportKind::Maybe, SemiringId::Boolean},
                                        {SupportKind::Set, SemiringId::Boolean},
                                        kLinNat,
                                        kGradNat};
  return p;
}

std::vector<Expr> corpus(const SupportId& id) {
  RandomExprGen g(2024 + static_cast<int>(id.kind), GenOptions{id.semiring, {'a', 'b'}, 8, false});
  std::vector<Expr> out;
  for (int i = 0; i < 200; ++i) out.push_back(g.next());
  return out;
}

Outcome ac1() {
  Outcome o;
  Expr E = testing_helpers::ext_dist_e();
  for (const auto& id : {kLinNat, kGradNat}) {
    if (!(weight(id, E, "aaa") == nat(3))) o.fail(to_string(id) + ": weight(aaa) != 3");
    if (!(weight(id, E, "aab") == nat(0))) o.fail(to_string(id) + ": weight(aab) != 0");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  Expr E = testing_helpers::ext_dist_e();
  for (int n = 1; n <= 3; ++n) {
    Expr want = normalize(ex("ExtDist(a*.b*+a*,a*.b*,a*.b*.a*+{" + std::to_string(n) + "}a*)", SemiringId::Nat));
    for (const auto& id : {kLinNat, kGradNat}) {
      Expr got = normalize(sv_to_exp(id, derive_word(id, E, Word(n, 'a'))));
      if (!(got == want)) o.fail(to_string(id) + " n=" + std::to_string(n) + ": " + pretty(got));
    }
  }
  auto g = std::get<Graded<Expr>>(derive_word(kGradNat, E, "aab"));
  std::vector<LinComb<Expr>> slots;
  for (const char* s : {"b*", "b*", "b*.a*"})
    slots.push_back(LinComb<Expr>::single(SemiringId::Nat, normalize(ex(s, SemiringId::Nat)), nat(1)));
  FnRef ext = FnRegistry::builtins(SemiringId::Nat).lookup("ExtDist");
  if (!(g.op == OperadTerm::prim(ext)) || g.slots != slots) o.fail("d_aab under gradcomb: " + to_string(g.op));
  return o;
}

Outcome ac3() {
  Outcome o;
  Expr E = testing_helpers::ext_dist_e();
  DerivAutomaton g = build(kGradNat, E, 50);
  if (g.truncated || g.states.size() != 7)
    o.fail("gradcomb E: " + std::to_string(g.states.size()) + " states, truncated=" + std::to_string(g.truncated));
  if (!build(kLinNat, E, 50).truncated) o.fail("lincomb E not truncated at 50");
  Expr F = ex(std::string("(") + testing_helpers::kExtDistE + ").c*", SemiringId::Nat);
  if (!build(kGradNat, F, 100).truncated) o.fail("gradcomb E.c* not truncated at 100");
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const auto& id : corpus_pairs()) {
    for (const Expr& e : corpus(id)) {
      for (const auto& w : testing_helpers::words4()) {
        if (!(weight(id, e, w) == oracle_weight(e, w))) {
          o.fail(to_string(id) + " " + pretty(e) + " on '" + w + "'");
          break;
        }
      }
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (const auto& id : corpus_pairs())
    for (const Expr& e : corpus(id))
      if (!(null(e) == oracle_weight(e, ""))) o.fail(pretty(e));
  return o;
}

Outcome ac6() {
  Outcome o;
  auto check = [&](const auto& s, std::uint64_t seed, const char* name) {
    int f = testing_helpers::support_equation_failures(s, seed, 100);
    if (f) o.fail(std::string(name) + ": " + std::to_string(f) + " failing values");
  };
  check(MaybeSupport{}, 61, "maybe");
  check(SetSupport{}, 62, "set");
  check(LinCombSupport{SemiringId::Nat}, 63, "lincomb/nat");
  check(GradCombSupport{SemiringId::Nat}, 64, "gradcomb/nat");
  return o;
}

Outcome ac7() {
  Outcome o;
  RandomExprGen g(77, GenOptions{SemiringId::Boolean, {'a', 'b'}, 12, true});
  for (int i = 0; i < 100; ++i) {
    Expr e = g.next();
    DerivAutomaton a = build({SupportKind::Set, SemiringId::Boolean}, e, 10000);
    if (a.truncated || a.states.size() > e.symbol_occurrences() + 1)
      o.fail(pretty(e) + ": " + std::to_string(a.states.size()) + " states");
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  RandomExprGen g(88, GenOptions{SemiringId::Boolean, {'a', 'b'}, 8, true});
  for (int i = 0; i < 200; ++i) {
    Expr e = g.next();
    for (const auto& w : testing_helpers::words4()) {
      Weight m = weight({SupportKind::Maybe, SemiringId::Boolean}, e, w);
      Weight s = weight({SupportKind::Set, SemiringId::Boolean}, e, w);
      Weight l = weight({SupportKind::LinComb, SemiringId::Boolean}, e, w);
      if (!(m == s) || !(s == l)) o.fail(pretty(e) + " on '" + w + "'");
    }
  }
  return o;
}

template <class S>
void monad_laws(const S& s, std::uint64_t seed, bool structural, Outcome& o, const std::string& name) {
  testing_helpers::ValueGen g(seed, s.semiring());
  auto arrows = testing_helpers::arrow_pool(s);
  auto eq = [&](const auto& x, const auto& y) { return structural ? x == y : testing_helpers::same_value(s, x, y); };
  auto sem = [&](const auto& x, const auto& y) { return testing_helpers::same_value(s, x, y); };
  for (int i = 0; i < 100; ++i) {
    Expr x = g.carrier();
    auto m = g.value(s), m2 = g.value(s);
    const auto& f = arrows[g.exprs().below(arrows.size())];
    const auto& h = arrows[g.exprs().below(arrows.size())];
    if (!eq(s.bind(s.pure(x), f), f(normalize(x)))) o.fail(name + ": left unit");
    if (!eq(s.bind(m, [&](const Expr& e) { return s.pure(e); }), m)) o.fail(name + ": right unit");
    if (!eq(s.bind(s.bind(m, f), h), s.bind(m, [&](const Expr& e) { return s.bind(f(e), h); })))
      o.fail(name + ": associativity");
    Weight k = g.weight(), k2 = g.weight();
    if (!sem(s.lact(sr_mul(k, k2), m), s.lact(k, s.lact(k2, m)))) o.fail(name + ": (kk')▷m");
    if (!sem(s.lact(sr_add(k, k2), m), s.plus(s.lact(k, m), s.lact(k2, m)))) o.fail(name + ": (k+k')▷m");
    if (!sem(s.lact(k, s.plus(m, m2)), s.plus(s.lact(k, m), s.lact(k, m2)))) o.fail(name + ": k▷(m±m')");
    if (!sem(s.ract(m, sr_mul(k, k2)), s.ract(s.ract(m, k), k2))) o.fail(name + ": m◁(kk')");
    if (!sem(s.ract(m, sr_add(k, k2)), s.plus(s.ract(m, k), s.ract(m, k2)))) o.fail(name + ": m◁(k+k')");
    if (!eq(s.lact(Weight::one(s.semiring()), m), m)) o.fail(name + ": 1▷m");
    if (!eq(s.lact(Weight::zero(s.semiring()), m), s.zero())) o.fail(name + ": 0▷m");
  }
}

Outcome ac9() {
  Outcome o;
  monad_laws(MaybeSupport{}, 91, true, o, "maybe");
  monad_laws(SetSupport{}, 92, true, o, "set");
  monad_laws(LinCombSupport{SemiringId::Nat}, 93, true, o, "lincomb/nat");
  monad_laws(LinCombSupport{SemiringId::Rat}, 94, true, o, "lincomb/rat");
  monad_laws(GradCombSupport{SemiringId::Nat}, 95, false, o, "gradcomb/nat");
  monad_laws(GradCombSupport{SemiringId::Int}, 96, false, o, "gradcomb/int");

  // Operad identity and associativity, compared by evaluation.
  for (SemiringId sr : {SemiringId::Nat, SemiringId::Int, SemiringId::Rat}) {
    testing_helpers::ValueGen g(97 + static_cast<int>(sr), sr);
    auto args = [&](std::size_t n) {
      std::vector<Weight> v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(g.weight());
      return v;
    };
    for (int i = 0; i < 100; ++i) {
      OperadTerm t = g.op(2);
      std::vector<Weight> xs = args(t.arity());
      Weight base = op_eval(t, xs, sr);
      if (!(op_eval(op_compose(OperadTerm::id(), {t}), xs, sr) == base)) o.fail("operad: id∘t");
      std::vector<OperadTerm> ids(t.arity(), OperadTerm::id());
      if (!(op_eval(op_compose(t, ids), xs, sr) == base)) o.fail("operad: t∘(id,..)");

      std::vector<OperadTerm> inner;
      std::vector<std::vector<OperadTerm>> innermost;
      std::vector<OperadTerm> flat;
      for (std::size_t j = 0; j < t.arity(); ++j) {
        inner.push_back(g.op(1));
        innermost.emplace_back();
        for (std::size_t k = 0; k < inner.back().arity(); ++k) {
          innermost.back().push_back(g.op(0));
          flat.push_back(innermost.back().back());
        }
      }
      std::vector<OperadTerm> mid;
      for (std::size_t j = 0; j < inner.size(); ++j) mid.push_back(op_compose(inner[j], innermost[j]));
      OperadTerm left = op_compose(op_compose(t, inner), flat);
      OperadTerm right = op_compose(t, mid);
      if (left.arity() != right.arity()) {
        o.fail("operad: associativity arity");
        continue;
      }
      std::vector<Weight> ys = args(left.arity());
      if (!(op_eval(left, ys, sr) == op_eval(right, ys, sr))) o.fail("operad: associativity");
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> body;
    double budget_s;  // 0 = no time bound
  };
  const Criterion criteria[] = {
      {"AC1 weights of E", ac1, 1.0},
      {"AC2 derivative forms of E", ac2, 0},
      {"AC3 finite/infinite dichotomy", ac3, 5.0},
      {"AC4 derivatives match the oracle", ac4, 60.0},
      {"AC5 nullability matches the empty-word weight", ac5, 0},
      {"AC6 support equations", ac6, 0},
      {"AC7 linear partial-derivative state count", ac7, 0},
      {"AC8 classical supports agree", ac8, 0},
      {"AC9 monad, semimodule and operad laws", ac9, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.fail("took " + std::to_string(secs) + " s");
    std::printf("[%s] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.ok ? "" : ": ",
                o.detail.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
