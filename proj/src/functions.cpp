#include "monader/functions.hpp"

#include <algorithm>
#include <array>

#include "monader/error.hpp"

namespace monader {

Weight FnRef::operator()(std::span<const Weight> args) const {
  if (args.size() != arity()) {
    throw ArityMismatch(name() + " expects " + std::to_string(arity()) + " arguments, got " +
                        std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a.semiring() != semiring()) {
      throw SemiringMismatch(name() + " is defined over " + std::string(semiring_name(semiring())));
    }
  }
  return def_->eval(args);
}

void FnRegistry::add(std::string name, std::size_t arity, Evaluator eval) {
  auto def = std::make_shared<const FnDef>(FnDef{name, arity, sr_, std::move(eval)});
  fns_.insert_or_assign(std::move(name), FnRef(std::move(def)));
}

FnRef FnRegistry::lookup(const std::string& name) const {
  auto it = fns_.find(name);
  if (it == fns_.end()) {
    throw UnknownFunction("unknown function '" + name + "' over " +
                          std::string(semiring_name(sr_)));
  }
  return it->second;
}

std::vector<FnRef> FnRegistry::all() const {
  std::vector<FnRef> out;
  for (const auto& [_, f] : fns_) out.push_back(f);
  return out;
}

namespace {

const Weight& max_of(std::span<const Weight> xs) {
  return *std::max_element(xs.begin(), xs.end(), [](const Weight& a, const Weight& b) {
    return a.numeric_compare(b) < 0;
  });
}

const Weight& min_of(std::span<const Weight> xs) {
  return *std::min_element(xs.begin(), xs.end(), [](const Weight& a, const Weight& b) {
    return a.numeric_compare(b) < 0;
  });
}

// max - min never goes negative, so Nat needs no truncation.
Weight ext_dist(std::span<const Weight> xs) {
  const Weight& hi = max_of(xs);
  const Weight& lo = min_of(xs);
  switch (hi.semiring()) {
    case SemiringId::Boolean: return Weight::boolean(hi.as_bool() && !lo.as_bool());
    case SemiringId::Nat: return Weight::natural(hi.as_integer() - lo.as_integer());
    case SemiringId::Int: return Weight::integer(hi.as_integer() - lo.as_integer());
    case SemiringId::Rat: return Weight::rational(hi.as_rational() - lo.as_rational());
  }
  throw SemiringMismatch("ExtDist: unknown semiring");
}

}  // namespace

FnRegistry FnRegistry::builtins(SemiringId sr) {
  FnRegistry reg(sr);
  reg.add("ExtDist", 3, ext_dist);
  reg.add("Mul", 2, [](std::span<const Weight> xs) { return sr_mul(xs[0], xs[1]); });
  if (sr == SemiringId::Boolean) {
    reg.add("Not", 1, [](std::span<const Weight> xs) { return Weight::boolean(!xs[0].as_bool()); });
    reg.add("And", 2, [](std::span<const Weight> xs) { return sr_mul(xs[0], xs[1]); });
    reg.add("Or", 2, [](std::span<const Weight> xs) { return sr_add(xs[0], xs[1]); });
    return reg;
  }
  reg.add("Min", 2, [](std::span<const Weight> xs) { return min_of(xs); });
  reg.add("Max", 2, [](std::span<const Weight> xs) { return max_of(xs); });
  if (sr == SemiringId::Rat) {
    reg.add("Mean", 2, [](std::span<const Weight> xs) {
      return Weight::rational((xs[0].as_rational() + xs[1].as_rational()) / 2);
    });
  }
  return reg;
}

FnRef product_function(SemiringId sr) {
  static const std::array<FnRef, 4> cache = {
      FnRegistry::builtins(SemiringId::Boolean).lookup("Mul"),
      FnRegistry::builtins(SemiringId::Nat).lookup("Mul"),
      FnRegistry::builtins(SemiringId::Int).lookup("Mul"),
      FnRegistry::builtins(SemiringId::Rat).lookup("Mul"),
  };
  return cache[static_cast<std::size_t>(sr)];
}

}  // namespace monader
