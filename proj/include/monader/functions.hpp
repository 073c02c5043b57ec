#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "monader/weight.hpp"

namespace monader {

using Evaluator = std::function<Weight(std::span<const Weight>)>;

struct FnDef {
  std::string name;
  std::size_t arity;
  SemiringId semiring;
  Evaluator eval;
};

// Handle to a registered n-ary weight function. Identity is the name: two
// refs with the same name denote the same function within one semiring.
class FnRef {
 public:
  explicit FnRef(std::shared_ptr<const FnDef> def) : def_(std::move(def)) {}

  const std::string& name() const { return def_->name; }
  std::size_t arity() const { return def_->arity; }
  SemiringId semiring() const { return def_->semiring; }

  // Throws ArityMismatch or SemiringMismatch.
  Weight operator()(std::span<const Weight> args) const;

  friend bool operator==(const FnRef& a, const FnRef& b) { return a.name() == b.name(); }
  friend auto operator<=>(const FnRef& a, const FnRef& b) { return a.name() <=> b.name(); }

 private:
  std::shared_ptr<const FnDef> def_;
};

class FnRegistry {
 public:
  explicit FnRegistry(SemiringId sr) : sr_(sr) {}

  // Built-ins for `sr`:
  //   bool:         Not/1, And/2, Or/2, ExtDist/3, Mul/2
  //   nat,int,rat:  ExtDist/3, Min/2, Max/2, Mul/2
  //   rat:          Mean/2
  static FnRegistry builtins(SemiringId sr);

  SemiringId semiring() const { return sr_; }

  void add(std::string name, std::size_t arity, Evaluator eval);
  // Throws UnknownFunction.
  FnRef lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return fns_.count(name) != 0; }
  std::vector<FnRef> all() const;

 private:
  SemiringId sr_;
  std::map<std::string, FnRef> fns_;
};

// The built-in Mul of `sr`; renders operad products as expressions.
FnRef product_function(SemiringId sr);

}  // namespace monader
