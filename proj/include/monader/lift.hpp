#pragma once

#include <optional>
#include <span>
#include <vector>

namespace monader {

// lift_n for the Maybe monad: applies `f` to the unwrapped values when every
// argument is present, otherwise yields nothing.
template <class T, class F>
auto lift_n(F&& f, std::span<const std::optional<T>> args)
    -> std::optional<decltype(f(std::span<const T>{}))> {
  std::vector<T> unwrapped;
  unwrapped.reserve(args.size());
  for (const auto& a : args) {
    if (!a) return std::nullopt;
    unwrapped.push_back(*a);
  }
  return f(std::span<const T>(unwrapped));
}

template <class T, class F>
auto lift_2(F&& f, const std::optional<T>& a, const std::optional<T>& b)
    -> std::optional<decltype(f(*a, *b))> {
  if (!a || !b) return std::nullopt;
  return f(*a, *b);
}

}  // namespace monader
