#pragma once

// First derivatives of real functions by evaluating them at a + 1ε.
//
//   auto d = gencx::derivative([](auto x) { return x * sin(x); }, 1.0);
//
// The callable receives a Dual<T> and must return a Dual<T>. Nothing beyond
// the first derivative is available; duals are not nested.

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "gencx/dual.hpp"

namespace gencx {

template <typename F, typename T>
concept ScalarFunction = std::floating_point<T> && std::invocable<F, Dual<T>> &&
                         std::convertible_to<std::invoke_result_t<F, Dual<T>>, Dual<T>>;

template <std::floating_point T>
struct ValueAndDerivative {
  T value;
  T derivative;
};

template <std::floating_point T, ScalarFunction<T> F>
ValueAndDerivative<T> value_and_derivative(F&& f, T a) {
  const Dual<T> r = std::forward<F>(f)(Dual<T>(a, T(1)));
  return {r.real(), r.imag()};
}

template <std::floating_point T, ScalarFunction<T> F>
T derivative(F&& f, T a) {
  return value_and_derivative(std::forward<F>(f), a).derivative;
}

/// (f(a+h) − f(a−h)) / 2h on a plain real function.
template <std::floating_point T, typename F>
  requires std::invocable<F, T>
T fd_central(F&& f, T a, T h) {
  if (!(h > T(0)) || !std::isfinite(h)) throw std::invalid_argument("finite-difference step must be positive");
  const T hi = static_cast<T>(f(a + h));
  const T lo = static_cast<T>(f(a - h));
  return (hi - lo) / (T(2) * h);
}

}  // namespace gencx
