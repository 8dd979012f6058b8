#pragma once

// Powers, roots and elementary functions of dual numbers.
//
// Every function f is extended through f(a + εb) = f(a) + f'(a)·b·ε with the
// derivative written out explicitly. Singular points are rejected with
// DomainError using exact zero tests on the real part.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gencx/dual.hpp"
#include "gencx/error.hpp"

namespace gencx {

/// Exponent n/m in lowest terms with m > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational exponent with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  template <std::floating_point T>
  T as() const noexcept {
    return static_cast<T>(num) / static_cast<T>(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

namespace detail {

[[noreturn]] inline void domain_fail(std::string constraint, double value) {
  throw DomainError(std::move(constraint), value);
}

/// x^(n/m) for a real x; negative x is only valid for odd m.
template <std::floating_point T>
T real_rational_pow(T x, std::int64_t n, std::int64_t m) {
  if (m == 1) return std::pow(x, static_cast<T>(n));
  const T q = static_cast<T>(n) / static_cast<T>(m);
  if (x >= T(0)) return std::pow(x, q);
  const T mag = std::pow(-x, q);
  return (n % 2 != 0) ? -mag : mag;
}

/// Real n-th root, odd n allowed for negative x.
template <std::floating_point T>
T real_root(T x, std::int64_t n) {
  if (n == 2) return std::sqrt(x);
  if (n == 3) return std::cbrt(x);
  const T r = std::pow(std::abs(x), T(1) / static_cast<T>(n));
  return x < T(0) ? -r : r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Powers and roots

/// z^n = x^n + n·y·x^(n−1)·ε.
template <typename T>
Dual<T> powi(const Dual<T>& z, std::int64_t n) {
  const auto [x, y] = reim(z);
  if (n == 0) return one(z);
  if (n == 1) return z;
  if (n < 0 && x == T(0)) {
    detail::domain_fail("negative exponentiation is only defined for real(z) != 0", static_cast<double>(x));
  }
  const T nt = static_cast<T>(n);
  return {std::pow(x, nt), nt * y * std::pow(x, static_cast<T>(n - 1))};
}

/// z^(n/m) = x^(n/m) + (n/m)·y·x^(n/m − 1)·ε.
///
/// Odd m admits negative real parts. Even m requires x ≥ 0. At x = 0 the
/// derivative term x^(q−1) is singular for q < 1, which is a domain error;
/// for q > 1 the result is 0.
template <typename T>
Dual<T> powq(const Dual<T>& z, Rational q) {
  const auto [x, y] = reim(z);
  if (q.num == 0) return one(z);
  if (q.den == 1) return powi(z, q.num);
  if (q.den % 2 == 0 && x < T(0)) {
    detail::domain_fail("even radical for dual number z is only defined for real(z) >= 0",
                        static_cast<double>(x));
  }
  if (x == T(0)) {
    if (q.num < q.den) {
      detail::domain_fail("rational power below 1 is only defined for real(z) != 0", static_cast<double>(x));
    }
    return zero(z);
  }
  const T qt = q.as<T>();
  return {detail::real_rational_pow(x, q.num, q.den),
          qt * y * detail::real_rational_pow(x, q.num - q.den, q.den)};
}

/// ⁿ√z = ⁿ√x + y·ⁿ√x/(n·x)·ε. Odd n admits negative real parts.
template <typename T>
Dual<T> nth_root(const Dual<T>& z, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("root degree must be positive, got " + std::to_string(n));
  if (n == 1) return z;
  const auto [x, y] = reim(z);
  if (n % 2 == 0 && x < T(0)) {
    detail::domain_fail("even root for dual number z is only defined for real(z) >= 0", static_cast<double>(x));
  }
  if (x == T(0)) {
    detail::domain_fail("root of a dual number is only defined for real(z) != 0", static_cast<double>(x));
  }
  const T r = detail::real_root(x, n);
  return {r, y * r / (static_cast<T>(n) * x)};
}

template <typename T>
Dual<T> sqrt(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (x < T(0)) {
    detail::domain_fail("sqrt for dual number z is only defined for real(z) >= 0", static_cast<double>(x));
  }
  if (x == T(0)) {
    if (y == T(0)) return zero(z);
    detail::domain_fail("sqrt for dual number z with imag(z) != 0 requires real(z) > 0", static_cast<double>(x));
  }
  const T s = std::sqrt(x);
  return {s, y / (T(2) * s)};
}

template <typename T>
Dual<T> cbrt(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (x == T(0)) {
    detail::domain_fail("cbrt for dual number z is only defined for real(z) != 0", static_cast<double>(x));
  }
  const T c = std::cbrt(x);
  return {c, y * c / (T(3) * x)};
}

/// Real exponent. Integral p goes through powi, p equal to n/m for a small
/// denominator m goes through powq; any other p needs x > 0.
template <typename T>
Dual<T> powf(const Dual<T>& z, T p) {
  constexpr T max_exact = T(4.0e15);
  if (std::isfinite(p) && std::abs(p) < max_exact && std::trunc(p) == p) {
    return powi(z, static_cast<std::int64_t>(p));
  }
  const auto [x, y] = reim(z);
  if (std::isfinite(p) && std::abs(p) < max_exact) {
    for (std::int64_t m = 2; m <= 64; ++m) {
      const auto n = static_cast<std::int64_t>(std::llround(p * static_cast<T>(m)));
      if (static_cast<T>(n) / static_cast<T>(m) != p) continue;
      if (m % 2 == 1 || x > T(0)) return powq(z, Rational(n, m));
      break;
    }
  }
  if (!(x > T(0))) {
    detail::domain_fail("real exponent requires real(z) > 0 unless it is an integer or a rational with odd denominator",
                        static_cast<double>(x));
  }
  return {std::pow(x, p), p * y * std::pow(x, p - T(1))};
}

template <typename T, std::integral I>
Dual<T> pow(const Dual<T>& z, I n) {
  return powi(z, static_cast<std::int64_t>(n));
}
template <typename T>
Dual<T> pow(const Dual<T>& z, Rational q) {
  return powq(z, q);
}
template <typename T, std::floating_point S>
Dual<promote_scalar_t<T, S>> pow(const Dual<T>& z, S p) {
  using R = promote_scalar_t<T, S>;
  return powf(Dual<R>(z), static_cast<R>(p));
}

// ---------------------------------------------------------------------------
// Exponential and logarithms

template <typename T>
Dual<T> exp(const Dual<T>& z) {
  const T e = std::exp(z.real());
  return {e, e * z.imag()};
}

template <typename T>
Dual<T> log(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (x <= T(0)) detail::domain_fail("log for dual number z is only defined for real(z) > 0", static_cast<double>(x));
  return {std::log(x), y / x};
}

/// log_c(z) = ln x / ln c + y/(x·ln c)·ε.
template <typename T, RealScalar S>
Dual<T> log_base(S base, const Dual<T>& z) {
  const T c = static_cast<T>(base);
  if (!(c > T(0)) || c == T(1)) detail::domain_fail("logarithm base must be positive and != 1", static_cast<double>(c));
  const auto [x, y] = reim(z);
  if (x <= T(0)) detail::domain_fail("log for dual number z is only defined for real(z) > 0", static_cast<double>(x));
  const T lc = std::log(c);
  return {std::log(x) / lc, y / (x * lc)};
}

template <typename T, RealScalar S>
Dual<T> log(S base, const Dual<T>& z) {
  return log_base(base, z);
}

// ---------------------------------------------------------------------------
// Trigonometric

template <typename T>
Dual<T> sin(const Dual<T>& z) {
  return {std::sin(z.real()), z.imag() * std::cos(z.real())};
}

template <typename T>
Dual<T> cos(const Dual<T>& z) {
  return {std::cos(z.real()), -z.imag() * std::sin(z.real())};
}

template <typename T>
Dual<T> tan(const Dual<T>& z) {
  const T c = std::cos(z.real());
  if (c == T(0)) detail::domain_fail("tan is singular where cos(real(z)) == 0", static_cast<double>(z.real()));
  return {std::tan(z.real()), z.imag() / (c * c)};
}

template <typename T>
Dual<T> cot(const Dual<T>& z) {
  const T s = std::sin(z.real());
  if (s == T(0)) detail::domain_fail("cot is singular where sin(real(z)) == 0", static_cast<double>(z.real()));
  return {std::cos(z.real()) / s, -z.imag() / (s * s)};
}

template <typename T>
Dual<T> asin(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (!(std::abs(x) < T(1))) detail::domain_fail("asin for dual number z requires |real(z)| < 1", static_cast<double>(x));
  return {std::asin(x), y / std::sqrt(T(1) - x * x)};
}

template <typename T>
Dual<T> acos(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (!(std::abs(x) < T(1))) detail::domain_fail("acos for dual number z requires |real(z)| < 1", static_cast<double>(x));
  return {std::acos(x), -y / std::sqrt(T(1) - x * x)};
}

template <typename T>
Dual<T> atan(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  return {std::atan(x), y / (T(1) + x * x)};
}

/// acot x = atan(1/x), so acot(0) = π/2.
template <typename T>
Dual<T> acot(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  return {std::atan(T(1) / x), -y / (T(1) + x * x)};
}

// ---------------------------------------------------------------------------
// Hyperbolic

template <typename T>
Dual<T> sinh(const Dual<T>& z) {
  return {std::sinh(z.real()), z.imag() * std::cosh(z.real())};
}

template <typename T>
Dual<T> cosh(const Dual<T>& z) {
  return {std::cosh(z.real()), z.imag() * std::sinh(z.real())};
}

template <typename T>
Dual<T> tanh(const Dual<T>& z) {
  const T c = std::cosh(z.real());
  return {std::tanh(z.real()), z.imag() / (c * c)};
}

template <typename T>
Dual<T> coth(const Dual<T>& z) {
  const auto [x, y] = reim(z);
  if (x == T(0)) detail::domain_fail("coth is singular at real(z) == 0", static_cast<double>(x));
  const T s = std::sinh(x);
  return {T(1) / std::tanh(x), -y / (s * s)};
}

}  // namespace gencx
