#pragma once

// Generalized complex numbers a + u·b over the three canonical units
// u² = δ, δ ∈ {−1, 0, +1}.

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gencx/error.hpp"

namespace gencx {

enum class UnitClass : int {
  elliptic = -1,    // ordinary complex numbers, i² = −1
  parabolic = 0,    // dual numbers, ε² = 0
  hyperbolic = +1,  // split-complex numbers, j² = +1
};

constexpr int delta(UnitClass c) noexcept { return static_cast<int>(c); }

inline std::string_view to_string(UnitClass c) noexcept {
  switch (c) {
    case UnitClass::elliptic:
      return "elliptic";
    case UnitClass::parabolic:
      return "parabolic";
    case UnitClass::hyperbolic:
      return "hyperbolic";
  }
  return "unknown";
}

/// Maps the sign of the discriminant of z² + pz + q = 0 to a number class.
inline UnitClass classify(int discriminant_sign) {
  switch (discriminant_sign) {
    case -1:
      return UnitClass::elliptic;
    case 0:
      return UnitClass::parabolic;
    case 1:
      return UnitClass::hyperbolic;
    default:
      throw std::invalid_argument("discriminant sign must be -1, 0 or +1, got " +
                                  std::to_string(discriminant_sign));
  }
}

template <std::floating_point T>
struct GcNumber {
  using value_type = T;

  T re{};
  T im{};
  UnitClass unit_class = UnitClass::parabolic;

  friend constexpr bool operator==(const GcNumber&, const GcNumber&) = default;
};

namespace detail {
template <typename T>
void require_same_class(const GcNumber<T>& u, const GcNumber<T>& v, const char* op) {
  if (u.unit_class != v.unit_class) {
    throw ClassMismatchError(std::string(op) + ": operands have classes " +
                             std::string(to_string(u.unit_class)) + " and " +
                             std::string(to_string(v.unit_class)));
  }
}
}  // namespace detail

template <typename T>
GcNumber<T> gc_add(const GcNumber<T>& u, const GcNumber<T>& v) {
  detail::require_same_class(u, v, "gc_add");
  return {u.re + v.re, u.im + v.im, u.unit_class};
}

template <typename T>
GcNumber<T> gc_sub(const GcNumber<T>& u, const GcNumber<T>& v) {
  detail::require_same_class(u, v, "gc_sub");
  return {u.re - v.re, u.im - v.im, u.unit_class};
}

/// (a₁ + u b₁)(a₂ + u b₂) = (a₁a₂ + δ b₁b₂) + u (a₁b₂ + b₁a₂).
/// For the parabolic class the δ-term is dropped outright, so the result is
/// bit-identical to dual multiplication (no 0·b₁b₂ that could turn into NaN).
template <typename T>
GcNumber<T> gc_mul(const GcNumber<T>& u, const GcNumber<T>& v) {
  detail::require_same_class(u, v, "gc_mul");
  const T im = u.re * v.im + u.im * v.re;
  switch (u.unit_class) {
    case UnitClass::elliptic:
      return {u.re * v.re - u.im * v.im, im, u.unit_class};
    case UnitClass::hyperbolic:
      return {u.re * v.re + u.im * v.im, im, u.unit_class};
    case UnitClass::parabolic:
      break;
  }
  return {u.re * v.re, im, u.unit_class};
}

template <typename T>
constexpr GcNumber<T> gc_conj(const GcNumber<T>& z) noexcept {
  return {z.re, -z.im, z.unit_class};
}

/// Quadratic norm z·z̄ = a² − δ b².
template <typename T>
T gc_qnorm(const GcNumber<T>& z) noexcept {
  switch (z.unit_class) {
    case UnitClass::elliptic:
      return z.re * z.re + z.im * z.im;
    case UnitClass::hyperbolic:
      return z.re * z.re - z.im * z.im;
    case UnitClass::parabolic:
      break;
  }
  return z.re * z.re;
}

template <typename T>
GcNumber<T> operator+(const GcNumber<T>& u, const GcNumber<T>& v) {
  return gc_add(u, v);
}
template <typename T>
GcNumber<T> operator-(const GcNumber<T>& u, const GcNumber<T>& v) {
  return gc_sub(u, v);
}
template <typename T>
GcNumber<T> operator*(const GcNumber<T>& u, const GcNumber<T>& v) {
  return gc_mul(u, v);
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const GcNumber<T>& z) {
  const char* unit = z.unit_class == UnitClass::elliptic    ? "i"
                     : z.unit_class == UnitClass::hyperbolic ? "j"
                                                             : "ε";
  return os << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? -z.im : z.im) << unit;
}

}  // namespace gencx
