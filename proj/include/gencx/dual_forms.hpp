#pragma once

// Alternative representations of a dual number:
//   trigonometric  a + εb = r(1 + φε),  r = a, φ = b/a   (a != 0)
//   matrix         a + εb  <->  | a b |
//                               | 0 a |

#include <stdexcept>

#include "gencx/dual.hpp"
#include "gencx/error.hpp"

namespace gencx {

template <std::floating_point T>
struct TrigForm {
  T r{};    // module, may be negative
  T phi{};  // argument

  friend constexpr bool operator==(const TrigForm&, const TrigForm&) = default;
};

template <typename T>
TrigForm<T> to_trig(const Dual<T>& z) {
  if (z.real() == T(0)) {
    throw DomainError("trigonometric form is only defined for real(z) != 0", static_cast<double>(z.real()));
  }
  return {z.real(), z.imag() / z.real()};
}

template <typename T>
constexpr Dual<T> from_trig(const TrigForm<T>& t) noexcept {
  return {t.r, t.r * t.phi};
}

template <std::floating_point T>
struct Mat2 {
  T m11{}, m12{};
  T m21{}, m22{};

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

template <typename T>
constexpr Mat2<T> to_matrix(const Dual<T>& z) noexcept {
  return {z.real(), z.imag(), T(0), z.real()};
}

template <typename T>
Dual<T> from_matrix(const Mat2<T>& m) {
  if (m.m21 != T(0) || m.m11 != m.m22) {
    throw std::invalid_argument("matrix is not of dual form (a b; 0 a)");
  }
  return {m.m11, m.m12};
}

template <typename T>
constexpr Mat2<T> mat_mul(const Mat2<T>& a, const Mat2<T>& b) noexcept {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

}  // namespace gencx
