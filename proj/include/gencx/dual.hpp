#pragma once

/*
  Dual numbers z = a + εb with ε² = 0.

  Both parts are real scalars of the same floating-point type. Mixed
  arguments (different precisions, or a plain real next to a dual) are
  promoted to the wider type before an operation is applied; a real operand
  takes part as a dual with zero imaginary part.

      auto z = gencx::make_dual(1, 2.5);   // Dual<double>, 1 + 2.5ε
      auto w = z * z + 2;                  // 3 + 5ε ...
      auto [re, im] = reim(w);
*/

#include <cmath>
#include <concepts>
#include <type_traits>
#include <utility>

#include "gencx/error.hpp"

namespace gencx {

template <typename T>
concept RealScalar = std::is_arithmetic_v<T> && !std::same_as<std::remove_cv_t<T>, bool>;

/// Common scalar of a set of real types. Integral types take part as double.
template <RealScalar... Ts>
struct promote_scalar {
  using common = std::common_type_t<Ts...>;
  using type = std::conditional_t<std::is_floating_point_v<common>, common, double>;
};
template <RealScalar... Ts>
using promote_scalar_t = typename promote_scalar<Ts...>::type;

template <std::floating_point T>
class Dual {
 public:
  using value_type = T;

  constexpr Dual() noexcept = default;
  constexpr explicit Dual(T x) noexcept : x_(x) {}
  constexpr Dual(T x, T y) noexcept : x_(x), y_(y) {}

  // Implicit only when widening.
  template <std::floating_point U>
    requires(!std::same_as<T, U>)
  constexpr explicit(!std::is_same_v<std::common_type_t<T, U>, T>) Dual(const Dual<U>& other) noexcept
      : x_(static_cast<T>(other.real())), y_(static_cast<T>(other.imag())) {}

  constexpr T real() const noexcept { return x_; }
  constexpr T imag() const noexcept { return y_; }

  static constexpr Dual one() noexcept { return Dual(T(1)); }
  static constexpr Dual zero() noexcept { return Dual(T(0)); }

  constexpr Dual& operator+=(const Dual& u) noexcept { return *this = *this + u; }
  constexpr Dual& operator-=(const Dual& u) noexcept { return *this = *this - u; }
  constexpr Dual& operator*=(const Dual& u) noexcept { return *this = *this * u; }
  Dual& operator/=(const Dual& u) { return *this = *this / u; }

  friend constexpr Dual operator+(const Dual& z) noexcept { return {+z.x_, +z.y_}; }
  friend constexpr Dual operator-(const Dual& z) noexcept { return {-z.x_, -z.y_}; }

  friend constexpr Dual operator+(const Dual& z, const Dual& u) noexcept {
    return {z.x_ + u.x_, z.y_ + u.y_};
  }
  friend constexpr Dual operator-(const Dual& z, const Dual& u) noexcept {
    return {z.x_ - u.x_, z.y_ - u.y_};
  }
  friend constexpr Dual operator*(const Dual& z, const Dual& u) noexcept {
    return {z.x_ * u.x_, z.x_ * u.y_ + z.y_ * u.x_};
  }
  friend Dual operator/(const Dual& z, const Dual& u) {
    if (u.x_ == T(0)) {
      throw DomainError("division by zero divisor: real(u) must be nonzero", static_cast<double>(u.x_));
    }
    return {z.x_ / u.x_, (z.y_ * u.x_ - u.y_ * z.x_) / (u.x_ * u.x_)};
  }

 private:
  T x_{};
  T y_{};
};

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_dual_v = is_dual<std::remove_cvref_t<T>>::value;

template <std::floating_point T = double>
inline constexpr Dual<T> epsilon_v{T(0), T(1)};

/// The dual unit ε = 0 + 1ε.
inline constexpr Dual<double> epsilon = epsilon_v<double>;

// ---------------------------------------------------------------------------
// Construction

template <RealScalar A, RealScalar B>
constexpr Dual<promote_scalar_t<A, B>> make_dual(A a, B b) noexcept {
  using T = promote_scalar_t<A, B>;
  return {static_cast<T>(a), static_cast<T>(b)};
}

template <RealScalar A>
constexpr Dual<promote_scalar_t<A>> from_real(A a) noexcept {
  using T = promote_scalar_t<A>;
  return Dual<T>(static_cast<T>(a));
}

template <typename T>
constexpr T real(const Dual<T>& z) noexcept {
  return z.real();
}
template <typename T>
constexpr T imag(const Dual<T>& z) noexcept {
  return z.imag();
}
template <typename T>
constexpr std::pair<T, T> reim(const Dual<T>& z) noexcept {
  return {z.real(), z.imag()};
}

template <typename T>
constexpr Dual<T> one(const Dual<T>&) noexcept {
  return Dual<T>::one();
}
template <typename T>
constexpr Dual<T> zero(const Dual<T>&) noexcept {
  return Dual<T>::zero();
}

// ---------------------------------------------------------------------------
// Mixed-type arithmetic. Every form lifts both operands to the common dual
// type and forwards to the same-type operator.

template <typename T, typename U>
  requires(!std::same_as<T, U>)
constexpr auto operator+(const Dual<T>& z, const Dual<U>& u) {
  using D = Dual<promote_scalar_t<T, U>>;
  return D(z) + D(u);
}
template <typename T, typename U>
  requires(!std::same_as<T, U>)
constexpr auto operator-(const Dual<T>& z, const Dual<U>& u) {
  using D = Dual<promote_scalar_t<T, U>>;
  return D(z) - D(u);
}
template <typename T, typename U>
  requires(!std::same_as<T, U>)
constexpr auto operator*(const Dual<T>& z, const Dual<U>& u) {
  using D = Dual<promote_scalar_t<T, U>>;
  return D(z) * D(u);
}
template <typename T, typename U>
  requires(!std::same_as<T, U>)
auto operator/(const Dual<T>& z, const Dual<U>& u) {
  using D = Dual<promote_scalar_t<T, U>>;
  return D(z) / D(u);
}

#define GENCX_MIXED_REAL_OP(op)                                 \
  template <typename T, RealScalar S>                           \
  auto operator op(const Dual<T>& z, S r) {                     \
    using D = Dual<promote_scalar_t<T, S>>;                     \
    return D(z) op D(static_cast<typename D::value_type>(r));   \
  }                                                             \
  template <RealScalar S, typename T>                           \
  auto operator op(S r, const Dual<T>& z) {                     \
    using D = Dual<promote_scalar_t<T, S>>;                     \
    return D(static_cast<typename D::value_type>(r)) op D(z);   \
  }

GENCX_MIXED_REAL_OP(+)
GENCX_MIXED_REAL_OP(-)
GENCX_MIXED_REAL_OP(*)
GENCX_MIXED_REAL_OP(/)

#undef GENCX_MIXED_REAL_OP

template <typename T>
Dual<T> inv(const Dual<T>& z) {
  if (z.real() == T(0)) {
    throw DomainError("inverse is only defined for real(z) != 0", static_cast<double>(z.real()));
  }
  return {T(1) / z.real(), -z.imag() / (z.real() * z.real())};
}

// ---------------------------------------------------------------------------
// Conjugate, modulus, argument

template <typename T>
constexpr Dual<T> conj(const Dual<T>& z) noexcept {
  return {z.real(), -z.imag()};
}

/// Modulus |z| = a. Keeps the sign of the real part.
template <typename T>
constexpr T abs(const Dual<T>& z) noexcept {
  return z.real();
}

template <typename T>
constexpr T abs2(const Dual<T>& z) noexcept {
  return z.real() * z.real();
}

template <typename T>
T arg(const Dual<T>& z) {
  if (z.real() == T(0)) {
    throw DomainError("argument is only defined for real(z) != 0", static_cast<double>(z.real()));
  }
  return z.imag() / z.real();
}

// ---------------------------------------------------------------------------
// Predicates

template <typename T>
constexpr bool isreal(const Dual<T>& z) noexcept {
  return z.imag() == T(0);
}
template <typename T>
bool isinteger(const Dual<T>& z) noexcept {
  return isreal(z) && std::isfinite(z.real()) && std::trunc(z.real()) == z.real();
}
template <typename T>
bool isfinite(const Dual<T>& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
template <typename T>
bool isnan(const Dual<T>& z) noexcept {
  return std::isnan(z.real()) || std::isnan(z.imag());
}
template <typename T>
bool isinf(const Dual<T>& z) noexcept {
  return std::isinf(z.real()) || std::isinf(z.imag());
}
template <typename T>
constexpr bool iszero(const Dual<T>& z) noexcept {
  return z.real() == T(0) && z.imag() == T(0);
}
template <typename T>
constexpr bool isone(const Dual<T>& z) noexcept {
  return z.real() == T(1) && z.imag() == T(0);
}

// ---------------------------------------------------------------------------
// Equality. Exact, part by part. A dual equals a real only when it is real.
// The reversed forms (real == dual) come from C++20 operator rewriting.

template <typename T, typename U>
constexpr bool eq(const Dual<T>& z, const Dual<U>& u) noexcept {
  return z.real() == u.real() && z.imag() == u.imag();
}

template <typename T, RealScalar S>
constexpr bool eq_real(const Dual<T>& z, S r) noexcept {
  return isreal(z) && z.real() == r;
}
template <RealScalar S, typename T>
constexpr bool eq_real(S r, const Dual<T>& z) noexcept {
  return isreal(z) && z.real() == r;
}

template <typename T, typename U>
constexpr bool operator==(const Dual<T>& z, const Dual<U>& u) noexcept {
  return eq(z, u);
}
template <typename T, RealScalar S>
constexpr bool operator==(const Dual<T>& z, S r) noexcept {
  return eq_real(z, r);
}

}  // namespace gencx
