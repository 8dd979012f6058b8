#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <concepts>
#include <ostream>
#include <string>

#include "gencx/dual.hpp"

namespace gencx {

inline constexpr int default_digits = 12;

/// Shortest %g-style rendering with `digits` significant digits.
/// Locale independent: always '.' as the decimal point.
template <std::floating_point T>
std::string format_scalar(T v, int digits = default_digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

/// "a + bε", or "a - |b|ε" when the imaginary part is negative.
template <typename T>
std::string format(const Dual<T>& z, int digits = default_digits) {
  const T y = z.imag();
  std::string out = format_scalar(z.real(), digits);
  out += y < T(0) ? " - " : " + ";
  out += format_scalar(y < T(0) ? -y : y, digits);
  out += "ε";
  return out;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& z) {
  return os << format(z);
}

}  // namespace gencx
