#ifndef HYBSQI_RATIONAL_HPP
#define HYBSQI_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hybsqi {

// Exact rational arithmetic for stencil coefficients. All table entries and
// their consistency sums stay far below the int64 range after normalization.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  constexpr void normalize() {
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  constexpr double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend constexpr Rational operator-(Rational a) { return Rational(-a.num, a.den); }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace hybsqi

#endif
