#ifndef FRUSTRA_RATIONAL_HPP
#define FRUSTRA_RATIONAL_HPP

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>

namespace frustra {

// Exact rational with int64 numerator/denominator, normalized so that
// den > 0 and gcd(|num|, den) == 1. Intermediates go through __int128,
// which is ample for tallies of the form tally / (2 * trees * degree).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    r.num = n;
    r.den = d;
    return r;
  }

  static Rational reduce128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational{static_cast<long long>(n), static_cast<long long>(d)};
  }

  Rational operator+(const Rational& o) const {
    return reduce128((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return reduce128((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
  }
  Rational operator*(const Rational& o) const {
    return reduce128((__int128)num * o.num, (__int128)den * o.den);
  }
  Rational operator/(const Rational& o) const {
    return reduce128((__int128)num * o.den, (__int128)den * o.num);
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return (__int128)num * o.den < (__int128)o.num * den; }
  bool operator<=(const Rational& o) const { return (__int128)num * o.den <= (__int128)o.num * den; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string as_fraction() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // 10 significant digits; long double keeps ~18, so the rounding is exact enough.
  std::string as_decimal(int significant = 10) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lg", significant, (long double)num / (long double)den);
    return buf;
  }
};

} // namespace frustra

#endif
