#ifndef SECANTKIT_RATIONAL_HPP
#define SECANTKIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace secantkit {

// Exact rational on int64.  Desk-scale inputs keep magnitudes tiny, but all
// products are overflow-checked so a silent wrap can never corrupt a
// geometric predicate.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("rational overflow");
    return r;
  }

  void reduce() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  Rational operator+(const Rational& o) const {
    return Rational(checked_mul(num, o.den) + checked_mul(o.num, den),
                    checked_mul(den, o.den));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked_mul(num, o.den) - checked_mul(o.num, den),
                    checked_mul(den, o.den));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
  Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
  Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num, o.den) < checked_mul(o.num, den);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace secantkit

#endif
