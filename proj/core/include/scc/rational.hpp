#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace scc {

/// Exact rational number over 64-bit integers.
///
/// Always kept reduced (gcd of numerator and denominator is 1) with a
/// positive denominator. Intermediate products run in 128-bit arithmetic;
/// results that do not fit back into 64 bits throw std::overflow_error.
/// All load and bound computations in this library go through this type,
/// never through floating point.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long floor() const;
  long long ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
  /// malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  /// Reduced form: "p/q", or just "p" when the value is an integer.
  std::string str() const;

  double to_double() const;

 private:
  long long num_ = 0;
  long long den_ = 1;

  static Rational make(__int128 numerator, __int128 denominator);
};

}  // namespace scc
