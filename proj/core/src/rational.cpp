#include "scc/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace scc {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 abs128(int128 v) { return v < 0 ? uint128(-v) : uint128(v); }

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(int128 v) {
  if (v > int128(std::numeric_limits<long long>::max()) ||
      v < int128(std::numeric_limits<long long>::min())) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::make(int128 numerator, int128 denominator) {
  if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return Rational{};
  uint128 g = gcd128(abs128(numerator), uint128(denominator));
  Rational r;
  r.num_ = narrow(numerator / int128(g));
  r.den_ = narrow(denominator / int128(g));
  return r;
}

Rational::Rational(long long numerator, long long denominator) {
  *this = make(numerator, denominator);
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-int128(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = make(int128(num_) * o.den_ + int128(o.num_) * den_, int128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make(int128(num_) * o.den_ - int128(o.num_) * den_, int128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make(int128(num_) * o.num_, int128(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
  *this = make(int128(num_) * o.den_, int128(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int128 lhs = int128(a.num_) * b.den_;
  int128 rhs = int128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("rational: malformed number");
    }
    return v;
  };
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  long long p = parse_int(text.substr(0, slash));
  long long q = parse_int(text.substr(slash + 1));
  return Rational(p, q);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace scc
