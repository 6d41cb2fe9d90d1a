#include "ltree/rational.hpp"

#include <charconv>
#include <numeric>

#include "ltree/error.hpp"

namespace ltree {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "rational multiplication overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "rational addition overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) fail(ErrorCode::Overflow, "rational negation overflow");
  return -a;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorCode::DomainError, "zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = Rational(checked_add(num_, o.num_), den_);
    return *this;
  }
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t lhs = checked_mul(num_, o.den_ / g);
  std::int64_t rhs = checked_mul(o.num_, den_ / g);
  *this = Rational(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = std::gcd(num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorCode::DomainError, "division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = checked_neg(inv.num_);
    inv.den_ = checked_neg(inv.den_);
  }
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ltree
