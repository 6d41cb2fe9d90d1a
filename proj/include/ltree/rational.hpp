#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ltree {

/// Exact rational with 64-bit numerator and denominator.
///
/// Always in lowest terms with a positive denominator; zero is 0/1. Every
/// operation checks for overflow and throws Error(Overflow) instead of
/// wrapping, so results are either exact or absent.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  // Denominator is a power of two.
  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "n" or "n/d".
  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace ltree
