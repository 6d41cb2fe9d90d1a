#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ltree {

/// Dense univariate polynomial over ℚ in the variable t. coeffs()[i] is the
/// coefficient of t^i; no trailing zeros, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(const mpq_class& c);  // NOLINT: constants convert implicitly
  explicit Poly(std::vector<mpq_class> coeffs);

  static Poly t();
  static Poly monomial(const mpq_class& c, int degree);

  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  mpq_class coeff(int i) const;
  mpq_class leading() const;
  mpq_class constant() const { return coeff(0); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic, or zero

  Poly monic() const;
  Poly scaled(const mpq_class& s) const;
  /// p(t + c)
  Poly shifted(const mpq_class& c) const;
  /// t^deg · p(1/t)
  Poly reversed() const;
  /// Number of trailing zero coefficients (order of vanishing at 0).
  int low_order() const;
  Poly drop_low(int k) const;  // divide by t^k, exact

  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  // "3*t^2-1/2*t+5"
  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace ltree
