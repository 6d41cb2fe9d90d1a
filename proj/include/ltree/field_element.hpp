#pragma once

#include <string>
#include <string_view>

#include "ltree/polynomial.hpp"

namespace ltree {

/// Element of ℚ(t): a ratio of polynomials in lowest terms with monic
/// denominator. Rationals are the constant elements.
class FieldElement {
 public:
  FieldElement() : den_(mpq_class(1)) {}
  FieldElement(long n) : FieldElement(mpq_class(n)) {}  // NOLINT
  FieldElement(const mpq_class& q) : num_(q), den_(mpq_class(1)) {}  // NOLINT
  FieldElement(Poly num, Poly den);

  static FieldElement t() { return {Poly::t(), Poly(mpq_class(1))}; }
  /// Parses "3/4", "(t^3-1)/(2*t+5)", "t+1/t". Throws ParseError.
  static FieldElement parse(std::string_view text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The rational value; requires is_constant().
  mpq_class constant() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement pow(long n) const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double eval(double t) const;

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace ltree
