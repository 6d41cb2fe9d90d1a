#include "ltree/field_element.hpp"

#include <cctype>

#include "ltree/error.hpp"

namespace ltree {

FieldElement::FieldElement(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorCode::DomainError, "division by zero in Q(t)");
  if (num.is_zero()) {
    den_ = Poly(mpq_class(1));
    return;
  }
  if (!den.is_constant()) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
  }
  mpq_class lc = den.leading();
  num_ = num.scaled(1 / lc);
  den_ = den.scaled(1 / lc);
}

mpq_class FieldElement::constant() const {
  if (!is_constant()) fail(ErrorCode::DomainError, str() + " is not a constant");
  return num_.constant();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) fail(ErrorCode::DomainError, "division by zero in Q(t)");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

FieldElement FieldElement::inverse() const { return FieldElement(1) / *this; }

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement r(1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

double FieldElement::eval(double t) const { return num_.eval(t) / den_.eval(t); }

std::string FieldElement::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FieldElement run() {
    FieldElement e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError,
         "field element '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  FieldElement term() {
    FieldElement r = unary();
    for (;;) {
      if (eat('*'))
        r = r * unary();
      else if (eat('/'))
        r = r / unary();
      else
        return r;
    }
  }

  FieldElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    long n = integer();
    return base.pow(negative ? -n : n);
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  FieldElement atom() {
    skip();
    if (eat('(')) {
      FieldElement e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      return FieldElement::t();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected number, 't' or '('");
    return FieldElement(mpq_class(std::string(s_.substr(start, pos_ - start))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement FieldElement::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ltree
