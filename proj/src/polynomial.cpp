#include "ltree/polynomial.hpp"

#include "ltree/error.hpp"

namespace ltree {

Poly::Poly(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  if (v != 0) c_.push_back(v);
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly Poly::t() { return Poly(std::vector<mpq_class>{0, 1}); }

Poly Poly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpq_class(0);
}

mpq_class Poly::leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<mpq_class> q(a.degree() - b.degree() + 1);
  std::vector<mpq_class> r = a.c_;
  const mpq_class lb = b.leading();
  for (int d = a.degree(); d >= b.degree(); --d) {
    if (r[d] == 0) continue;
    mpq_class f = r[d] / lb;
    q[d - b.degree()] = f;
    for (int i = 0; i <= b.degree(); ++i) r[d - b.degree() + i] -= f * b.c_[i];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Poly Poly::scaled(const mpq_class& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

Poly Poly::shifted(const mpq_class& c) const {
  // Horner in the shifted variable.
  Poly r;
  Poly lin(std::vector<mpq_class>{c, 1});
  for (int i = degree(); i >= 0; --i) r = r * lin + Poly(c_[i]);
  return r;
}

Poly Poly::reversed() const {
  std::vector<mpq_class> r(c_.rbegin(), c_.rend());
  return Poly(std::move(r));
}

int Poly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

Poly Poly::drop_low(int k) const {
  if (k >= static_cast<int>(c_.size())) return {};
  return Poly(std::vector<mpq_class>(c_.begin() + k, c_.end()));
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

double Poly::eval(double x) const {
  double r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i].get_d();
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (i == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace ltree
