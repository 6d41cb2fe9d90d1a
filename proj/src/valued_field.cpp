#include "ltree/valued_field.hpp"

#include "ltree/error.hpp"

namespace ltree {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Laurent data of f at the local parameter u: f = u^shift * g(u)/h(u) with
// g(0), h(0) nonzero.
struct LocalForm {
  long shift;
  Poly g, h;
};

}  // namespace

LambdaElement Valuation::value() const {
  if (!order) fail(ErrorCode::DomainError, "valuation of zero is +infinity");
  return LambdaElement::integer(*order);
}

long p_adic_order(const mpz_class& n, long p) {
  if (n == 0) fail(ErrorCode::DomainError, "p-adic order of zero");
  mpz_class m = abs(n);
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++k;
  }
  return k;
}

ValuedField ValuedField::p_adic(long p) {
  if (!is_prime(p)) fail(ErrorCode::DomainError, std::to_string(p) + " is not prime");
  ValuedField f(BaseField::rationals, ValuationKind::p_adic);
  f.p_ = p;
  return f;
}

ValuedField ValuedField::at_point(const mpq_class& c) {
  ValuedField f(BaseField::rational_functions, ValuationKind::at_point);
  f.c_ = c;
  f.c_.canonicalize();
  return f;
}

ValuedField ValuedField::at_infinity() {
  return ValuedField(BaseField::rational_functions, ValuationKind::at_infinity);
}

std::string ValuedField::describe() const {
  switch (kind_) {
    case ValuationKind::p_adic: return "(Q, v_" + std::to_string(p_) + ")";
    case ValuationKind::at_point: return "(Q(t), v_{t=" + c_.get_str() + "})";
    case ValuationKind::at_infinity: return "(Q(t), v_inf)";
  }
  return {};
}

bool ValuedField::contains(const FieldElement& x) const {
  return base_ == BaseField::rational_functions || x.is_constant();
}

void ValuedField::require_member(const FieldElement& x) const {
  if (!contains(x)) fail(ErrorCode::FieldMismatch, x.str() + " is not an element of Q");
}

namespace {

LocalForm local_form(const ValuedField& f, const FieldElement& x) {
  Poly n = x.num(), d = x.den();
  long shift = 0;
  if (f.kind() == ValuationKind::at_point) {
    n = n.shifted(f.point());
    d = d.shifted(f.point());
  } else {
    // f(1/u) = u^(deg d - deg n) * rev(n)(u) / rev(d)(u)
    shift = d.degree() - n.degree();
    n = n.reversed();
    d = d.reversed();
  }
  int ln = n.low_order(), ld = d.low_order();
  return {shift + ln - ld, n.drop_low(ln), d.drop_low(ld)};
}

}  // namespace

std::optional<long> ValuedField::order(const FieldElement& x) const {
  require_member(x);
  if (x.is_zero()) return std::nullopt;
  if (kind_ == ValuationKind::p_adic) {
    mpq_class q = x.constant();
    return p_adic_order(q.get_num(), p_) - p_adic_order(q.get_den(), p_);
  }
  if (kind_ == ValuationKind::at_infinity) return x.den().degree() - x.num().degree();
  return local_form(*this, x).shift;
}

FieldElement ValuedField::uniformizer() const {
  switch (kind_) {
    case ValuationKind::p_adic: return FieldElement(mpq_class(p_));
    case ValuationKind::at_point: return FieldElement::t() - FieldElement(c_);
    case ValuationKind::at_infinity: return FieldElement::t().inverse();
  }
  return {};
}

FieldElement ValuedField::uniformizer_pow(long n) const { return uniformizer().pow(n); }

ResidueField ValuedField::residue_field() const {
  if (kind_ == ValuationKind::p_adic) return {ResidueField::Kind::prime_field, p_, false};
  return {ResidueField::Kind::rationals, 0, true};
}

ResidueValue ValuedField::residue(const FieldElement& x) const {
  auto v = order(x);
  ResidueField k = residue_field();
  if (!v || *v > 0) return {k, 0};
  if (*v < 0) fail(ErrorCode::NotInValuationRing, x.str() + " has negative valuation");
  switch (kind_) {
    case ValuationKind::p_adic: {
      mpq_class q = x.constant();
      mpz_class p(p_), inv, r;
      mpz_class den = q.get_den();
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class num = q.get_num();
      r = num * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      return {k, mpq_class(r)};
    }
    case ValuationKind::at_point:
      return {k, x.num().eval(c_) / x.den().eval(c_)};
    case ValuationKind::at_infinity: {
      mpq_class r = x.num().leading() / x.den().leading();
      return {k, r};
    }
  }
  return {k, 0};
}

std::vector<FieldElement> ValuedField::residue_representatives() const {
  if (kind_ != ValuationKind::p_adic)
    fail(ErrorCode::InfiniteResidueField, "residue field of " + describe() + " is infinite");
  std::vector<FieldElement> reps;
  for (long k = 0; k < p_; ++k) reps.emplace_back(k);
  return reps;
}

FieldElement ValuedField::reduce_mod(const FieldElement& a, long n) const {
  require_member(a);
  if (a.is_zero()) return a;
  if (kind_ == ValuationKind::p_adic) {
    // a = r / (p^m s') with gcd(s', p) = 1; a ≡ (r s'^{-1} mod p^{n+m}) / p^m.
    mpq_class q = a.constant();
    mpz_class den = q.get_den();
    long m = p_adic_order(den, p_);
    if (n + m <= 0) return FieldElement(0);
    mpz_class pm, modulus, unit_den = den, inv, r;
    mpz_ui_pow_ui(pm.get_mpz_t(), p_, m);
    unit_den /= pm;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p_, n + m);
    mpz_invert(inv.get_mpz_t(), unit_den.get_mpz_t(), modulus.get_mpz_t());
    mpz_class num = q.get_num();
    r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    mpq_class rep(r, pm);
    rep.canonicalize();
    return FieldElement(rep);
  }
  // Function fields: truncate the Laurent expansion in the local parameter
  // u below order n.
  LocalForm lf = local_form(*this, a);
  long terms = n - lf.shift;
  if (terms <= 0) return FieldElement(0);
  std::vector<mpq_class> series(terms);
  const mpq_class h0 = lf.h.coeff(0);
  for (long k = 0; k < terms; ++k) {
    mpq_class acc = lf.g.coeff(static_cast<int>(k));
    for (long j = 1; j <= k; ++j) acc -= lf.h.coeff(static_cast<int>(j)) * series[k - j];
    series[k] = acc / h0;
  }
  FieldElement u = uniformizer();
  FieldElement sum(0);
  for (long k = 0; k < terms; ++k)
    if (series[k] != 0) sum = sum + FieldElement(series[k]) * u.pow(lf.shift + k);
  return sum;
}

bool is_formally_real(const ValuedField& f) { return f.residue_field().formally_real; }

}  // namespace ltree
