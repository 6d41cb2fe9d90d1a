#pragma once

// Built-in valued fields: (ℚ, v_p) and (ℚ(t), v_c) / (ℚ(t), v_∞).

#include <optional>
#include <string>
#include <vector>

#include "ltree/field_element.hpp"
#include "ltree/lambda.hpp"

namespace ltree {

enum class BaseField { rationals, rational_functions };
enum class ValuationKind { p_adic, at_point, at_infinity };

struct ResidueField {
  enum class Kind { prime_field, rationals } kind;
  long p = 0;  // prime_field only
  bool formally_real = false;
};

/// Residue class in k_v. For prime fields `value` is in [0, p).
struct ResidueValue {
  ResidueField field;
  mpq_class value;
};

/// v(x), with nullopt standing for the +∞ of v(0).
struct Valuation {
  std::optional<long> order;

  bool is_infinite() const { return !order.has_value(); }
  /// Value-group element; throws DomainError for +∞.
  LambdaElement value() const;
};

class ValuedField {
 public:
  static ValuedField p_adic(long p);
  static ValuedField at_point(const mpq_class& c);
  static ValuedField at_infinity();

  BaseField base() const { return base_; }
  ValuationKind kind() const { return kind_; }
  long prime() const { return p_; }
  const mpq_class& point() const { return c_; }
  LambdaGroup value_group() const { return LambdaGroup::integers(1); }
  std::string describe() const;

  /// Whether x is an element of the base field (ℚ admits only constants).
  bool contains(const FieldElement& x) const;

  /// Integer order of x; nullopt for x = 0.
  std::optional<long> order(const FieldElement& x) const;
  Valuation valuation(const FieldElement& x) const { return {order(x)}; }

  /// Canonical uniformizers: p, t - c, 1/t.
  FieldElement uniformizer() const;
  FieldElement uniformizer_pow(long n) const;

  ResidueField residue_field() const;
  /// Image of x in O(v)/πO(v). Throws NotInValuationRing when v(x) < 0.
  ResidueValue residue(const FieldElement& x) const;
  /// Representatives of k_v in O(v); InfiniteResidueField unless p-adic.
  std::vector<FieldElement> residue_representatives() const;

  /// Canonical representative of the class of a in K / π^n O(v).
  FieldElement reduce_mod(const FieldElement& a, long n) const;

  friend bool operator==(const ValuedField& a, const ValuedField& b) {
    return a.base_ == b.base_ && a.kind_ == b.kind_ && a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  ValuedField(BaseField b, ValuationKind k) : base_(b), kind_(k) {}
  void require_member(const FieldElement& x) const;

  BaseField base_;
  ValuationKind kind_;
  long p_ = 0;
  mpq_class c_ = 0;
};

bool is_formally_real(const ValuedField& f);

/// Exponent of the prime p in the nonzero integer n.
long p_adic_order(const mpz_class& n, long p);

}  // namespace ltree
