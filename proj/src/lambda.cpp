#include "ltree/lambda.hpp"

#include <limits>

#include "ltree/error.hpp"

namespace ltree {

namespace {

void require_same_group(const LambdaElement& a, const LambdaElement& b) {
  if (!(a.group() == b.group()))
    fail(ErrorCode::GroupMismatch,
         "elements of " + describe(a.group()) + " and " + describe(b.group()));
}

}  // namespace

bool LambdaGroup::contains(const std::vector<Rational>& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank_k)) return false;
  for (const auto& c : coords) {
    if (trivial && !c.is_zero()) return false;
    if (dyadic_allowed ? !c.is_dyadic() : !c.is_integer()) return false;
  }
  return true;
}

std::string describe(const LambdaGroup& g) {
  if (g.trivial) return "{0}";
  std::string base = g.dyadic_allowed ? "Z[1/2]" : "Z";
  return g.rank_k == 1 ? base : base + "^" + std::to_string(g.rank_k) + " (lex)";
}

int group_rank(const LambdaGroup& g) { return g.trivial ? 0 : g.rank_k; }

LambdaElement::LambdaElement(LambdaGroup group, std::vector<Rational> coords)
    : group_(group), coords_(std::move(coords)) {
  if (group_.rank_k < 1) fail(ErrorCode::DomainError, "rank must be positive");
  if (!group_.contains(coords_))
    fail(ErrorCode::NotInGroup, str() + " is not an element of " + describe(group_));
}

LambdaElement LambdaElement::zero(const LambdaGroup& group) {
  return unchecked(group, std::vector<Rational>(group.rank_k));
}

LambdaElement LambdaElement::integer(std::int64_t value) {
  return LambdaElement(LambdaGroup::integers(1), {Rational(value)});
}

LambdaElement LambdaElement::unchecked(const LambdaGroup& group, std::vector<Rational> coords) {
  LambdaElement e;
  e.group_ = group;
  e.coords_ = std::move(coords);
  return e;
}

bool LambdaElement::is_zero() const { return sign() == 0; }

int LambdaElement::sign() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return c.sign();
  return 0;
}

LambdaElement LambdaElement::operator-() const {
  LambdaElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LambdaElement operator*(LambdaElement a, std::int64_t n) {
  for (auto& c : a.coords_) c *= Rational(n);
  return a;
}

LambdaElement LambdaElement::half() const {
  LambdaElement r = *this;
  for (auto& c : r.coords_) c /= Rational(2);
  return r;
}

bool operator==(const LambdaElement& a, const LambdaElement& b) {
  require_same_group(a, b);
  return a.coords_ == b.coords_;
}

bool operator<(const LambdaElement& a, const LambdaElement& b) {
  return compare(a, b) == Order::less;
}

std::string LambdaElement::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

Order compare(const LambdaElement& a, const LambdaElement& b) {
  require_same_group(a, b);
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c < 0) return Order::less;
    if (c > 0) return Order::greater;
  }
  return Order::equal;
}

LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b) { return a + b; }
LambdaElement lambda_sub(const LambdaElement& a, const LambdaElement& b) { return a - b; }

LambdaElement abs(const LambdaElement& x) { return x.is_negative() ? -x : x; }

const LambdaElement& min(const LambdaElement& a, const LambdaElement& b) { return b < a ? b : a; }
const LambdaElement& max(const LambdaElement& a, const LambdaElement& b) { return a < b ? b : a; }

bool in_subgroup(const LambdaElement& x, const ConvexSubgroup& s) {
  for (int i = 0; i < s.depth_j && i < x.group().rank_k; ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

LambdaGroup quotient_group(const LambdaGroup& g, const ConvexSubgroup& s) {
  if (s.depth_j < 0 || s.depth_j > g.rank_k)
    fail(ErrorCode::DomainError, "convex subgroup depth out of range");
  if (s.depth_j == 0 || g.trivial) return LambdaGroup::zero_group();
  return {s.depth_j, g.dyadic_allowed, false};
}

LambdaElement convex_quotient(const LambdaElement& x, const ConvexSubgroup& s) {
  LambdaGroup q = quotient_group(x.group(), s);
  if (q.trivial) return LambdaElement::zero(q);
  std::vector<Rational> head(x.coords().begin(), x.coords().begin() + s.depth_j);
  return LambdaElement::unchecked(q, std::move(head));
}

LambdaElement halve(const LambdaElement& x) {
  return LambdaElement::unchecked(x.group().with_half(), x.half().coords());
}

bool in_two_lambda(const LambdaElement& x) { return x.half().representable(); }

bool embeds_into(const LambdaGroup& from, const LambdaGroup& to) {
  if (from.trivial) return true;
  if (to.trivial) return false;
  if (to.rank_k < from.rank_k) return false;
  return to.dyadic_allowed || !from.dyadic_allowed;
}

LambdaElement embed(const LambdaElement& x, const LambdaGroup& to) {
  if (!embeds_into(x.group(), to))
    fail(ErrorCode::EmbeddingError,
         "no order embedding " + describe(x.group()) + " -> " + describe(to));
  if (x.group().trivial) return LambdaElement::zero(to);
  std::vector<Rational> c = x.coords();
  c.resize(to.rank_k);
  return LambdaElement::unchecked(to, std::move(c));
}

double ExtendedRatio::to_double() const {
  return infinite ? std::numeric_limits<double>::infinity() : value.to_double();
}

ExtendedRatio ratio(const LambdaElement& x, const LambdaElement& y) {
  require_same_group(x, y);
  if (x.is_negative() || y.is_negative())
    fail(ErrorCode::DomainError, "ratio needs nonnegative arguments");
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (x[i].is_zero() && y[i].is_zero()) continue;
    if (y[i].is_zero()) return {true, Rational(0)};
    return {false, x[i] / y[i]};
  }
  fail(ErrorCode::UndefinedRatio, "ratio 0/0");
}

}  // namespace ltree
