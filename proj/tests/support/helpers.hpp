#pragma once

#include <string>
#include <vector>

#include "ltree/lambda.hpp"

namespace ltree::testing {

inline LambdaElement lam(std::vector<Rational> coords, bool dyadic = false) {
  int k = static_cast<int>(coords.size());
  return LambdaElement(dyadic ? LambdaGroup::dyadics(k) : LambdaGroup::integers(k), std::move(coords));
}

inline LambdaElement Z(std::int64_t n) { return LambdaElement::integer(n); }

}  // namespace ltree::testing
