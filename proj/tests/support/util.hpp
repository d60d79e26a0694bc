#pragma once

#include <string_view>

#include "hkz/model.hpp"

namespace hkz::testing {

inline DivisorClass cls(std::string_view csv) { return DivisorClass(parse_rational_list(csv)); }
inline Rational rat(std::string_view s) { return parse_rational(s); }

inline RatMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) {
    RatVector v;
    for (const char* x : r) v.push_back(parse_rational(x));
    out.push_back(std::move(v));
  }
  return RatMatrix::from_rows(out);
}

}  // namespace hkz::testing
