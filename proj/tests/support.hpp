#ifndef MVSEP_TESTS_SUPPORT_HPP_
#define MVSEP_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <string_view>

#include "mvsep/algebra.hpp"
#include "mvsep/fraction.hpp"

namespace mvsep::testing {

inline Fraction fr(std::string_view s) { return Fraction::parse(s); }

inline Element el(std::initializer_list<std::string_view> coords) {
  Element e;
  for (auto c : coords) e.coords.push_back(fr(c));
  return e;
}

inline FiniteMV alg(std::initializer_list<std::int64_t> orders) { return FiniteMV(orders); }

}  // namespace mvsep::testing

#endif  // MVSEP_TESTS_SUPPORT_HPP_
