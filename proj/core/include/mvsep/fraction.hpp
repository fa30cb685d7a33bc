#ifndef MVSEP_FRACTION_HPP_
#define MVSEP_FRACTION_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mvsep/error.hpp"

namespace mvsep {

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// An exact rational number in [0,1], always kept in lowest terms.
///
/// This is the carrier of every chain and of every subalgebra of [0,1]∩Q.
/// Construction reduces; the textual form "p/q" is parsed strictly (lowest
/// terms required) so that printed and parsed values agree bit for bit.
class Fraction {
 public:
  constexpr Fraction() = default;

  /// Reduces num/den. Throws AlgebraError if den <= 0 or the value leaves [0,1].
  Fraction(std::int64_t num, std::int64_t den);

  static Fraction zero() { return Fraction{}; }
  static Fraction one() { return Fraction{1, 1}; }

  /// Accepts "0", "1" and "p/q" in lowest terms with 0 <= p <= q.
  static Fraction parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == den_; }

  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Łukasiewicz operations on the standard algebra.
Fraction truncatedSum(const Fraction& x, const Fraction& y);  // (x+y)∧1
Fraction complement(const Fraction& x);                       // 1-x
Fraction truncatedProduct(const Fraction& x, const Fraction& y);  // (x+y-1)∨0

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace mvsep

#endif  // MVSEP_FRACTION_HPP_
