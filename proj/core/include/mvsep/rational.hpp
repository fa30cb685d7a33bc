#ifndef MVSEP_RATIONAL_HPP_
#define MVSEP_RATIONAL_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mvsep/algebra.hpp"
#include "mvsep/fraction.hpp"

namespace mvsep {

using Exponent = std::uint32_t;
inline constexpr Exponent kInfiniteExponent = std::numeric_limits<Exponent>::max();

/// Prime factorization of a positive integer, ascending by prime.
std::map<std::int64_t, Exponent> factorize(std::int64_t n);

/// A subalgebra of [0,1]∩Q, described by the denominators it admits.
///
/// Either a finite chain Ł_n (denominators dividing n) or a supernatural
/// number ∏ p^{e_p} with exponents in ℕ∪{∞}, optionally with every prime
/// at ∞ (the whole of [0,1]∩Q). Supernatural specifications without any
/// infinite exponent are normalized to the equivalent chain, so equality of
/// values is equality of subalgebras.
class RationalAlgebra {
 public:
  static RationalAlgebra chain(std::int64_t n);
  static RationalAlgebra supernatural(std::map<std::int64_t, Exponent> primes,
                                      bool allPrimesInfinite = false);
  static RationalAlgebra full() { return supernatural({}, true); }
  /// Dyadic rationals, 2^∞.
  static RationalAlgebra dyadic() { return supernatural({{2, kInfiniteExponent}}); }

  bool isChain() const { return chainOrder_ != 0; }
  std::int64_t chainOrder() const;
  bool allPrimesInfinite() const { return all_; }
  /// Exponent map; for a chain, the factorization of its order.
  std::map<std::int64_t, Exponent> primes() const;
  Exponent exponent(std::int64_t prime) const;

  /// Membership of a fraction in lowest terms: den must be bounded by the
  /// specification prime by prime.
  bool contains(const Fraction& f) const;

  std::string str() const;

  friend bool operator==(const RationalAlgebra&, const RationalAlgebra&) = default;

 private:
  RationalAlgebra() = default;

  std::int64_t chainOrder_ = 0;  // 0 when supernatural with an infinite exponent
  std::map<std::int64_t, Exponent> primes_;
  bool all_ = false;
};

/// Coproduct of two subalgebras of [0,1]∩Q: the join of their
/// specifications (lcm for chains, pointwise max of exponents otherwise).
RationalAlgebra coproductRational(const RationalAlgebra& a, const RationalAlgebra& b);

/// A finite product of subalgebras of [0,1]∩Q; the empty product is terminal.
struct RationalProduct {
  std::vector<RationalAlgebra> factors;

  static RationalProduct fromFinite(const FiniteMV& algebra);

  bool contains(const Element& e) const;
  void require(const Element& e) const;
  std::string str() const;

  friend bool operator==(const RationalProduct&, const RationalProduct&) = default;
};

}  // namespace mvsep

#endif  // MVSEP_RATIONAL_HPP_
