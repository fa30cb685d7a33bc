#ifndef MVSEP_PIERCE_HPP_
#define MVSEP_PIERCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mvsep/algebra.hpp"
#include "mvsep/rational.hpp"
#include "mvsep/topology.hpp"

namespace mvsep {

/// P A: the Boolean elements of A, a powerset algebra on one atom per
/// component.
class BooleanSkeleton {
 public:
  explicit BooleanSkeleton(FiniteMV ambient) : ambient_(std::move(ambient)) {}

  const FiniteMV& ambient() const { return ambient_; }
  std::size_t atomCount() const { return ambient_.components(); }
  std::vector<Element> elements() const { return ambient_.booleanElements(); }
  /// The atom e_i is 1 at component i and 0 elsewhere.
  std::vector<Element> atoms() const;
  bool contains(const Element& a) const;

 private:
  FiniteMV ambient_;
};

BooleanSkeleton booleanSkeleton(const FiniteMV& a);

/// The prime ideal 𝔭_i = {a : a_i = 0}. On finite products of chains every
/// prime is maximal, A/𝔭_i ≅ Ł_{m_i}, and Spec carries the discrete topology.
struct SpectrumPoint {
  std::size_t component = 0;

  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
  friend auto operator<=>(const SpectrumPoint&, const SpectrumPoint&) = default;
};

/// Set of spectrum points, as sorted component indices.
using Clopen = std::vector<std::size_t>;

std::vector<SpectrumPoint> spectrum(const FiniteMV& a);
/// Spec A as a finite space (hull-kernel topology; discrete on this class).
FinSpace spectrumSpace(const FiniteMV& a);
Ideal primeIdeal(const FiniteMV& a, SpectrumPoint p);
/// The quotient A → A/𝔭.
QuotientResult primeQuotient(const FiniteMV& a, SpectrumPoint p);

/// V(S): primes containing every element of S.
Clopen vanishingLocus(const FiniteMV& a, std::span<const Element> s);
/// Su(a): primes not containing a.
Clopen support(const FiniteMV& a, const Element& x);

/// b ↦ V(b), for Boolean b.
Clopen phi(const FiniteMV& a, const Element& b);
/// The Boolean element that is 0 on X0 and 1 off it.
Element chi(const FiniteMV& a, const Clopen& x0);

/// The unique Boolean b with b/𝔭 = 0 on X0 and b/𝔭 = 1 on X1. Uniqueness is
/// checked against every Boolean element. Throws unless X0, X1 partition Spec.
Element chineseBoolean(const FiniteMV& a, const Clopen& x0, const Clopen& x1);

struct Decomposition {
  std::vector<FiniteMV> factors;  // one chain per atom of P A, in component order
  Hom witness;                    // A → ∏ factors, an isomorphism
};

Decomposition decompose(const FiniteMV& a);
bool isIndecomposable(const FiniteMV& a);

std::vector<Ideal> maximalIdeals(const FiniteMV& a);
/// Rad A = ⋂ Max A.
Ideal radical(const FiniteMV& a);
bool isSemisimple(const FiniteMV& a);
/// Exactly two ideals, i.e. exactly one component.
bool isSimple(const FiniteMV& a);

/// The unique embedding of a simple A = Ł_m into [0,1]∩Q, as its image.
/// Throws AlgebraError when A is not simple.
RationalAlgebra holderEmbed(const FiniteMV& a);
/// Image of an element of a simple algebra under the embedding.
Fraction holderImage(const FiniteMV& a, const Element& x);

/// â: 𝔭 ↦ Hölder image of a/𝔭, indexed by spectrum point.
std::vector<Fraction> gelfandTransform(const FiniteMV& a, const Element& x);

/// a is Boolean iff a/𝔭 ∈ {0,1} for every prime 𝔭.
bool isBooleanViaPrimes(const FiniteMV& a, const Element& x);

}  // namespace mvsep

#endif  // MVSEP_PIERCE_HPP_
