#ifndef MVSEP_SEPARABILITY_HPP_
#define MVSEP_SEPARABILITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvsep/algebra.hpp"
#include "mvsep/rational.hpp"

namespace mvsep {

struct CoproductResult {
  FiniteMV algebra;
  Hom in0;
  Hom in1;
  /// ∇: A+A → A, present only when both summands are the same algebra.
  std::optional<Hom> codiagonal;
};

/// A + B = ∏_{(i,j)} Ł_{lcm(m_i, n_j)}, components ordered lexicographically
/// in (i,j); in0 reads i and in1 reads j at component (i,j).
CoproductResult coproductFinite(const FiniteMV& a, const FiniteMV& b);

/// Index of component (i,j) in coproductFinite(a, b).
inline std::size_t coproductIndex(const FiniteMV& b, std::size_t i, std::size_t j) {
  return i * b.components() + j;
}

/// Coproduct of finite products of rational algebras, by the same grid rule
/// with the supernatural join in place of lcm. Injections are component maps.
struct RationalCoproduct {
  RationalProduct algebra;
  std::vector<std::size_t> in0;
  std::vector<std::size_t> in1;
};

RationalCoproduct coproductRationalProduct(const RationalProduct& a, const RationalProduct& b);

/// 0 → A is epic and A is non-trivial: A+A exists with in0 = in1.
bool isSubterminalEpic(const FiniteMV& a);
bool isSubterminalEpic(const RationalAlgebra& a);
bool isSubterminalEpic(const RationalProduct& a);

/// Evidence for (or against) separability of a finite algebra: a Boolean e in
/// A+A cutting out the kernel of ∇ as ⟨¬e⟩, so that A+A ≅ A × (A+A)/⟨e⟩ with
/// ∇ as first projection.
struct SeparabilityCertificate {
  bool separable = false;
  FiniteMV coproduct;
  std::optional<Element> witness;
  std::optional<ProductSplit> split;
  /// ∇ = iso ∘ (localization of A+A at e).
  std::optional<Hom> isoAfterLocalization;
  std::string reason;  // set on refutation
};

/// Searches the Boolean skeleton of A+A in lexicographic order and returns
/// the least witness.
SeparabilityCertificate separabilityWitness(const FiniteMV& a);

struct SeparabilityVerdict {
  bool separable = false;
  std::vector<RationalAlgebra> factors;
};

/// Decomposes into simple factors and embeds each into [0,1]∩Q.
SeparabilityVerdict isSeparable(const FiniteMV& a);
/// A finite product of rational algebras is separable with itself as factors.
SeparabilityVerdict isSeparable(const RationalProduct& a);

bool rationalMembership(const RationalAlgebra& a, const Fraction& f);

}  // namespace mvsep

#endif  // MVSEP_SEPARABILITY_HPP_
