#include "mvsep/separability.hpp"

#include "mvsep/pierce.hpp"

namespace mvsep {

CoproductResult coproductFinite(const FiniteMV& a, const FiniteMV& b) {
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < a.components(); ++i) {
    for (std::size_t j = 0; j < b.components(); ++j) {
      orders.push_back(lcm64(a.order(i), b.order(j)));
      left.push_back(i);
      right.push_back(j);
    }
  }
  FiniteMV sum{std::move(orders)};
  CoproductResult out{sum, Hom{a, sum, std::move(left)}, Hom{b, sum, std::move(right)}, {}};
  if (a == b) {
    std::vector<std::size_t> diag;
    for (std::size_t i = 0; i < a.components(); ++i) diag.push_back(coproductIndex(a, i, i));
    out.codiagonal = Hom{sum, a, std::move(diag)};
  }
  return out;
}

RationalCoproduct coproductRationalProduct(const RationalProduct& a, const RationalProduct& b) {
  RationalCoproduct out;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    for (std::size_t j = 0; j < b.factors.size(); ++j) {
      out.algebra.factors.push_back(coproductRational(a.factors[i], b.factors[j]));
      out.in0.push_back(i);
      out.in1.push_back(j);
    }
  }
  return out;
}

bool isSubterminalEpic(const FiniteMV& a) {
  if (a.isTerminal()) return false;
  CoproductResult sum = coproductFinite(a, a);
  return sum.in0 == sum.in1;
}

bool isSubterminalEpic(const RationalAlgebra& a) {
  // Every subalgebra of [0,1]∩Q is non-trivial; A+A collapses onto A.
  return coproductRational(a, a) == a;
}

bool isSubterminalEpic(const RationalProduct& a) {
  if (a.factors.empty()) return false;
  RationalCoproduct sum = coproductRationalProduct(a, a);
  return sum.in0 == sum.in1;
}

SeparabilityCertificate separabilityWitness(const FiniteMV& a) {
  CoproductResult sum = coproductFinite(a, a);
  const Hom& codiagonal = *sum.codiagonal;
  const Ideal kernel = Ideal::kernel(codiagonal);

  SeparabilityCertificate cert;
  cert.coproduct = sum.algebra;
  // ∇ reads component (i,i), so ∇e = 1 forces e = 1 there. The remaining
  // coordinates run through every 0/1 pattern, lexicographically.
  const std::size_t k = sum.algebra.components();
  std::vector<bool> diagonal(k, false);
  for (std::size_t i = 0; i < a.components(); ++i) diagonal[coproductIndex(a, i, i)] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < k; ++c) {
    if (!diagonal[c]) free.push_back(c);
  }
  if (free.size() >= 63) throw std::length_error("too many components in " + sum.algebra.str());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    Element e = sum.algebra.zero();
    for (std::size_t c = 0; c < k; ++c) {
      if (diagonal[c]) e.coords[c] = Fraction::one();
    }
    for (std::size_t f = 0; f < free.size(); ++f) {
      if ((mask >> (free.size() - 1 - f)) & 1U) e.coords[free[f]] = Fraction::one();
    }
    if (codiagonal(e) != a.one()) continue;
    if (!(Ideal::principal(sum.algebra, neg(e)) == kernel)) continue;
    ProductSplit split = productSplit(sum.algebra, e);
    // ∇ must factor through the localization at e by an isomorphism.
    for (const auto& h : enumerateHoms(split.q1().algebra, a)) {
      if (h.isIsomorphism() && compose(h, split.q1().map) == codiagonal) {
        cert.separable = true;
        cert.witness = e;
        cert.split = std::move(split);
        cert.isoAfterLocalization = h;
        return cert;
      }
    }
  }
  cert.reason = "no Boolean element of " + sum.algebra.str() +
                " complements the kernel of the codiagonal";
  return cert;
}

SeparabilityVerdict isSeparable(const FiniteMV& a) {
  SeparabilityVerdict out;
  out.separable = true;
  for (const auto& factor : decompose(a).factors) out.factors.push_back(holderEmbed(factor));
  return out;
}

SeparabilityVerdict isSeparable(const RationalProduct& a) {
  return SeparabilityVerdict{true, a.factors};
}

bool rationalMembership(const RationalAlgebra& a, const Fraction& f) { return a.contains(f); }

}  // namespace mvsep
