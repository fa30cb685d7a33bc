#include "mvsep/pierce.hpp"

#include <algorithm>

namespace mvsep {

namespace {

void requirePoint(const FiniteMV& a, SpectrumPoint p) {
  if (p.component >= a.components()) {
    throw AlgebraError("spectrum point " + std::to_string(p.component) + " not in Spec " +
                       a.str());
  }
}

Clopen normalized(const FiniteMV& a, Clopen s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= a.components()) {
    throw AlgebraError("spectrum point " + std::to_string(s.back()) + " not in Spec " + a.str());
  }
  return s;
}

}  // namespace

std::vector<Element> BooleanSkeleton::atoms() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < ambient_.components(); ++i) {
    Element e = ambient_.zero();
    e.coords[i] = Fraction::one();
    out.push_back(std::move(e));
  }
  return out;
}

bool BooleanSkeleton::contains(const Element& a) const {
  return ambient_.contains(a) && isBoolean(ambient_, a);
}

BooleanSkeleton booleanSkeleton(const FiniteMV& a) { return BooleanSkeleton{a}; }

std::vector<SpectrumPoint> spectrum(const FiniteMV& a) {
  std::vector<SpectrumPoint> out;
  for (std::size_t i = 0; i < a.components(); ++i) out.push_back({i});
  return out;
}

FinSpace spectrumSpace(const FiniteMV& a) { return FinSpace::discrete(a.components()); }

Ideal primeIdeal(const FiniteMV& a, SpectrumPoint p) {
  requirePoint(a, p);
  return Ideal{a, {p.component}};
}

QuotientResult primeQuotient(const FiniteMV& a, SpectrumPoint p) {
  return quotientByIdeal(a, primeIdeal(a, p));
}

Clopen vanishingLocus(const FiniteMV& a, std::span<const Element> s) {
  Clopen out;
  for (auto p : spectrum(a)) {
    Ideal prime = primeIdeal(a, p);
    if (std::all_of(s.begin(), s.end(), [&](const Element& x) { return prime.contains(x); })) {
      out.push_back(p.component);
    }
  }
  return out;
}

Clopen support(const FiniteMV& a, const Element& x) {
  Clopen zeros = vanishingLocus(a, std::span<const Element>(&x, 1));
  Clopen out;
  for (std::size_t i = 0; i < a.components(); ++i) {
    if (!std::binary_search(zeros.begin(), zeros.end(), i)) out.push_back(i);
  }
  return out;
}

Clopen phi(const FiniteMV& a, const Element& b) {
  if (!isBoolean(a, b)) throw AlgebraError("phi expects a Boolean element, got " + b.str());
  return vanishingLocus(a, std::span<const Element>(&b, 1));
}

Element chi(const FiniteMV& a, const Clopen& x0) {
  Clopen s = normalized(a, x0);
  Element b = a.one();
  for (auto i : s) b.coords[i] = Fraction::zero();
  return b;
}

Element chineseBoolean(const FiniteMV& a, const Clopen& x0, const Clopen& x1) {
  Clopen s0 = normalized(a, x0);
  Clopen s1 = normalized(a, x1);
  Clopen both;
  std::set_intersection(s0.begin(), s0.end(), s1.begin(), s1.end(), std::back_inserter(both));
  if (!both.empty() || s0.size() + s1.size() != a.components()) {
    throw AlgebraError("X0 and X1 do not partition Spec " + a.str());
  }
  std::vector<Element> found;
  for (const auto& b : a.booleanElements()) {
    bool ok = true;
    for (auto p : spectrum(a)) {
      Element image = primeQuotient(a, p).map(b);
      bool inX0 = std::binary_search(s0.begin(), s0.end(), p.component);
      if (image != (inX0 ? FiniteMV::chain(a.order(p.component)).zero()
                         : FiniteMV::chain(a.order(p.component)).one())) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(b);
  }
  if (found.size() != 1) {
    throw AlgebraError("expected exactly one Boolean element separating the partition, found " +
                       std::to_string(found.size()));
  }
  return found.front();
}

Decomposition decompose(const FiniteMV& a) {
  Decomposition out{{}, Hom::identity(FiniteMV::terminal())};
  std::vector<Hom> legs;
  for (const auto& atom : booleanSkeleton(a).atoms()) {
    QuotientResult q = localize(a, atom);
    out.factors.push_back(q.algebra);
    legs.push_back(q.map);
  }
  out.witness = pairing(a, legs);
  return out;
}

bool isIndecomposable(const FiniteMV& a) { return booleanSkeleton(a).elements().size() == 2; }

std::vector<Ideal> maximalIdeals(const FiniteMV& a) {
  std::vector<Ideal> out;
  for (auto p : spectrum(a)) out.push_back(primeIdeal(a, p));
  return out;
}

Ideal radical(const FiniteMV& a) {
  Ideal rad = Ideal::zero(a);  // empty intersection in the terminal algebra: 0 = A
  bool first = true;
  for (const auto& m : maximalIdeals(a)) {
    rad = first ? m : rad.intersect(m);
    first = false;
  }
  return rad;
}

bool isSemisimple(const FiniteMV& a) { return radical(a) == Ideal::zero(a); }

bool isSimple(const FiniteMV& a) { return a.components() == 1; }

RationalAlgebra holderEmbed(const FiniteMV& a) {
  if (!isSimple(a)) throw AlgebraError(a.str() + " is not simple");
  return RationalAlgebra::chain(a.order(0));
}

Fraction holderImage(const FiniteMV& a, const Element& x) {
  if (!isSimple(a)) throw AlgebraError(a.str() + " is not simple");
  a.require(x);
  return x[0];
}

std::vector<Fraction> gelfandTransform(const FiniteMV& a, const Element& x) {
  a.require(x);
  std::vector<Fraction> out;
  for (auto p : spectrum(a)) {
    QuotientResult q = primeQuotient(a, p);
    out.push_back(holderImage(q.algebra, q.map(x)));
  }
  return out;
}

bool isBooleanViaPrimes(const FiniteMV& a, const Element& x) {
  a.require(x);
  for (auto p : spectrum(a)) {
    Element image = primeQuotient(a, p).map(x);
    if (!image[0].isZero() && !image[0].isOne()) return false;
  }
  return true;
}

}  // namespace mvsep
