#include "mvsep/topology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "mvsep/separability.hpp"

namespace mvsep {

namespace {

bool contains(PointSet s, std::size_t x) { return (s >> x) & 1U; }

// Union closure of `basis` together with ∅. Throws once it exceeds `limit`.
std::vector<PointSet> unionClosure(std::span<const PointSet> basis, std::size_t limit) {
  std::unordered_set<PointSet> seen{0};
  std::vector<PointSet> all{0};
  for (PointSet b : basis) {
    const std::size_t n = all.size();
    for (std::size_t k = 0; k < n; ++k) {
      PointSet u = all[k] | b;
      if (seen.insert(u).second) {
        all.push_back(u);
        if (all.size() > limit) throw TopologyError("too many open sets");
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t countMinimalNonzero(std::span<const PointSet> family) {
  std::size_t atoms = 0;
  for (PointSet c : family) {
    if (c == 0) continue;
    bool minimal = std::none_of(family.begin(), family.end(), [&](PointSet d) {
      return d != 0 && d != c && (d & ~c) == 0;
    });
    if (minimal) ++atoms;
  }
  return atoms;
}

std::vector<Element> minimalNonzeroElements(std::span<const Element> booleans) {
  auto nonzero = [](const Element& e) {
    return std::any_of(e.coords.begin(), e.coords.end(),
                       [](const Fraction& f) { return !f.isZero(); });
  };
  std::vector<Element> out;
  for (const auto& b : booleans) {
    if (!nonzero(b)) continue;
    bool minimal = std::none_of(booleans.begin(), booleans.end(), [&](const Element& c) {
      return c != b && nonzero(c) && lessEq(c, b);
    });
    if (minimal) out.push_back(b);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinSpace

FinSpace::FinSpace(std::size_t points, std::vector<PointSet> opens)
    : n_(points), opens_(std::move(opens)) {
  if (n_ > kMaxSpacePoints) throw TopologyError("finite spaces are limited to 64 points");
  const PointSet full = fullSet(n_);
  for (PointSet s : opens_) {
    if ((s & ~full) != 0) throw TopologyError("open set mentions a point outside the space");
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (!isOpen(0)) throw TopologyError("the empty set must be open");
  if (!isOpen(full)) throw TopologyError("the whole space must be open");

  nbhd_.assign(n_, full);
  for (PointSet s : opens_) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (contains(s, x)) nbhd_[x] &= s;
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    if (!isOpen(nbhd_[x])) {
      throw TopologyError("opens are not closed under intersection (point " + std::to_string(x) +
                          ")");
    }
  }
  // Every open is the union of the minimal neighbourhoods of its points, so
  // the family is a topology iff it is exactly the union closure of those.
  std::vector<PointSet> closure;
  try {
    closure = unionClosure(nbhd_, opens_.size());
  } catch (const TopologyError&) {
    throw TopologyError("opens are not closed under union");
  }
  if (closure != opens_) throw TopologyError("opens are not closed under union");
}

FinSpace FinSpace::discrete(std::size_t n) {
  std::vector<PointSet> leq(n);
  for (std::size_t x = 0; x < n; ++x) leq[x] = PointSet{1} << x;
  return fromSpecialization(leq);
}

FinSpace FinSpace::indiscrete(std::size_t n) { return FinSpace{n, {0, fullSet(n)}}; }

FinSpace FinSpace::sierpinski() { return FinSpace{2, {0b00, 0b01, 0b11}}; }

FinSpace FinSpace::fromSpecialization(std::span<const PointSet> leq) {
  return FinSpace{leq.size(), unionClosure(leq, std::size_t{1} << 24)};
}

bool FinSpace::isOpen(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::vector<PointSet> FinSpace::clopens() const {
  std::vector<PointSet> out;
  for (PointSet s : opens_) {
    if (isClosed(s)) out.push_back(s);
  }
  return out;
}

PointSet FinSpace::closure(PointSet s) const {
  PointSet out = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    if (nbhd_[x] & s) out |= PointSet{1} << x;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partitions, components

Partition Partition::fromLabels(std::span<const std::size_t> labels) {
  Partition p;
  std::map<std::size_t, std::size_t> renumber;
  p.classOf.reserve(labels.size());
  for (auto label : labels) {
    auto [it, inserted] = renumber.emplace(label, renumber.size());
    p.classOf.push_back(it->second);
  }
  p.classCount = renumber.size();
  return p;
}

std::vector<PointSet> Partition::classes() const {
  std::vector<PointSet> out(classCount, 0);
  for (std::size_t x = 0; x < classOf.size(); ++x) out[classOf[x]] |= PointSet{1} << x;
  return out;
}

Partition components(const FinSpace& x) {
  UnionFind uf(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (contains(x.neighbourhood(p), q)) uf.unite(p, q);
    }
  }
  std::vector<std::size_t> labels(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) labels[p] = uf.find(p);
  return Partition::fromLabels(labels);
}

Partition quasiComponents(const FinSpace& x) {
  const auto clopens = x.clopens();
  std::vector<std::size_t> labels(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    PointSet q = fullSet(x.size());
    for (PointSet c : clopens) {
      if (contains(c, p)) q &= c;
    }
    labels[p] = static_cast<std::size_t>(std::countr_zero(q));  // least point of Ĉ_p
  }
  return Partition::fromLabels(labels);
}

// ---------------------------------------------------------------------------
// Maps and quotients

namespace {

bool validMap(const FinSpace& from, const FinSpace& to, std::span<const std::size_t> f) {
  return f.size() == from.size() &&
         std::all_of(f.begin(), f.end(), [&](std::size_t y) { return y < to.size(); });
}

PointSet preimage(std::span<const std::size_t> f, PointSet s) {
  PointSet out = 0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (contains(s, f[p])) out |= PointSet{1} << p;
  }
  return out;
}

}  // namespace

bool isContinuous(const FinSpace& from, const FinSpace& to, std::span<const std::size_t> f) {
  if (!validMap(from, to, f)) return false;
  return std::all_of(to.opens().begin(), to.opens().end(),
                     [&](PointSet v) { return from.isOpen(preimage(f, v)); });
}

bool isHomeomorphism(const FinSpace& from, const FinSpace& to, std::span<const std::size_t> f) {
  if (!validMap(from, to, f) || from.size() != to.size()) return false;
  std::vector<std::size_t> inverse(to.size(), to.size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (inverse[f[p]] != to.size()) return false;
    inverse[f[p]] = p;
  }
  return isContinuous(from, to, f) && isContinuous(to, from, inverse);
}

FinSpace quotientSpace(const FinSpace& x, const Partition& p) {
  if (p.classOf.size() != x.size()) throw TopologyError("partition does not match the space");
  const auto classes = p.classes();
  std::vector<PointSet> opens;
  for (PointSet u : x.opens()) {
    bool saturated = std::all_of(classes.begin(), classes.end(), [&](PointSet c) {
      return (c & u) == 0 || (c & u) == c;
    });
    if (!saturated) continue;
    PointSet image = 0;
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (contains(u, q)) image |= PointSet{1} << p.classOf[q];
    }
    opens.push_back(image);
  }
  return FinSpace{p.classCount, std::move(opens)};
}

Pi0Result pi0(const FinSpace& x) {
  Partition classes = components(x);
  return Pi0Result{quotientSpace(x, classes), std::move(classes)};
}

std::vector<std::size_t> pi0Map(const FinSpace& from, const FinSpace& to,
                                std::span<const std::size_t> f) {
  if (!isContinuous(from, to, f)) throw TopologyError("map is not continuous");
  const Partition src = components(from);
  const Partition dst = components(to);
  std::vector<std::size_t> out(src.classCount, to.size());
  for (std::size_t p = 0; p < from.size(); ++p) {
    std::size_t image = dst.classOf[f[p]];
    std::size_t& slot = out[src.classOf[p]];
    if (slot != to.size() && slot != image) {
      throw TopologyError("map does not respect components");
    }
    slot = image;
  }
  return out;
}

EMapResult eMap(const FinSpace& x) {
  EMapResult out;
  out.clopens = x.clopens();
  std::map<std::vector<bool>, std::size_t> imageIndex;
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::vector<bool> row;
    row.reserve(out.clopens.size());
    for (PointSet c : out.clopens) row.push_back(contains(c, p));
    auto [it, inserted] = imageIndex.emplace(row, imageIndex.size());
    out.imageOf.push_back(it->second);
    out.membership.push_back(std::move(row));
  }
  // 2^C with C finite and 2 discrete is discrete, hence so is the image.
  out.image = FinSpace::discrete(imageIndex.size());

  const Pi0Result quotient = pi0(x);
  out.comparison.assign(quotient.classes.classCount, imageIndex.size());
  bool wellDefined = true;
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::size_t& slot = out.comparison[quotient.classes.classOf[p]];
    if (slot != imageIndex.size() && slot != out.imageOf[p]) wellDefined = false;
    slot = out.imageOf[p];
  }
  out.comparisonIsHomeomorphism =
      wellDefined && isHomeomorphism(quotient.quotient, out.image, out.comparison);
  return out;
}

FinSpace productSpace(const FinSpace& x, const FinSpace& y, std::size_t maxOpens) {
  const std::size_t n = x.size() * y.size();
  if (n > kMaxSpacePoints) throw TopologyError("product space exceeds 64 points");
  auto rectangle = [&](PointSet u, PointSet v) {
    PointSet r = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (!contains(u, a)) continue;
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (contains(v, b)) r |= PointSet{1} << (a * y.size() + b);
      }
    }
    return r;
  };
  std::vector<PointSet> basis;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      basis.push_back(rectangle(x.neighbourhood(a), y.neighbourhood(b)));
    }
  }
  auto opens = unionClosure(basis, maxOpens);
  return FinSpace{n, std::move(opens)};
}

GammaComparison gammaCompare(const FinSpace& x, const FinSpace& y) {
  const Pi0Result whole = pi0(productSpace(x, y));
  const Pi0Result left = pi0(x);
  const Pi0Result right = pi0(y);
  const FinSpace target = productSpace(left.quotient, right.quotient);

  GammaComparison out;
  out.map.assign(whole.classes.classCount, target.size());
  out.wellDefined = true;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      std::size_t cls = whole.classes.classOf[a * y.size() + b];
      std::size_t image = left.classes.classOf[a] * right.quotient.size() + right.classes.classOf[b];
      if (out.map[cls] != target.size() && out.map[cls] != image) out.wellDefined = false;
      out.map[cls] = image;
    }
  }
  out.homeomorphism = out.wellDefined && isHomeomorphism(whole.quotient, target, out.map);
  return out;
}

// ---------------------------------------------------------------------------
// Boolean algebras

FiniteBoolean clopenAlgebra(const FinSpace& x) {
  const auto clopens = x.clopens();
  return FiniteBoolean{countMinimalNonzero(clopens)};
}

FiniteBoolean baCoproduct(const FiniteBoolean& a, const FiniteBoolean& b) {
  return FiniteBoolean{a.atomCount * b.atomCount};
}

PierceCoproductReport pierceCoproductCheck(const FiniteMV& a, const FiniteMV& b) {
  // Each component contributes one atom; refuse before enumerating anything.
  if (a.components() * b.components() > kMaxPierceAtomPairs) {
    throw std::length_error("Boolean coproduct too large to enumerate");
  }
  const CoproductResult sum = coproductFinite(a, b);
  const auto atomsA = minimalNonzeroElements(a.booleanElements());
  const auto atomsB = minimalNonzeroElements(b.booleanElements());
  const auto booleansSum = sum.algebra.booleanElements();

  PierceCoproductReport report;
  report.atomsLeft = atomsA.size();
  report.atomsRight = atomsB.size();
  report.atomsCoproduct = minimalNonzeroElements(booleansSum).size();
  report.atomsBooleanCoproduct =
      baCoproduct(FiniteBoolean{atomsA.size()}, FiniteBoolean{atomsB.size()}).atomCount;

  // P A + P B is the powerset of atomsA × atomsB; the canonical map sends a
  // set S of pairs to ⋁_{(s,t)∈S} in0(a_s) ∧ in1(b_t).
  const std::size_t pairs = atomsA.size() * atomsB.size();
  std::vector<Element> pairImage;
  for (const auto& s : atomsA) {
    for (const auto& t : atomsB) pairImage.push_back(meet(sum.in0(s), sum.in1(t)));
  }
  const std::uint64_t subsets = std::uint64_t{1} << pairs;
  std::vector<Element> images(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Element e = sum.algebra.zero();
    for (std::size_t k = 0; k < pairs; ++k) {
      if ((mask >> k) & 1U) e = join(e, pairImage[k]);
    }
    images[mask] = std::move(e);
  }

  bool iso = images.size() == booleansSum.size();
  std::vector<Element> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  iso = iso && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  iso = iso && sorted == booleansSum;  // booleanElements() is sorted
  for (std::uint64_t mask = 0; iso && mask < subsets; ++mask) {
    if (images[(subsets - 1) & ~mask] != neg(images[mask])) iso = false;
  }
  // Compatibility with the injections: b × atomsB ↦ in0(b), atomsA × c ↦ in1(c).
  for (std::size_t s = 0; iso && s < atomsA.size(); ++s) {
    std::uint64_t row = 0;
    for (std::size_t t = 0; t < atomsB.size(); ++t) row |= std::uint64_t{1} << (s * atomsB.size() + t);
    if (images[row] != sum.in0(atomsA[s])) iso = false;
  }
  for (std::size_t t = 0; iso && t < atomsB.size(); ++t) {
    std::uint64_t col = 0;
    for (std::size_t s = 0; s < atomsA.size(); ++s) col |= std::uint64_t{1} << (s * atomsB.size() + t);
    if (images[col] != sum.in1(atomsB[t])) iso = false;
  }
  report.canonicalMapIsIsomorphism = iso;
  return report;
}

std::string describe(const FinSpace& x) {
  std::string s = "{points: " + std::to_string(x.size()) + ", opens: [";
  bool first = true;
  for (PointSet o : x.opens()) {
    if (!first) s += ", ";
    first = false;
    s += "{";
    bool firstPoint = true;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (!contains(o, p)) continue;
      if (!firstPoint) s += ",";
      firstPoint = false;
      s += std::to_string(p);
    }
    s += "}";
  }
  return s + "]}";
}

}  // namespace mvsep
