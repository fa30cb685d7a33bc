#ifndef MVSEP_TOPOLOGY_HPP_
#define MVSEP_TOPOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvsep/algebra.hpp"

namespace mvsep {

/// A subset of the points of a finite space, bit i set for point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxSpacePoints = 64;

inline PointSet fullSet(std::size_t n) {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

/// A finite topological space on points {0, …, n-1}.
///
/// The constructor validates the family of opens (∅ and the whole set
/// present, closed under union and intersection) and rejects anything else.
/// Opens are stored sorted; minimal neighbourhoods are precomputed.
class FinSpace {
 public:
  FinSpace() : FinSpace(0, {0}) {}
  FinSpace(std::size_t points, std::vector<PointSet> opens);

  static FinSpace discrete(std::size_t n);
  static FinSpace indiscrete(std::size_t n);
  /// Points {0,1}; opens ∅, {0}, {0,1}.
  static FinSpace sierpinski();
  /// Opens are the up-sets of a preorder; leq[x] has bit y set iff x ≤ y,
  /// where x ≤ y means x lies in the closure of {y}.
  static FinSpace fromSpecialization(std::span<const PointSet> leq);

  std::size_t size() const { return n_; }
  std::span<const PointSet> opens() const { return opens_; }
  bool isOpen(PointSet s) const;
  bool isClosed(PointSet s) const { return isOpen(fullSet(n_) & ~s); }
  bool isClopen(PointSet s) const { return isOpen(s) && isClosed(s); }
  std::vector<PointSet> clopens() const;

  /// Smallest open set containing x.
  PointSet neighbourhood(std::size_t x) const { return nbhd_[x]; }
  PointSet closure(PointSet s) const;

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> nbhd_;
};

/// A labelling of points by class index. Classes are numbered in order of
/// their smallest point, so equal partitions compare equal.
struct Partition {
  std::vector<std::size_t> classOf;
  std::size_t classCount = 0;

  static Partition fromLabels(std::span<const std::size_t> labels);
  std::vector<PointSet> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Connected components, via connected components of the specialization
/// comparability graph (x ~ y iff x ∈ cl{y} or y ∈ cl{x}).
Partition components(const FinSpace& x);

/// Quasi-components: Ĉ_x is the intersection of all clopens containing x.
Partition quasiComponents(const FinSpace& x);

bool isContinuous(const FinSpace& from, const FinSpace& to, std::span<const std::size_t> f);
bool isHomeomorphism(const FinSpace& from, const FinSpace& to, std::span<const std::size_t> f);

/// The quotient of a space by a partition, with the quotient topology.
FinSpace quotientSpace(const FinSpace& x, const Partition& p);

struct Pi0Result {
  FinSpace quotient;
  Partition classes;  // classes.classOf is the quotient map q: X → π0 X
};

Pi0Result pi0(const FinSpace& x);

/// π0 f on component classes. Throws TopologyError if f is not continuous.
std::vector<std::size_t> pi0Map(const FinSpace& from, const FinSpace& to,
                                std::span<const std::size_t> f);

struct EMapResult {
  std::vector<PointSet> clopens;                // the index set of the product 2^C
  std::vector<std::vector<bool>> membership;    // E x, one row per point
  std::vector<std::size_t> imageOf;             // point → image point
  FinSpace image;                               // π0′ X with the subspace topology
  std::vector<std::size_t> comparison;          // c: π0 X → π0′ X
  bool comparisonIsHomeomorphism = false;
};

EMapResult eMap(const FinSpace& x);

/// X × Y; point (x,y) is numbered x·|Y| + y. Throws TopologyError past 64
/// points or when the product has more than `maxOpens` open sets.
FinSpace productSpace(const FinSpace& x, const FinSpace& y,
                      std::size_t maxOpens = std::size_t{1} << 20);

struct GammaComparison {
  std::vector<std::size_t> map;  // class of (x,y) in π0(X×Y) → point of π0X × π0Y
  bool wellDefined = false;
  bool homeomorphism = false;
};

/// γ: π0(X×Y) → π0X × π0Y.
GammaComparison gammaCompare(const FinSpace& x, const FinSpace& y);

/// A finite Boolean algebra, up to isomorphism the powerset of its atoms.
struct FiniteBoolean {
  std::size_t atomCount = 0;

  /// As the MV-algebra Ł_1^atomCount.
  FiniteMV asMV() const { return FiniteMV::boolean(atomCount); }

  friend bool operator==(const FiniteBoolean&, const FiniteBoolean&) = default;
};

/// Clopen subsets of a finite space; atoms are the minimal nonempty clopens.
FiniteBoolean clopenAlgebra(const FinSpace& x);

/// Coproduct of finite Boolean algebras, dual to the product of atom sets.
FiniteBoolean baCoproduct(const FiniteBoolean& a, const FiniteBoolean& b);

struct PierceCoproductReport {
  std::size_t atomsLeft = 0;
  std::size_t atomsRight = 0;
  std::size_t atomsCoproduct = 0;  // atoms of P(A+B)
  std::size_t atomsBooleanCoproduct = 0;
  bool canonicalMapIsIsomorphism = false;

  bool passed() const {
    return canonicalMapIsIsomorphism && atomsCoproduct == atomsBooleanCoproduct &&
           atomsCoproduct == atomsLeft * atomsRight;
  }
};

/// Computes P(A+B) and P A + P B independently and checks that the
/// canonical map P A + P B → P(A+B) induced by the coproduct injections is a
/// Boolean isomorphism. Throws std::length_error past kMaxPierceAtomPairs
/// atom pairs, since the check enumerates 2^(pairs) Boolean elements.
inline constexpr std::size_t kMaxPierceAtomPairs = 16;
PierceCoproductReport pierceCoproductCheck(const FiniteMV& a, const FiniteMV& b);

std::string describe(const FinSpace& x);

}  // namespace mvsep

#endif  // MVSEP_TOPOLOGY_HPP_
