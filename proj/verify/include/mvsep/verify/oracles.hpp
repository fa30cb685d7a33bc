#ifndef MVSEP_VERIFY_ORACLES_HPP_
#define MVSEP_VERIFY_ORACLES_HPP_

// Brute-force reference computations. Nothing here relies on the
// product-of-chains structure theory used by the core library: homs are found
// by searching carrier functions, ideals and subalgebras by searching
// subsets, connectivity by testing every two-block split.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mvsep/algebra.hpp"
#include "mvsep/topology.hpp"

namespace mvsep::verify {

/// Operation tables of a finite algebra over element indices.
struct CarrierTables {
  std::vector<Element> elements;
  std::map<Element, std::size_t> index;
  std::size_t zero = 0;
  std::vector<std::size_t> neg;
  std::vector<std::vector<std::size_t>> oplus;

  explicit CarrierTables(const FiniteMV& algebra);
};

/// A carrier function, as the index of f(a) for each index a.
using FunctionTable = std::vector<std::size_t>;

/// Every function A → B preserving 0, ¬ and ⊕, found by backtracking search
/// with forced-value propagation. Sorted.
std::vector<FunctionTable> bruteForceHoms(const CarrierTables& a, const CarrierTables& b);

/// The carrier function of a hom, for comparison with the oracle.
FunctionTable tableOf(const Hom& h, const CarrierTables& a, const CarrierTables& b);

/// All ideals (down-closed, ⊕-closed, containing 0), each as a sorted index
/// set. Sorted.
std::vector<std::vector<std::size_t>> bruteForceIdeals(const CarrierTables& a);

/// All subalgebras (containing 0, closed under ⊕ and ¬), each sorted.
std::vector<std::vector<std::size_t>> bruteForceSubalgebras(const CarrierTables& a);

/// Closure of G ∪ {0} under ⊕ and ¬ computed on bare rationals in [0,1].
std::vector<Fraction> rationalClosure(std::span<const Fraction> generators);

/// Components as unions of connected subsets, where a subset is connected
/// iff no split into two nonempty relatively open pieces exists. n ≤ 16.
Partition bruteForceComponents(const FinSpace& x);

/// Every topology on n labelled points (n ≤ 6 in practice), generated as
/// the up-set topologies of all preorders.
std::vector<FinSpace> allTopologies(std::size_t n);

/// One representative per homeomorphism class among allTopologies(n).
std::vector<FinSpace> topologiesUpToHomeomorphism(std::size_t n);

/// All maps {0..from-1} → {0..to-1}.
std::vector<std::vector<std::size_t>> allMaps(std::size_t from, std::size_t to);

/// Canonical finite algebras (sorted orders) with at most `maxComponents`
/// components and every order in [1, maxOrder], terminal included.
std::vector<FiniteMV> finiteAlgebras(std::size_t maxComponents, std::int64_t maxOrder);

/// Canonical finite algebras with at most `maxCardinality` elements.
std::vector<FiniteMV> algebrasUpToCardinality(std::uint64_t maxCardinality);

}  // namespace mvsep::verify

#endif  // MVSEP_VERIFY_ORACLES_HPP_
