#ifndef MVSEP_ALGEBRA_HPP_
#define MVSEP_ALGEBRA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mvsep/fraction.hpp"

namespace mvsep {

/// A tuple of coordinates, one per component of the ambient algebra.
struct Element {
  std::vector<Fraction> coords;

  std::size_t size() const { return coords.size(); }
  const Fraction& operator[](std::size_t i) const { return coords[i]; }

  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// A finite MV-algebra presented as a product of chains Ł_{m1} × … × Ł_{mk}.
///
/// Ł_m is the (m+1)-element chain {0, 1/m, …, 1}. The order list is kept as
/// given: coproducts and quotients index their components positionally, and
/// only `canonical()` sorts. The empty list is the terminal algebra (0 = 1).
class FiniteMV {
 public:
  FiniteMV() = default;
  explicit FiniteMV(std::vector<std::int64_t> orders);

  static FiniteMV terminal() { return FiniteMV{}; }
  static FiniteMV chain(std::int64_t order) { return FiniteMV{{order}}; }
  /// The Boolean algebra with `atoms` atoms, i.e. Ł_1^atoms.
  static FiniteMV boolean(std::size_t atoms);

  std::span<const std::int64_t> orders() const { return orders_; }
  std::int64_t order(std::size_t component) const { return orders_.at(component); }
  std::size_t components() const { return orders_.size(); }
  bool isTerminal() const { return orders_.empty(); }

  /// Number of elements. Throws std::overflow_error past 2^62.
  std::uint64_t cardinality() const;

  FiniteMV canonical() const;
  bool isomorphicTo(const FiniteMV& other) const;

  bool contains(const Element& e) const;
  /// Throws AlgebraError unless `e` belongs to this algebra.
  void require(const Element& e) const;

  Element zero() const;
  Element one() const;
  /// Validating constructor for elements of this algebra.
  Element element(std::vector<Fraction> coords) const;
  /// Constant element c in every coordinate; throws if some chain lacks c.
  Element constant(const Fraction& c) const;

  /// All elements in lexicographic order. Throws std::length_error when the
  /// carrier exceeds `limit`.
  std::vector<Element> elements(std::uint64_t limit = std::uint64_t{1} << 22) const;

  /// Boolean elements (coordinates in {0,1}) in lexicographic order. Throws
  /// std::length_error when there are more than `limit`.
  std::vector<Element> booleanElements(std::uint64_t limit = std::uint64_t{1} << 22) const;

  std::string str() const;

  friend bool operator==(const FiniteMV&, const FiniteMV&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

std::ostream& operator<<(std::ostream& os, const FiniteMV& a);

enum class Op { kOplus, kNeg, kOdot, kJoin, kMeet };

std::size_t arity(Op op);
const char* symbol(Op op);

/// Coordinatewise evaluation of one MV operation, with membership checks.
Element applyOperation(const FiniteMV& algebra, Op op, std::span<const Element> args);

// Unchecked coordinatewise operations; arguments must have equal length.
Element oplus(const Element& a, const Element& b);
Element neg(const Element& a);
Element odot(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
bool lessEq(const Element& a, const Element& b);

bool isBoolean(const FiniteMV& algebra, const Element& a);

/// A homomorphism between finite algebras, stored dually: target component j
/// reads source component componentMap[j]. This requires the source order to
/// divide the target order, and the value is carried over unchanged (k/m is
/// the same rational as k(n/m)/n).
class Hom {
 public:
  Hom(FiniteMV source, FiniteMV target, std::vector<std::size_t> componentMap);

  static Hom identity(const FiniteMV& algebra);

  const FiniteMV& source() const { return source_; }
  const FiniteMV& target() const { return target_; }
  std::span<const std::size_t> componentMap() const { return map_; }

  Element operator()(const Element& a) const;

  /// Bijective on carriers; for this representation, a permutation of
  /// components with equal orders.
  bool isIsomorphism() const;

  std::string str() const;

  friend bool operator==(const Hom&, const Hom&) = default;
  friend auto operator<=>(const Hom& a, const Hom& b) { return a.map_ <=> b.map_; }

 private:
  FiniteMV source_;
  FiniteMV target_;
  std::vector<std::size_t> map_;
};

/// outer ∘ inner.
Hom compose(const Hom& outer, const Hom& inner);

/// The unique hom into a product determined by its legs: the hom A → ∏ Bt
/// whose t-th projection is legs[t]. All legs must share a source.
Hom pairing(const FiniteMV& source, std::span<const Hom> legs);

/// All homomorphisms A → B, in lexicographic order of component maps.
std::vector<Hom> enumerateHoms(const FiniteMV& source, const FiniteMV& target);

struct ProductResult {
  FiniteMV algebra;
  Hom first;   // projection onto the left factor
  Hom second;  // projection onto the right factor
};

ProductResult productAlg(const FiniteMV& a, const FiniteMV& b);

/// An ideal of a finite product of chains. Every such ideal is the set of
/// elements vanishing on a fixed set of components; that set is stored.
class Ideal {
 public:
  /// `vanishing` lists component indices; duplicates are ignored.
  Ideal(FiniteMV ambient, std::vector<std::size_t> vanishing);

  static Ideal zero(const FiniteMV& ambient);
  static Ideal whole(const FiniteMV& ambient);
  /// ⟨a⟩: vanishes exactly where a does.
  static Ideal principal(const FiniteMV& ambient, const Element& a);
  static Ideal generatedBy(const FiniteMV& ambient, std::span<const Element> generators);
  /// Kernel of a hom: vanishes on the components the hom reads.
  static Ideal kernel(const Hom& h);

  const FiniteMV& ambient() const { return ambient_; }
  /// Sorted component indices on which every member is 0.
  std::span<const std::size_t> vanishing() const { return vanishing_; }

  bool contains(const Element& a) const;
  bool isProper() const;

  Ideal intersect(const Ideal& other) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  FiniteMV ambient_;
  std::vector<std::size_t> vanishing_;
};

struct QuotientResult {
  FiniteMV algebra;
  Hom map;
};

/// A/I keeps exactly the components on which I vanishes, in index order.
QuotientResult quotientByIdeal(const FiniteMV& algebra, const Ideal& ideal);

/// A[x⁻¹] := A/⟨¬x⟩ for Boolean x.
QuotientResult localize(const FiniteMV& algebra, const Element& x);

/// A split of A along a Boolean element x into A/⟨x⟩ × A/⟨¬x⟩.
class ProductSplit {
 public:
  ProductSplit(FiniteMV algebra, Element x);

  const FiniteMV& algebra() const { return algebra_; }
  const Element& splitter() const { return x_; }
  /// Quotient inverting ¬x (keeps the components where x = 0).
  const QuotientResult& q0() const { return q0_; }
  /// Quotient inverting x (keeps the components where x = 1).
  const QuotientResult& q1() const { return q1_; }

  /// (c0 ∧ ¬x) ∨ (c1 ∧ x): agrees with c0 under q0 and with c1 under q1.
  Element combine(const Element& c0, const Element& c1) const;

 private:
  FiniteMV algebra_;
  Element x_;
  QuotientResult q0_;
  QuotientResult q1_;
};

ProductSplit productSplit(const FiniteMV& algebra, const Element& x);

}  // namespace mvsep

#endif  // MVSEP_ALGEBRA_HPP_
