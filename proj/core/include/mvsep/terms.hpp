#ifndef MVSEP_TERMS_HPP_
#define MVSEP_TERMS_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvsep/algebra.hpp"
#include "mvsep/rational.hpp"

namespace mvsep {

/// An immutable Łukasiewicz term. Subterms are shared.
///
/// Concrete syntax, loosest binding first:
///   join 'v'  <  meet '^'  <  oplus '+'  <  odot '*'  <  prefix '!'
/// All binary operators are left-associative. Constants are '0', '1' and
/// fractions "p/q" in lowest terms; identifiers are [A-Za-z_][A-Za-z0-9_]*
/// except the bare word "v", which is the join operator.
class Term {
 public:
  enum class Kind { kZero, kOne, kConstant, kVar, kNeg, kOplus, kOdot, kJoin, kMeet };

  static Term zero();
  static Term one();
  static Term constant(const Fraction& value);
  static Term var(std::string name);
  static Term negation(Term operand);
  static Term binary(Kind kind, Term lhs, Term rhs);

  Kind kind() const;
  const Fraction& value() const;
  const std::string& name() const;
  const Term& operand() const;
  const Term& lhs() const;
  const Term& rhs() const;

  bool isBinary() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool isIdentifier(std::string_view name);

/// Throws ParseError (with character offset) on malformed input.
Term parseTerm(std::string_view input);

/// Minimal-parenthesis rendering; parseTerm(printTerm(t)) == t.
std::string printTerm(const Term& t);

using Environment = std::map<std::string, Element, std::less<>>;

/// Throws AlgebraError on an unbound variable or a constant outside `algebra`.
Element evalTerm(const Term& t, const Environment& env, const FiniteMV& algebra);

/// How one member of a generated subalgebra was obtained.
struct ClosureStep {
  enum class Rule { kZero, kGenerator, kNeg, kOplus };
  Rule rule;
  std::size_t lhs = 0;  // index into Subalgebra::discovery for kNeg / kOplus
  std::size_t rhs = 0;  // kOplus only
};

/// The subalgebra generated by a set of elements, with its closure certificate.
struct Subalgebra {
  FiniteMV ambient;
  std::vector<Element> elements;   // sorted
  std::vector<Element> discovery;  // discovery order; certificate indexes this
  std::vector<ClosureStep> certificate;

  std::size_t size() const { return elements.size(); }
  bool contains(const Element& e) const;
  /// Replays the certificate and checks closure under ⊕ and ¬.
  bool verify(std::span<const Element> generators) const;
};

/// Least fixed point of G ∪ {0} under ⊕ and ¬ (worklist, sorted seeds).
Subalgebra generatedSubalgebra(const FiniteMV& algebra, std::span<const Element> generators);

/// Decomposition of a finite subalgebra S into directly indecomposable
/// factors, read off from the atoms of its Boolean elements: each atom b
/// contributes the chain [0,b]∩S.
std::vector<std::int64_t> indecomposableFactors(std::span<const Element> subalgebra);

struct OrderRank {
  std::size_t rank = 0;
  std::vector<std::int64_t> factorOrders;  // sorted ascending
  Subalgebra generated;
};

/// Order-rank of `a`: the number of non-terminal indecomposable factors of
/// Sa(a), computed inside the envelope ∏ Ł_{den(a_i)}.
OrderRank orderRank(const FiniteMV& algebra, const Element& a);
OrderRank orderRank(const RationalProduct& algebra, const Element& a);

}  // namespace mvsep

#endif  // MVSEP_TERMS_HPP_
