#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mvsep/error.hpp"
#include "mvsep/lgroups.hpp"
#include "mvsep/rational.hpp"
#include "mvsep/terms.hpp"
#include "mvsep/verify/oracles.hpp"
#include "support.hpp"

namespace mvsep {
namespace {

using testing::alg;
using testing::el;
using testing::fr;
using K = Term::Kind;

Term v(const char* name) { return Term::var(name); }

TEST(ParseTerm, Examples) {
  EXPECT_EQ(parseTerm("!(x + x)"), Term::negation(Term::binary(K::kOplus, v("x"), v("x"))));
  EXPECT_EQ(parseTerm("x * !x"), Term::binary(K::kOdot, v("x"), Term::negation(v("x"))));
  EXPECT_EQ(parseTerm("1/2 + 1/3"),
            Term::binary(K::kOplus, Term::constant(fr("1/2")), Term::constant(fr("1/3"))));
}

TEST(ParseTerm, PrecedenceAndAssociativity) {
  // ! binds tightest, then *, +, ^, v; binary operators associate left.
  EXPECT_EQ(parseTerm("x + y * z"),
            Term::binary(K::kOplus, v("x"), Term::binary(K::kOdot, v("y"), v("z"))));
  EXPECT_EQ(parseTerm("x v y ^ z"),
            Term::binary(K::kJoin, v("x"), Term::binary(K::kMeet, v("y"), v("z"))));
  EXPECT_EQ(parseTerm("x + y + z"),
            Term::binary(K::kOplus, Term::binary(K::kOplus, v("x"), v("y")), v("z")));
  EXPECT_EQ(parseTerm("!x * y"),
            Term::binary(K::kOdot, Term::negation(v("x")), v("y")));
  EXPECT_EQ(parseTerm("!!x"), Term::negation(Term::negation(v("x"))));
  EXPECT_EQ(parseTerm("0"), Term::zero());
  EXPECT_EQ(parseTerm("1"), Term::one());
  EXPECT_EQ(parseTerm("vx v x_1"), Term::binary(K::kJoin, v("vx"), v("x_1")));
}

TEST(ParseTerm, ErrorsCarryPositions) {
  auto position = [](const char* text) -> std::size_t {
    try {
      parseTerm(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return 0;
  };
  EXPECT_EQ(position("x +"), 3U);
  EXPECT_EQ(position("(x + y"), 6U);
  EXPECT_EQ(position("x $ y"), 2U);
  EXPECT_EQ(position("x y"), 2U);
  EXPECT_THROW(parseTerm(""), ParseError);
  EXPECT_THROW(parseTerm("2/4"), ParseError);
  EXPECT_THROW(parseTerm("3/2"), ParseError);
  EXPECT_THROW(parseTerm("v"), ParseError);
  EXPECT_THROW(Term::var("v"), ParseError);
  EXPECT_THROW(Term::var("1x"), ParseError);
}

TEST(PrintTerm, MinimalParentheses) {
  EXPECT_EQ(printTerm(parseTerm("(x + y) * z")), "(x + y) * z");
  EXPECT_EQ(printTerm(parseTerm("x + (y * z)")), "x + y * z");
  EXPECT_EQ(printTerm(parseTerm("x + (y + z)")), "x + (y + z)");
  EXPECT_EQ(printTerm(parseTerm("!(x)")), "!x");
  EXPECT_EQ(printTerm(parseTerm("0/1 ^ 1")), "0/1 ^ 1");
}

Term randomTerm(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
  static const std::vector<std::string> names{"x", "y", "z", "v1", "w_2"};
  switch (pick(rng)) {
    case 0: return Term::zero();
    case 1: return Term::one();
    case 2: {
      std::uniform_int_distribution<std::int64_t> den(1, 12);
      const std::int64_t q = den(rng);
      std::uniform_int_distribution<std::int64_t> num(0, q);
      return Term::constant(Fraction(num(rng), q));
    }
    case 3: return Term::var(names[rng() % names.size()]);
    case 4: return Term::negation(randomTerm(rng, depth - 1));
    default: {
      static const K kinds[] = {K::kOplus, K::kOdot, K::kJoin, K::kMeet};
      return Term::binary(kinds[rng() % 4], randomTerm(rng, depth - 1), randomTerm(rng, depth - 1));
    }
  }
}

TEST(PrintTerm, RoundTripsRandomTerms) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 5000; ++i) {
    const Term t = randomTerm(rng, 6);
    const std::string printed = printTerm(t);
    const Term back = parseTerm(printed);
    ASSERT_EQ(back, t) << printed;
    ASSERT_EQ(printTerm(back), printed);
  }
}

TEST(EvalTerm, Examples) {
  const Environment third{{"x", el({"1/3"})}};
  EXPECT_EQ(evalTerm(parseTerm("!(x+x)"), third, alg({3})), el({"1/3"}));
  const Environment half{{"x", el({"1/2"})}};
  EXPECT_EQ(evalTerm(parseTerm("x v !x"), half, alg({2})), el({"1/2"}));
  const Environment boolean{{"x", el({"1", "0"})}};
  EXPECT_EQ(evalTerm(parseTerm("x ^ !x"), boolean, alg({2, 3})), el({"0", "0"}));
  EXPECT_EQ(evalTerm(parseTerm("1/2 + 1/3"), {}, alg({6})), el({"5/6"}));
}

TEST(EvalTerm, Errors) {
  EXPECT_THROW(evalTerm(parseTerm("x + y"), {{"x", el({"1/2"})}}, alg({2})), AlgebraError);
  EXPECT_THROW(evalTerm(parseTerm("1/3"), {}, alg({2})), AlgebraError);
  EXPECT_THROW(evalTerm(parseTerm("x"), {{"x", el({"1/3"})}}, alg({2})), AlgebraError);
}

TEST(EvalTerm, AgreesWithOperations) {
  std::mt19937_64 rng(7);
  const FiniteMV a = alg({2, 6});
  const auto elems = a.elements();
  for (int i = 0; i < 2000; ++i) {
    const Element& x = elems[rng() % elems.size()];
    const Element& y = elems[rng() % elems.size()];
    const Environment env{{"x", x}, {"y", y}};
    EXPECT_EQ(evalTerm(parseTerm("x * y"), env, a), odot(x, y));
    EXPECT_EQ(evalTerm(parseTerm("!(!x + !y)"), env, a), odot(x, y));
    EXPECT_EQ(evalTerm(parseTerm("x ^ y"), env, a), meet(x, y));
    EXPECT_EQ(evalTerm(parseTerm("x v y"), env, a), join(x, y));
  }
}

TEST(GeneratedSubalgebra, Examples) {
  const auto none = generatedSubalgebra(alg({6}), {});
  EXPECT_EQ(none.elements, (std::vector<Element>{el({"0"}), el({"1"})}));
  const std::vector<Element> half{el({"1/2"})};
  EXPECT_EQ(generatedSubalgebra(alg({2}), half).size(), 3U);
  const std::vector<Element> mixed{el({"1/2", "1/3"})};
  EXPECT_EQ(generatedSubalgebra(alg({2, 3}), mixed).size(), 12U);
  const std::vector<Element> stranger{el({"1/4"})};
  EXPECT_THROW(generatedSubalgebra(alg({2}), stranger), AlgebraError);
}

TEST(GeneratedSubalgebra, CertificateVerifies) {
  for (const auto& a : verify::algebrasUpToCardinality(30)) {
    for (const auto& x : a.elements()) {
      const std::vector<Element> g{x};
      const Subalgebra s = generatedSubalgebra(a, g);
      EXPECT_TRUE(s.verify(g)) << a.str() << " " << x.str();
      EXPECT_TRUE(std::is_sorted(s.elements.begin(), s.elements.end()));
    }
  }
}

// Sa(G) equals the intersection of all subalgebras containing G.
TEST(GeneratedSubalgebra, MatchesSubalgebraOracle) {
  for (const auto& a : verify::algebrasUpToCardinality(30)) {
    const verify::CarrierTables t(a);
    const auto subalgebras = verify::bruteForceSubalgebras(t);
    const auto n = t.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::vector<bool> in(n, true);
        for (const auto& s : subalgebras) {
          if (!std::binary_search(s.begin(), s.end(), i) || !std::binary_search(s.begin(), s.end(), j)) {
            continue;
          }
          std::vector<bool> member(n, false);
          for (auto k : s) member[k] = true;
          for (std::size_t k = 0; k < n; ++k) in[k] = in[k] && member[k];
        }
        std::vector<Element> expected;
        for (std::size_t k = 0; k < n; ++k) {
          if (in[k]) expected.push_back(t.elements[k]);
        }
        const std::vector<Element> g{t.elements[i], t.elements[j]};
        ASSERT_EQ(generatedSubalgebra(a, g).elements, expected) << a.str();
      }
    }
  }
}

TEST(GeneratedSubalgebra, MonotoneAndIdempotent) {
  for (const auto& a : verify::algebrasUpToCardinality(24)) {
    const auto elems = a.elements();
    for (const auto& x : elems) {
      const std::vector<Element> gx{x};
      const Subalgebra sx = generatedSubalgebra(a, gx);
      EXPECT_EQ(generatedSubalgebra(a, sx.elements).elements, sx.elements);
      for (const auto& y : elems) {
        const std::vector<Element> gxy{x, y};
        const Subalgebra sxy = generatedSubalgebra(a, gxy);
        EXPECT_TRUE(std::includes(sxy.elements.begin(), sxy.elements.end(), sx.elements.begin(),
                                  sx.elements.end()));
      }
    }
  }
}

TEST(GeneratedSubalgebra, HomsPreserveGeneration) {
  const auto algebras = verify::algebrasUpToCardinality(24);
  for (const auto& a : algebras) {
    const auto elems = a.elements();
    for (const auto& b : algebras) {
      for (const auto& h : enumerateHoms(a, b)) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
          for (std::size_t j = i; j < elems.size(); j += 3) {
            const std::vector<Element> g{elems[i], elems[j]};
            const Subalgebra s = generatedSubalgebra(a, g);
            if (s.size() > 60) continue;
            std::set<Element> image;
            for (const auto& x : s.elements) image.insert(h(x));
            const std::vector<Element> hg{h(elems[i]), h(elems[j])};
            const Subalgebra t = generatedSubalgebra(b, hg);
            EXPECT_TRUE(std::equal(image.begin(), image.end(), t.elements.begin(), t.elements.end()));
          }
        }
      }
    }
  }
}

TEST(IndecomposableFactors, SplitsAlongAtoms) {
  const std::vector<Element> mixed{el({"1/2", "1/3"})};
  const auto s = generatedSubalgebra(alg({2, 3}), mixed);
  EXPECT_EQ(indecomposableFactors(s.elements), (std::vector<std::int64_t>{2, 3}));
  // The diagonal copy of Ł2 inside Ł2×Ł4 is a single chain.
  const std::vector<Element> diag{el({"1/2", "1/2"})};
  const auto d = generatedSubalgebra(alg({2, 4}), diag);
  EXPECT_EQ(indecomposableFactors(d.elements), (std::vector<std::int64_t>{2}));
}

TEST(OrderRank, Examples) {
  const RationalProduct q{{RationalAlgebra::full()}};
  const OrderRank half = orderRank(q, el({"1/2"}));
  EXPECT_EQ(half.rank, 1U);
  EXPECT_EQ(half.factorOrders, (std::vector<std::int64_t>{2}));
  const OrderRank zero = orderRank(alg({2}), el({"0"}));
  EXPECT_EQ(zero.rank, 1U);
  EXPECT_EQ(zero.generated.elements, (std::vector<Element>{el({"0"}), el({"1"})}));
  EXPECT_EQ(orderRank(alg({2, 3}), el({"1/2", "1/3"})).rank, 2U);
  EXPECT_EQ(orderRank(FiniteMV::terminal(), Element{}).rank, 0U);
}

TEST(OrderRank, Errors) {
  EXPECT_THROW(orderRank(alg({2}), el({"1/3"})), AlgebraError);
  const RationalProduct six{{RationalAlgebra::chain(6)}};
  EXPECT_THROW(orderRank(six, el({"1/4"})), AlgebraError);
  const RationalProduct dyadic{{RationalAlgebra::dyadic()}};
  EXPECT_THROW(orderRank(dyadic, el({"1/3"})), AlgebraError);
  EXPECT_EQ(orderRank(dyadic, el({"3/8"})).factorOrders, (std::vector<std::int64_t>{8}));
}

TEST(OrderRank, EnvelopeDoesNotDependOnAmbient) {
  // Sa(a) is computed from a alone, so every ambient containing a agrees.
  for (const auto& a : verify::algebrasUpToCardinality(60)) {
    const RationalProduct r = RationalProduct::fromFinite(a);
    for (const auto& x : a.elements()) {
      const OrderRank inA = orderRank(a, x);
      const OrderRank inQ = orderRank(r, x);
      EXPECT_EQ(inA.rank, inQ.rank);
      EXPECT_EQ(inA.generated.elements, inQ.generated.elements);
      // Within A itself the closure is the same set.
      const std::vector<Element> g{x};
      EXPECT_EQ(generatedSubalgebra(a, g).elements, inA.generated.elements);
    }
  }
}

TEST(OrderRank, CountsNonTerminalFactorsInGammaImages) {
  for (const std::vector<std::int64_t>& unit :
       {std::vector<std::int64_t>{2, 3}, {4, 6}, {1, 5, 2}, {6}}) {
    const SimplicialGroup g(unit);
    const FiniteMV a = gamma(g);
    for (const auto& x : a.elements()) {
      const OrderRank r = orderRank(a, x);
      EXPECT_EQ(r.rank, r.factorOrders.size());
      std::uint64_t size = 1;
      for (auto m : r.factorOrders) size *= static_cast<std::uint64_t>(m + 1);
      EXPECT_EQ(size, r.generated.size());
    }
  }
}

}  // namespace
}  // namespace mvsep
