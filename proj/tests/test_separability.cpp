#include <gtest/gtest.h>

#include <set>

#include "mvsep/error.hpp"
#include "mvsep/pierce.hpp"
#include "mvsep/separability.hpp"
#include "mvsep/verify/oracles.hpp"
#include "support.hpp"

namespace mvsep {
namespace {

using testing::alg;
using testing::el;
using testing::fr;

TEST(CoproductFinite, Examples) {
  const CoproductResult c23 = coproductFinite(alg({2}), alg({3}));
  EXPECT_EQ(c23.algebra, alg({6}));
  EXPECT_FALSE(c23.codiagonal.has_value());

  const CoproductResult c22 = coproductFinite(alg({2}), alg({2}));
  EXPECT_EQ(c22.algebra, alg({2}));
  EXPECT_EQ(c22.in0, c22.in1);
  ASSERT_TRUE(c22.codiagonal.has_value());
  EXPECT_TRUE(c22.codiagonal->isIsomorphism());

  const CoproductResult sq = coproductFinite(alg({2, 3}), alg({2, 3}));
  EXPECT_EQ(sq.algebra, alg({2, 6, 6, 3}));
  EXPECT_EQ(coproductIndex(alg({2, 3}), 1, 0), 2U);
  EXPECT_EQ(sq.in0(el({"1/2", "1/3"})), el({"1/2", "1/2", "1/3", "1/3"}));
  EXPECT_EQ(sq.in1(el({"1/2", "1/3"})), el({"1/2", "1/3", "1/2", "1/3"}));

  EXPECT_TRUE(coproductFinite(FiniteMV::terminal(), alg({4})).algebra.isTerminal());
  EXPECT_EQ(coproductFinite(alg({1}), alg({4, 5})).algebra, alg({4, 5}));
}

// Two-element chain Ł1 is initial, so A + Ł1 ≅ A.
TEST(CoproductFinite, InitialIsUnit) {
  for (const auto& a : verify::finiteAlgebras(2, 5)) {
    const CoproductResult c = coproductFinite(a, alg({1}));
    EXPECT_TRUE(c.algebra.isomorphicTo(a));
    EXPECT_TRUE(c.in0.isIsomorphism());
  }
}

TEST(CoproductFinite, CodiagonalRetractsInjections) {
  for (const auto& a : verify::finiteAlgebras(3, 4)) {
    const CoproductResult c = coproductFinite(a, a);
    ASSERT_TRUE(c.codiagonal.has_value());
    EXPECT_EQ(compose(*c.codiagonal, c.in0), Hom::identity(a));
    EXPECT_EQ(compose(*c.codiagonal, c.in1), Hom::identity(a));
  }
}

TEST(CoproductFinite, UniversalPropertyOnSmallTargets) {
  const auto small = verify::finiteAlgebras(2, 3);
  const auto targets = verify::algebrasUpToCardinality(13);
  for (const auto& a : small) {
    for (const auto& b : small) {
      const CoproductResult c = coproductFinite(a, b);
      for (const auto& t : targets) {
        std::set<std::pair<Hom, Hom>> legs;
        const auto homs = enumerateHoms(c.algebra, t);
        for (const auto& h : homs) legs.emplace(compose(h, c.in0), compose(h, c.in1));
        EXPECT_EQ(legs.size(), homs.size());
        EXPECT_EQ(legs.size(), enumerateHoms(a, t).size() * enumerateHoms(b, t).size());
      }
    }
  }
}

TEST(CoproductRational, Examples) {
  using R = RationalAlgebra;
  EXPECT_EQ(coproductRational(R::chain(2), R::chain(3)), R::chain(6));
  for (const R& a : {R::chain(6), R::dyadic(), R::full(), R::supernatural({{3, 2}, {5, kInfiniteExponent}})}) {
    EXPECT_EQ(coproductRational(a, a), a) << a.str();
  }
  EXPECT_EQ(coproductRational(R::dyadic(), R::chain(3)),
            R::supernatural({{2, kInfiniteExponent}, {3, 1}}));
  EXPECT_EQ(coproductRational(R::full(), R::chain(7)), R::full());
}

// Finite truncations of 2^∞ + Ł3 agree with the finite coproduct.
TEST(CoproductRational, TruncationsAgreeWithFiniteCoproduct) {
  const RationalAlgebra sum = coproductRational(RationalAlgebra::dyadic(), RationalAlgebra::chain(3));
  for (std::int64_t k = 0; k <= 10; ++k) {
    const std::int64_t p = std::int64_t{1} << k;
    const FiniteMV finite = coproductFinite(alg({p}), alg({3})).algebra;
    ASSERT_EQ(finite, alg({3 * p}));
    EXPECT_TRUE(sum.contains(Fraction(1, 3 * p)));
    EXPECT_EQ(coproductRational(RationalAlgebra::chain(p), RationalAlgebra::chain(3)),
              RationalAlgebra::chain(3 * p));
  }
  EXPECT_FALSE(sum.contains(Fraction(1, 9)));
}

TEST(CoproductRationalProduct, PairsFactors) {
  const RationalProduct a{{RationalAlgebra::chain(2), RationalAlgebra::dyadic()}};
  const RationalProduct b{{RationalAlgebra::chain(3)}};
  const RationalCoproduct c = coproductRationalProduct(a, b);
  EXPECT_EQ(c.algebra.factors,
            (std::vector<RationalAlgebra>{RationalAlgebra::chain(6),
                                          RationalAlgebra::supernatural({{2, kInfiniteExponent}, {3, 1}})}));
}

TEST(IsSubterminalEpic, Examples) {
  EXPECT_TRUE(isSubterminalEpic(alg({6})));
  EXPECT_FALSE(isSubterminalEpic(alg({2, 3})));
  EXPECT_FALSE(isSubterminalEpic(FiniteMV::terminal()));
  EXPECT_TRUE(isSubterminalEpic(RationalAlgebra::dyadic()));
  EXPECT_TRUE(isSubterminalEpic(RationalAlgebra::full()));
  EXPECT_FALSE(isSubterminalEpic(RationalProduct{{RationalAlgebra::chain(2), RationalAlgebra::chain(2)}}));
  EXPECT_TRUE(isSubterminalEpic(RationalProduct{{RationalAlgebra::dyadic()}}));
}

TEST(IsSubterminalEpic, IffSimpleWithEqualInjections) {
  for (const auto& a : verify::finiteAlgebras(3, 6)) {
    if (a.isTerminal()) continue;
    const CoproductResult c = coproductFinite(a, a);
    EXPECT_EQ(isSubterminalEpic(a), isSimple(a) && c.in0 == c.in1) << a.str();
    EXPECT_EQ(isSubterminalEpic(a), c.codiagonal->isIsomorphism()) << a.str();
  }
}

TEST(SeparabilityWitness, Examples) {
  const SeparabilityCertificate two = separabilityWitness(alg({2}));
  ASSERT_TRUE(two.separable);
  EXPECT_EQ(two.coproduct, alg({2}));
  EXPECT_EQ(*two.witness, el({"1"}));

  const SeparabilityCertificate mixed = separabilityWitness(alg({2, 3}));
  ASSERT_TRUE(mixed.separable);
  EXPECT_EQ(mixed.coproduct, alg({2, 6, 6, 3}));
  EXPECT_EQ(*mixed.witness, el({"1", "0", "0", "1"}));
  const CoproductResult c = coproductFinite(alg({2, 3}), alg({2, 3}));
  const Element notE = neg(*mixed.witness);
  for (const auto& x : c.algebra.elements()) {
    EXPECT_EQ((*c.codiagonal)(x) == alg({2, 3}).zero(), lessEq(x, notE));
  }

  const SeparabilityCertificate terminal = separabilityWitness(FiniteMV::terminal());
  ASSERT_TRUE(terminal.separable);
  EXPECT_EQ(*terminal.witness, Element{});
}

TEST(SeparabilityWitness, SplitRecoversA) {
  for (const auto& a : verify::finiteAlgebras(3, 4)) {
    const SeparabilityCertificate cert = separabilityWitness(a);
    ASSERT_TRUE(cert.separable) << a.str() << ": " << cert.reason;
    ASSERT_TRUE(cert.isoAfterLocalization.has_value());
    EXPECT_TRUE(cert.isoAfterLocalization->isIsomorphism());
    EXPECT_EQ(cert.isoAfterLocalization->target(), a);
    EXPECT_EQ(compose(*cert.isoAfterLocalization, cert.split->q1().map),
              *coproductFinite(a, a).codiagonal);
  }
}

TEST(IsSeparable, Examples) {
  const SeparabilityVerdict mixed = isSeparable(alg({2, 3}));
  EXPECT_TRUE(mixed.separable);
  EXPECT_EQ(mixed.factors, (std::vector<RationalAlgebra>{RationalAlgebra::chain(2), RationalAlgebra::chain(3)}));
  const SeparabilityVerdict six = isSeparable(RationalProduct{{RationalAlgebra::chain(6)}});
  EXPECT_TRUE(six.separable);
  EXPECT_EQ(six.factors.size(), 1U);
  const RationalProduct dyadic3{{RationalAlgebra::dyadic(), RationalAlgebra::chain(3)}};
  const SeparabilityVerdict d3 = isSeparable(dyadic3);
  EXPECT_TRUE(d3.separable);
  EXPECT_EQ(d3.factors, dyadic3.factors);
  EXPECT_TRUE(isSeparable(FiniteMV::terminal()).separable);
}

TEST(RationalMembership, Examples) {
  EXPECT_TRUE(rationalMembership(RationalAlgebra::chain(6), fr("1/6")));
  EXPECT_FALSE(rationalMembership(RationalAlgebra::chain(6), fr("1/4")));
  EXPECT_TRUE(rationalMembership(RationalAlgebra::dyadic(), fr("3/8")));
  EXPECT_FALSE(rationalMembership(RationalAlgebra::dyadic(), fr("1/6")));
  EXPECT_TRUE(rationalMembership(RationalAlgebra::full(), fr("5/97")));
  const auto bounded = RationalAlgebra::supernatural({{2, 2}, {3, kInfiniteExponent}});
  EXPECT_TRUE(rationalMembership(bounded, fr("1/108")));
  EXPECT_FALSE(rationalMembership(bounded, fr("1/8")));
}

TEST(RationalAlgebra, NormalizesAndValidates) {
  EXPECT_EQ(RationalAlgebra::supernatural({{2, 1}, {3, 1}}), RationalAlgebra::chain(6));
  EXPECT_TRUE(RationalAlgebra::supernatural({{2, 1}, {3, 1}}).isChain());
  EXPECT_FALSE(RationalAlgebra::dyadic().isChain());
  EXPECT_THROW(RationalAlgebra::chain(0), AlgebraError);
  EXPECT_THROW(RationalAlgebra::supernatural({{4, 1}}), AlgebraError);
  EXPECT_THROW(RationalAlgebra::dyadic().chainOrder(), AlgebraError);
  EXPECT_EQ(factorize(360), (std::map<std::int64_t, Exponent>{{2, 3}, {3, 2}, {5, 1}}));
}

}  // namespace
}  // namespace mvsep
