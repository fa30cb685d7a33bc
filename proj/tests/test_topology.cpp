#include <gtest/gtest.h>

#include <numeric>

#include "mvsep/error.hpp"
#include "mvsep/topology.hpp"
#include "mvsep/verify/oracles.hpp"
#include "support.hpp"

namespace mvsep {
namespace {

using testing::alg;

std::size_t homeomorphismClassCount(std::size_t n) {
  return verify::topologiesUpToHomeomorphism(n).size();
}

TEST(FinSpace, ValidatesTopology) {
  EXPECT_NO_THROW(FinSpace(2, {0b00, 0b01, 0b11}));
  EXPECT_THROW(FinSpace(2, {0b01, 0b11}), TopologyError);         // no ∅
  EXPECT_THROW(FinSpace(2, {0b00, 0b01}), TopologyError);         // no whole set
  EXPECT_THROW(FinSpace(3, {0b000, 0b001, 0b010, 0b111}), TopologyError);  // not union-closed
  EXPECT_THROW(FinSpace(3, {0b000, 0b011, 0b110, 0b111}), TopologyError);  // not meet-closed
  EXPECT_THROW(FinSpace(2, {0b000, 0b100, 0b011}), TopologyError);  // point out of range
  EXPECT_THROW(FinSpace(65, {}), TopologyError);
  EXPECT_EQ(FinSpace().size(), 0U);
}

TEST(FinSpace, SpecializationRoundTrip) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& x : verify::allTopologies(n)) {
      std::vector<PointSet> leq(n);
      for (std::size_t p = 0; p < n; ++p) leq[p] = x.neighbourhood(p);
      EXPECT_EQ(FinSpace::fromSpecialization(leq), x);
    }
  }
}

TEST(TopologyOracle, LabelledCounts) {
  const std::vector<std::size_t> expected{1, 1, 4, 29, 355, 6942, 209527};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(verify::allTopologies(n).size(), expected[n]) << n;
  }
}

TEST(TopologyOracle, CountsUpToHomeomorphism) {
  const std::vector<std::size_t> expected{1, 1, 3, 9, 33};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(homeomorphismClassCount(n), expected[n]);
}

TEST(Components, Examples) {
  const Partition d = components(FinSpace::discrete(3));
  EXPECT_EQ(d.classCount, 3U);
  EXPECT_EQ(d.classes(), (std::vector<PointSet>{0b001, 0b010, 0b100}));
  const Partition s = components(FinSpace::sierpinski());
  EXPECT_EQ(s.classCount, 1U);
  EXPECT_EQ(s.classes(), (std::vector<PointSet>{0b11}));
  EXPECT_EQ(components(FinSpace::indiscrete(4)).classCount, 1U);
  EXPECT_EQ(components(FinSpace()).classCount, 0U);
}

TEST(Components, EqualQuasiComponentsAndOracleUpToSixPoints) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& x : verify::allTopologies(n)) {
      const Partition c = components(x);
      ASSERT_EQ(c, quasiComponents(x)) << describe(x);
      ASSERT_EQ(c, verify::bruteForceComponents(x)) << describe(x);
    }
  }
}

TEST(Pi0, Examples) {
  const Pi0Result s = pi0(FinSpace::sierpinski());
  EXPECT_EQ(s.quotient, FinSpace::discrete(1));
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(pi0(FinSpace::discrete(n)).quotient, FinSpace::discrete(n));
}

TEST(Pi0, QuotientIsDiscreteAndIdempotent) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& x : verify::allTopologies(n)) {
      const Pi0Result p = pi0(x);
      EXPECT_EQ(p.quotient, FinSpace::discrete(p.classes.classCount));
      const Pi0Result again = pi0(p.quotient);
      std::vector<std::size_t> identity(p.classes.classCount);
      std::iota(identity.begin(), identity.end(), 0);
      EXPECT_EQ(again.classes.classOf, identity);
    }
  }
}

TEST(Pi0Map, IdentityAndContinuity) {
  const FinSpace s = FinSpace::sierpinski();
  const std::vector<std::size_t> id{0, 1};
  EXPECT_EQ(pi0Map(s, s, id), (std::vector<std::size_t>{0}));
  const FinSpace d = FinSpace::discrete(2);
  EXPECT_EQ(pi0Map(d, d, id), id);
  EXPECT_TRUE(isContinuous(d, s, id));
  EXPECT_FALSE(isContinuous(s, d, id));
  EXPECT_THROW(pi0Map(s, d, id), TopologyError);
  EXPECT_TRUE(isHomeomorphism(d, d, std::vector<std::size_t>{1, 0}));
  EXPECT_FALSE(isHomeomorphism(d, s, id));
}

// Continuous maps preserve connectedness, and π0 respects composition.
TEST(Pi0Map, FunctorialOnSmallSpaces) {
  std::vector<FinSpace> spaces;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto& x : verify::topologiesUpToHomeomorphism(n)) spaces.push_back(std::move(x));
  }
  std::size_t continuous = 0;
  for (const auto& x : spaces) {
    const Partition cx = components(x);
    for (const auto& y : spaces) {
      const Partition cy = components(y);
      for (const auto& f : verify::allMaps(x.size(), y.size())) {
        if (!isContinuous(x, y, f)) continue;
        ++continuous;
        for (std::size_t p = 0; p < x.size(); ++p) {
          for (std::size_t q = 0; q < x.size(); ++q) {
            if (cx.classOf[p] == cx.classOf[q]) {
              ASSERT_EQ(cy.classOf[f[p]], cy.classOf[f[q]]);
            }
          }
        }
        const auto pf = pi0Map(x, y, f);
        for (std::size_t p = 0; p < x.size(); ++p) ASSERT_EQ(pf[cx.classOf[p]], cy.classOf[f[p]]);
      }
    }
  }
  EXPECT_GT(continuous, 0U);

  std::vector<FinSpace> tiny;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto& x : verify::topologiesUpToHomeomorphism(n)) tiny.push_back(std::move(x));
  }
  for (const auto& x : tiny) {
    for (const auto& y : tiny) {
      for (const auto& z : tiny) {
        for (const auto& f : verify::allMaps(x.size(), y.size())) {
          if (!isContinuous(x, y, f)) continue;
          const auto pf = pi0Map(x, y, f);
          for (const auto& g : verify::allMaps(y.size(), z.size())) {
            if (!isContinuous(y, z, g)) continue;
            std::vector<std::size_t> gf(x.size());
            for (std::size_t p = 0; p < x.size(); ++p) gf[p] = g[f[p]];
            const auto pg = pi0Map(y, z, g);
            const auto pgf = pi0Map(x, z, gf);
            for (std::size_t c = 0; c < pf.size(); ++c) ASSERT_EQ(pgf[c], pg[pf[c]]);
          }
        }
      }
    }
  }
}

TEST(EMap, Examples) {
  const EMapResult d = eMap(FinSpace::discrete(2));
  EXPECT_NE(d.imageOf[0], d.imageOf[1]);
  EXPECT_TRUE(d.comparisonIsHomeomorphism);
  const EMapResult s = eMap(FinSpace::sierpinski());
  EXPECT_EQ(s.imageOf[0], s.imageOf[1]);
  EXPECT_EQ(s.image.size(), 1U);
}

TEST(ProductSpace, Examples) {
  const FinSpace ss = productSpace(FinSpace::sierpinski(), FinSpace::sierpinski());
  EXPECT_EQ(ss.size(), 4U);
  EXPECT_EQ(pi0(ss).classes.classCount, 1U);
  const GammaComparison g = gammaCompare(FinSpace::sierpinski(), FinSpace::sierpinski());
  EXPECT_TRUE(g.homeomorphism);
  EXPECT_EQ(g.map.size(), 1U);

  const GammaComparison d = gammaCompare(FinSpace::discrete(2), FinSpace::discrete(3));
  EXPECT_TRUE(d.wellDefined);
  EXPECT_TRUE(d.homeomorphism);
  EXPECT_EQ(d.map.size(), 6U);

  EXPECT_EQ(productSpace(FinSpace::discrete(2), FinSpace::discrete(3)), FinSpace::discrete(6));
  EXPECT_EQ(productSpace(FinSpace::indiscrete(2), FinSpace::indiscrete(3)), FinSpace::indiscrete(6));
  EXPECT_THROW(productSpace(FinSpace::discrete(8), FinSpace::discrete(9)), TopologyError);
}

TEST(ProductSpace, ProjectionsAreContinuous) {
  const auto spaces = verify::allTopologies(3);
  for (std::size_t i = 0; i < spaces.size(); i += 3) {
    for (std::size_t j = 0; j < spaces.size(); j += 5) {
      const FinSpace& x = spaces[i];
      const FinSpace& y = spaces[j];
      const FinSpace p = productSpace(x, y);
      std::vector<std::size_t> first(p.size());
      std::vector<std::size_t> second(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        first[k] = k / y.size();
        second[k] = k % y.size();
      }
      EXPECT_TRUE(isContinuous(p, x, first));
      EXPECT_TRUE(isContinuous(p, y, second));
    }
  }
}

TEST(ClopenAlgebra, Examples) {
  EXPECT_EQ(clopenAlgebra(FinSpace::discrete(3)).atomCount, 3U);
  EXPECT_EQ(clopenAlgebra(FinSpace::sierpinski()).atomCount, 1U);
  EXPECT_EQ(clopenAlgebra(FinSpace()).atomCount, 0U);
  EXPECT_EQ(baCoproduct(FiniteBoolean{2}, FiniteBoolean{3}).atomCount, 6U);
}

// The Boolean coproduct is checked by its hom-sets into small Boolean algebras.
TEST(ClopenAlgebra, BooleanCoproductUniversalCounts) {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const FiniteBoolean sum = baCoproduct(FiniteBoolean{m}, FiniteBoolean{n});
      for (std::size_t k = 0; k <= 3; ++k) {
        const FiniteMV c = FiniteMV::boolean(k);
        EXPECT_EQ(enumerateHoms(sum.asMV(), c).size(),
                  enumerateHoms(FiniteMV::boolean(m), c).size() *
                      enumerateHoms(FiniteMV::boolean(n), c).size());
      }
    }
  }
}

TEST(PierceCoproductCheck, Examples) {
  const PierceCoproductReport r = pierceCoproductCheck(alg({2, 3}), alg({2, 3}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.atomsCoproduct, 4U);
  EXPECT_EQ(pierceCoproductCheck(FiniteMV::terminal(), alg({2})).atomsCoproduct, 0U);
  EXPECT_THROW(pierceCoproductCheck(FiniteMV::boolean(5), FiniteMV::boolean(5)), std::length_error);
}

}  // namespace
}  // namespace mvsep
