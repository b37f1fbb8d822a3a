#include <gtest/gtest.h>

#include <random>

#include "oabkit/errors.h"
#include "oabkit/presentations.h"
#include "support/oracles.h"

using namespace oabkit;

namespace {

Permutation P(std::initializer_list<long> one_indexed) {
  std::vector<long> v(one_indexed);
  return Permutation::FromOneIndexed(v);
}

struct Example {
  PermPresentation presentation;
  GammaModule target;
};

Example Ex1() {
  PermGroup g = Close({{"sigma", P({2, 1})}}, 2);
  return {{g, IntMatrix{{2, -1}, {-1, 2}}, IntMatrix{{1}, {2}}},
          GammaModule({3}, {{"sigma", IntMatrix{{2}}}})};
}

// The witness is (n1+n2+n3, n1+n2+n4, n1+n3+n4).
Example Ex2() {
  PermGroup g =
      Close({{"sigma", P({2, 1, 4, 3})}, {"tau", P({3, 4, 1, 2})}}, 4);
  IntMatrix d{{2, -1, -1, -1}, {-1, 2, -1, -1}, {-1, -1, 2, -1},
              {-1, -1, -1, 2}};
  IntMatrix w{{1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  // sigma(a) = (a2, a1, -a1-a2-a3), tau(a) = (a3, -a1-a2-a3, a1); row i is
  // the image of the i-th basis vector.
  GammaModule target({3, 3, 3},
                     {{"sigma", IntMatrix{{0, 1, 2}, {1, 0, 2}, {0, 0, 2}}},
                      {"tau", IntMatrix{{0, 2, 1}, {0, 2, 0}, {1, 2, 0}}}});
  return {{g, d, w}, target};
}

}  // namespace

TEST(VerifyPresentation, WorkedExamplesPass) {
  for (const Example& e : {Ex1(), Ex2()}) {
    PresentationReport r = VerifyPresentation(e.presentation, e.target);
    EXPECT_TRUE(r.passed()) << r.first_failure();
    EXPECT_TRUE(r.witness_checked);
    EXPECT_EQ(r.clauses.size(), 6u);
  }
}

TEST(VerifyPresentation, ZeroWitnessFailsSurjectivity) {
  Example e = Ex1();
  e.presentation.witness = IntMatrix::Zero(2, 1);
  PresentationReport r = VerifyPresentation(e.presentation, e.target);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.clause("d").passed);
  EXPECT_EQ(r.first_failure(), "d");
}

TEST(VerifyPresentation, EverySingleWitnessMutationIsCaught) {
  for (const Example& base : {Ex1(), Ex2()}) {
    const IntMatrix& w = *base.presentation.witness;
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        Example e = base;
        IntMatrix mutated = w;
        mutated(i, j) = ReduceMod(mutated(i, j) + 1, base.target.orders[j]);
        e.presentation.witness = mutated;
        EXPECT_FALSE(VerifyPresentation(e.presentation, e.target).passed())
            << "entry " << i << "," << j;
      }
  }
}

TEST(VerifyPresentation, WrongModuleActionFailsEquivariance) {
  Example e = Ex1();
  e.target.action[0].second = IntMatrix{{1}};
  PresentationReport r = VerifyPresentation(e.presentation, e.target);
  EXPECT_FALSE(r.clause("f").passed);
  EXPECT_TRUE(r.clause("c").passed);
}

TEST(VerifyPresentation, ClauseFailures) {
  Example e = Ex1();
  e.presentation.D = IntMatrix{{2, -1}, {-1, 3}};
  EXPECT_FALSE(VerifyPresentation(e.presentation, e.target).clause("a").passed);

  Example k = Ex1();
  k.presentation.D = IntMatrix{{1, -1}, {-1, 1}};
  k.presentation.witness = IntMatrix{{1}, {1}};
  k.target = GammaModule({0}, {{"sigma", IntMatrix{{1}}}});
  PresentationReport kr = VerifyPresentation(k.presentation, k.target);
  EXPECT_FALSE(kr.clause("b").passed);

  // An infinite target against a finite cokernel is a clause-(e) failure.
  Example inf = Ex1();
  inf.target = GammaModule({0}, {{"sigma", IntMatrix{{-1}}}});
  inf.presentation.witness = IntMatrix{{1}, {-1}};
  PresentationReport ir = VerifyPresentation(inf.presentation, inf.target);
  EXPECT_FALSE(ir.clause("e").passed);
}

TEST(VerifyPresentation, WithoutWitnessChecksFactorsOnly) {
  Example e = Ex2();
  e.presentation.witness.reset();
  PresentationReport r = VerifyPresentation(e.presentation, e.target);
  EXPECT_FALSE(r.witness_checked);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.clause("factors").passed);
  e.target.orders = {3, 3, 9};
  e.target.action = {{"sigma", IntMatrix::Identity(3)},
                     {"tau", IntMatrix::Identity(3)}};
  EXPECT_FALSE(VerifyPresentation(e.presentation, e.target).passed());
}

TEST(VerifyPresentation, MalformedInputThrows) {
  Example e = Ex1();
  e.presentation.witness = IntMatrix{{1, 0}, {2, 0}};
  EXPECT_THROW(VerifyPresentation(e.presentation, e.target), DimensionError);
  Example m = Ex1();
  // sigma of order 2 acting with order 3 on Z/7 is not a module.
  m.target = GammaModule({7}, {{"sigma", IntMatrix{{2}}}});
  EXPECT_THROW(VerifyPresentation(m.presentation, m.target), PreconditionError);
}

TEST(ModuleOf, Examples) {
  Example e1 = Ex1();
  GammaModule m1 = ModuleOf(e1.presentation.D, e1.presentation.group);
  EXPECT_EQ(m1.orders, std::vector<Integer>{3});
  EXPECT_TRUE(CongruentModOrders(m1.matrix("sigma"), IntMatrix{{-1}}, m1.orders));
  EXPECT_EQ(ModuleOf(IntMatrix::Identity(2), e1.presentation.group).rank(), 0u);
  Example e2 = Ex2();
  GammaModule m2 = ModuleOf(e2.presentation.D, e2.presentation.group);
  EXPECT_EQ(m2.orders, (std::vector<Integer>{3, 3, 3}));
  EXPECT_TRUE(CheckModule(m2, e2.presentation.group).ok());
}

TEST(ModuleOf, CanonicalWitnessAlwaysVerifies) {
  std::mt19937_64 rng(31);
  int verified = 0;
  for (int trial = 0; trial < 200 && verified < 60; ++trial) {
    PermGroup g = oracle::RandomGroup(rng, 2 + trial % 4, 24);
    IntMatrix d = oracle::RandomInvariant(rng, g, -3, 3);
    if (oracle::LaplaceDeterminant(d) == 0) continue;
    ++verified;
    PermPresentation p{g, d, CanonicalWitness(d)};
    PresentationReport r = VerifyPresentation(p, ModuleOf(d, g));
    EXPECT_TRUE(r.passed()) << d << r.first_failure();
    // Clause (e) cross-check: |coker D| = |det D|.
    EXPECT_EQ(Cokernel(d).torsion_order(), abs(oracle::LaplaceDeterminant(d)));
  }
  EXPECT_EQ(verified, 60);
}

TEST(ModuleChecks, EndomorphismAndAutomorphism) {
  std::vector<Integer> orders{2, 4};
  // Z/2 -> Z/4 must land in 2Z/4.
  EXPECT_FALSE(IsWellDefinedEndomorphism(IntMatrix{{1, 1}, {0, 1}}, orders));
  EXPECT_TRUE(IsWellDefinedEndomorphism(IntMatrix{{1, 2}, {0, 1}}, orders));
  EXPECT_TRUE(IsAutomorphism(IntMatrix{{1, 2}, {0, 1}}, orders));
  EXPECT_FALSE(IsAutomorphism(IntMatrix{{1, 0}, {0, 2}}, orders));
  EXPECT_TRUE(IsAutomorphism(IntMatrix{{-1}}, std::vector<Integer>{0}));
  EXPECT_FALSE(IsAutomorphism(IntMatrix{{2}}, std::vector<Integer>{0}));
}

TEST(ModuleChecks, CheckModuleFlagsEachProperty) {
  PermGroup swap = Close({{"sigma", P({2, 1})}}, 2);
  EXPECT_TRUE(CheckModule(GammaModule({3}, {{"sigma", IntMatrix{{2}}}}), swap).ok());
  ModuleCheck not_invertible =
      CheckModule(GammaModule({4}, {{"sigma", IntMatrix{{2}}}}), swap);
  EXPECT_FALSE(not_invertible.invertible);
  ModuleCheck wrong_order =
      CheckModule(GammaModule({7}, {{"sigma", IntMatrix{{2}}}}), swap);
  EXPECT_TRUE(wrong_order.invertible);
  EXPECT_FALSE(wrong_order.homomorphism);
}
