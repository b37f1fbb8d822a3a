#include <gtest/gtest.h>

#include <random>

#include "oabkit/errors.h"
#include "oabkit/oab.h"
#include "support/oracles.h"

using namespace oabkit;

namespace {

Permutation P(std::initializer_list<long> one_indexed) {
  std::vector<long> v(one_indexed);
  return Permutation::FromOneIndexed(v);
}

const IntMatrix kFirstA{{2, 0, 3, 0}, {0, 2, 0, 3}, {1, 0, 2, 1}, {0, 1, 1, 2}};
const IntMatrix kFirstB{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
const IntMatrix kSecondA{{2, 0, 3, 1}, {0, 2, 1, 3}, {1, 0, 2, 2}, {0, 1, 2, 2}};
const IntMatrix kSecondB{{1, 0, 2, -1}, {0, 1, -1, 2}, {1, 0, 1, 0}, {0, 1, 0, 1}};

PermGroup Sigma4() { return Close({{"sigma", P({2, 1, 4, 3})}}, 4); }

IntMatrix Example8A() {
  return {{2, 0, 0, 0, 3, 0, 0, 0}, {0, 2, 0, 0, 0, 3, 0, 0},
          {0, 0, 2, 0, 0, 0, 3, 0}, {0, 0, 0, 2, 0, 0, 0, 3},
          {1, 0, 0, 0, 2, 1, 1, 1}, {0, 1, 0, 0, 1, 2, 1, 1},
          {0, 0, 1, 0, 1, 1, 2, 1}, {0, 0, 0, 1, 1, 1, 1, 2}};
}

// Random A >= 0 with a positive entry in every row.
IntMatrix RandomConditionZeroA(std::mt19937_64& rng, std::size_t n) {
  IntMatrix a = oracle::RandomMatrix(rng, n, n, 0, 3);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (a.row(i) == ZeroVector(n)) a(i, col(rng)) = 1;
  return a;
}

}  // namespace

TEST(Conditions, Examples) {
  EXPECT_TRUE(CheckConditions(kFirstA, kFirstB).kirchberg());
  EXPECT_FALSE(CheckCondition0({{0}}, {{0}}).passed());
  EXPECT_FALSE(CheckCondition0({{0}}, {{0}}).rows_nonempty);
  EXPECT_TRUE(CheckCondition0({{2}}, {{1}}).passed());
  EXPECT_FALSE(CheckCondition0({{-1, 2}, {1, 1}}, IntMatrix::Zero(2, 2)).nonnegative);
  EXPECT_FALSE(CheckCondition0({{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}).b_supported);

  EXPECT_TRUE(CheckCondition1(Example8A()));
  EXPECT_TRUE(CheckCondition1({{1}}));
  EXPECT_FALSE(CheckCondition1({{1, 1}, {0, 1}}));
  EXPECT_FALSE(CheckCondition1({{0}}));

  IntMatrix i = IntMatrix::Identity(4);
  EXPECT_TRUE(CheckCondition2(Example8A(), IntMatrix::FromBlocks(i, i, i, i)));
  EXPECT_FALSE(CheckCondition2({{2}}, {{0}}));
  EXPECT_FALSE(CheckCondition2(IntMatrix::Identity(2), IntMatrix::Identity(2)));

  EXPECT_TRUE(BHasZeroRow(IntMatrix::Zero(2, 2)));
  EXPECT_FALSE(BHasZeroRow(IntMatrix::FromBlocks(i, i, i, i)));
  EXPECT_TRUE(BHasZeroRow({{1, 0}, {0, 0}}));
}

TEST(Conditions, IrreducibilityMatchesWarshall) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix a = oracle::RandomMatrix(rng, 1 + trial % 6, 1 + trial % 6, 0, 1);
    EXPECT_EQ(CheckCondition1(a), oracle::Irreducible(a)) << a;
  }
}

TEST(KTheory, FirstFourByFour) {
  KTheoryResult r = KTheory({kFirstA, kFirstB, Sigma4()});
  EXPECT_TRUE(r.ker_i_minus_a.empty());
  EXPECT_TRUE(r.ker_i_minus_b.empty());
  EXPECT_TRUE(r.coker_i_minus_b.is_trivial());
  EXPECT_EQ(r.k0.module.orders, std::vector<Integer>{3});
  EXPECT_TRUE(CongruentModOrders(r.k0.module.matrix("sigma"), IntMatrix{{-1}},
                                 r.k0.module.orders));
  EXPECT_EQ(r.k1.module.rank(), 0u);
  EXPECT_EQ(r.unit_class, RowVector{0});
}

TEST(KTheory, SecondFourByFour) {
  KTheoryResult r = KTheory({kSecondA, kSecondB, Sigma4()});
  for (const KGroup* k : {&r.k0, &r.k1}) {
    EXPECT_EQ(k->module.orders, std::vector<Integer>{3});
    EXPECT_TRUE(CongruentModOrders(k->module.matrix("sigma"), IntMatrix{{-1}},
                                   k->module.orders));
  }
}

TEST(KTheory, CuntzAlgebraOnePoint) {
  for (long n = 1; n <= 12; ++n) {
    KTheoryResult r = KTheory({IntMatrix{{n + 1}}, IntMatrix{{0}}, std::nullopt});
    if (n == 1) {
      EXPECT_EQ(r.k0.module.rank(), 0u);
      continue;
    }
    EXPECT_EQ(r.k0.module.orders, std::vector<Integer>{n});
    EXPECT_EQ(r.k1.module.rank(), 0u);
    ASSERT_EQ(r.unit_class.size(), 1u);
    Integer g;
    Integer order(n);
    mpz_gcd(g.get_mpz_t(), r.unit_class[0].get_mpz_t(), order.get_mpz_t());
    EXPECT_EQ(g, 1) << "unit class generates Z/" << n;
  }
}

TEST(KTheory, Preconditions) {
  EXPECT_THROW(KTheory({IntMatrix{{0}}, IntMatrix{{0}}, std::nullopt}),
               PreconditionError);
  EXPECT_THROW(KTheory({IntMatrix{{2, 1}, {0, 2}}, IntMatrix::Identity(2),
                        Close({{"s", P({2, 1})}}, 2)}),
               PreconditionError);
}

TEST(KTheory, Bookkeeping) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix a = RandomConditionZeroA(rng, n);
    IntMatrix mask = oracle::RandomMatrix(rng, n, n, -2, 2);
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0) b(i, j) = mask(i, j);
    KTheoryResult r = KTheory({a, b, std::nullopt});
    const IntMatrix ia = IntMatrix::Identity(n) - a;
    const IntMatrix ib = IntMatrix::Identity(n) - b;
    EXPECT_EQ(r.k0.free_rank(), Cokernel(ia).free_rank() + KernelBasis(ib).size());
    EXPECT_EQ(r.k1.free_rank(), Cokernel(ib).free_rank() + KernelBasis(ia).size());
    // The kernel summand of K0 is ker(I-B): nullity(I-B) trailing zeros.
    EXPECT_EQ(r.k0.module.rank() - r.k0.cokernel_rank, KernelBasis(ib).size());
    const Integer det = oracle::LaplaceDeterminant(ia);
    if (det != 0) EXPECT_EQ(r.coker_i_minus_a.torsion_order(), abs(det));
    // Torsion of K0 is the nontrivial invariant factors of I - A.
    std::vector<Integer> torsion;
    for (const auto& d : oracle::InvariantFactorsByMinors(ia))
      if (d > 1) torsion.push_back(d);
    EXPECT_EQ(r.k0.type.torsion, torsion);
    // unit class = sum of [p_i]
    RowVector sum = ZeroVector(r.coker_i_minus_a.num_generators());
    for (const auto& p : r.p_classes) sum = Add(sum, p);
    const auto orders = r.coker_i_minus_a.orders();
    for (std::size_t k = 0; k < sum.size(); ++k)
      EXPECT_EQ(ReduceMod(sum[k], orders[k]), r.unit_class[k]);
    EXPECT_EQ(r.p_classes.size(), n);
    EXPECT_EQ(r.u_classes.size(), n);
  }
}

TEST(KTheory, GeneratorClassesAreEquivariant) {
  std::mt19937_64 rng(43);
  IntMatrix i = IntMatrix::Identity(4);
  IntMatrix b8 = IntMatrix::FromBlocks(i, i, i, i);
  PermGroup sym = SymmetryGroup(Example8A(), b8);
  KTheoryResult r = KTheory({Example8A(), b8, sym});
  const auto orders = r.coker_i_minus_a.orders();
  for (const auto& g : sym.elements()) {
    IntMatrix m = CokernelActionMatrix(r.coker_i_minus_a, g);
    for (std::size_t k = 0; k < 8; ++k) {
      RowVector moved = Multiply(r.p_classes[k], m);
      for (std::size_t c = 0; c < moved.size(); ++c)
        moved[c] = ReduceMod(moved[c], orders[c]);
      EXPECT_EQ(moved, r.p_classes[g(k)]);
    }
  }
  EXPECT_TRUE(CheckModule(r.k0.module, sym).ok());
}

TEST(KTheorySpecialCases, SmallExamples) {
  SpecialCasesReport two = KTheorySpecialCases(IntMatrix{{2}});
  EXPECT_TRUE(two.ok());
  EXPECT_TRUE(two.a_zero.k0.type.is_trivial());
  EXPECT_TRUE(two.a_a.k1.type.is_trivial());

  SpecialCasesReport one = KTheorySpecialCases(IntMatrix{{1}});
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.a_zero.k0.type, AbelianType(std::vector<Integer>{0}));
  EXPECT_EQ(one.a_zero.k1.type, AbelianType(std::vector<Integer>{0}));
}

TEST(KTheorySpecialCases, RandomMatricesSatisfyIdentity) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = RandomConditionZeroA(rng, 1 + trial % 4);
    SpecialCasesReport r = KTheorySpecialCases(a);
    EXPECT_TRUE(r.ok()) << a;
    EXPECT_EQ(r.a_a.k0.type, r.a_a.k1.type);
  }
}
