#include <gtest/gtest.h>

#include <random>

#include "oabkit/errors.h"
#include "oabkit/forge.h"
#include "support/fixed_classes.h"
#include "support/oracles.h"

using namespace oabkit;

namespace {

Permutation P(std::initializer_list<long> one_indexed) {
  std::vector<long> v(one_indexed);
  return Permutation::FromOneIndexed(v);
}

const IntMatrix kEx1D{{2, -1}, {-1, 2}};
const IntMatrix kEx2D{{2, -1, -1, -1}, {-1, 2, -1, -1}, {-1, -1, 2, -1},
                      {-1, -1, -1, 2}};

PermGroup Swap() { return Close({{"sigma", P({2, 1})}}, 2); }
PermGroup Klein() {
  return Close({{"sigma", P({2, 1, 4, 3})}, {"tau", P({3, 4, 1, 2})}}, 4);
}

IntMatrix Ones(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

bool Fixed(const RowVector& f, const PermGroup& g) {
  for (const auto& [name, p] : g.generators())
    if (p.Apply(f) != f) return false;
  return true;
}

bool Nonnegative(const RowVector& f) {
  return std::all_of(f.begin(), f.end(), [](const Integer& x) { return x >= 0; });
}

std::vector<Integer> PaddedFactors(const IntMatrix& m, std::size_t ones) {
  std::vector<Integer> f(ones, 1);
  auto rest = SmithNormalForm(m).invariant_factors;
  // Ones sort first in the divisibility chain.
  f.insert(f.end(), rest.begin(), rest.end());
  std::stable_partition(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
  return f;
}

void ExpectForgedInvariants(const ForgedPair& pair) {
  const std::size_t h = pair.half();
  ASSERT_EQ(pair.n, 2 * h);
  EXPECT_TRUE(CheckConditions(pair.A, pair.B).kirchberg());
  EXPECT_FALSE(BHasZeroRow(pair.B));
  EXPECT_TRUE(IsInvariant(pair.A, pair.group));
  EXPECT_TRUE(IsInvariant(pair.B, pair.group));
  const IntMatrix ia = IntMatrix::Identity(pair.n) - pair.A;
  const IntMatrix ib = IntMatrix::Identity(pair.n) - pair.B;
  EXPECT_EQ(SmithNormalForm(ia).invariant_factors, PaddedFactors(pair.a_prime, h));
  EXPECT_EQ(SmithNormalForm(ib).invariant_factors, PaddedFactors(pair.b_prime, h));
  EXPECT_EQ(KernelBasis(ia).size(), KernelBasis(pair.a_prime).size());
  EXPECT_EQ(KernelBasis(ib).size(), KernelBasis(pair.b_prime).size());
  const auto& f = pair.factorization;
  EXPECT_EQ(f.left * f.middle * f.right, ia);
  EXPECT_EQ(abs(oracle::LaplaceDeterminant(f.left)), 1);
  EXPECT_EQ(abs(Determinant(f.right)), 1);
  EXPECT_EQ(f.middle, IntMatrix::BlockDiagonal(pair.a_prime,
                                               -IntMatrix::Identity(h)));
}

}  // namespace

TEST(CombinePresentations, BlockAssembly) {
  PermGroup one = Close({{"sigma", Permutation::Identity(1)}}, 1);
  CombinedPresentation c = CombinePresentations(kEx1D, Swap(), IntMatrix::Identity(1), one);
  EXPECT_EQ(c.a_prime, IntMatrix::BlockDiagonal(kEx1D, IntMatrix::Identity(1)));
  EXPECT_EQ(c.b_prime, IntMatrix::Identity(3));
  EXPECT_EQ(Cokernel(c.a_prime).orders(), std::vector<Integer>{3});
  EXPECT_TRUE(Cokernel(c.b_prime).is_trivial());
  EXPECT_EQ(c.group.order(), 2u);
  EXPECT_EQ(c.group.generator("sigma").OneIndexed(), (std::vector<long>{2, 1, 3}));

  PermGroup klein1 = Close({{"sigma", Permutation::Identity(1)},
                            {"tau", Permutation::Identity(1)}}, 1);
  CombinedPresentation c2 =
      CombinePresentations(kEx2D, Klein(), IntMatrix::Identity(1), klein1);
  EXPECT_EQ(c2.a_prime.rows(), 5u);
  EXPECT_EQ(Cokernel(c2.a_prime).orders(), (std::vector<Integer>{3, 3, 3}));
}

TEST(CombinePresentations, GeneratorNamesMustMatch) {
  PermGroup other = Close({{"tau", Permutation::Identity(1)}}, 1);
  EXPECT_THROW(CombinePresentations(kEx1D, Swap(), IntMatrix::Identity(1), other),
               PreconditionError);
  EXPECT_THROW(CombinePresentations({{1, 2}, {3, 4}}, Swap(), kEx1D, Swap()),
               PreconditionError);
}

TEST(LemmaMatrix, ReproducesFirstWorkedExample) {
  ForgedPair pair = LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), Ones(2));
  EXPECT_EQ(pair.A, IntMatrix({{2, 0, 3, 0}, {0, 2, 0, 3}, {1, 0, 2, 1}, {0, 1, 1, 2}}));
  EXPECT_EQ(pair.B, IntMatrix({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  EXPECT_TRUE(pair.y_overridden);
  ExpectForgedInvariants(pair);
}

TEST(LemmaMatrix, ReproducesEightByEightExample) {
  ForgedPair pair = LemmaMatrix(kEx2D, IntMatrix::Identity(4), Klein(), Ones(4));
  EXPECT_EQ(pair.A(4, 5), 1);
  EXPECT_EQ(pair.A(0, 4), 3);
  EXPECT_EQ(pair.A(0, 5), 0);
  ExpectForgedInvariants(pair);
  EXPECT_EQ(Cokernel(IntMatrix::Identity(8) - pair.A).orders(),
            (std::vector<Integer>{3, 3, 3}));
}

TEST(LemmaMatrix, TrivialOnePointInput) {
  PermGroup trivial = Close({}, 1);
  ForgedPair pair = LemmaMatrix(IntMatrix::Identity(1), IntMatrix::Identity(1), trivial);
  // Y = |A'| + |B'| + I' and X vanishes for N' = 1.
  EXPECT_EQ(pair.Y, IntMatrix{{3}});
  EXPECT_EQ(pair.A, IntMatrix({{2, 4}, {1, 4}}));
  EXPECT_EQ(pair.B, IntMatrix({{1, 1}, {1, 1}}));
  ExpectForgedInvariants(pair);
  EXPECT_TRUE(Cokernel(IntMatrix::Identity(2) - pair.A).is_trivial());
  EXPECT_TRUE(Cokernel(IntMatrix::Identity(2) - pair.B).is_trivial());
}

TEST(LemmaMatrix, DefaultYIsInvariantAndUsesTheBand) {
  const PermGroup klein = Klein();
  IntMatrix y = DefaultY(kEx2D, IntMatrix::Identity(4), klein);
  EXPECT_TRUE(IsInvariant(y, klein));
  // X^g summed over the Klein group: each pair {i,j} is adjacent in the band
  // for exactly the group elements moving it onto a band edge.
  IntMatrix expected = kEx2D.abs() + IntMatrix::Identity(4) + IntMatrix::Identity(4);
  IntMatrix band(4, 4);
  for (const auto& g : klein.elements())
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if ((g(i) > g(j) ? g(i) - g(j) : g(j) - g(i)) == 1) band(i, j) += 1;
  EXPECT_EQ(y, expected + band);
}

TEST(LemmaMatrix, RejectsBadOverrides) {
  IntMatrix not_invariant{{1, 2}, {1, 1}};
  EXPECT_THROW(LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), not_invariant),
               PreconditionError);
  IntMatrix negative{{1, -1}, {-1, 1}};
  EXPECT_THROW(LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), negative),
               PreconditionError);
  IntMatrix zero_diagonal{{0, 2}, {2, 0}};
  EXPECT_THROW(LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), zero_diagonal),
               PreconditionError);
  // Off-diagonal support of B' = Ex1 D is not covered by the identity Y.
  EXPECT_THROW(LemmaMatrix(kEx1D, kEx1D, Swap(), IntMatrix::Identity(2)),
               PreconditionError);
  EXPECT_THROW(LemmaMatrix({{1, 2}, {3, 4}}, IntMatrix::Identity(2), Swap()),
               PreconditionError);
}

TEST(LemmaMatrix, RandomInstances) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    PermGroup g = oracle::RandomGroup(rng, 1 + trial % 4, 8);
    IntMatrix a = oracle::RandomInvariant(rng, g, -3, 3);
    IntMatrix b = oracle::RandomInvariant(rng, g, -3, 3);
    ExpectForgedInvariants(LemmaMatrix(a, b, g));
  }
}

TEST(FixedRepresentative, Examples) {
  ForgedPair pair = LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), Ones(2));
  CokerPresentation coker = Cokernel(IntMatrix::Identity(4) - pair.A);
  RowVector f0 = MakeVector({1, 1, 0, 0});
  RowVector f = FixedRepresentative(pair.A, pair.group, f0);
  EXPECT_TRUE(Fixed(f, pair.group));
  EXPECT_TRUE(coker.SameClass(f, f0));
  // A class represented by a non-fixed vector still lifts: e_1 - e_2 + f0.
  RowVector shifted = Add(f0, Multiply(MakeVector({1, -1, 0, 0}),
                                       IntMatrix::Identity(4) - pair.A));
  RowVector f2 = FixedRepresentative(pair.A, pair.group, shifted);
  EXPECT_TRUE(Fixed(f2, pair.group));
  EXPECT_TRUE(coker.SameClass(f2, f0));

  ForgedPair t = LemmaMatrix(IntMatrix{{3}}, IntMatrix{{1}}, Close({}, 1));
  RowVector g0 = MakeVector({5, -7});
  RowVector g = FixedRepresentative(t.A, t.group, g0);
  EXPECT_EQ(g, g0);

  // [e_3] is 2 in Z/3 and sigma sends it to [e_4] = 1: not fixed.
  EXPECT_THROW(FixedRepresentative(pair.A, pair.group, UnitVector(4, 2)),
               ClassNotFixedError);
}

TEST(NonnegativeRepair, Examples) {
  ForgedPair first = LemmaMatrix(kEx1D, IntMatrix::Identity(2), Swap(), Ones(2));
  RowVector ok = MakeVector({0, 0, 1, 1});
  EXPECT_EQ(NonnegativeRepair(first.A, first.group, ok).f, ok);
  EXPECT_EQ(NonnegativeRepair(first.A, first.group, ok).iterations, 0u);

  RowVector f = MakeVector({-1, -1, 0, 0});
  RepairResult r = NonnegativeRepair(first.A, first.group, f);
  EXPECT_TRUE(Nonnegative(r.f));
  EXPECT_TRUE(Fixed(r.f, first.group));
  EXPECT_TRUE(Cokernel(IntMatrix::Identity(4) - first.A).SameClass(r.f, f));
  EXPECT_LE(r.iterations, 4u);

  ForgedPair eight = LemmaMatrix(kEx2D, IntMatrix::Identity(4), Klein(), Ones(4));
  RowVector minus(8, Integer(-1));
  RepairResult r8 = NonnegativeRepair(eight.A, eight.group, minus);
  EXPECT_TRUE(Nonnegative(r8.f));
  EXPECT_TRUE(Fixed(r8.f, eight.group));
  EXPECT_TRUE(Cokernel(IntMatrix::Identity(8) - eight.A).SameClass(r8.f, minus));
  EXPECT_LE(r8.iterations, 8u);

  EXPECT_THROW(NonnegativeRepair(first.A, first.group, MakeVector({-1, 0, 0, 0})),
               PreconditionError);
}

TEST(RealizeAction, Ex1WithTrivialSecondPresentation) {
  PermPresentation p0{Swap(), kEx1D, IntMatrix{{1}, {2}}};
  PermPresentation p1{Close({{"sigma", Permutation::Identity(1)}}, 1),
                      IntMatrix::Identity(1), std::nullopt};
  Realization r = RealizeAction(p0, p1, MakeVector({0, 0}));
  ExpectForgedInvariants(r.pair);
  EXPECT_TRUE(Nonnegative(r.f));
  EXPECT_TRUE(Fixed(r.f, r.pair.group));
  KTheoryResult k = KTheory({r.pair.A, r.pair.B, r.pair.group});
  EXPECT_EQ(k.k0.module.orders, std::vector<Integer>{3});
  EXPECT_EQ(k.k1.module.rank(), 0u);
  EXPECT_TRUE(k.coker_i_minus_a.IsZeroClass(r.f));
  // The witness through W0 identifies K0 with the Ex1 module.
  PermPresentation k0{r.pair.group, IntMatrix::Identity(r.pair.n) - r.pair.A,
                      r.witness_a * *p0.witness};
  GammaModule ex1({3}, {{"sigma", IntMatrix{{2}}}});
  EXPECT_TRUE(VerifyPresentation(k0, ex1).passed());
}

TEST(RealizeAction, Ex2WithTrivialSecondPresentation) {
  PermPresentation p0{Klein(), kEx2D, std::nullopt};
  PermPresentation p1{Close({{"sigma", Permutation::Identity(1)},
                             {"tau", Permutation::Identity(1)}}, 1),
                      IntMatrix::Identity(1), std::nullopt};
  Realization r = RealizeAction(p0, p1, MakeVector({0, 0, 0, 0}));
  KTheoryResult k = KTheory({r.pair.A, r.pair.B, r.pair.group});
  EXPECT_EQ(k.k0.module.orders, (std::vector<Integer>{3, 3, 3}));
  EXPECT_EQ(k.k1.module.rank(), 0u);
  EXPECT_TRUE(CheckConditions(r.pair.A, r.pair.B).kirchberg());
}

TEST(RealizeAction, AllTrivial) {
  PermPresentation p{Close({}, 1), IntMatrix::Identity(1), std::nullopt};
  Realization r = RealizeAction(p, p, MakeVector({0}));
  KTheoryResult k = KTheory({r.pair.A, r.pair.B, r.pair.group});
  EXPECT_TRUE(k.k0.type.is_trivial());
  EXPECT_TRUE(k.k1.type.is_trivial());
}

TEST(RealizeAction, ClassMustBeFixed) {
  PermPresentation p0{Swap(), kEx1D, std::nullopt};
  PermPresentation p1{Close({{"sigma", Permutation::Identity(1)}}, 1),
                      IntMatrix::Identity(1), std::nullopt};
  EXPECT_THROW(RealizeAction(p0, p1, MakeVector({1, 0})), ClassNotFixedError);
}

TEST(RealizeAction, TrivialGroupRealizesEveryClass) {
  PermGroup trivial = Close({}, 2);
  PermPresentation p0{trivial, IntMatrix{{5, 1}, {1, 3}}, std::nullopt};
  PermPresentation p1{Close({}, 1), IntMatrix{{2}}, std::nullopt};
  CokerPresentation c0 = Cokernel(p0.D);
  for (long a = -3; a <= 3; ++a) {
    RowVector g = MakeVector({a, 2 * a + 1});
    Realization r = RealizeAction(p0, p1, g);
    EXPECT_TRUE(Nonnegative(r.f));
    // [f] corresponds to g through the witness.
    EXPECT_TRUE(c0.SameClass(Multiply(r.f, r.witness_a), g));
  }
}

// A' = [[1,-1],[-1,1]] under the swap: coker A' = Z via x + y with trivial
// action, but fixed vectors only reach even integers, since H^1(Z/2, Z_sign)
// = Z/2. Fixed classes of coker(I - A) need not have fixed representatives
// once ker(I - A) != 0.
TEST(FixedRepresentative, KernelAllowsObstructedClasses) {
  ForgedPair pair =
      LemmaMatrix(IntMatrix{{1, -1}, {-1, 1}}, IntMatrix::Identity(2), Swap());
  const IntMatrix ia = IntMatrix::Identity(4) - pair.A;
  CokerPresentation coker = Cokernel(ia);
  ASSERT_EQ(coker.free_rank(), 1u);
  ASSERT_EQ(KernelBasis(ia).size(), 1u);

  // (0, 0, -1, 0) maps to e_1 = 1 under x + y: fixed, odd.
  RowVector odd = MakeVector({0, 0, -1, 0});
  EXPECT_TRUE(coker.SameClass(Swap().generator("sigma").Doubled().Apply(odd), odd));
  EXPECT_THROW(FixedRepresentative(pair.A, pair.group, odd), NoFixedLiftError);
  std::vector<RowVector> lattice = OrbitSums(pair.group);
  for (std::size_t i = 0; i < 4; ++i) lattice.push_back(ia.row(i));
  auto w = oracle::ObstructionCertificate(lattice, odd);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(oracle::CertifiesObstruction(lattice, odd, *w));

  RowVector even = MakeVector({0, 0, -1, -1});
  RowVector f = FixedRepresentative(pair.A, pair.group, even);
  EXPECT_TRUE(Fixed(f, pair.group));
  EXPECT_TRUE(coker.SameClass(f, even));
  EXPECT_FALSE(oracle::ObstructionCertificate(lattice, even).has_value());
}

// With ker(I - A) = 0 every fixed class lifts, and the repair stays within N
// iterations.
TEST(FixedRepresentative, NonsingularPairsLiftEveryFixedClass) {
  std::mt19937_64 rng(88);
  int pairs = 0;
  for (int trial = 0; pairs < 40 && trial < 400; ++trial) {
    PermGroup g = oracle::RandomGroup(rng, 1 + trial % 4, 8);
    ForgedPair pair = LemmaMatrix(oracle::RandomInvariant(rng, g, -3, 3),
                                  oracle::RandomInvariant(rng, g, -3, 3), g);
    const IntMatrix ia = IntMatrix::Identity(pair.n) - pair.A;
    if (Determinant(ia) == 0) continue;
    ++pairs;
    CokerPresentation coker = Cokernel(ia);
    auto gens = oracle::FixedClassGenerators(coker, pair.group);
    for (int c = 0; c < 10; ++c) {
      RowVector f0 = oracle::RandomFixedClassVector(rng, ia, coker, gens);
      RepairResult r = NonnegativeRepair(
          pair.A, pair.group, FixedRepresentative(pair.A, pair.group, f0));
      EXPECT_TRUE(Nonnegative(r.f));
      EXPECT_TRUE(Fixed(r.f, pair.group));
      EXPECT_TRUE(coker.SameClass(r.f, f0));
      EXPECT_LE(r.iterations, pair.n);
    }
  }
  EXPECT_EQ(pairs, 40);
}
