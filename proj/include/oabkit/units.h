#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oabkit::units {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division; ascending primes. Throws PreconditionError for n == 0.
std::vector<PrimePower> Factorize(u64 n);
u64 EulerPhi(u64 n);
u64 Gcd(u64 a, u64 b);
u64 MulMod(u64 a, u64 b, u64 n);
u64 PowMod(u64 base, u64 exponent, u64 n);
// Multiplicative order of a unit x modulo n.
u64 MultiplicativeOrder(u64 x, u64 n);

// (Z/nZ)^x written as a product of cyclic factors following the 2-part /
// odd-part split: for n = 2^l0 p_1^l1 ... p_m^lm,
//   l0 <= 1:  Z/p_1^{l1-1}(p_1-1) x ... ,
//   l0 >= 2:  Z/2 x Z/2^{l0-2} x Z/p_1^{l1-1}(p_1-1) x ... .
// The Z/2^{l0-2} factor is kept even when trivial (l0 == 2).
struct UnitsStructure {
  u64 n = 0;
  std::vector<PrimePower> factorization;
  std::vector<u64> cyclic_orders;
  // Coordinates of -1 in the decomposition above.
  std::vector<u64> minus_one_coords;
  // Residues generating each factor (1 mod the other prime powers):
  // -1 and 5 for the 2-part, a primitive root for each odd prime power.
  std::vector<u64> factor_generators;

  // Product of factor_generators[i]^coords[i] modulo n.
  u64 Evaluate(const std::vector<u64>& coords) const;
};

UnitsStructure ComputeUnitsStructure(u64 n);

struct CyclicClassification {
  bool cyclic = false;
  // "1", "2", "4", "p^l", "2p^l" or "" when not cyclic.
  std::string family;
  // An element of order phi(n), found by search, when cyclic.
  u64 generator = 0;
};

// Closed form: n in {1, 2, 4} or n = p^l, 2p^l with p an odd prime.
CyclicClassification IsCyclicUnits(u64 n);

struct Z2TimesCyclicClassification {
  bool matches = false;
  // "2^l", "4p^l", "p1^l1 p2^l2" or "2 p1^l1 p2^l2".
  std::string family;
  u64 m = 0;  // (Z/nZ)^x ~ Z/2 x Z/2m
  // g of order 2m with <g> meeting <-1> trivially, so that <-1, g> is the
  // whole group.
  u64 complement_generator = 0;
};

// Closed form: n = 2^l (l >= 3), n = 4p^l, or n = p1^l1 p2^l2 or
// 2 p1^l1 p2^l2 with gcd((p1-1)/2, (p2-1)/2) = 1, gcd(p1, p2-1) = 1 if
// l1 >= 2, and gcd(p1-1, p2) = 1 if l2 >= 2.
Z2TimesCyclicClassification IsZ2TimesCyclic(u64 n);

enum class Split2Decision { kCyclic, kZ2TimesCyclic, kUnknown };
std::string ToString(Split2Decision d);
Split2Decision DecideSplit2(u64 n);
// All n in [1, max] for which DecideSplit2 is kUnknown.
std::vector<u64> UnknownSplit2(u64 max);

struct Split3Report {
  u64 n = 0;
  u64 k = 0;
  // k is not divisible by p_i^{l_i} for each odd prime power, nor by
  // 2^{l0-1} when l0 >= 3.
  bool hypothesis_holds = false;
  // {x in (Z/nZ)^x : x k == k mod n}, ascending.
  std::vector<u64> stabilizer;
  bool stabilizer_cyclic = false;
  u64 stabilizer_generator = 0;
};

Split3Report CheckSplit3(u64 n, u64 k);

}  // namespace oabkit::units
