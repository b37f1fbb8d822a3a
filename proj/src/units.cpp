#include "oabkit/units.h"

#include "oabkit/errors.h"

namespace oabkit::units {

u64 PrimePower::value() const {
  u64 v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<PrimePower> Factorize(u64 n) {
  if (n == 0) throw PreconditionError("cannot factor 0");
  std::vector<PrimePower> factors;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    factors.push_back(pp);
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

u64 EulerPhi(u64 n) {
  u64 phi = n;
  for (const auto& pp : Factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

u64 Gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 MulMod(u64 a, u64 b, u64 n) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n);
}

u64 PowMod(u64 base, u64 exponent, u64 n) {
  if (n == 1) return 0;
  u64 result = 1;
  base %= n;
  while (exponent > 0) {
    if (exponent & 1) result = MulMod(result, base, n);
    base = MulMod(base, base, n);
    exponent >>= 1;
  }
  return result;
}

u64 MultiplicativeOrder(u64 x, u64 n) {
  if (n == 1) return 1;
  if (Gcd(x % n, n) != 1) throw PreconditionError("not a unit");
  u64 order = EulerPhi(n);
  for (const auto& pp : Factorize(order)) {
    while (order % pp.prime == 0 && PowMod(x, order / pp.prime, n) == 1)
      order /= pp.prime;
  }
  return order;
}

namespace {

// Chinese remainder: the residue mod n that is r mod q and 1 mod n/q, for
// coprime q and n/q.
u64 LiftFromComponent(u64 r, u64 q, u64 n) {
  const u64 rest = n / q;
  for (u64 x = r % q; x < n; x += q)
    if (x % rest == 1 % rest) return x;
  throw PreconditionError("moduli are not coprime");
}

u64 PrimitiveRoot(u64 modulus) {
  const u64 phi = EulerPhi(modulus);
  for (u64 g = 1; g < modulus + 1; ++g)
    if (Gcd(g, modulus) == 1 && MultiplicativeOrder(g, modulus) == phi)
      return g % modulus;
  throw PreconditionError("no primitive root");
}

struct Split {
  unsigned l0 = 0;
  std::vector<PrimePower> odd;
};

Split SplitTwo(u64 n) {
  Split s;
  for (const auto& pp : Factorize(n)) {
    if (pp.prime == 2)
      s.l0 = pp.exponent;
    else
      s.odd.push_back(pp);
  }
  return s;
}

}  // namespace

u64 UnitsStructure::Evaluate(const std::vector<u64>& coords) const {
  if (coords.size() != factor_generators.size())
    throw DimensionError("coordinate count does not match the decomposition");
  u64 x = 1 % n;
  for (std::size_t i = 0; i < coords.size(); ++i)
    x = MulMod(x, PowMod(factor_generators[i], coords[i], n), n);
  return x;
}

UnitsStructure ComputeUnitsStructure(u64 n) {
  if (n == 0) throw PreconditionError("n must be positive");
  UnitsStructure s;
  s.n = n;
  s.factorization = Factorize(n);
  const Split split = SplitTwo(n);
  if (split.l0 >= 2) {
    const u64 two_part = u64{1} << split.l0;
    s.cyclic_orders.push_back(2);
    s.minus_one_coords.push_back(1);
    s.factor_generators.push_back(LiftFromComponent(two_part - 1, two_part, n));
    s.cyclic_orders.push_back(u64{1} << (split.l0 - 2));
    s.minus_one_coords.push_back(0);
    s.factor_generators.push_back(LiftFromComponent(5 % two_part, two_part, n));
  }
  for (const auto& pp : split.odd) {
    const u64 q = pp.value();
    const u64 order = q / pp.prime * (pp.prime - 1);
    s.cyclic_orders.push_back(order);
    s.minus_one_coords.push_back(order / 2);
    s.factor_generators.push_back(LiftFromComponent(PrimitiveRoot(q), q, n));
  }
  return s;
}

CyclicClassification IsCyclicUnits(u64 n) {
  if (n == 0) throw PreconditionError("n must be positive");
  CyclicClassification c;
  const Split split = SplitTwo(n);
  if (n == 1 || n == 2 || n == 4) {
    c.cyclic = true;
    c.family = std::to_string(n);
  } else if (split.odd.size() == 1 && split.l0 <= 1) {
    c.cyclic = true;
    c.family = split.l0 == 0 ? "p^l" : "2p^l";
  }
  if (c.cyclic) {
    const u64 phi = EulerPhi(n);
    for (u64 x = 1; x <= n && c.generator == 0; ++x)
      if (Gcd(x, n) == 1 && MultiplicativeOrder(x, n) == phi) c.generator = x % n;
    if (n == 1) c.generator = 0;
  }
  return c;
}

Z2TimesCyclicClassification IsZ2TimesCyclic(u64 n) {
  if (n == 0) throw PreconditionError("n must be positive");
  Z2TimesCyclicClassification c;
  const Split split = SplitTwo(n);
  if (split.odd.empty() && split.l0 >= 3) {
    c.family = "2^l";
  } else if (split.odd.size() == 1 && split.l0 == 2) {
    c.family = "4p^l";
  } else if (split.odd.size() == 2 && split.l0 <= 1) {
    const u64 p1 = split.odd[0].prime, p2 = split.odd[1].prime;
    const unsigned l1 = split.odd[0].exponent, l2 = split.odd[1].exponent;
    const bool halves_coprime = Gcd((p1 - 1) / 2, (p2 - 1) / 2) == 1;
    const bool first_ok = l1 < 2 || Gcd(p1, p2 - 1) == 1;
    const bool second_ok = l2 < 2 || Gcd(p1 - 1, p2) == 1;
    if (halves_coprime && first_ok && second_ok)
      c.family = split.l0 == 0 ? "p1^l1 p2^l2" : "2 p1^l1 p2^l2";
  }
  if (c.family.empty()) return c;

  c.matches = true;
  const u64 phi = EulerPhi(n);
  c.m = phi / 4;
  const u64 minus_one = n - 1;
  for (u64 x = 1; x < n && c.complement_generator == 0; ++x) {
    if (Gcd(x, n) != 1 || MultiplicativeOrder(x, n) != 2 * c.m) continue;
    // <x> is cyclic of even order 2m, so its only involution is x^m.
    if (PowMod(x, c.m, n) != minus_one) c.complement_generator = x;
  }
  if (c.complement_generator == 0)
    throw PreconditionError("classification inconsistent for n = " +
                            std::to_string(n));
  return c;
}

std::string ToString(Split2Decision d) {
  switch (d) {
    case Split2Decision::kCyclic:
      return "cyclic";
    case Split2Decision::kZ2TimesCyclic:
      return "z2_times_cyclic";
    case Split2Decision::kUnknown:
      return "unknown";
  }
  return "unknown";
}

Split2Decision DecideSplit2(u64 n) {
  if (IsCyclicUnits(n).cyclic) return Split2Decision::kCyclic;
  if (IsZ2TimesCyclic(n).matches) return Split2Decision::kZ2TimesCyclic;
  return Split2Decision::kUnknown;
}

std::vector<u64> UnknownSplit2(u64 max) {
  std::vector<u64> out;
  for (u64 n = 1; n <= max; ++n)
    if (DecideSplit2(n) == Split2Decision::kUnknown) out.push_back(n);
  return out;
}

Split3Report CheckSplit3(u64 n, u64 k) {
  if (n == 0 || k == 0) throw PreconditionError("n and k must be positive");
  Split3Report r;
  r.n = n;
  r.k = k;
  const Split split = SplitTwo(n);
  r.hypothesis_holds = true;
  for (const auto& pp : split.odd)
    if (k % pp.value() == 0) r.hypothesis_holds = false;
  if (split.l0 >= 3 && k % (u64{1} << (split.l0 - 1)) == 0)
    r.hypothesis_holds = false;

  const u64 target = k % n;
  for (u64 x = 1; x <= n; ++x) {
    const u64 xr = x % n;
    if (Gcd(xr, n) != 1 && n != 1) continue;
    if (MulMod(xr, k, n) == target) r.stabilizer.push_back(xr);
  }
  if (n == 1) r.stabilizer = {0};
  for (u64 x : r.stabilizer) {
    if (n == 1 || MultiplicativeOrder(x, n) == r.stabilizer.size()) {
      r.stabilizer_cyclic = true;
      r.stabilizer_generator = x;
      break;
    }
  }
  return r;
}

}  // namespace oabkit::units
