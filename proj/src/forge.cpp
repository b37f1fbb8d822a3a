#include "oabkit/forge.h"

#include <algorithm>

namespace oabkit {

CombinedPresentation CombinePresentations(const IntMatrix& d0,
                                          const PermGroup& g0,
                                          const IntMatrix& d1,
                                          const PermGroup& g1) {
  std::vector<std::string> names0 = g0.generator_names();
  std::vector<std::string> names1 = g1.generator_names();
  std::vector<std::string> sorted0 = names0, sorted1 = names1;
  std::sort(sorted0.begin(), sorted0.end());
  std::sort(sorted1.begin(), sorted1.end());
  if (sorted0 != sorted1)
    throw PreconditionError("presentations use different generator names");
  if (!IsInvariant(d0, g0) || !IsInvariant(d1, g1))
    throw PreconditionError("presentation matrix is not invariant");

  CombinedPresentation c;
  c.n0 = d0.rows();
  c.n1 = d1.rows();
  c.a_prime = IntMatrix::BlockDiagonal(d0, IntMatrix::Identity(c.n1));
  c.b_prime = IntMatrix::BlockDiagonal(IntMatrix::Identity(c.n0), d1);
  std::vector<NamedPermutation> joint;
  for (const auto& name : names0)
    joint.emplace_back(name,
                       Concatenate(g0.generator(name), g1.generator(name)));
  c.group = Close(std::move(joint), c.n0 + c.n1);
  return c;
}

IntMatrix ForgedPair::CokernelMapA() const {
  const std::size_t h = half();
  return IntMatrix::FromBlocks(Y, IntMatrix(h, 0), -IntMatrix::Identity(h),
                               IntMatrix(h, 0));
}

IntMatrix ForgedPair::CokernelMapB() const {
  const std::size_t h = half();
  return IntMatrix::FromBlocks(IntMatrix(h, h), IntMatrix(h, 0),
                               IntMatrix::Identity(h), IntMatrix(h, 0));
}

IntMatrix DefaultY(const IntMatrix& a_prime, const IntMatrix& b_prime,
                   const PermGroup& group) {
  const std::size_t n = a_prime.rows();
  IntMatrix y = a_prime.abs() + b_prime.abs() + IntMatrix::Identity(n);
  for (const Permutation& g : group.elements())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t gi = g(i), gj = g(j);
        if (gi + 1 == gj || gj + 1 == gi) y(i, j) += 1;
      }
  return y;
}

namespace {

void CheckOverride(const IntMatrix& y, const IntMatrix& a_prime,
                   const IntMatrix& b_prime, const PermGroup& group) {
  const std::size_t n = a_prime.rows();
  if (y.rows() != n || y.cols() != n)
    throw DimensionError("Y must have the size of A'");
  if (!IsInvariant(y, group))
    throw PreconditionError("Y is not invariant under the action");
  if (!y.is_nonnegative()) throw PreconditionError("Y has a negative entry");
  for (std::size_t i = 0; i < n; ++i) {
    if (y(i, i) < 1) throw PreconditionError("Y has a zero diagonal entry");
    for (std::size_t j = 0; j < n; ++j) {
      const Integer top_right = a_prime(i, j) + y(i, j);
      if (top_right < 0) throw PreconditionError("A' + Y has a negative entry");
      if (top_right == 0 && b_prime(i, j) != 0)
        throw PreconditionError("B' is nonzero where A' + Y vanishes");
    }
  }
}

}  // namespace

ForgedPair LemmaMatrix(const IntMatrix& a_prime, const IntMatrix& b_prime,
                       const PermGroup& group,
                       const std::optional<IntMatrix>& y_override) {
  if (!a_prime.is_square() || b_prime.rows() != a_prime.rows() ||
      !b_prime.is_square())
    throw DimensionError("A' and B' must be square of equal size");
  if (a_prime.empty()) throw PreconditionError("A' is empty");
  if (!IsInvariant(a_prime, group) || !IsInvariant(b_prime, group))
    throw PreconditionError("A' and B' must be invariant under the action");

  const std::size_t h = a_prime.rows();
  const IntMatrix id = IntMatrix::Identity(h);
  ForgedPair pair;
  pair.n = 2 * h;
  pair.a_prime = a_prime;
  pair.b_prime = b_prime;
  if (y_override) {
    CheckOverride(*y_override, a_prime, b_prime, group);
    pair.Y = *y_override;
    pair.y_overridden = true;
  } else {
    pair.Y = DefaultY(a_prime, b_prime, group);
  }
  const IntMatrix& y = pair.Y;
  pair.A = IntMatrix::FromBlocks(Integer(2) * id, a_prime + y, id, id + y);
  pair.B = IntMatrix::FromBlocks(id, b_prime, id, id);

  std::vector<NamedPermutation> doubled;
  for (const auto& [name, g] : group.generators())
    doubled.emplace_back(name, g.Doubled());
  pair.group = Close(std::move(doubled), pair.n);

  pair.factorization.left =
      IntMatrix::FromBlocks(id, id, IntMatrix(h, h), id);
  pair.factorization.middle = IntMatrix::BlockDiagonal(a_prime, -id);
  pair.factorization.right = IntMatrix::FromBlocks(IntMatrix(h, h), -id, id, y);

  ConditionsReport conditions = CheckConditions(pair.A, pair.B);
  if (!conditions.kirchberg()) {
    std::string why = pair.y_overridden ? "override Y" : "default Y";
    throw PreconditionError(why + " does not give conditions (0), (1), (2): " +
                            conditions.condition0.detail);
  }
  return pair;
}

namespace {

bool IsFixedVector(const PermGroup& group, std::span<const Integer> f) {
  for (const auto& [name, g] : group.generators()) {
    RowVector moved = g.Apply(f);
    if (!std::equal(moved.begin(), moved.end(), f.begin())) return false;
  }
  return true;
}

}  // namespace

RowVector FixedRepresentative(const IntMatrix& a, const PermGroup& group,
                              std::span<const Integer> f0) {
  const std::size_t n = a.rows();
  if (f0.size() != n) throw DimensionError("f0 has the wrong length");
  if (!IsInvariant(a, group))
    throw PreconditionError("A is not invariant under the action");
  const IntMatrix i_minus_a = IntMatrix::Identity(n) - a;
  const CokerPresentation coker = Cokernel(i_minus_a);
  for (const auto& [name, g] : group.generators())
    if (!coker.SameClass(g.Apply(f0), f0))
      throw ClassNotFixedError("class of f0 is not fixed by " + name);
  if (IsFixedVector(group, f0)) return {f0.begin(), f0.end()};

  std::vector<RowVector> system = OrbitSums(group);
  const std::size_t orbit_count = system.size();
  for (std::size_t i = 0; i < n; ++i) system.push_back(i_minus_a.row(i));
  auto solution = SolveInLattice(system, f0);
  if (!solution)
    throw NoFixedLiftError("no fixed vector represents the class of f0");
  RowVector f = ZeroVector(n);
  for (std::size_t k = 0; k < orbit_count; ++k)
    f = Add(f, Scale((*solution)[k], system[k]));
  return f;
}

RepairResult NonnegativeRepair(const IntMatrix& a, const PermGroup& group,
                               std::span<const Integer> f) {
  const std::size_t n = a.rows();
  if (f.size() != n) throw DimensionError("f has the wrong length");
  if (!a.is_nonnegative())
    throw PreconditionError("repair needs A with nonnegative entries");
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i) < 2) throw PreconditionError("repair needs diag(A) >= 2");
  if (!IsFixedVector(group, f))
    throw PreconditionError("f is not fixed by the action");

  const IntMatrix a_minus_i = a - IntMatrix::Identity(n);
  RepairResult result;
  result.f.assign(f.begin(), f.end());
  for (;;) {
    auto negative = std::find_if(result.f.begin(), result.f.end(),
                                 [](const Integer& v) { return v < 0; });
    if (negative == result.f.end()) break;
    const std::size_t i0 = static_cast<std::size_t>(negative - result.f.begin());
    const Integer coefficient = result.f[i0];
    const RowVector step = a_minus_i.row(i0);
    RowVector orbit_sum = ZeroVector(n);
    for (const Permutation& g : group.elements())
      orbit_sum = Add(orbit_sum, g.Apply(step));
    result.f = Subtract(result.f, Scale(coefficient, orbit_sum));
    ++result.iterations;
  }
  return result;
}

Realization RealizeAction(const PermPresentation& pres0,
                          const PermPresentation& pres1,
                          std::span<const Integer> g) {
  for (const PermPresentation* p : {&pres0, &pres1}) {
    if (!p->D.is_square() || p->D.rows() != p->group.degree())
      throw DimensionError("presentation matrix does not match its action");
    if (!IsInvariant(p->D, p->group))
      throw PreconditionError("presentation matrix is not invariant");
    if (!KernelBasis(p->D).empty())
      throw PreconditionError("presentation matrix has a nonzero kernel");
  }
  const std::size_t n0 = pres0.D.rows();
  if (g.size() != n0) throw DimensionError("g must have length N0");
  const CokerPresentation coker0 = Cokernel(pres0.D);
  for (const auto& [name, perm] : pres0.group.generators())
    if (!coker0.SameClass(perm.Apply(g), g))
      throw ClassNotFixedError("g is not fixed by " + name);

  CombinedPresentation combined =
      CombinePresentations(pres0.D, pres0.group, pres1.D, pres1.group);
  Realization r;
  r.pair = LemmaMatrix(combined.a_prime, combined.b_prime, combined.group);

  const std::size_t h = r.pair.half();
  // (0, -g) maps to g under CokernelMapA().
  RowVector f0 = ZeroVector(r.pair.n);
  for (std::size_t i = 0; i < n0; ++i) f0[h + i] = -g[i];
  RowVector fixed = FixedRepresentative(r.pair.A, r.pair.group, f0);
  RepairResult repaired = NonnegativeRepair(r.pair.A, r.pair.group, fixed);
  r.f = std::move(repaired.f);
  r.repair_iterations = repaired.iterations;
  r.witness_a = r.pair.CokernelMapA().column_block(0, n0);
  r.witness_b = r.pair.CokernelMapB().column_block(n0, combined.n1);
  return r;
}

}  // namespace oabkit
