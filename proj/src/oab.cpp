#include "oabkit/oab.h"

#include <deque>

#include "oabkit/errors.h"

namespace oabkit {

Condition0Report CheckCondition0(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("A and B must be square of equal size");
  Condition0Report report;
  report.nonnegative = a.is_nonnegative();
  report.rows_nonempty = true;
  report.b_supported = true;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool has_positive = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) >= 1) has_positive = true;
      if (a(i, j) < 1 && b(i, j) != 0 && report.b_supported) {
        report.b_supported = false;
        report.detail += "B(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") outside support of A; ";
      }
    }
    if (!has_positive && report.rows_nonempty) {
      report.rows_nonempty = false;
      report.detail += "row " + std::to_string(i + 1) + " of A is empty; ";
    }
  }
  if (!report.nonnegative) report.detail += "A has a negative entry; ";
  return report;
}

bool CheckCondition1(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("A must be square");
  const std::size_t n = a.rows();
  for (std::size_t start = 0; start < n; ++start) {
    // Vertices reachable by a path of length >= 1.
    std::vector<bool> reached(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < n; ++j)
      if (a(start, j) >= 1 && !reached[j]) {
        reached[j] = true;
        queue.push_back(j);
      }
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j)
        if (a(v, j) >= 1 && !reached[j]) {
          reached[j] = true;
          queue.push_back(j);
        }
    }
    for (bool r : reached)
      if (!r) return false;
  }
  return n > 0;
}

bool CheckCondition2(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("A and B must be square of equal size");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, i) < 2 || b(i, i) != 1) return false;
  return true;
}

bool BHasZeroRow(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (IsZero(b.row(i))) return true;
  return false;
}

ConditionsReport CheckConditions(const IntMatrix& a, const IntMatrix& b) {
  ConditionsReport report;
  report.condition0 = CheckCondition0(a, b);
  report.condition1 = CheckCondition1(a);
  report.condition2 = CheckCondition2(a, b);
  report.b_has_zero_row = BHasZeroRow(b);
  return report;
}

namespace {

KGroup AssembleKGroup(const CokerPresentation& coker,
                      const std::vector<RowVector>& kernel,
                      const std::optional<PermGroup>& group) {
  KGroup k;
  k.cokernel_rank = coker.num_generators();
  k.module.orders = coker.orders();
  k.module.orders.resize(k.cokernel_rank + kernel.size(), Integer(0));
  k.type = AbelianType(k.module.orders);
  if (group) {
    for (const auto& [name, g] : group->generators()) {
      k.module.action.emplace_back(
          name, IntMatrix::BlockDiagonal(CokernelActionMatrix(coker, g),
                                         KernelActionMatrix(kernel, g)));
    }
  }
  return k;
}

}  // namespace

KTheoryResult KTheory(const OabData& data) {
  Condition0Report c0 = CheckCondition0(data.A, data.B);
  if (!c0.passed())
    throw PreconditionError("condition (0) fails: " + c0.detail);
  if (data.group && (!IsInvariant(data.A, *data.group) ||
                     !IsInvariant(data.B, *data.group)))
    throw PreconditionError("A and B are not invariant under the group");

  const std::size_t n = data.A.rows();
  const IntMatrix identity = IntMatrix::Identity(n);
  const IntMatrix i_minus_a = identity - data.A;
  const IntMatrix i_minus_b = identity - data.B;

  KTheoryResult result;
  result.coker_i_minus_a = Cokernel(i_minus_a);
  result.coker_i_minus_b = Cokernel(i_minus_b);
  result.ker_i_minus_a = KernelBasis(i_minus_a);
  result.ker_i_minus_b = KernelBasis(i_minus_b);
  result.k0 = AssembleKGroup(result.coker_i_minus_a, result.ker_i_minus_b,
                             data.group);
  result.k1 = AssembleKGroup(result.coker_i_minus_b, result.ker_i_minus_a,
                             data.group);

  RowVector ones(n, Integer(1));
  result.unit_class = result.coker_i_minus_a.Coordinates(ones);
  for (std::size_t i = 0; i < n; ++i) {
    RowVector e = UnitVector(n, i);
    result.p_classes.push_back(result.coker_i_minus_a.Coordinates(e));
    result.u_classes.push_back(result.coker_i_minus_b.Coordinates(e));
  }
  return result;
}

SpecialCasesReport KTheorySpecialCases(const IntMatrix& a) {
  const std::size_t n = a.rows();
  Condition0Report c0 = CheckCondition0(a, IntMatrix(n, n));
  if (!c0.nonnegative || !c0.rows_nonempty)
    throw PreconditionError("A must be nonnegative without zero rows");

  SpecialCasesReport report;
  report.a_zero = KTheory({a, IntMatrix(n, n), std::nullopt});
  report.a_a = KTheory({a, a, std::nullopt});

  const IntMatrix i_minus_a = IntMatrix::Identity(n) - a;
  report.coker = AbelianType(Cokernel(i_minus_a).orders());
  report.kernel.free_rank = KernelBasis(i_minus_a).size();
  const AbelianGroupType sum = Direct(report.coker, report.kernel);

  report.k0_a_zero_is_coker = report.a_zero.k0.type == report.coker;
  report.k1_a_zero_is_kernel = report.a_zero.k1.type == report.kernel;
  report.k0_a_a_is_sum = report.a_a.k0.type == sum;
  report.k1_a_a_is_sum = report.a_a.k1.type == sum;
  return report;
}

}  // namespace oabkit
