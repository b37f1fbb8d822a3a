#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oabkit/exactla.h"
#include "oabkit/int_matrix.h"
#include "oabkit/permgroups.h"
#include "oabkit/presentations.h"

namespace oabkit {

// Condition (0): A has entries in N, every row of A has a positive entry,
// and B vanishes off the support of A.
struct Condition0Report {
  bool nonnegative = false;
  bool rows_nonempty = false;
  bool b_supported = false;
  std::string detail;
  bool passed() const { return nonnegative && rows_nonempty && b_supported; }
};

Condition0Report CheckCondition0(const IntMatrix& a, const IntMatrix& b);
// Irreducibility: every ordered pair (i, j), including i == j, is joined by
// a path of length >= 1 along edges i -> j with A(i,j) >= 1.
bool CheckCondition1(const IntMatrix& a);
// A(i,i) >= 2 and B(i,i) == 1 for every i.
bool CheckCondition2(const IntMatrix& a, const IntMatrix& b);
bool BHasZeroRow(const IntMatrix& b);

struct ConditionsReport {
  Condition0Report condition0;
  bool condition1 = false;
  bool condition2 = false;
  bool b_has_zero_row = false;
  // Conditions (0), (1) and (2) together.
  bool kirchberg() const {
    return condition0.passed() && condition1 && condition2;
  }
};

ConditionsReport CheckConditions(const IntMatrix& a, const IntMatrix& b);

struct OabData {
  IntMatrix A;
  IntMatrix B;
  std::optional<PermGroup> group;
};

// One K-group written as (cokernel summand) + (kernel summand). The first
// `cokernel_rank` generators come from the cokernel, the rest are the
// kernel basis vectors. `module.action` is empty when no group was given.
struct KGroup {
  GammaModule module;
  std::size_t cokernel_rank = 0;
  AbelianGroupType type;

  std::size_t free_rank() const { return type.free_rank; }
};

struct KTheoryResult {
  KGroup k0;  // coker(I-A) + ker(I-B)
  KGroup k1;  // coker(I-B) + ker(I-A)
  CokerPresentation coker_i_minus_a;
  CokerPresentation coker_i_minus_b;
  std::vector<RowVector> ker_i_minus_a;
  std::vector<RowVector> ker_i_minus_b;
  // Coordinates in coker(I-A) of [e_1 + ... + e_N], the class of the unit.
  RowVector unit_class;
  // [p_i] = [e_i] in coker(I-A) and [u_i] = [e_i] in coker(I-B).
  std::vector<RowVector> p_classes;
  std::vector<RowVector> u_classes;
};

// K-theory of O_{A,B} from (A, B). Requires condition (0); with a group the
// K-groups carry the componentwise induced action. Throws
// PreconditionError when condition (0) fails or A, B are not invariant.
KTheoryResult KTheory(const OabData& data);

// Compares K(A, 0) and K(A, A) with coker(I-A) and ker(I-A).
struct SpecialCasesReport {
  KTheoryResult a_zero;
  KTheoryResult a_a;
  AbelianGroupType coker;  // coker(I-A)
  AbelianGroupType kernel;  // ker(I-A)
  bool k0_a_zero_is_coker = false;
  bool k1_a_zero_is_kernel = false;
  bool k0_a_a_is_sum = false;
  bool k1_a_a_is_sum = false;
  bool ok() const {
    return k0_a_zero_is_coker && k1_a_zero_is_kernel && k0_a_a_is_sum &&
           k1_a_a_is_sum;
  }
};

// Requires A >= 0 with no zero rows.
SpecialCasesReport KTheorySpecialCases(const IntMatrix& a);

}  // namespace oabkit
