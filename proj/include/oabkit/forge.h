#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "oabkit/errors.h"
#include "oabkit/exactla.h"
#include "oabkit/int_matrix.h"
#include "oabkit/oab.h"
#include "oabkit/permgroups.h"
#include "oabkit/presentations.h"

namespace oabkit {

// The class to be lifted is not fixed by the action.
class ClassNotFixedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// No fixed vector represents a fixed class. Cannot happen when the row
// space of I - A is a permutation module; raised rather than returning a
// wrong answer.
class NoFixedLiftError : public Error {
 public:
  using Error::Error;
};

// A' = D0 + I and B' = I + D1 (block diagonal) on {1..N0} then {N0+1..N0+N1}.
struct CombinedPresentation {
  IntMatrix a_prime;
  IntMatrix b_prime;
  PermGroup group;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
};

// Throws PreconditionError if the generator names differ or an input is
// not invariant.
CombinedPresentation CombinePresentations(const IntMatrix& d0,
                                          const PermGroup& g0,
                                          const IntMatrix& d1,
                                          const PermGroup& g1);

// I - A == left * middle * right with left, right unimodular and
// middle == diag(A', -I').
struct BlockFactorization {
  IntMatrix left;
  IntMatrix middle;
  IntMatrix right;
};

struct ForgedPair {
  std::size_t n = 0;        // 2 N'
  PermGroup group;          // input action repeated on both blocks
  IntMatrix A;
  IntMatrix B;
  IntMatrix a_prime;
  IntMatrix b_prime;
  IntMatrix Y;
  bool y_overridden = false;
  BlockFactorization factorization;

  std::size_t half() const { return n / 2; }
  // N x N' matrices inducing equivariant isomorphisms
  // coker(I-A) -> coker A' and coker(I-B) -> coker B'.
  IntMatrix CokernelMapA() const;
  IntMatrix CokernelMapB() const;
};

// |A'| + |B'| + I' + sum over group elements g of X^g, with X the 0/1
// band matrix X(i,j) = [|i-j| == 1] and X^g(i,j) = X(g(i), g(j)).
IntMatrix DefaultY(const IntMatrix& a_prime, const IntMatrix& b_prime,
                   const PermGroup& group);

// A = [[2I', A'+Y], [I', I'+Y]], B = [[I', B'], [I', I']]. An override Y
// must be invariant, nonnegative with positive diagonal, keep A'+Y >= 0 and
// cover the support of B'; the resulting pair is re-checked against
// conditions (0), (1), (2). Throws PreconditionError on any violation.
ForgedPair LemmaMatrix(const IntMatrix& a_prime, const IntMatrix& b_prime,
                       const PermGroup& group,
                       const std::optional<IntMatrix>& y_override = std::nullopt);

// A group-fixed f with [f] == [f0] in coker(I-A), found by solving
// f0 = sum c_k (orbit sum k) + x (I-A).
RowVector FixedRepresentative(const IntMatrix& a, const PermGroup& group,
                              std::span<const Integer> f0);

struct RepairResult {
  RowVector f;
  std::size_t iterations = 0;
};

// While some coordinate i0 of f is negative (smallest such i0), replaces f
// by f - f_{i0} * sum_g g(e_{i0}(A - I)). Needs A >= 0, diag(A) >= 2 and a
// fixed f; keeps f fixed and its class in coker(I-A).
RepairResult NonnegativeRepair(const IntMatrix& a, const PermGroup& group,
                               std::span<const Integer> f);

struct Realization {
  ForgedPair pair;
  // Nonnegative fixed vector with [f] corresponding to g.
  RowVector f;
  std::size_t repair_iterations = 0;
  // N x N0 and N x N1: induce coker(I-A) ~ coker D0 and coker(I-B) ~ coker D1.
  IntMatrix witness_a;
  IntMatrix witness_b;
};

// Combine -> LemmaMatrix (default Y) -> FixedRepresentative ->
// NonnegativeRepair. `g` is a vector of Z^N0 whose class in coker D0 must
// be fixed by the action.
Realization RealizeAction(const PermPresentation& pres0,
                          const PermPresentation& pres1,
                          std::span<const Integer> g);

}  // namespace oabkit
