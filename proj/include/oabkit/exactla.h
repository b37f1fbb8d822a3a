#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oabkit/int_matrix.h"

namespace oabkit {

// U * M * V == S with U, V unimodular and S diagonal in divisibility order.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inverse;
  IntMatrix S;
  // Diagonal of S, length min(rows, cols): nonzero factors first, then zeros.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

// Deterministic Smith normal form. Pivots on the smallest nonzero absolute
// value (first in row-major order on ties); diagonal entries end up >= 0.
// Throws PreconditionError on an empty matrix.
SmithForm SmithNormalForm(const IntMatrix& m);

std::size_t Rank(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination. Independent of
// the Smith normal form code path.
Integer Determinant(const IntMatrix& m);

// True iff m is square with determinant +1 or -1.
bool IsUnimodular(const IntMatrix& m);

// Row Hermite normal form of the lattice spanned by `rows`: echelon shape,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero
// rows are dropped.
std::vector<RowVector> HermiteNormalForm(std::vector<RowVector> rows);

// Basis of the row kernel {x : x * m == 0}, in Hermite normal form. The
// basis is primitive and has m.rows() - rank(m) vectors.
std::vector<RowVector> KernelBasis(const IntMatrix& m);

// Reduces x into [0, modulus) when modulus > 0; modulus 0 leaves x alone.
Integer ReduceMod(const Integer& x, const Integer& modulus);

// The quotient Z^cols / (row space of M), written as a direct sum of cyclic
// groups Z/d_1 + ... + Z/d_cols (d = 0 meaning Z).
//
// Generators with d_i == 1 are trivial. They are kept in
// invariant_factors() but skipped by the user-facing accessors (orders(),
// Coordinates(), Section()).
class CokerPresentation {
 public:
  CokerPresentation() = default;
  CokerPresentation(std::vector<Integer> factors, IntMatrix to_coordinates,
                    IntMatrix from_coordinates);

  std::size_t ambient_dimension() const { return to_coordinates_.rows(); }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const std::vector<std::size_t>& generator_indices() const {
    return generators_;
  }
  std::size_t num_generators() const { return generators_.size(); }
  // Orders of the nontrivial generators (0 = infinite cyclic).
  std::vector<Integer> orders() const;
  std::size_t free_rank() const;
  // Order of the torsion subgroup.
  Integer torsion_order() const;
  bool is_trivial() const { return generators_.empty(); }

  // Coordinates of [x] on the nontrivial generators, each reduced mod its
  // order.
  RowVector Coordinates(std::span<const Integer> x) const;
  // A vector of Z^N whose class is the k-th nontrivial generator.
  RowVector Section(std::size_t k) const;
  bool SameClass(std::span<const Integer> a, std::span<const Integer> b) const;
  bool IsZeroClass(std::span<const Integer> x) const;

  // Matrix whose rows are the coordinates of [e_i]; the canonical map from
  // Z^N onto the cokernel.
  IntMatrix ProjectionMatrix() const;

 private:
  std::vector<Integer> factors_;
  std::vector<std::size_t> generators_;
  IntMatrix to_coordinates_;    // V: x -> x V
  IntMatrix from_coordinates_;  // V^{-1}
};

CokerPresentation Cokernel(const IntMatrix& m);

// Finds x with x * stack(rows) == target, or nullopt when target is not in
// the lattice generated by `rows`. Free directions are set to zero, so the
// answer is deterministic. Throws DimensionError on ragged input.
std::optional<RowVector> SolveInLattice(const std::vector<RowVector>& rows,
                                        std::span<const Integer> target);
std::optional<RowVector> SolveInLattice(const IntMatrix& rows,
                                        std::span<const Integer> target);

// Isomorphism type of a finitely generated abelian group.
struct AbelianGroupType {
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility order
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const AbelianGroupType&,
                         const AbelianGroupType&) = default;
};

// Type of Z/orders[0] + Z/orders[1] + ... (orders need not form a chain).
AbelianGroupType AbelianType(std::span<const Integer> orders);
AbelianGroupType Direct(const AbelianGroupType& a, const AbelianGroupType& b);
std::string ToString(const AbelianGroupType& type);

}  // namespace oabkit
