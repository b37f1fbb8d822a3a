#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oabkit/exactla.h"
#include "oabkit/int_matrix.h"

namespace oabkit {

// Bijection of {0..n-1}. The interchange format and ToString() use the
// 1-indexed images of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  // 0-indexed images; throws PreconditionError if not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation Identity(std::size_t n);
  static Permutation FromOneIndexed(std::span<const long> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<long> OneIndexed() const;
  bool is_identity() const;

  // (this * other)(i) == this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation Inverse() const;
  // Acts on {0..n-1} as this on the first block and again (shifted by n) on
  // the second block.
  Permutation Doubled() const;

  // The coordinate action on row vectors: (g.x)_{g(i)} = x_i.
  RowVector Apply(std::span<const Integer> x) const;
  // Matrix P with x * P == Apply(x).
  IntMatrix Matrix() const;

  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Concatenation: a on {0..a.n-1}, b shifted onto {a.n..a.n+b.n-1}.
Permutation Concatenate(const Permutation& a, const Permutation& b);

using NamedPermutation = std::pair<std::string, Permutation>;

inline constexpr std::size_t kDefaultGroupCap = 1000000;

// Finite permutation group on {0..degree-1} with its full element list.
class PermGroup {
 public:
  PermGroup() = default;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<NamedPermutation>& generators() const {
    return generators_;
  }
  std::vector<std::string> generator_names() const;
  // Sorted lexicographically by images; elements().front() is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  bool Contains(const Permutation& p) const;
  const Permutation& generator(const std::string& name) const;

  // Orbits of {0..degree-1}, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> Orbits() const;

 private:
  friend PermGroup Close(std::vector<NamedPermutation>, std::size_t,
                         std::size_t);
  std::size_t degree_ = 0;
  std::vector<NamedPermutation> generators_;
  std::vector<Permutation> elements_;
};

// Subgroup generated by `generators`. Throws PreconditionError on a
// generator of the wrong degree or a duplicate name, LimitError when the
// closure exceeds `cap` elements.
PermGroup Close(std::vector<NamedPermutation> generators, std::size_t degree,
                std::size_t cap = kDefaultGroupCap);

// True iff m(i,j) == m(g(i), g(j)) for every generator g.
bool IsInvariant(const IntMatrix& m, const PermGroup& group);

struct SymmetryOptions {
  std::size_t max_degree = 12;
  std::size_t cap = kDefaultGroupCap;
};

// All permutations g with A(i,j) == A(g(i),g(j)) and B(i,j) == B(g(i),g(j)),
// by backtracking with row/column multiset pruning. Generators are a greedy
// generating set taken from the sorted element list, named "g1", "g2", ...
PermGroup SymmetryGroup(const IntMatrix& a, const IntMatrix& b,
                        const SymmetryOptions& options = {});

// One 0/1 indicator vector per orbit: a basis of the fixed sublattice.
std::vector<RowVector> OrbitSums(const PermGroup& group);

// Matrices of a group action on a finitely generated abelian group given by
// generator orders. Row i of a matrix is the image of generator i
// (coordinates act as row vectors: c |-> c * M).
struct InducedAction {
  std::vector<Integer> orders;
  std::vector<std::pair<std::string, IntMatrix>> matrices;

  const IntMatrix& matrix(const std::string& name) const;
};

// Reduces column j of m modulo orders[j].
IntMatrix ReduceColumns(const IntMatrix& m, std::span<const Integer> orders);
bool CongruentModOrders(const IntMatrix& a, const IntMatrix& b,
                        std::span<const Integer> orders);

// Action on the nontrivial generators of Cokernel(m), for any group element.
IntMatrix CokernelActionMatrix(const CokerPresentation& coker,
                               const Permutation& g);
// Action on the coordinates of the given kernel basis.
IntMatrix KernelActionMatrix(const std::vector<RowVector>& basis,
                             const Permutation& g);

// Both throw PreconditionError when m is not invariant under the group.
InducedAction InducedCokernelAction(const IntMatrix& m, const PermGroup& group);
InducedAction InducedKernelAction(const IntMatrix& m, const PermGroup& group);

// Checks that generator matrices extend to a homomorphism from the group:
// builds a matrix for every element along a breadth-first word and checks
// every (element, generator) product against it modulo the orders.
bool IsHomomorphism(const InducedAction& action, const PermGroup& group);

}  // namespace oabkit
