#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oabkit/exactla.h"
#include "oabkit/int_matrix.h"
#include "oabkit/permgroups.h"

namespace oabkit {

// A finitely generated abelian group Z/d_1 + ... + Z/d_m (d = 0 meaning Z)
// with one action matrix per named group generator. Row i of a matrix is
// the image of the i-th generator.
struct GammaModule {
  std::vector<Integer> orders;
  std::vector<std::pair<std::string, IntMatrix>> action;

  GammaModule() = default;
  GammaModule(std::vector<Integer> o,
              std::vector<std::pair<std::string, IntMatrix>> a)
      : orders(std::move(o)), action(std::move(a)) {}
  explicit GammaModule(InducedAction induced)
      : orders(std::move(induced.orders)),
        action(std::move(induced.matrices)) {}

  std::size_t rank() const { return orders.size(); }
  const IntMatrix& matrix(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  AbelianGroupType type() const { return AbelianType(orders); }
  InducedAction AsInducedAction() const { return {orders, action}; }
};

struct ModuleCheck {
  bool well_defined = false;   // respects the relations d_i g_i = 0
  bool invertible = false;     // every matrix is an automorphism
  bool homomorphism = false;   // respects every product in the group
  std::string detail;
  bool ok() const { return well_defined && invertible && homomorphism; }
};

// True iff d_j divides d_i * m(i,j) for all i, j.
bool IsWellDefinedEndomorphism(const IntMatrix& m,
                               std::span<const Integer> orders);
// True iff m is onto (hence bijective) modulo the orders.
bool IsAutomorphism(const IntMatrix& m, std::span<const Integer> orders);

ModuleCheck CheckModule(const GammaModule& module, const PermGroup& group);

// The data (N, group on {1..N}, D) of a permutation presentation plus an
// optional witness: an N x m matrix whose row i is the image of [e_i] in the
// target module.
struct PermPresentation {
  PermGroup group;
  IntMatrix D;
  std::optional<IntMatrix> witness;

  std::size_t size() const { return D.rows(); }
};

struct ClauseResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct PresentationReport {
  std::vector<ClauseResult> clauses;
  // False when no witness was given: only necessary conditions were checked.
  bool witness_checked = false;

  bool passed() const;
  const ClauseResult& clause(const std::string& id) const;
  // First failing clause id, or empty.
  std::string first_failure() const;
};

// Checks the clauses
//   a: D is invariant,        b: ker D = 0,
//   c: witness kills rows(D), d: witness is onto the target,
//   e: coker D and the target have the same isomorphism type,
//   f: witness is equivariant for every group generator.
// Without a witness, c-f are replaced by "factors": the invariant factors
// of D match the target (necessary only).
// Throws DimensionError / PreconditionError on malformed input (shape
// mismatches, a target that is not a module for the group).
PresentationReport VerifyPresentation(const PermPresentation& presentation,
                                      const GammaModule& target);

// coker D with its induced action. Throws PreconditionError when D is not
// invariant.
GammaModule ModuleOf(const IntMatrix& d, const PermGroup& group);

// Witness sending e_i to its coordinates in ModuleOf(d, ...).
IntMatrix CanonicalWitness(const IntMatrix& d);

}  // namespace oabkit
