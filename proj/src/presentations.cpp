#include "oabkit/presentations.h"

#include "oabkit/errors.h"

namespace oabkit {

const IntMatrix& GammaModule::matrix(const std::string& name) const {
  for (const auto& [n, m] : action)
    if (n == name) return m;
  throw PreconditionError("module has no action for generator " + name);
}

bool GammaModule::has_generator(const std::string& name) const {
  for (const auto& [n, m] : action)
    if (n == name) return true;
  return false;
}

bool IsWellDefinedEndomorphism(const IntMatrix& m,
                               std::span<const Integer> orders) {
  if (m.rows() != orders.size() || m.cols() != orders.size()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (ReduceMod(orders[i] * m(i, j), orders[j]) != 0) return false;
  return true;
}

bool IsAutomorphism(const IntMatrix& m, std::span<const Integer> orders) {
  const std::size_t k = orders.size();
  if (m.rows() != k || m.cols() != k) return false;
  if (k == 0) return true;
  // Onto iff images plus relations span Z^k; an onto endomorphism of a
  // finitely generated abelian group is an automorphism.
  IntMatrix stacked = IntMatrix::FromBlocks(
      m, IntMatrix(k, 0), IntMatrix::Diagonal(orders), IntMatrix(k, 0));
  return Cokernel(stacked).is_trivial();
}

ModuleCheck CheckModule(const GammaModule& module, const PermGroup& group) {
  ModuleCheck check;
  for (const auto& name : group.generator_names()) {
    if (!module.has_generator(name)) {
      check.detail = "missing action for generator " + name;
      return check;
    }
  }
  check.well_defined = true;
  check.invertible = true;
  for (const auto& [name, m] : module.action) {
    if (!IsWellDefinedEndomorphism(m, module.orders)) {
      check.well_defined = false;
      check.detail += "action of " + name + " is not well defined; ";
    } else if (!IsAutomorphism(m, module.orders)) {
      check.invertible = false;
      check.detail += "action of " + name + " is not invertible; ";
    }
  }
  check.homomorphism = check.well_defined &&
                       IsHomomorphism(module.AsInducedAction(), group);
  if (check.well_defined && !check.homomorphism)
    check.detail += "generator matrices do not respect the group relations";
  return check;
}

bool PresentationReport::passed() const {
  for (const auto& c : clauses)
    if (!c.passed) return false;
  return !clauses.empty();
}

const ClauseResult& PresentationReport::clause(const std::string& id) const {
  for (const auto& c : clauses)
    if (c.id == id) return c;
  throw PreconditionError("no clause " + id);
}

std::string PresentationReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.passed) return c.id;
  return {};
}

PresentationReport VerifyPresentation(const PermPresentation& p,
                                      const GammaModule& target) {
  const std::size_t n = p.D.rows();
  const std::size_t m = target.rank();
  if (!p.D.is_square() || n != p.group.degree())
    throw DimensionError("D must be square of the group's degree");
  ModuleCheck module_check = CheckModule(target, p.group);
  if (!module_check.ok())
    throw PreconditionError("target is not a module for the group: " +
                            module_check.detail);
  if (p.witness && (p.witness->rows() != n || p.witness->cols() != m))
    throw DimensionError("witness must be N x (number of target generators)");

  PresentationReport report;
  report.clauses.push_back({"a", "D is invariant under the action",
                            IsInvariant(p.D, p.group), ""});
  const std::size_t nullity = KernelBasis(p.D).size();
  report.clauses.push_back({"b", "ker D = 0", nullity == 0,
                            "nullity " + std::to_string(nullity)});

  const CokerPresentation coker = Cokernel(p.D);
  const AbelianGroupType coker_type = AbelianType(coker.orders());
  const AbelianGroupType target_type = target.type();

  if (!p.witness) {
    report.clauses.push_back(
        {"factors", "invariant factors of D match the target (necessary only)",
         coker_type == target_type,
         "coker D = " + ToString(coker_type) + ", target = " +
             ToString(target_type)});
    return report;
  }

  report.witness_checked = true;
  const IntMatrix& w = *p.witness;

  {
    const IntMatrix image = p.D * w;
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (ReduceMod(image(i, j), target.orders[j]) != 0) {
          ok = false;
          detail = "row " + std::to_string(i + 1) + " of D maps to nonzero";
          break;
        }
    report.clauses.push_back(
        {"c", "witness annihilates every row of D", ok, detail});
  }
  {
    bool onto = true;
    if (m > 0) {
      IntMatrix stacked =
          IntMatrix::FromBlocks(w, IntMatrix(n, 0),
                                IntMatrix::Diagonal(target.orders),
                                IntMatrix(m, 0));
      onto = Cokernel(stacked).is_trivial();
    }
    report.clauses.push_back({"d", "witness is onto the target", onto, ""});
  }
  {
    std::string detail = "coker D = " + ToString(coker_type) +
                         ", target = " + ToString(target_type);
    if (nullity == 0)
      detail += ", |det D| = " + Integer(abs(Determinant(p.D))).get_str();
    report.clauses.push_back({"e", "coker D and the target have the same isomorphism type",
                              coker_type == target_type, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& [name, g] : p.group.generators()) {
      const IntMatrix& action = target.matrix(name);
      for (std::size_t i = 0; i < n && ok; ++i) {
        RowVector moved = w.row(g(i));
        RowVector acted = Multiply(w.row(i), action);
        for (std::size_t j = 0; j < m; ++j)
          if (ReduceMod(moved[j] - acted[j], target.orders[j]) != 0) {
            ok = false;
            detail = "fails for " + name + " at e_" + std::to_string(i + 1);
            break;
          }
      }
      if (!ok) break;
    }
    report.clauses.push_back(
        {"f", "witness is equivariant", ok, detail});
  }
  return report;
}

GammaModule ModuleOf(const IntMatrix& d, const PermGroup& group) {
  return GammaModule(InducedCokernelAction(d, group));
}

IntMatrix CanonicalWitness(const IntMatrix& d) {
  return Cokernel(d).ProjectionMatrix();
}

}  // namespace oabkit
