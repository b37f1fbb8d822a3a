#include "commands.h"

#include <sstream>

#include "oabkit/exactla.h"
#include "oabkit/forge.h"
#include "oabkit/oab.h"
#include "oabkit/presentations.h"

namespace oabkit::cli {
namespace {

void CheckJob(const Json& job, const std::string& command) {
  io::RequireKeys(job, {"command", "matrices", "action", "module", "options"},
                  "job");
  if (job.contains("command") && job.at("command") != command)
    throw io::InputError("job is a \"" + job.at("command").dump() +
                         "\" job, not \"" + command + "\"");
}

const Json& Matrices(const Json& job,
                     std::initializer_list<const char*> allowed) {
  if (!job.contains("matrices")) throw io::InputError("job needs \"matrices\"");
  const Json& m = job.at("matrices");
  io::RequireKeys(m, allowed, "matrices");
  return m;
}

IntMatrix RequireSquare(const Json& matrices, const std::string& key) {
  if (!matrices.contains(key)) throw io::InputError("missing matrix " + key);
  IntMatrix m = io::MatrixFromJson(matrices.at(key));
  if (m.empty() || !m.is_square())
    throw io::InputError("matrix " + key + " must be square and nonempty");
  return m;
}

std::optional<IntMatrix> OptionalMatrix(const Json& matrices,
                                        const std::string& key) {
  if (!matrices.contains(key)) return std::nullopt;
  return io::MatrixFromJson(matrices.at(key));
}

Json Options(const Json& job, std::initializer_list<const char*> allowed) {
  if (!job.contains("options")) return Json::object();
  io::RequireKeys(job.at("options"), allowed, "options");
  return job.at("options");
}

void RequireSameShape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw io::InputError("A and B must have the same shape");
}

Json ActionOrNull(const Json& job) {
  return job.contains("action") ? job.at("action") : Json();
}

template <typename T>
T OptionAs(const Json& options, const char* key, T fallback) {
  if (!options.contains(key)) return fallback;
  try {
    return options.at(key).get<T>();
  } catch (const Json::exception&) {
    throw io::InputError(std::string("option \"") + key + "\" has the wrong type");
  }
}

IntMatrix IdentityMinus(const IntMatrix& m) {
  return IntMatrix::Identity(m.rows()) - m;
}

Json FactorSummary(const IntMatrix& m) {
  return io::ToJson(Cokernel(m).orders());
}

Json AuditJson(const ForgedPair& pair) {
  const auto& f = pair.factorization;
  Json j;
  j["product_is_I_minus_A"] =
      (f.left * f.middle * f.right == IdentityMinus(pair.A));
  j["left_unimodular"] = IsUnimodular(f.left);
  j["right_unimodular"] = IsUnimodular(f.right);
  return j;
}

Json ForgedJson(const ForgedPair& pair) {
  Json out = io::ToJson(pair);
  out["audit"] = AuditJson(pair);
  out["cokernel_map_A"] = io::ToJson(pair.CokernelMapA());
  out["cokernel_map_B"] = io::ToJson(pair.CokernelMapB());
  out["coker"] = {{"I_minus_A", FactorSummary(IdentityMinus(pair.A))},
                  {"I_minus_B", FactorSummary(IdentityMinus(pair.B))},
                  {"A_prime", FactorSummary(pair.a_prime)},
                  {"B_prime", FactorSummary(pair.b_prime)}};
  return out;
}

CommandResult ForgeLemma(const Json& job, const Json& options,
                         const std::optional<Json>& y_override) {
  const Json& mats = Matrices(job, {"Aprime", "Bprime", "Y"});
  IntMatrix a_prime = RequireSquare(mats, "Aprime");
  IntMatrix b_prime = RequireSquare(mats, "Bprime");
  RequireSameShape(a_prime, b_prime);
  std::optional<IntMatrix> y = OptionalMatrix(mats, "Y");
  if (y_override) y = io::MatrixFromJson(*y_override);
  if (y && (y->rows() != a_prime.rows() || !y->is_square()))
    throw io::InputError("Y must have the shape of A'");
  if (options.contains("g")) throw io::InputError("option g needs mode realize");
  PermGroup group = io::GroupFromJson(ActionOrNull(job), a_prime.rows());
  ForgedPair pair = LemmaMatrix(a_prime, b_prime, group, y);
  return {ForgedJson(pair), kExitOk};
}

CommandResult ForgeRealize(const Json& job, const Json& options,
                           const std::optional<Json>& y_override) {
  if (y_override) throw io::InputError("--y-override needs mode lemma");
  const Json& mats = Matrices(job, {"D0", "D1", "W0", "W1"});
  IntMatrix d0 = RequireSquare(mats, "D0");
  IntMatrix d1 = RequireSquare(mats, "D1");
  std::optional<IntMatrix> w0 = OptionalMatrix(mats, "W0");
  std::optional<IntMatrix> w1 = OptionalMatrix(mats, "W1");

  Json action0, action1;
  if (job.contains("action")) {
    const Json& a = job.at("action");
    if (a.is_array()) {
      if (a.size() != 2) throw io::InputError("action needs two entries");
      action0 = a[0];
      action1 = a[1];
    } else {
      action0 = action1 = a;
    }
  }
  PermPresentation pres0{io::GroupFromJson(action0, d0.rows()), d0, w0};
  PermPresentation pres1{io::GroupFromJson(action1, d1.rows()), d1, w1};

  RowVector g = options.contains("g") ? io::VectorFromJson(options.at("g"))
                                      : ZeroVector(d0.rows());
  if (g.size() != d0.rows())
    throw io::InputError("g must have length " + std::to_string(d0.rows()));

  Realization r = RealizeAction(pres0, pres1, g);
  Json out = ForgedJson(r.pair);
  out["f"] = io::ToJson(r.f);
  out["repair_iterations"] = r.repair_iterations;
  out["witness_A"] = io::ToJson(r.witness_a);
  out["witness_B"] = io::ToJson(r.witness_b);

  int exit_code = kExitOk;
  if (job.contains("module")) {
    const Json& mods = job.at("module");
    if (!mods.is_array() || mods.size() != 2)
      throw io::InputError("module needs two entries for mode realize");
    const IntMatrix i_minus_a = IdentityMinus(r.pair.A);
    const IntMatrix i_minus_b = IdentityMinus(r.pair.B);
    struct Side {
      const char* name;
      const IntMatrix& d;
      const IntMatrix& witness;
      const std::optional<IntMatrix>& w;
    } sides[] = {{"K0", i_minus_a, r.witness_a, w0},
                 {"K1", i_minus_b, r.witness_b, w1}};
    for (std::size_t k = 0; k < 2; ++k) {
      const Side& s = sides[k];
      PermPresentation p{r.pair.group, s.d, std::nullopt};
      if (s.w) p.witness = s.witness * *s.w;
      PresentationReport report =
          VerifyPresentation(p, io::ModuleFromJson(mods[k]));
      out["verification"][s.name] = io::ToJson(report);
      if (!report.passed()) exit_code = kExitValidation;
    }
  }
  return {out, exit_code};
}

}  // namespace

CommandResult Verify(const Json& job) {
  CheckJob(job, "verify");
  const Json& mats = Matrices(job, {"D", "W"});
  Options(job, {});
  IntMatrix d = RequireSquare(mats, "D");
  if (!job.contains("module")) throw io::InputError("verify needs \"module\"");
  GammaModule target = io::ModuleFromJson(job.at("module"));
  PermPresentation p{io::GroupFromJson(ActionOrNull(job), d.rows()), d,
                     OptionalMatrix(mats, "W")};
  PresentationReport report = VerifyPresentation(p, target);
  Json out;
  out["report"] = io::ToJson(report);
  out["invariant_factors"] = io::ToJson(SmithNormalForm(d).invariant_factors);
  out["coker"] = io::ToJson(AbelianType(Cokernel(d).orders()));
  out["passed"] = report.passed();
  return {out, report.passed() ? kExitOk : kExitValidation};
}

CommandResult Forge(const Json& job, const std::optional<Json>& y_override) {
  CheckJob(job, "forge");
  Json options = Options(job, {"mode", "g"});
  std::string mode = OptionAs<std::string>(options, "mode", "lemma");
  if (mode == "lemma") return ForgeLemma(job, options, y_override);
  if (mode == "realize") return ForgeRealize(job, options, y_override);
  throw io::InputError("unknown forge mode \"" + mode + "\"");
}

CommandResult Check(const Json& job) {
  CheckJob(job, "check");
  const Json& mats = Matrices(job, {"A", "B"});
  Options(job, {});
  IntMatrix a = RequireSquare(mats, "A");
  IntMatrix b = RequireSquare(mats, "B");
  RequireSameShape(a, b);
  ConditionsReport report = CheckConditions(a, b);
  return {io::ToJson(report), report.kirchberg() ? kExitOk : kExitValidation};
}

CommandResult KTheory(const Json& job) {
  CheckJob(job, "ktheory");
  const Json& mats = Matrices(job, {"A", "B"});
  Json options = Options(job, {"symmetry", "max_degree"});
  IntMatrix a = RequireSquare(mats, "A");
  IntMatrix b = RequireSquare(mats, "B");
  RequireSameShape(a, b);

  OabData data{a, b, std::nullopt};
  const bool symmetry = OptionAs<bool>(options, "symmetry", false);
  if (symmetry && job.contains("action"))
    throw io::InputError("give either an action or options.symmetry");
  if (symmetry) {
    SymmetryOptions so;
    so.max_degree = OptionAs<std::size_t>(options, "max_degree", so.max_degree);
    data.group = SymmetryGroup(a, b, so);
  } else if (job.contains("action")) {
    data.group = io::GroupFromJson(job.at("action"), a.rows());
  }

  KTheoryResult result = oabkit::KTheory(data);
  Json out;
  out["conditions"] = io::ToJson(CheckConditions(a, b));
  out["ktheory"] = io::ToJson(result);
  if (data.group) {
    out["group"] = io::GroupToJson(*data.group, false);
    out["modules_ok"] = CheckModule(result.k0.module, *data.group).ok() &&
                        CheckModule(result.k1.module, *data.group).ok();
  }
  return {out, kExitOk};
}

CommandResult Symmetry(const Json& job) {
  CheckJob(job, "symmetry");
  const Json& mats = Matrices(job, {"A", "B"});
  Json options = Options(job, {"elements", "max_degree"});
  IntMatrix a = RequireSquare(mats, "A");
  IntMatrix b = RequireSquare(mats, "B");
  RequireSameShape(a, b);
  SymmetryOptions so;
  so.max_degree = OptionAs<std::size_t>(options, "max_degree", so.max_degree);
  PermGroup group = SymmetryGroup(a, b, so);
  return {io::GroupToJson(group, OptionAs<bool>(options, "elements", false)),
          kExitOk};
}

CommandResult Units(const UnitsArgs& args) {
  if (!args.n && !args.sweep)
    throw io::InputError("units needs n or --sweep MAX");
  if (args.k && !args.n) throw io::InputError("--k needs n");
  Json out;
  if (args.n) {
    const units::u64 n = *args.n;
    if (n == 0) throw io::InputError("n must be positive");
    out["structure"] = io::ToJson(units::ComputeUnitsStructure(n));
    auto cyclic = units::IsCyclicUnits(n);
    out["cyclic"] = {{"cyclic", cyclic.cyclic}, {"family", cyclic.family}};
    if (cyclic.cyclic) out["cyclic"]["generator"] = cyclic.generator;
    auto z2 = units::IsZ2TimesCyclic(n);
    out["z2_times_cyclic"] = {{"matches", z2.matches}, {"family", z2.family}};
    if (z2.matches) {
      out["z2_times_cyclic"]["m"] = z2.m;
      out["z2_times_cyclic"]["complement_generator"] = z2.complement_generator;
    }
    out["split2"] = units::ToString(units::DecideSplit2(n));
    if (args.k) out["split3"] = io::ToJson(units::CheckSplit3(n, *args.k));
  }
  if (args.sweep) {
    std::size_t counts[3] = {0, 0, 0};
    for (units::u64 n = 1; n <= *args.sweep; ++n)
      ++counts[static_cast<int>(units::DecideSplit2(n))];
    out["sweep"] = {{"max", *args.sweep},
                    {"unknown", units::UnknownSplit2(*args.sweep)},
                    {"counts",
                     {{"cyclic", counts[0]},
                      {"z2_times_cyclic", counts[1]},
                      {"unknown", counts[2]}}}};
  }
  return {out, kExitOk};
}

std::string Split2Table(units::u64 max) {
  std::ostringstream os;
  os << "n\tdecision\tfamily\n";
  for (units::u64 n = 1; n <= max; ++n) {
    auto d = units::DecideSplit2(n);
    std::string family;
    if (d == units::Split2Decision::kCyclic)
      family = units::IsCyclicUnits(n).family;
    else if (d == units::Split2Decision::kZ2TimesCyclic)
      family = units::IsZ2TimesCyclic(n).family;
    os << n << '\t' << units::ToString(d) << '\t' << family << '\n';
  }
  return os.str();
}

CommandResult RunJob(const Json& job) {
  if (!job.is_object() || !job.contains("command") ||
      !job.at("command").is_string())
    throw io::InputError("job needs a string \"command\"");
  const std::string command = job.at("command").get<std::string>();
  if (command == "verify") return Verify(job);
  if (command == "forge") return Forge(job);
  if (command == "check") return Check(job);
  if (command == "ktheory") return KTheory(job);
  if (command == "symmetry") return Symmetry(job);
  throw io::InputError("unknown command \"" + command + "\"");
}

}  // namespace oabkit::cli
