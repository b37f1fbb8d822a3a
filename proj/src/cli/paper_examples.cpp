// Worked examples, with the invariants each must reproduce.
#include <algorithm>

#include "commands.h"
#include "oabkit/exactla.h"
#include "oabkit/forge.h"
#include "oabkit/oab.h"
#include "oabkit/presentations.h"

namespace oabkit::cli {
namespace {

constexpr const char* kCorpus = R"json([
  {
    "name": "ex1",
    "tags": ["presentation"],
    "kind": "presentation",
    "D": [[2, -1], [-1, 2]],
    "action": {"sigma": [2, 1]},
    "module": {"orders": [3], "action": {"sigma": [[2]]}},
    "witness": [[1], [2]],
    "expect": {"invariant_factors": [3], "passed": true}
  },
  {
    "name": "ex2",
    "tags": ["presentation"],
    "kind": "presentation",
    "D": [[2, -1, -1, -1], [-1, 2, -1, -1], [-1, -1, 2, -1], [-1, -1, -1, 2]],
    "action": {"sigma": [2, 1, 4, 3], "tau": [3, 4, 1, 2]},
    "module": {
      "orders": [3, 3, 3],
      "action": {
        "sigma": [[0, 1, 2], [1, 0, 2], [0, 0, 2]],
        "tau": [[0, 2, 1], [0, 2, 0], [1, 2, 0]]
      }
    },
    "witness": [[1, 1, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]],
    "expect": {"invariant_factors": [3, 3, 3], "passed": true}
  },
  {
    "name": "oab-4x4-first",
    "tags": ["oab", "ex1"],
    "kind": "oab",
    "A": [[2, 0, 3, 0], [0, 2, 0, 3], [1, 0, 2, 1], [0, 1, 1, 2]],
    "B": [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]],
    "action": {"sigma": [2, 1, 4, 3]},
    "expect": {
      "conditions": true,
      "kernel_ranks": [0, 0],
      "K0": {"orders": [3], "action": {"sigma": [[2]]}},
      "K1": {"orders": []},
      "unit_class": [0],
      "K0_witness": {
        "witness": [[0], [0], [2], [1]],
        "module": {"orders": [3], "action": {"sigma": [[2]]}}
      },
      "forge": {
        "Aprime": [[2, -1], [-1, 2]],
        "Bprime": [[1, 0], [0, 1]],
        "Y": [[1, 1], [1, 1]],
        "action": {"sigma": [2, 1]}
      }
    }
  },
  {
    "name": "oab-4x4-second",
    "tags": ["oab", "ex1"],
    "kind": "oab",
    "A": [[2, 0, 3, 1], [0, 2, 1, 3], [1, 0, 2, 2], [0, 1, 2, 2]],
    "B": [[1, 0, 2, -1], [0, 1, -1, 2], [1, 0, 1, 0], [0, 1, 0, 1]],
    "action": {"sigma": [2, 1, 4, 3]},
    "expect": {
      "conditions": true,
      "kernel_ranks": [0, 0],
      "K0": {"orders": [3], "action": {"sigma": [[2]]}},
      "K1": {"orders": [3], "action": {"sigma": [[2]]}},
      "forge": {
        "Aprime": [[2, -1], [-1, 2]],
        "Bprime": [[2, -1], [-1, 2]],
        "Y": [[1, 2], [2, 1]],
        "action": {"sigma": [2, 1]}
      }
    }
  },
  {
    "name": "oab-8x8",
    "tags": ["oab", "ex2"],
    "kind": "oab",
    "A": [[2, 0, 0, 0, 3, 0, 0, 0],
          [0, 2, 0, 0, 0, 3, 0, 0],
          [0, 0, 2, 0, 0, 0, 3, 0],
          [0, 0, 0, 2, 0, 0, 0, 3],
          [1, 0, 0, 0, 2, 1, 1, 1],
          [0, 1, 0, 0, 1, 2, 1, 1],
          [0, 0, 1, 0, 1, 1, 2, 1],
          [0, 0, 0, 1, 1, 1, 1, 2]],
    "B": [[1, 0, 0, 0, 1, 0, 0, 0],
          [0, 1, 0, 0, 0, 1, 0, 0],
          [0, 0, 1, 0, 0, 0, 1, 0],
          [0, 0, 0, 1, 0, 0, 0, 1],
          [1, 0, 0, 0, 1, 0, 0, 0],
          [0, 1, 0, 0, 0, 1, 0, 0],
          [0, 0, 1, 0, 0, 0, 1, 0],
          [0, 0, 0, 1, 0, 0, 0, 1]],
    "action": {"sigma": [2, 1, 4, 3, 6, 5, 8, 7], "tau": [3, 4, 1, 2, 7, 8, 5, 6]},
    "expect": {
      "conditions": true,
      "kernel_ranks": [0, 0],
      "K0": {"orders": [3, 3, 3]},
      "K1": {"orders": []},
      "unit_class": [0, 0, 0],
      "K0_witness": {
        "witness": [[0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0],
                    [2, 2, 2], [2, 2, 0], [2, 0, 2], [0, 2, 2]],
        "module": {
          "orders": [3, 3, 3],
          "action": {
            "sigma": [[0, 1, 2], [1, 0, 2], [0, 0, 2]],
            "tau": [[0, 2, 1], [0, 2, 0], [1, 2, 0]]
          }
        }
      },
      "symmetry": {
        "order": 24,
        "contains": {"sigma": [2, 1, 4, 3, 6, 5, 8, 7], "tau": [3, 4, 1, 2, 7, 8, 5, 6]}
      },
      "forge": {
        "Aprime": [[2, -1, -1, -1], [-1, 2, -1, -1], [-1, -1, 2, -1], [-1, -1, -1, 2]],
        "Bprime": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "Y": [[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]],
        "action": {"sigma": [2, 1, 4, 3], "tau": [3, 4, 1, 2]}
      }
    }
  },
  {
    "name": "split2-unknown",
    "tags": ["units"],
    "kind": "split2",
    "max": 120,
    "expect": {
      "unknown": [24, 40, 48, 56, 60, 63, 65, 72, 80, 84, 85, 88, 91, 96,
                  104, 105, 112, 117, 120]
    }
  }
])json";

class Checks {
 public:
  void Add(const std::string& name, bool passed, const std::string& detail = "") {
    Json c = {{"check", name}, {"passed", passed}};
    if (!detail.empty()) c["detail"] = detail;
    list_.push_back(std::move(c));
    ok_ = ok_ && passed;
  }
  bool ok() const { return ok_; }
  const Json& list() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw io::InputError(std::string("corpus entry lacks \"") + key + "\"");
  return j.at(key);
}

IntMatrix SquareField(const Json& j, const char* key) {
  IntMatrix m = io::MatrixFromJson(Field(j, key));
  if (m.empty() || !m.is_square())
    throw io::InputError(std::string("corpus matrix ") + key + " is not square");
  return m;
}

std::string Render(std::span<const Integer> v) { return ToString(v); }

void RunPresentation(const Json& e, Checks& checks) {
  io::RequireKeys(e, {"name", "tags", "kind", "D", "action", "module",
                      "witness", "expect"}, "corpus entry");
  IntMatrix d = SquareField(e, "D");
  const Json& expect = Field(e, "expect");
  PermPresentation p{io::GroupFromJson(Field(e, "action"), d.rows()), d,
                     std::nullopt};
  if (e.contains("witness")) p.witness = io::MatrixFromJson(e.at("witness"));
  GammaModule target = io::ModuleFromJson(Field(e, "module"));

  RowVector factors = Cokernel(d).orders();
  RowVector want = io::VectorFromJson(Field(expect, "invariant_factors"));
  checks.Add("invariant factors", factors == want,
             "got " + Render(factors) + ", expected " + Render(want));

  PresentationReport report = VerifyPresentation(p, target);
  const bool want_pass = Field(expect, "passed").get<bool>();
  for (const auto& c : report.clauses)
    checks.Add("clause " + c.id + ": " + c.description,
               !want_pass || c.passed, c.detail);
  checks.Add("verification outcome", report.passed() == want_pass);
}

void CheckKGroup(const std::string& label, const KGroup& k, const Json& want,
                 Checks& checks) {
  RowVector orders = io::VectorFromJson(Field(want, "orders"));
  checks.Add(label + " orders", k.module.orders == orders,
             "got " + Render(k.module.orders) + ", expected " + Render(orders));
  if (!want.contains("action") || k.module.orders != orders) return;
  for (const auto& [name, m] : want.at("action").items()) {
    IntMatrix expected = io::MatrixFromJson(m);
    bool ok = k.module.has_generator(name) &&
              k.module.matrix(name).rows() == expected.rows() &&
              CongruentModOrders(k.module.matrix(name), expected, orders);
    checks.Add(label + " action of " + name, ok);
  }
}

void RunOab(const Json& e, Checks& checks) {
  io::RequireKeys(e, {"name", "tags", "kind", "A", "B", "action", "expect"},
                  "corpus entry");
  IntMatrix a = SquareField(e, "A");
  IntMatrix b = SquareField(e, "B");
  const Json& expect = Field(e, "expect");
  io::RequireKeys(expect, {"conditions", "kernel_ranks", "K0", "K1",
                           "unit_class", "K0_witness", "symmetry", "forge"},
                  "expect");
  PermGroup group = io::GroupFromJson(Field(e, "action"), a.rows());

  if (expect.contains("conditions")) {
    ConditionsReport c = CheckConditions(a, b);
    checks.Add("conditions (0), (1), (2)",
               c.kirchberg() == expect.at("conditions").get<bool>());
  }

  KTheoryResult r = oabkit::KTheory({a, b, group});
  if (expect.contains("kernel_ranks")) {
    auto ranks = expect.at("kernel_ranks").get<std::vector<std::size_t>>();
    checks.Add("ker(I-A), ker(I-B) ranks",
               ranks.size() == 2 && r.ker_i_minus_a.size() == ranks[0] &&
                   r.ker_i_minus_b.size() == ranks[1]);
  }
  CheckKGroup("K0", r.k0, Field(expect, "K0"), checks);
  CheckKGroup("K1", r.k1, Field(expect, "K1"), checks);
  checks.Add("K-groups are modules", CheckModule(r.k0.module, group).ok() &&
                                         CheckModule(r.k1.module, group).ok());

  if (expect.contains("unit_class")) {
    RowVector want = io::VectorFromJson(expect.at("unit_class"));
    checks.Add("unit class", r.unit_class == want,
               "got " + Render(r.unit_class) + ", expected " + Render(want));
  }
  if (expect.contains("K0_witness")) {
    const Json& w = expect.at("K0_witness");
    PermPresentation p{group, IntMatrix::Identity(a.rows()) - a,
                       io::MatrixFromJson(Field(w, "witness"))};
    PresentationReport report =
        VerifyPresentation(p, io::ModuleFromJson(Field(w, "module")));
    checks.Add("K0 matches the module through the witness", report.passed(),
               report.first_failure());
  }
  if (expect.contains("symmetry")) {
    const Json& s = expect.at("symmetry");
    PermGroup sym = SymmetryGroup(a, b);
    checks.Add("symmetry group order",
               sym.order() == Field(s, "order").get<std::size_t>(),
               "got " + std::to_string(sym.order()));
    for (const auto& [name, p] : io::ActionFromJson(Field(s, "contains")))
      checks.Add("symmetry group contains " + name, sym.Contains(p));
  }
  if (expect.contains("forge")) {
    const Json& f = expect.at("forge");
    IntMatrix a_prime = SquareField(f, "Aprime");
    PermGroup half = io::GroupFromJson(Field(f, "action"), a_prime.rows());
    ForgedPair pair = LemmaMatrix(a_prime, SquareField(f, "Bprime"), half,
                                  io::MatrixFromJson(Field(f, "Y")));
    checks.Add("forging reproduces A", pair.A == a);
    checks.Add("forging reproduces B", pair.B == b);
    checks.Add("forged action is the given action",
               pair.group.generators() == group.generators());
  }
}

void RunSplit2(const Json& e, Checks& checks) {
  io::RequireKeys(e, {"name", "tags", "kind", "max", "expect"}, "corpus entry");
  auto max = Field(e, "max").get<units::u64>();
  auto want = Field(Field(e, "expect"), "unknown").get<std::vector<units::u64>>();
  auto got = units::UnknownSplit2(max);
  checks.Add("undecided n", got == want);
}

bool Selected(const Json& e, const std::string& only) {
  if (only.empty() || Field(e, "name") == only) return true;
  if (!e.contains("tags")) return false;
  const Json& tags = e.at("tags");
  return std::find(tags.begin(), tags.end(), only) != tags.end();
}

}  // namespace

const Json& PaperCorpus() {
  static const Json corpus = Json::parse(kCorpus);
  return corpus;
}

CommandResult PaperExamples(const Json& corpus, const std::string& only) {
  if (!corpus.is_array()) throw io::InputError("corpus must be an array");
  Json results = Json::array();
  bool all_ok = true;
  for (const Json& e : corpus) {
    if (!Selected(e, only)) continue;
    const std::string kind = Field(e, "kind").get<std::string>();
    Checks checks;
    try {
      if (kind == "presentation")
        RunPresentation(e, checks);
      else if (kind == "oab")
        RunOab(e, checks);
      else if (kind == "split2")
        RunSplit2(e, checks);
      else
        throw io::InputError("unknown corpus kind \"" + kind + "\"");
    } catch (const io::InputError&) {
      throw;
    } catch (const DimensionError&) {
      throw;
    } catch (const Error& ex) {
      checks.Add("evaluation", false, ex.what());
    }
    results.push_back({{"name", Field(e, "name")},
                       {"passed", checks.ok()},
                       {"checks", checks.list()}});
    all_ok = all_ok && checks.ok();
  }
  if (results.empty())
    throw io::InputError("no corpus entry matches \"" + only + "\"");
  Json out = {{"examples", results}, {"passed", all_ok}};
  return {out, all_ok ? kExitOk : kExitValidation};
}

}  // namespace oabkit::cli
