#include "oabkit/json_io.h"

#include <algorithm>
#include <map>

namespace oabkit::io {
namespace {

const Integer& MaxSafeInteger() {
  static const Integer kMax("9007199254740991");
  return kMax;
}

bool IsDecimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Json BoolVector(const std::vector<bool>& v) {
  Json j = Json::array();
  for (bool b : v) j.push_back(b);
  return j;
}

}  // namespace

Json ToJson(const Integer& x) {
  if (abs(x) <= MaxSafeInteger()) return Json(x.get_si());
  return Json(x.get_str());
}

Json ToJson(std::span<const Integer> v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(ToJson(x));
  return j;
}

Json ToJson(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(ToJson(m.row(i)));
  return j;
}

Integer IntegerFromJson(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!IsDecimal(s)) throw InputError("not a decimal integer: \"" + s + "\"");
    return Integer(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

RowVector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  RowVector v;
  for (const auto& x : j) v.push_back(IntegerFromJson(x));
  return v;
}

IntMatrix MatrixFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
  if (j.empty()) return IntMatrix();
  std::vector<RowVector> rows;
  for (const auto& r : j) rows.push_back(VectorFromJson(r));
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError("ragged matrix");
  return IntMatrix::FromRows(rows, cols);
}

Json ActionToJson(const std::vector<NamedPermutation>& generators) {
  Json j = Json::object();
  for (const auto& [name, p] : generators) j[name] = p.OneIndexed();
  return j;
}

std::vector<NamedPermutation> ActionFromJson(const Json& j) {
  if (!j.is_object())
    throw InputError("action must map generator names to image arrays");
  std::vector<NamedPermutation> gens;
  for (const auto& [name, images] : j.items()) {
    if (!images.is_array()) throw InputError("images of " + name + " must be an array");
    std::vector<long> one_indexed;
    for (const auto& v : images) {
      if (!v.is_number_integer()) throw InputError("non-integer image in " + name);
      one_indexed.push_back(v.get<long>());
    }
    try {
      gens.emplace_back(name, Permutation::FromOneIndexed(one_indexed));
    } catch (const PreconditionError& e) {
      throw InputError(name + ": " + e.what());
    }
  }
  return gens;
}

PermGroup GroupFromJson(const Json& action, std::size_t degree) {
  std::vector<NamedPermutation> gens =
      action.is_null() ? std::vector<NamedPermutation>{} : ActionFromJson(action);
  for (const auto& [name, p] : gens)
    if (p.degree() != degree)
      throw InputError("generator " + name + " acts on " +
                       std::to_string(p.degree()) + " points, expected " +
                       std::to_string(degree));
  return Close(std::move(gens), degree);
}

Json GroupToJson(const PermGroup& group, bool with_elements) {
  Json j;
  j["degree"] = group.degree();
  j["order"] = group.order();
  j["generators"] = ActionToJson(group.generators());
  Json orbits = Json::array();
  for (const auto& orbit : group.Orbits()) {
    Json o = Json::array();
    for (std::size_t i : orbit) o.push_back(i + 1);
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  if (with_elements) {
    Json elements = Json::array();
    for (const auto& p : group.elements()) elements.push_back(p.OneIndexed());
    j["elements"] = elements;
  }
  return j;
}

Json ModuleToJson(const GammaModule& module) {
  Json j;
  j["orders"] = ToJson(module.orders);
  Json action = Json::object();
  for (const auto& [name, m] : module.action) action[name] = ToJson(m);
  j["action"] = action;
  return j;
}

GammaModule ModuleFromJson(const Json& j) {
  RequireKeys(j, {"orders", "action"}, "module");
  if (!j.contains("orders")) throw InputError("module needs \"orders\"");
  GammaModule module;
  module.orders = VectorFromJson(j.at("orders"));
  for (const auto& d : module.orders)
    if (d < 0) throw InputError("module orders must be nonnegative");
  if (j.contains("action")) {
    if (!j.at("action").is_object())
      throw InputError("module action must be an object");
    for (const auto& [name, m] : j.at("action").items()) {
      IntMatrix mat = MatrixFromJson(m);
      if (mat.rows() != module.orders.size() || mat.cols() != module.orders.size())
        throw InputError("module action " + name + " has the wrong size");
      module.action.emplace_back(name, std::move(mat));
    }
  }
  return module;
}

Json ToJson(const AbelianGroupType& type) {
  Json j;
  j["torsion"] = ToJson(type.torsion);
  j["free_rank"] = type.free_rank;
  j["description"] = ToString(type);
  return j;
}

Json ToJson(const PresentationReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["witness_checked"] = report.witness_checked;
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back({{"id", c.id},
                       {"description", c.description},
                       {"passed", c.passed},
                       {"detail", c.detail}});
  }
  j["clauses"] = clauses;
  return j;
}

Json ToJson(const ConditionsReport& report) {
  Json j;
  j["condition0"] = {{"passed", report.condition0.passed()},
                     {"nonnegative", report.condition0.nonnegative},
                     {"rows_nonempty", report.condition0.rows_nonempty},
                     {"b_supported", report.condition0.b_supported},
                     {"detail", report.condition0.detail}};
  j["condition1"] = report.condition1;
  j["condition2"] = report.condition2;
  j["b_has_zero_row"] = report.b_has_zero_row;
  j["kirchberg"] = report.kirchberg();
  return j;
}

namespace {

Json KGroupToJson(const KGroup& k) {
  Json j;
  j["type"] = ToJson(k.type);
  j["module"] = ModuleToJson(k.module);
  j["cokernel_generators"] = k.cokernel_rank;
  j["kernel_generators"] = k.module.rank() - k.cokernel_rank;
  return j;
}

Json VectorsToJson(const std::vector<RowVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(ToJson(v));
  return j;
}

}  // namespace

Json ToJson(const KTheoryResult& r) {
  Json j;
  j["K0"] = KGroupToJson(r.k0);
  j["K1"] = KGroupToJson(r.k1);
  j["coker_I_minus_A"] = ToJson(r.coker_i_minus_a.orders());
  j["coker_I_minus_B"] = ToJson(r.coker_i_minus_b.orders());
  j["ker_I_minus_A"] = VectorsToJson(r.ker_i_minus_a);
  j["ker_I_minus_B"] = VectorsToJson(r.ker_i_minus_b);
  j["unit_class"] = ToJson(r.unit_class);
  j["p_classes"] = VectorsToJson(r.p_classes);
  j["u_classes"] = VectorsToJson(r.u_classes);
  return j;
}

Json ToJson(const ForgedPair& pair) {
  Json j;
  j["N"] = pair.n;
  j["A"] = ToJson(pair.A);
  j["B"] = ToJson(pair.B);
  j["Y"] = ToJson(pair.Y);
  j["Y_overridden"] = pair.y_overridden;
  j["A_prime"] = ToJson(pair.a_prime);
  j["B_prime"] = ToJson(pair.b_prime);
  j["action"] = ActionToJson(pair.group.generators());
  j["group_order"] = pair.group.order();
  j["factorization"] = {{"left", ToJson(pair.factorization.left)},
                        {"middle", ToJson(pair.factorization.middle)},
                        {"right", ToJson(pair.factorization.right)}};
  j["conditions"] = ToJson(CheckConditions(pair.A, pair.B));
  return j;
}

Json ToJson(const units::UnitsStructure& s) {
  Json j;
  j["n"] = s.n;
  Json f = Json::array();
  for (const auto& pp : s.factorization) f.push_back({pp.prime, pp.exponent});
  j["factorization"] = f;
  j["cyclic_orders"] = s.cyclic_orders;
  j["minus_one_coords"] = s.minus_one_coords;
  j["factor_generators"] = s.factor_generators;
  return j;
}

Json ToJson(const units::Split3Report& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["stabilizer"] = r.stabilizer;
  j["stabilizer_order"] = r.stabilizer.size();
  j["stabilizer_cyclic"] = r.stabilizer_cyclic;
  if (r.stabilizer_cyclic) j["stabilizer_generator"] = r.stabilizer_generator;
  return j;
}

void RequireKeys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& context) {
  if (!j.is_object()) throw InputError(context + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&key](const char* a) { return key == a; });
    if (!known) throw InputError("unknown field \"" + key + "\" in " + context);
  }
}

}  // namespace oabkit::io
