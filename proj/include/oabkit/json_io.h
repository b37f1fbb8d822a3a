#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "oabkit/errors.h"
#include "oabkit/forge.h"
#include "oabkit/int_matrix.h"
#include "oabkit/oab.h"
#include "oabkit/permgroups.h"
#include "oabkit/presentations.h"
#include "oabkit/units.h"

namespace oabkit::io {

using Json = nlohmann::json;

// Malformed interchange data (bad JSON, wrong types, unknown fields).
class InputError : public Error {
 public:
  using Error::Error;
};

// Integers with |x| <= 2^53 - 1 serialize as JSON numbers, larger ones as
// decimal strings. Parsing accepts both.
Json ToJson(const Integer& x);
Json ToJson(std::span<const Integer> v);
Json ToJson(const IntMatrix& m);
Integer IntegerFromJson(const Json& j);
RowVector VectorFromJson(const Json& j);
IntMatrix MatrixFromJson(const Json& j);

// {"name": [1-indexed images], ...}; generators ordered by name.
Json ActionToJson(const std::vector<NamedPermutation>& generators);
std::vector<NamedPermutation> ActionFromJson(const Json& j);
PermGroup GroupFromJson(const Json& action, std::size_t degree);
Json GroupToJson(const PermGroup& group, bool with_elements);

// {"orders": [...], "action": {"name": matrix, ...}}
Json ModuleToJson(const GammaModule& module);
GammaModule ModuleFromJson(const Json& j);

Json ToJson(const AbelianGroupType& type);
Json ToJson(const PresentationReport& report);
Json ToJson(const ConditionsReport& report);
Json ToJson(const KTheoryResult& result);
Json ToJson(const ForgedPair& pair);
Json ToJson(const units::UnitsStructure& s);
Json ToJson(const units::Split3Report& r);

// Throws InputError unless j is an object whose keys all lie in `allowed`.
void RequireKeys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& context);

}  // namespace oabkit::io
