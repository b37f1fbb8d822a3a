#pragma once

#include <optional>
#include <string>

#include "oabkit/json_io.h"
#include "oabkit/units.h"

namespace oabkit::cli {

using io::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitMalformed = 2;

struct CommandResult {
  Json output;
  int exit_code = kExitOk;
};

// Job commands. `job` is the parsed job file; the subcommand name must match
// job["command"] when present.
CommandResult Verify(const Json& job);
CommandResult Forge(const Json& job,
                    const std::optional<Json>& y_override = std::nullopt);
CommandResult Check(const Json& job);
CommandResult KTheory(const Json& job);
CommandResult Symmetry(const Json& job);

struct UnitsArgs {
  std::optional<units::u64> n;
  std::optional<units::u64> k;
  std::optional<units::u64> sweep;
};
CommandResult Units(const UnitsArgs& args);
// Plain-text table of the split2 decision for every n in [1, max].
std::string Split2Table(units::u64 max);

// The embedded corpus of worked examples.
const Json& PaperCorpus();
// Runs every corpus entry whose name or tag equals `only` (all when empty).
// Exit 1 iff an example deviates, 2 on a corrupt corpus or an empty
// selection.
CommandResult PaperExamples(const Json& corpus, const std::string& only = "");

// Dispatches on job["command"].
CommandResult RunJob(const Json& job);

// Runs `body`, mapping exceptions to exit codes: malformed input (bad JSON,
// wrong shapes) to 2, failed preconditions and limits to 1.
template <typename Body>
CommandResult Guarded(Body&& body) {
  auto failure = [](int code, const std::string& kind, const char* what) {
    Json out;
    out["error"] = {{"kind", kind}, {"message", what}};
    return CommandResult{out, code};
  };
  try {
    return body();
  } catch (const io::InputError& e) {
    return failure(kExitMalformed, "input", e.what());
  } catch (const DimensionError& e) {
    return failure(kExitMalformed, "dimension", e.what());
  } catch (const Json::exception& e) {
    return failure(kExitMalformed, "json", e.what());
  } catch (const LimitError& e) {
    return failure(kExitValidation, "limit", e.what());
  } catch (const Error& e) {
    return failure(kExitValidation, "precondition", e.what());
  }
}

}  // namespace oabkit::cli
