// oabkit: JSON batch front end for the library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "commands.h"

using oabkit::cli::CommandResult;
using oabkit::cli::Json;

namespace {

Json ReadJson(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw oabkit::io::InputError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return Json::parse(text);
}

int Emit(const CommandResult& result, const std::string& output) {
  const std::string text = result.output.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return oabkit::cli::kExitMalformed;
    }
    out << text;
  }
  if (result.output.contains("error"))
    std::cerr << "oabkit: " << result.output["error"]["message"].get<std::string>()
              << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants for permutation presentations and O_{A,B}"};
  app.require_subcommand(1);

  std::string input, output, y_override, only, corpus_file;
  oabkit::cli::UnitsArgs units_args;
  bool table = false, dump_corpus = false;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "job file (default stdin)");
    sub->add_option("--output,-o", output, "result file (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "verify a permutation presentation");
  auto* forge = app.add_subcommand("forge", "forge a matrix pair (A, B)");
  auto* check = app.add_subcommand("check", "check conditions (0), (1), (2)");
  auto* ktheory = app.add_subcommand("ktheory", "K-theory of O_{A,B}");
  auto* symmetry = app.add_subcommand("symmetry", "the group Gamma_{A,B}");
  for (auto* sub : {verify, forge, check, ktheory, symmetry}) add_io(sub);
  forge->add_option("--y-override", y_override, "JSON file holding the matrix Y");

  auto* units = app.add_subcommand("units", "structure of (Z/nZ)^x");
  units->add_option("n", units_args.n, "modulus");
  units->add_option("--k", units_args.k, "stabilizer check for k");
  units->add_option("--sweep", units_args.sweep, "decide split2 for all n <= MAX");
  units->add_flag("--table", table, "print the sweep as a text table");
  units->add_option("--output,-o", output, "result file (default stdout)");

  auto* examples = app.add_subcommand("paper-examples", "run the worked examples");
  examples->add_option("--only", only, "entry name or tag");
  examples->add_option("--corpus", corpus_file, "replacement corpus file");
  examples->add_flag("--dump-corpus", dump_corpus, "print the embedded corpus");
  examples->add_option("--output,-o", output, "result file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  using namespace oabkit::cli;
  CommandResult result = Guarded([&]() -> CommandResult {
    if (*units) {
      if (table) {
        if (!units_args.sweep)
          throw oabkit::io::InputError("--table needs --sweep MAX");
        std::cout << Split2Table(*units_args.sweep);
        return {Json::object(), kExitOk};
      }
      return Units(units_args);
    }
    if (*examples) {
      if (dump_corpus) return {PaperCorpus(), kExitOk};
      return PaperExamples(corpus_file.empty() ? PaperCorpus()
                                               : ReadJson(corpus_file),
                           only);
    }
    Json job = ReadJson(input);
    if (*verify) return Verify(job);
    if (*forge) {
      std::optional<Json> y;
      if (!y_override.empty()) y = ReadJson(y_override);
      return Forge(job, y);
    }
    if (*check) return Check(job);
    if (*ktheory) return KTheory(job);
    return Symmetry(job);
  });
  if (table && result.exit_code == kExitOk) return kExitOk;
  return Emit(result, output);
}
