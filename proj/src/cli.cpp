#include "bent/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bent/constructions.hpp"
#include "bent/error.hpp"
#include "bent/ledger.hpp"
#include "bent/serialize.hpp"

namespace bent {
namespace {

// Writes to the -o path when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

struct Options {
  std::string group;
  std::string format = "csv";
  std::string input;
  std::string output;
  std::string kind;
  int n = 0;
  int root = 1;
  double tol = kDefaultTol;
  long long budget = 100000;
  std::uint64_t seed = 7;
  std::string strategy = "RANDOM_PLUS_LOCAL";
};

int cmd_chars(const Options& o, std::ostream& out) {
  const CharacterTable ct = character_table(group_from_label(o.group));
  emit(o.format == "json" ? dump(char_table_to_json(ct)) : char_table_to_csv(ct), o.output, out);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const ClassFunction f = class_function_from_json(read_json_file(o.input));
  const BentReport rep = is_bent(f, o.tol);
  emit(dump(bent_report_to_json(rep)), o.output, out);
  return rep.bent() ? kExitOk : kExitNegative;
}

int cmd_construct(const Options& o, std::ostream& out) {
  SequenceSpec spec;
  if (o.kind == "zadoff-chu") {
    spec.kind = SequenceKind::kZadoffChu;
  } else if (o.kind == "chirp") {
    spec.kind = SequenceKind::kQuadraticChirp;
  } else {
    throw InvalidInput("unknown construction '" + o.kind + "' (expected zadoff-chu or chirp)");
  }
  spec.n = o.n;
  spec.root = o.root;
  const CertifiedFunction c = make_bent_cyclic(spec, o.tol);
  Json j = class_function_to_json(c.function);
  j["report"] = bent_report_to_json(c.report);
  emit(dump(j), o.output, out);
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig sc;
  sc.group = o.group;
  sc.budget = o.budget;
  sc.seed = o.seed;
  sc.tol = o.tol;
  sc.strategy = parse_strategy(o.strategy);
  emit(dump(search_result_to_json(run_search(sc))), o.output, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.budget < 0) throw InvalidInput("budget must be non-negative");
  const PaperLedger ledger = verify_paper({o.tol, o.budget, o.seed});
  emit(dump(ledger_to_json(ledger)), o.output, out);
  return ledger.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bent class functions on small finite groups", "bentcheck"};
  app.require_subcommand(1);
  Options o;

  auto* chars = app.add_subcommand("chars", "Print the character table of a group");
  chars->add_option("group", o.group, "Z<n>, Z<a>xZ<b>, S3, Q8, V4 or D4")->required();
  chars->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  chars->add_option("-o,--output", o.output);

  auto* check = app.add_subcommand("check", "Decide bentness of a class function file");
  check->add_option("input", o.input, "ClassFunction JSON")->required();
  check->add_option("--tol", o.tol);
  check->add_option("-o,--output", o.output);

  auto* construct = app.add_subcommand("construct", "Build a certified bent function on Z_n");
  construct->add_option("kind", o.kind, "zadoff-chu or chirp")->required();
  construct->add_option("n", o.n)->required();
  construct->add_option("u", o.root, "Zadoff-Chu root, coprime to n");
  construct->add_option("--tol", o.tol);
  construct->add_option("-o,--output", o.output);

  auto* search = app.add_subcommand("search", "Numerical search for a bent class function");
  search->add_option("--group", o.group)->required();
  search->add_option("--budget", o.budget);
  search->add_option("--seed", o.seed);
  search->add_option("--strategy", o.strategy);
  search->add_option("--tol", o.tol);
  search->add_option("-o,--output", o.output);

  auto* verify = app.add_subcommand("verify-paper", "Rerun every checkable claim");
  verify->add_option("--tol", o.tol);
  verify->add_option("--budget", o.budget);
  verify->add_option("--seed", o.seed);
  verify->add_option("-o,--output", o.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bentcheck: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*chars) return cmd_chars(o, out);
    if (*check) return cmd_check(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*search) return cmd_search(o, out);
    return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "bentcheck: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bent
