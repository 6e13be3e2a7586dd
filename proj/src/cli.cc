// Copyright 2026 The Mutspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutspace/cli.h"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mutspace/behavior.h"
#include "mutspace/diffcore.h"
#include "mutspace/errors.h"
#include "mutspace/lattice.h"
#include "mutspace/mbfl.h"
#include "mutspace/mutlang/interpreter.h"
#include "mutspace/mutlang/mutator.h"
#include "mutspace/mutlang/parser.h"
#include "mutspace/progspace.h"
#include "mutspace/subsumption.h"
#include "mutspace/worked_examples.h"

namespace mutspace::cli {

namespace {

using Json = nlohmann::ordered_json;

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json BigIntegerJson(const boost::multiprecision::cpp_int& value) {
  if (value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

std::uint64_t DefaultBudget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError(std::string(kBudgetEnv) + " must be a positive integer");
    }
  }
  return mutlang::kDefaultStepBudget;
}

bool LooksLikeJson(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

// A behavior matrix file (JSON) or a kill matrix file (CSV).
struct Loaded {
  std::optional<BehaviorMatrix> behavior;
  KillMatrix kills;
  std::string origin;
};

Loaded LoadMatrix(const std::string& path, const Differentiator& d,
                  const std::string& origin_flag) {
  const std::string text = ReadFile(path);
  Loaded loaded;
  if (!LooksLikeJson(text)) {
    loaded.kills = KillMatrixFromCsv(text);
    loaded.origin = "original";
    return loaded;
  }
  loaded.behavior = BehaviorMatrixFromJson(text);
  const BehaviorMatrix& bm = *loaded.behavior;
  if (!origin_flag.empty()) {
    loaded.origin = origin_flag;
  } else if (auto original = bm.OriginalId()) {
    loaded.origin = *original;
  } else {
    throw RoleError("behavior matrix has no program with role original");
  }
  ProgramSpace space(bm.tests(), loaded.origin, d, bm);
  loaded.kills = MakeKillMatrix(space, bm.MutantIds());
  return loaded;
}

std::vector<mutlang::TestCase> LoadTests(const std::string& path) {
  return mutlang::ParseTestSuite(ReadFile(path));
}

mutlang::Program LoadProgram(const std::string& path) {
  const std::string source = ReadFile(path);
  try {
    return mutlang::Parse(source);
  } catch (const mutlang::SyntaxError& e) {
    throw ArgumentError(path + ":" + e.what());
  }
}

Json DescriptorJson(const mutlang::MutantDescriptor& d) {
  Json entry;
  entry["id"] = d.id;
  entry["operator"] = mutlang::ToString(d.op);
  entry["statement"] = mutlang::StatementLabel(d.statement);
  entry["offset"] = d.offset;
  entry["length"] = d.length;
  entry["original"] = d.original;
  entry["replacement"] = d.replacement;
  return entry;
}

// --- commands ---------------------------------------------------------------

struct Options {
  std::string policy = "output";
  double epsilon = 0.0;
  std::string format;
  bool dot = false;
  std::string output;
  std::string origin;
  std::uint64_t seed = 1;
};

int CmdMutate(const std::string& source_path, const std::string& operators,
              const std::string& out_dir, const Options& opts,
              std::ostream& out) {
  const auto ops = mutlang::ParseOperatorList(operators);
  const mutlang::Program program = LoadProgram(source_path);
  const auto mutants = mutlang::MutateAll(program, ops);
  Json listing;
  listing["source"] = source_path;
  listing["statements"] = program.statement_count;
  Json entries = Json::array();
  for (const auto& mutant : mutants) {
    entries.push_back(DescriptorJson(mutant.descriptor));
  }
  listing["mutants"] = std::move(entries);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& mutant : mutants) {
      WriteFile(std::filesystem::path(out_dir) / (mutant.descriptor.id + ".mini"),
                mutant.program.source);
    }
  }
  Emit(Dump(listing), opts.output, out);
  return kOk;
}

BehaviorMatrix BuildFromSources(const std::string& source_path,
                                const std::string& tests_path,
                                const std::string& spec_path,
                                const std::string& operators, bool tracing,
                                std::optional<std::uint64_t> budget) {
  const auto ops = mutlang::ParseOperatorList(operators);
  const mutlang::Program program = LoadProgram(source_path);
  const auto tests = LoadTests(tests_path);
  std::optional<std::map<std::string, std::string>> expected;
  if (!spec_path.empty()) {
    expected = mutlang::ParseExpectedOutputs(ReadFile(spec_path));
  }
  mutlang::ExecOptions exec{budget.value_or(DefaultBudget()), tracing};
  return mutlang::BuildBehaviorMatrix(program, mutlang::MutateAll(program, ops),
                                      tests, exec, expected);
}

int CmdAnalyze(const std::string& what, const std::string& path,
               std::optional<std::size_t> n, const std::string& left,
               const std::string& right, const Differentiator& d,
               const Options& opts, std::ostream& out) {
  std::string format = opts.dot ? "dot" : opts.format;

  if (what == "pdl" && n) {
    if (format.empty()) format = "dot";
    Pdl pdl = BuildPdl(*n);
    if (format == "dot") {
      Emit(PdlToDot(pdl), opts.output, out);
    } else {
      Json json;
      json["dimension"] = pdl.dimension();
      json["nodes"] = pdl.node_count();
      json["edges"] = pdl.edge_count();
      Emit(Dump(json), opts.output, out);
    }
    return kOk;
  }
  if (path.empty()) {
    throw ArgumentError("analyze " + what + " needs a matrix file");
  }
  const Loaded loaded = LoadMatrix(path, d, opts.origin);
  const KillMatrix& km = loaded.kills;

  if (what == "adequacy") {
    AdequacyResult result;
    if (loaded.behavior) {
      result = MutationAdequacy(d, loaded.behavior->tests(), loaded.origin,
                                loaded.behavior->MutantIds(), *loaded.behavior);
    } else {
      const BehaviorMatrix synthesized = SynthesizeBehaviorMatrix(km);
      result = MutationAdequacy(Differentiator(Differentiator::Policy::kOutput),
                                km.tests(), "po", km.mutants(), synthesized);
    }
    Json json;
    json["adequate"] = result.adequate;
    json["live"] = result.live;
    Json killers = Json::object();
    for (const auto& [mutant, test] : result.killers) killers[mutant] = test;
    json["killers"] = std::move(killers);
    Emit(Dump(json), opts.output, out);
  } else if (what == "minimize") {
    const MinimalSetResult result = MinimalMutantSet(km);
    Json json;
    json["minimal"] = result.minimal;
    json["live"] = result.live;
    json["reduction_ratio"] = result.reduction_ratio;
    json["max_minimal_size"] = BigIntegerJson(MaxMinimalSize(km.test_count()));
    Emit(Dump(json), opts.output, out);
  } else if (what == "dmsg") {
    const Dmsg dmsg = BuildDmsg(km);
    if (format.empty() || format == "dot") {
      Emit(DmsgToDot(dmsg), opts.output, out);
    } else {
      Json json;
      Json classes = Json::array();
      for (const auto& cls : dmsg.classes) {
        Json entry;
        entry["members"] = cls.members;
        entry["kills"] = BitString(cls.column);
        classes.push_back(std::move(entry));
      }
      json["classes"] = std::move(classes);
      Json edges = Json::array();
      for (const auto& [from, to] : dmsg.edges) edges.push_back({from, to});
      json["edges"] = std::move(edges);
      Json pairs = Json::array();
      for (const auto& mx : km.mutants()) {
        for (const auto& my : km.mutants()) {
          if (DynamicallySubsumes(km, mx, my)) pairs.push_back({mx, my});
        }
      }
      json["subsumption_pairs"] = std::move(pairs);
      json["live"] = dmsg.live;
      Emit(Dump(json), opts.output, out);
    }
  } else if (what == "pdl") {
    std::vector<std::pair<std::string, BitVector>> positions;
    for (std::size_t j = 0; j < km.mutant_count(); ++j) {
      positions.emplace_back(km.mutants()[j], km.Column(j));
    }
    const Pdl pdl =
        AnnotatePositions(BuildPdl(km.test_count(), km.tests().ids()), positions);
    if (format.empty() || format == "dot") {
      Emit(PdlToDot(pdl), opts.output, out);
    } else {
      Json json;
      json["dimension"] = pdl.dimension();
      json["nodes"] = pdl.node_count();
      json["edges"] = pdl.edge_count();
      Json annotations = Json::object();
      for (const auto& [node, programs] : pdl.annotations()) {
        annotations[NodeString(node, pdl.dimension())] = programs;
      }
      json["annotations"] = std::move(annotations);
      Emit(Dump(json), opts.output, out);
    }
  } else if (what == "dvector") {
    if (right.empty()) throw ArgumentError("dvector needs --right");
    Json json;
    BitVector bits;
    std::vector<std::string> tests;
    std::string lhs = left.empty() ? loaded.origin : left;
    if (loaded.behavior) {
      const DVector v = MakeDVector(d, loaded.behavior->tests(), lhs, right,
                                    *loaded.behavior);
      bits = v.bits;
      tests = v.tests.ids();
      json["differentiator"] = v.differentiator;
    } else {
      if (lhs != loaded.origin) {
        throw ArgumentError("a kill matrix only holds d-vectors from the original");
      }
      bits = km.Column(right);
      tests = km.tests().ids();
      json["differentiator"] = "kill matrix";
    }
    json["left"] = lhs;
    json["right"] = right;
    json["tests"] = tests;
    json["bits"] = BitString(bits);
    json["norm"] = ManhattanNorm(bits);
    Emit(Dump(json), opts.output, out);
  } else if (what == "kill") {
    Emit(KillMatrixToCsv(km), opts.output, out);
  }
  return kOk;
}

int CmdMbfl(const BehaviorMatrix& bm, const std::string& method_name,
            const std::string& metric_name, const Differentiator& d,
            const Options& opts, std::ostream& out) {
  Method method;
  if (method_name == "fix") {
    method = Method::Fix();
  } else if (method_name == "flt") {
    method = Method::Flt(ParseMetric(metric_name));
  } else {
    throw ArgumentError("unknown method '" + method_name +
                        "' (expected fix or flt)");
  }
  const auto input = FaultLocalizationInput::FromMatrix(bm, d);
  Emit(ReportToJson(RankStatements(input, method)), opts.output, out);
  return kOk;
}

int CmdDemo(const std::string& out_dir, std::ostream& out) {
  const Differentiator exact;
  const BehaviorMatrix running = RunningExampleMatrix();
  out << "== running example (ps, po, m over t1..t4) ==\n";
  for (const auto& [x, y] : {std::pair{"ps", "po"}, {"po", "m"}, {"ps", "m"}}) {
    const DVector v = MakeDVector(exact, running.tests(), x, y, running);
    out << "d(t, " << x << ", " << y << ") = " << BitString(v.bits)
        << "  norm " << ManhattanNorm(v) << "\n";
  }
  const ProgramSpace spec_space(running.tests(), "ps", exact, running);
  const ProgramSpace t3_space = spec_space.WithTests(TestVector({"t3"}));
  out << "positions from ps: po " << BitString(PositionOf(spec_space, "po").bits)
      << ", m " << BitString(PositionOf(spec_space, "m").bits) << "\n";
  const auto witness = CoincidenceCounterexample(t3_space, "po", "m");
  out << "same position on <t3>, different behavior on:";
  if (witness) {
    for (const auto& t : *witness) out << " " << t;
  }
  out << "\n\n";

  const KillMatrix km = SubsumptionExampleKillMatrix();
  out << "== kill matrix example ==\n" << KillMatrixToCsv(km);
  out << "dynamic subsumption:";
  for (const auto& mx : km.mutants()) {
    for (const auto& my : km.mutants()) {
      if (DynamicallySubsumes(km, mx, my)) out << " " << mx << ">" << my;
    }
  }
  const MinimalSetResult minimal = MinimalMutantSet(km);
  out << "\nminimal set:";
  for (const auto& m : minimal.minimal) out << " " << m;
  out << "\nmaximum minimal set size for " << km.test_count()
      << " tests: " << MaxMinimalSize(km.test_count()) << "\n\n";

  std::vector<std::pair<std::string, BitVector>> positions;
  for (std::size_t j = 0; j < km.mutant_count(); ++j) {
    positions.emplace_back(km.mutants()[j], km.Column(j));
  }
  const Pdl pdl =
      AnnotatePositions(BuildPdl(km.test_count(), km.tests().ids()), positions);
  const std::string pdl_dot = PdlToDot(pdl);
  const std::string dmsg_dot = DmsgToDot(BuildDmsg(km));
  out << "== annotated lattice ==\n" << pdl_dot;

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    WriteFile(dir / "running_example.json", BehaviorMatrixToJson(running));
    WriteFile(dir / "kill_matrix.csv", KillMatrixToCsv(km));
    WriteFile(dir / "pdl.dot", pdl_dot);
    WriteFile(dir / "dmsg.dot", dmsg_dot);
  }
  return kOk;
}

// Random kill matrices: the deviance-path and subsumption sides agree on
// every ordered pair, and minimal sets never exceed the width bound.
int CmdCheck(std::size_t trials, std::size_t max_tests, std::size_t max_mutants,
             const Options& opts, std::ostream& out) {
  if (max_tests == 0 || max_mutants == 0) {
    throw ArgumentError("--max-tests and --max-mutants must be positive");
  }
  std::mt19937_64 rng(opts.seed);
  const Differentiator output(Differentiator::Policy::kOutput);
  std::size_t pairs = 0, disagreements = 0, bound_violations = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng() % max_tests;
    const std::size_t m = 1 + rng() % max_mutants;
    std::vector<std::string> tests, mutants;
    for (std::size_t i = 0; i < n; ++i) tests.push_back("t" + std::to_string(i + 1));
    std::vector<BitVector> columns;
    for (std::size_t j = 0; j < m; ++j) {
      mutants.push_back("m" + std::to_string(j + 1));
      BitVector column(n);
      for (auto& bit : column) bit = rng() & 1u;
      columns.push_back(std::move(column));
    }
    const KillMatrix km(TestVector(tests), mutants, columns);
    const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
    const ProgramSpace space(km.tests(), "po", output, bm);
    for (const auto& mx : mutants) {
      for (const auto& my : mutants) {
        const auto check = DevianceSubsumptionEquivalence(space, km, mx, my);
        ++pairs;
        if (check.deviance_path_holds != check.subsumes) ++disagreements;
      }
    }
    if (MinimalMutantSet(km).minimal.size() > MaxMinimalSize(n)) {
      ++bound_violations;
    }
  }
  Json json;
  json["seed"] = opts.seed;
  json["trials"] = trials;
  json["pairs_checked"] = pairs;
  json["disagreements"] = disagreements;
  json["bound_violations"] = bound_violations;
  Emit(Dump(json), opts.output, out);
  return disagreements == 0 && bound_violations == 0 ? kOk : kFailure;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Difference-based mutation analysis toolkit", "mutspace"};
  app.require_subcommand(1);
  Options opts;

  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--policy", opts.policy,
                    "Differentiator: exact, output, trace or numeric")
        ->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "Tolerance for --policy numeric");
  };

  // mutate
  std::string source_path, operators, out_dir;
  auto* mutate = app.add_subcommand("mutate", "List (and write) all mutants of a program");
  mutate->add_option("source", source_path, "Program source")->required();
  mutate->add_option("--operators", operators, "Comma separated operator list (default: all)");
  mutate->add_option("--out-dir", out_dir, "Write each mutant's source here");
  mutate->add_option("-o,--output", opts.output, "Listing file (default: stdout)");

  // run
  std::string tests_path, spec_path;
  bool tracing = false;
  std::optional<std::uint64_t> budget;
  auto* run = app.add_subcommand("run", "Execute a program and its mutants into a behavior matrix");
  run->add_option("source", source_path, "Program source")->required();
  run->add_option("--tests", tests_path, "Test suite JSON")->required();
  run->add_option("--spec", spec_path, "Expected outputs JSON (adds the spec row)");
  run->add_option("--operators", operators, "Comma separated operator list (default: all)");
  run->add_flag("--trace", tracing, "Record execution traces");
  run->add_option("--budget", budget, "Step budget per execution");
  run->add_option("-o,--output", opts.output, "Matrix file (default: stdout)");

  // analyze
  std::string what, matrix_path, left, right;
  std::optional<std::size_t> n;
  auto* analyze = app.add_subcommand("analyze", "Analyze a behavior matrix (JSON) or kill matrix (CSV)");
  analyze->add_option("what", what, "adequacy, minimize, dmsg, pdl, dvector or kill")
      ->required()
      ->check(CLI::IsMember({"adequacy", "minimize", "dmsg", "pdl", "dvector", "kill"}));
  analyze->add_option("matrix", matrix_path, "Matrix file");
  analyze->add_option("--n", n, "pdl: build the bare lattice of this dimension");
  analyze->add_option("--left", left, "dvector: left program (default: the origin)");
  analyze->add_option("--right", right, "dvector: right program");
  analyze->add_option("--origin", opts.origin, "Origin program (default: the original)");
  analyze->add_option("--format", opts.format, "json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  analyze->add_flag("--dot", opts.dot, "Shorthand for --format dot");
  analyze->add_option("-o,--output", opts.output, "Output file (default: stdout)");
  add_policy(analyze);

  // mbfl
  std::string method = "fix", metric = "ochiai";
  auto* mbfl = app.add_subcommand("mbfl", "Mutation-based fault localization report");
  mbfl->add_option("--matrix", matrix_path, "Behavior matrix JSON with spec and original rows");
  mbfl->add_option("--program", source_path, "Program source (mutated and run)");
  mbfl->add_option("--tests", tests_path, "Test suite JSON (with --program)");
  mbfl->add_option("--spec", spec_path, "Expected outputs JSON (with --program)");
  mbfl->add_option("--operators", operators, "Comma separated operator list (default: all)");
  mbfl->add_option("--budget", budget, "Step budget per execution");
  mbfl->add_option("--method", method, "fix or flt")->capture_default_str();
  mbfl->add_option("--metric", metric, "ochiai or jaccard (flt only)")->capture_default_str();
  mbfl->add_option("-o,--output", opts.output, "Report file (default: stdout)");
  add_policy(mbfl);

  // demo
  auto* demo = app.add_subcommand("demo", "Print the built-in worked examples");
  demo->add_option("--out-dir", out_dir, "Also write the example files here");

  // check
  std::size_t trials = 1000, max_tests = 6, max_mutants = 12;
  auto* check = app.add_subcommand("check", "Randomized deviance/subsumption property check");
  check->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  check->add_option("--trials", trials, "Random kill matrices to check")->capture_default_str();
  check->add_option("--max-tests", max_tests, "Upper bound on tests per matrix")->capture_default_str();
  check->add_option("--max-mutants", max_mutants, "Upper bound on mutants per matrix")->capture_default_str();
  check->add_option("-o,--output", opts.output, "Output file (default: stdout)");

  std::vector<std::string> argv_storage{"mutspace"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "mutspace: " << e.what() << "\n";
    return kInputError;
  }

  try {
    // Rejected before any file is touched.
    const Differentiator d = Differentiator::FromName(opts.policy, opts.epsilon);

    if (mutate->parsed()) {
      return CmdMutate(source_path, operators, out_dir, opts, out);
    }
    if (run->parsed()) {
      const BehaviorMatrix bm = BuildFromSources(source_path, tests_path, spec_path,
                                                 operators, tracing, budget);
      Emit(BehaviorMatrixToJson(bm), opts.output, out);
      return kOk;
    }
    if (analyze->parsed()) {
      return CmdAnalyze(what, matrix_path, n, left, right, d, opts, out);
    }
    if (mbfl->parsed()) {
      if (method != "fix" && method != "flt") {
        throw ArgumentError("unknown method '" + method + "' (expected fix or flt)");
      }
      ParseMetric(metric);
      std::optional<BehaviorMatrix> bm;
      if (!matrix_path.empty()) {
        bm = BehaviorMatrixFromJson(ReadFile(matrix_path));
      } else if (!source_path.empty() && !tests_path.empty()) {
        if (spec_path.empty()) {
          throw RoleError("no spec program: pass --spec with expected outputs");
        }
        bm = BuildFromSources(source_path, tests_path, spec_path, operators,
                              false, budget);
      } else {
        throw ArgumentError("mbfl needs --matrix, or --program with --tests and --spec");
      }
      return CmdMbfl(*bm, method, metric, d, opts, out);
    }
    if (demo->parsed()) return CmdDemo(out_dir, out);
    if (check->parsed()) {
      return CmdCheck(trials, max_tests, max_mutants, opts, out);
    }
  } catch (const mutlang::SyntaxError& e) {
    err << "mutspace: syntax error: " << e.what() << "\n";
    return kInputError;
  } catch (const SchemaError& e) {
    err << "mutspace: schema error at " << (e.path().empty() ? "/" : e.path())
        << ": " << e.what() << "\n";
    return kInputError;
  } catch (const RoleError& e) {
    err << "mutspace: role error: " << e.what() << "\n";
    return kRoleError;
  } catch (const CapacityError& e) {
    err << "mutspace: " << e.what() << "\n";
    return kCapacityError;
  } catch (const LookupError& e) {
    err << "mutspace: " << e.what() << "\n";
    return kInputError;
  } catch (const ArgumentError& e) {
    err << "mutspace: " << e.what() << "\n";
    return kInputError;
  } catch (const IoError& e) {
    err << "mutspace: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "mutspace: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace mutspace::cli
