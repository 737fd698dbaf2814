// Command-line front end: compile DIMACS CNF into reduced ordered decision
// diagrams with implied literals, run queries and transformations on dumped
// diagrams, and drive the desk-scale benchmark harness.
//
// Exit codes: 0 success, 1 parse error, 2 internal invariant failure,
// 3 validation failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bddil/compile.hpp"
#include "bddil/dimacs.hpp"
#include "bddil/dump.hpp"
#include "bddil/oracle.hpp"
#include "bddil/query.hpp"
#include "bddil/semantics.hpp"
#include "bddil/solver.hpp"
#include "bddil/transform.hpp"

namespace {

using namespace bddil;

constexpr int exit_ok = 0;
constexpr int exit_parse_error = 1;
constexpr int exit_internal_error = 2;
constexpr int exit_validation_failure = 3;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

CnfFormula load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(exit_parse_error, "cannot open " + path);
  std::vector<std::string> warnings;
  try {
    CnfFormula cnf = parse_dimacs(in, &warnings);
    for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
    return cnf;
  } catch (const ParseError& e) {
    throw CliError(exit_parse_error, path + ": " + e.what());
  }
}

NodeRef load_diagram(const std::string& path, DiagramStore& store) {
  std::ifstream in(path);
  if (!in) throw CliError(exit_parse_error, "cannot open " + path);
  try {
    return read_diagram(in, store);
  } catch (const ParseError& e) {
    throw CliError(exit_parse_error, path + ": " + e.what());
  }
}

void save_diagram(const std::string& path, const DiagramStore& store, NodeRef root) {
  std::ofstream out(path);
  if (!out) throw CliError(exit_internal_error, "cannot write " + path);
  write_diagram(out, store, root);
}

void save_dot(const std::string& path, const DiagramStore& store, NodeRef root) {
  std::ofstream out(path);
  if (!out) throw CliError(exit_internal_error, "cannot write " + path);
  write_dot(out, store, root);
}

// Zero-terminated signed-integer syntax, as in the clause lines of the
// input format.
std::vector<Literal> parse_literal_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<Literal> literals;
  int value = 0;
  bool terminated = false;
  while (in >> value) {
    if (value == 0) {
      terminated = true;
      break;
    }
    literals.push_back(Literal::from_dimacs(value));
  }
  if (!terminated) throw CliError(exit_parse_error, "literal list must end with 0");
  return literals;
}

LiteralSet parse_term(const std::string& text) {
  try {
    return LiteralSet::from(parse_literal_list(text));
  } catch (const InconsistentSet& e) {
    throw CliError(exit_parse_error, std::string("inconsistent term: ") + e.what());
  }
}

void require_valid(DiagramStore& store, NodeRef root, ValidationLevel level,
                   std::optional<Level> budget, const std::string& what) {
  const ValidationReport report = validate(store, root, level, budget);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << what << ": diagram fails validation (" << report.violations.size() << " violations)";
    for (std::size_t i = 0; i < std::min<std::size_t>(report.violations.size(), 3); ++i) {
      msg << "\n  node " << report.violations[i].node.id() << ": "
          << report.violations[i].rule << ": " << report.violations[i].detail;
    }
    throw CliError(exit_validation_failure, msg.str());
  }
}

int cmd_compile(const std::string& input, const std::string& level_text,
                const std::string& method, const std::string& imps, bool no_cache,
                const std::string& output, const std::string& dot) {
  const auto level = Level::parse(level_text);
  if (!level) throw CliError(exit_parse_error, "bad level '" + level_text + "'");
  const CnfFormula cnf = load_cnf(input);

  DiagramStore store;
  Solver solver(cnf);
  const auto start = std::chrono::steady_clock::now();
  NodeRef root;
  if (method == "build-inf") {
    if (!level->is_infinity()) {
      throw CliError(exit_parse_error, "build-inf compiles at level inf only");
    }
    CompileConfig config;
    config.strategy =
        (imps == "models") ? ImpliedLiteralStrategy::Models : ImpliedLiteralStrategy::Horn;
    config.cnf_cache = !no_cache;
    root = build_inf(store, cnf, config, solver);
  } else {
    root = build(store, cnf, *level, solver);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  const DiagramStats s = stats(store, root);
  using ms = std::chrono::duration<double, std::milli>;
  std::cout << "compiled " << input << ": level=" << level->to_string() << " nodes=" << s.nodes
            << " edges=" << s.edges << " decisions=" << s.decision_nodes << " vars="
            << cnf.num_variables() << " clauses=" << cnf.clause_count() << " ms="
            << ms(elapsed).count() << " sat_ms=" << ms(solver.solve_time()).count() << "\n";
  if (!output.empty()) save_diagram(output, store, root);
  if (!dot.empty()) save_dot(dot, store, root);
  return exit_ok;
}

int cmd_query(const std::string& diagram_path, const std::vector<std::string>& query) {
  DiagramStore store;
  const NodeRef root = load_diagram(diagram_path, store);
  if (query.empty()) throw CliError(exit_parse_error, "missing query");
  const std::string& kind = query[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= query.size()) throw CliError(exit_parse_error, "missing argument for " + kind);
    return query[i];
  };

  if (kind == "count") {
    require_valid(store, root, ValidationLevel::ObddlWeak, std::nullopt, kind);
    const auto universe = static_cast<std::uint32_t>(std::stoul(arg(1)));
    for (Variable v : diagram_variables(store, root)) {
      if (v.index() > universe) {
        throw CliError(exit_validation_failure,
                       "universe 1.." + arg(1) + " misses diagram variable " +
                           std::to_string(v.index()));
      }
    }
    std::cout << count(store, root, universe).get_str() << "\n";
  } else if (kind == "co") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    std::cout << (is_consistent(store, root) ? "yes" : "no") << "\n";
  } else if (kind == "va") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    std::cout << (is_valid(store, root) ? "yes" : "no") << "\n";
  } else if (kind == "ce") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    std::cout << (clausal_entailment(store, root, parse_literal_list(arg(1))) ? "yes" : "no")
              << "\n";
  } else if (kind == "im") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    std::cout << (implicant_check(store, root, parse_term(arg(1))) ? "yes" : "no") << "\n";
  } else if (kind == "me") {
    require_valid(store, root, ValidationLevel::ObddlWeak, std::nullopt, kind);
    std::optional<std::uint64_t> limit;
    if (query.size() > 1) limit = std::stoull(arg(1));
    ModelStream stream(store, root, diagram_variables(store, root), limit);
    while (auto model = stream.next()) {
      bool first = true;
      for (Literal l : model->literals) {
        if (!first) std::cout << ' ';
        std::cout << l.to_dimacs();
        first = false;
      }
      std::cout << "\n";
    }
  } else if (kind == "mincard") {
    require_valid(store, root, ValidationLevel::ObddlWeak, std::nullopt, kind);
    const auto mc = minimum_cardinality(store, root);
    if (mc.has_value()) {
      std::cout << *mc << "\n";
    } else {
      std::cout << "inf\n";
    }
  } else {
    throw CliError(exit_parse_error, "unknown query '" + kind + "'");
  }
  return exit_ok;
}

int cmd_transform(const std::string& diagram_path, const std::vector<std::string>& op,
                  const std::string& output, const std::string& dot) {
  DiagramStore store;
  const NodeRef root = load_diagram(diagram_path, store);
  if (op.empty()) throw CliError(exit_parse_error, "missing transformation");
  const std::string& kind = op[0];
  NodeRef result;
  if (kind == "to-fbdd") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    result = to_free_diagram(store, root);
  } else if (kind == "to-robdd") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    result = to_plain_robdd(store, root);
  } else if (kind == "add-to-inf") {
    require_valid(store, root, ValidationLevel::ObddlWeak, std::nullopt, kind);
    result = add_to_inf(store, root);
  } else if (kind == "condition") {
    require_valid(store, root, ValidationLevel::RobddI, Level::infinity(), kind);
    if (op.size() < 2) throw CliError(exit_parse_error, "condition needs a term");
    result = condition(store, root, parse_term(op[1]));
  } else {
    throw CliError(exit_parse_error, "unknown transformation '" + kind + "'");
  }
  const DiagramStats s = stats(store, result);
  std::cout << kind << ": nodes=" << s.nodes << " edges=" << s.edges
            << " decisions=" << s.decision_nodes << "\n";
  if (!output.empty()) save_diagram(output, store, result);
  if (!dot.empty()) save_dot(dot, store, result);
  return exit_ok;
}

int cmd_bench(const std::string& directory, const std::string& csv_path,
              std::uint64_t budget_ms) {
  std::ofstream csv(csv_path);
  if (!csv) throw CliError(exit_internal_error, "cannot write " + csv_path);
  csv << "name,vars,clauses,robdd0_nodes,robdd0_edges,inf_nodes,inf_edges,"
         "fbdd_nodes,fbdd_edges,compile_ms,sat_ms\n";

  std::vector<std::filesystem::path> inputs;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cnf") {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());

  for (const auto& path : inputs) {
    const std::string name = path.stem().string();
    CnfFormula cnf;
    try {
      cnf = load_cnf(path.string());
    } catch (const CliError& e) {
      std::cerr << e.what() << "\n";
      csv << name << ",-,-,-,-,-,-,-,-,-,-\n";
      continue;
    }
    csv << name << ',' << cnf.num_variables() << ',' << cnf.clause_count() << ',';
    try {
      DiagramStore store;
      Solver solver(cnf);
      CompileConfig config;
      config.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
      const auto start = std::chrono::steady_clock::now();
      const NodeRef inf_root = build_inf(store, cnf, config, solver);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const DiagramStats inf = stats(store, inf_root);
      const DiagramStats robdd0 = stats(store, to_plain_robdd(store, inf_root));
      const DiagramStats fbdd = stats(store, to_free_diagram(store, inf_root));
      using ms = std::chrono::duration<double, std::milli>;
      csv << robdd0.nodes << ',' << robdd0.edges << ',' << inf.nodes << ',' << inf.edges << ','
          << fbdd.nodes << ',' << fbdd.edges << ',' << ms(elapsed).count() << ','
          << ms(solver.solve_time()).count() << "\n";
    } catch (const BudgetExceeded&) {
      csv << "-,-,-,-,-,-,-,-\n";
    } catch (const Error& e) {
      std::cerr << name << ": " << e.what() << "\n";
      csv << "-,-,-,-,-,-,-,-\n";
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knowledge compiler for decision diagrams with implied literals"};
  app.require_subcommand(1);

  std::string input, output, dot, level_text = "inf", method = "build-inf", imps = "horn";
  bool no_cache = false;
  auto* compile = app.add_subcommand("compile", "compile a DIMACS CNF file");
  compile->add_option("input", input, "DIMACS CNF file")->required();
  compile->add_option("--level", level_text, "literal budget per node (integer or 'inf')");
  compile->add_option("--method", method, "build or build-inf")
      ->check(CLI::IsMember({"build", "build-inf"}));
  compile->add_option("--imps", imps, "implied-literal strategy for build-inf")
      ->check(CLI::IsMember({"models", "horn"}));
  compile->add_flag("--no-cache", no_cache, "disable the conditioned-formula cache");
  compile->add_option("-o,--output", output, "write the diagram dump here");
  compile->add_option("--dot", dot, "write a Graphviz rendering here");

  std::string diagram_path;
  std::vector<std::string> query_args;
  auto* query = app.add_subcommand("query", "query a dumped diagram");
  query->add_option("diagram", diagram_path, "diagram dump file")->required();
  query->add_option("query", query_args,
                    "count N | co | va | ce '<clause 0>' | im '<term 0>' | me [limit] | mincard")
      ->required();

  std::vector<std::string> transform_args;
  std::string t_output, t_dot;
  auto* transform = app.add_subcommand("transform", "transform a dumped diagram");
  transform->add_option("diagram", diagram_path, "diagram dump file")->required();
  transform->add_option("op", transform_args,
                        "to-fbdd | to-robdd | add-to-inf | condition '<term 0>'")
      ->required();
  transform->add_option("-o,--output", t_output, "write the result dump here");
  transform->add_option("--dot", t_dot, "write a Graphviz rendering here");

  std::string bench_dir, csv_path = "bench.csv";
  std::uint64_t budget_ms = 60000;
  auto* bench = app.add_subcommand("bench", "compile every .cnf in a directory");
  bench->add_option("directory", bench_dir, "directory of .cnf files")->required();
  bench->add_option("-o,--output", csv_path, "CSV output path");
  bench->add_option("--budget-ms", budget_ms, "per-instance wall-clock budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      if (method == "build-inf" && level_text != "inf" && Level::parse(level_text) &&
          !Level::parse(level_text)->is_infinity()) {
        method = "build";  // finite levels go through the generic compiler
      }
      return cmd_compile(input, level_text, method, imps, no_cache, output, dot);
    }
    if (query->parsed()) return cmd_query(diagram_path, query_args);
    if (transform->parsed()) return cmd_transform(diagram_path, transform_args, t_output, t_dot);
    if (bench->parsed()) return cmd_bench(bench_dir, csv_path, budget_ms);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal_error;
  }
  return exit_parse_error;
}
