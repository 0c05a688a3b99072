// Command-line front end for the iris solver library.
//
// Exit codes: 0 success, 1 infeasible, 2 input error, 3 limit reached.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "iris/bench.hpp"
#include "iris/det_solver.hpp"
#include "iris/flow.hpp"
#include "iris/generator.hpp"
#include "iris/heuristics.hpp"
#include "iris/io.hpp"
#include "iris/reductions.hpp"
#include "iris/regret.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;
constexpr int kLimit = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

iris::Instance load_instance(const std::string& path) {
  auto instance = iris::parse_instance(iris::read_file(path));
  const auto report = iris::validate(instance);
  for (const auto& issue : report.issues)
    if (issue.severity == iris::Severity::Warning) std::cerr << "warning: " << issue.message << '\n';
  if (!report.ok()) throw InputError("invalid instance " + path + ":\n" + report.to_string());
  return instance;
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-")
    std::cout << contents;
  else
    iris::write_file(path, contents);
}

std::string ref_list(const iris::Instance& instance, const std::vector<int>& items) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto r = instance.ref(items[k]);
    os << (k ? " " : "") << '(' << r.set << ',' << r.item << ')';
  }
  os << '}';
  return os.str();
}

struct SolveOptions {
  std::string instance;
  bool exact = false;
  bool heuristic_only = false;
  bool no_heuristics = false;
  std::uint64_t seed = 0;
  std::string trace;
  double eps = 0.0;
  int iter_limit = 500;
  double master_time_limit = 60.0;
  std::string out;
};

int run_solve(const SolveOptions& opt) {
  const auto instance = load_instance(opt.instance);

  if (opt.heuristic_only) {
    iris::EvoParams evo;
    evo.rng_seed = opt.seed;
    iris::Population pop;
    try {
      pop = iris::evolve(instance, evo);
    } catch (const iris::InfeasibleInstance&) {
      std::cout << "status: Infeasible\n";
      return kInfeasible;
    }
    const auto& best = pop.members.front();
    std::cout << "status: Heuristic\n"
              << "regret: " << best.regret << '\n'
              << "evaluations: " << pop.evaluations << '\n'
              << "chosen: " << iris::serialize_selection(instance, best.x);
    if (!opt.out.empty()) iris::write_file(opt.out, iris::serialize_selection(instance, best.x));
    return kOk;
  }

  iris::SolverConfig config;
  config.epsilon = opt.eps;
  config.iteration_limit = opt.iter_limit;
  config.master_time_limit = std::chrono::duration<double>(opt.master_time_limit);
  config.rng_seed = opt.seed;
  config.use_heuristics = !opt.no_heuristics;

  std::ofstream trace;
  if (!opt.trace.empty()) {
    trace.open(opt.trace);
    if (!trace) throw std::runtime_error("cannot write " + opt.trace);
    config.on_iteration = [&trace](const iris::IterationRecord& rec) {
      trace << iris::trace_json_line(rec) << '\n';
      trace.flush();
    };
  }

  const auto result = iris::minmax_regret(instance, config);
  std::cout << "status: " << iris::to_string(result.status) << '\n';
  if (result.status == iris::RobustStatus::Infeasible) return kInfeasible;
  std::cout << "regret: " << result.regret << '\n'
            << "lower_bound: " << result.lower_bound << '\n'
            << "upper_bound: " << result.upper_bound << '\n'
            << "gap: " << std::fixed << std::setprecision(4) << result.gap << '\n'
            << "iterations: " << result.iterations << '\n'
            << "chosen: " << iris::serialize_selection(instance, result.x_star);
  if (!opt.out.empty()) iris::write_file(opt.out, iris::serialize_selection(instance, result.x_star));
  return result.status == iris::RobustStatus::Optimal ? kOk : kLimit;
}

int run_evaluate(const std::string& instance_path, const std::string& selection_path) {
  const auto instance = load_instance(instance_path);
  const auto x = iris::parse_selection(instance, iris::read_file(selection_path));
  if (!iris::is_feasible(instance, x))
    throw InputError("selection violates a quota or a forbidden pair");
  const auto report = iris::evaluate_regret(instance, x);
  std::cout << "regret: " << report.regret << '\n'
            << "cost: " << iris::cost_of(report.scenario, x) << '\n'
            << "witness_cost: " << iris::cost_of(report.scenario, report.witness) << '\n'
            << "witness: " << iris::serialize_selection(instance, report.witness)
            << "scenario: " << iris::serialize_scenario(instance, report.scenario) << '\n';
  return kOk;
}

int run_classify(const std::string& path, const std::string& dot) {
  const auto instance = load_instance(path);
  const auto structure = iris::classify(instance);
  std::cout << iris::to_string(structure.kind);
  if (structure.kind == iris::Structure::CliqueComponents) {
    std::cout << " with " << structure.classes.size() << " classes\n";
    for (std::size_t c = 0; c < structure.classes.size(); ++c)
      std::cout << "  e" << c << ": " << ref_list(instance, structure.classes[c]) << '\n';
  } else {
    std::cout << '\n';
  }
  if (!dot.empty()) {
    auto classes = structure.classes;
    if (structure.kind == iris::Structure::General)
      throw InputError("--dot needs an instance whose conflict graph is a union of cliques");
    if (structure.kind == iris::Structure::Unconstrained)
      for (int f = 0; f < instance.num_items(); ++f) classes.push_back({f});
    const auto net = iris::build_network(instance, iris::midpoint_scenario(instance), classes);
    emit(dot, iris::to_dot(instance, net));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval min-max regret restricted items selection solver"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* cmd_solve = app.add_subcommand("solve", "Minimize maximum regret");
  cmd_solve->add_option("instance", solve.instance, "Instance JSON")->required();
  auto* exact = cmd_solve->add_flag("--exact", solve.exact, "Cut generation (default)");
  cmd_solve->add_flag("--heuristic-only", solve.heuristic_only, "Evolutionary heuristic only")
      ->excludes(exact);
  cmd_solve->add_flag("--no-heuristics", solve.no_heuristics,
                      "Start from the mid-point solution instead of the heuristic pool");
  cmd_solve->add_option("--seed", solve.seed, "Random seed");
  cmd_solve->add_option("--trace", solve.trace, "Write per-iteration JSON lines");
  cmd_solve->add_option("--eps", solve.eps, "Optimality tolerance")->check(CLI::NonNegativeNumber);
  cmd_solve->add_option("--iter-limit", solve.iter_limit, "Iteration limit")->check(CLI::PositiveNumber);
  cmd_solve->add_option("--master-time-limit", solve.master_time_limit,
                        "Master problem time limit in seconds")
      ->check(CLI::PositiveNumber);
  cmd_solve->add_option("-o,--output", solve.out, "Write the selection JSON here");

  iris::GenParams gen;
  std::string gen_mode = "normal";
  std::string gen_out;
  auto* cmd_gen = app.add_subcommand("generate", "Generate a random instance");
  cmd_gen->add_option("--m", gen.m, "Number of sets")->required();
  cmd_gen->add_option("--r", gen.r, "Items per set")->required();
  cmd_gen->add_option("--p", gen.p, "Items to select per set")->required();
  cmd_gen->add_option("--k", gen.k_pairs, "Number of sampled forbidden pairs");
  cmd_gen->add_option("--mode", gen_mode, "normal | transitive");
  cmd_gen->add_option("--seed", gen.seed, "Random seed");
  cmd_gen->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  std::string eval_instance, eval_selection;
  auto* cmd_eval = app.add_subcommand("evaluate", "Report the maximum regret of a selection");
  cmd_eval->add_option("instance", eval_instance, "Instance JSON")->required();
  cmd_eval->add_option("selection", eval_selection, "Selection JSON")->required();

  std::string red_kind, red_input, red_out;
  long long red_b = 0;
  int red_k = 0;
  auto* cmd_reduce = app.add_subcommand("reduce", "Build an instance from a hardness construction");
  cmd_reduce->add_option("kind", red_kind, "indepset | dnf")
      ->required()
      ->check(CLI::IsMember({"indepset", "dnf"}));
  cmd_reduce->add_option("input", red_input, "Graph (DIMACS edge list) or formula file")->required();
  cmd_reduce->add_option("-B", red_b, "Gadget constant for dnf (default clauses + 1)");
  cmd_reduce->add_option("-k", red_k, "Independent set size for indepset");
  cmd_reduce->add_option("-o,--output", red_out, "Output file (stdout if omitted)");

  std::string bench_suite, bench_out;
  bool bench_no_timing = false;
  int bench_instances = 0;
  auto* cmd_bench = app.add_subcommand("bench", "Run a benchmark suite");
  cmd_bench->add_option("suite", bench_suite, "Suite JSON")->required();
  cmd_bench->add_option("-o,--output", bench_out, "CSV report")->required();
  cmd_bench->add_flag("--no-timing", bench_no_timing, "Omit wall-clock columns");
  cmd_bench->add_option("--instances", bench_instances, "Override instances per row");

  std::string cls_instance, cls_dot;
  auto* cmd_classify = app.add_subcommand("classify", "Report the conflict structure");
  cmd_classify->add_option("instance", cls_instance, "Instance JSON")->required();
  cmd_classify->add_option("--dot", cls_dot, "Write the flow network (mid-point costs) as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_gen) {
      gen.mode = iris::parse_mode(gen_mode);
      emit(gen_out, iris::serialize_instance(iris::generate_instance(gen)));
      return kOk;
    }
    if (*cmd_eval) return run_evaluate(eval_instance, eval_selection);
    if (*cmd_reduce) {
      const std::string text = iris::read_file(red_input);
      if (red_kind == "indepset") {
        const auto graph = iris::parse_graph(text);
        if (red_k < 1) throw InputError("reduce indepset needs -k >= 1");
        const auto red = iris::independent_set_to_ris(graph, red_k);
        emit(red_out, iris::serialize_instance(red.instance));
        (red_out.empty() ? std::cerr : std::cout) << "threshold: " << red.threshold << '\n';
      } else {
        const auto phi = iris::parse_dnf(text);
        const auto red = red_b > 0 ? iris::dnf_to_iris(phi, red_b) : iris::dnf_to_iris(phi);
        emit(red_out, iris::serialize_instance(red.instance));
        (red_out.empty() ? std::cerr : std::cout) << "B: " << red.B << "\nZ: " << red.Z << '\n';
      }
      return kOk;
    }
    if (*cmd_bench) {
      auto suite = iris::parse_suite(iris::read_file(bench_suite));
      if (bench_instances > 0) suite.instances_per_row = bench_instances;
      const auto rows = iris::run_benchmark(suite.rows, suite.instances_per_row, suite.config);
      iris::write_file(bench_out, iris::bench_csv(rows, !bench_no_timing));
      std::cout << iris::bench_table(rows, !bench_no_timing);
      return kOk;
    }
    if (*cmd_classify) return run_classify(cls_instance, cls_dot);
  } catch (const iris::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
