// Command-line surface for the simultaneous-conjugacy solver: solve and
// label instance files, generate instance families, and benchmark the
// solver across a size grid.
//
// Exit codes: 0 = YES / success, 1 = NO, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scp/bench.hpp"
#include "scp/generate.hpp"
#include "scp/instance_io.hpp"
#include "scp/solver.hpp"
#include "scp/threshold_expr.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct SolveFlags {
  std::string strategy = "auto";
  std::string threshold;
};

scp::StrategyConfig make_config(const SolveFlags& flags) {
  scp::StrategyConfig cfg;
  const auto mode = scp::strategy_from_string(flags.strategy);
  if (!mode)
    throw std::invalid_argument("unknown strategy '" + flags.strategy + "'");
  cfg.mode = *mode;
  if (!flags.threshold.empty())
    cfg.large_threshold = scp::compile_threshold_expr(flags.threshold);
  return cfg;
}

int cmd_solve(const std::string& path, const SolveFlags& flags) {
  const scp::Instance inst = scp::parse_instance_file(path);
  if (!inst.b)
    throw std::invalid_argument("solve needs both tuples, file has one");
  const scp::ScpResult result = scp::solve(inst.a, *inst.b, make_config(flags));
  std::cout << scp::render_solve_report(result);
  return result.conjugate ? kExitYes : kExitNo;
}

int cmd_label(const std::string& path) {
  const scp::Instance inst = scp::parse_instance_file(path);
  if (inst.b)
    throw std::invalid_argument("label needs a single-tuple file, file has two");
  std::cout << scp::canonical_label_graph(inst.a).render() << '\n';
  return kExitYes;
}

int cmd_gen(const scp::GenParams& params, const std::string& out_path) {
  const std::string text = scp::render_instance(scp::generate(params));
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitYes;
}

int cmd_bench(const std::vector<std::string>& family_specs,
              const std::vector<std::size_t>& sizes, std::size_t d,
              std::size_t reps, std::uint64_t seed, const SolveFlags& flags,
              const std::string& out_path) {
  scp::BenchOptions options;
  for (const auto& spec : family_specs)
    options.families.push_back(scp::parse_bench_family(spec));
  options.sizes = sizes;
  options.d = d;
  options.reps = reps;
  options.seed = seed;
  options.config = make_config(flags);

  const auto records = scp::run_bench(options);
  if (out_path.empty() || out_path == "-") {
    scp::write_bench_csv(std::cout, records);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write '" + out_path + "'");
    scp::write_bench_csv(out, records);
  }

  for (const auto& family : options.families) {
    std::vector<scp::BenchRecord> rows;
    for (const auto& r : records)
      if (r.family == family.name)
        rows.push_back(r);
    if (rows.size() >= 2)
      std::cout << family.name << " slope=" << scp::fit_log_slope(rows)
                << '\n';
  }
  return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous conjugacy of permutation tuples"};
  app.require_subcommand(1);

  std::string path;
  SolveFlags flags;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Decide conjugacy of the two tuples in an instance file");
  solve_cmd->add_option("path", path, "instance file")->required();
  solve_cmd->add_option("--strategy", flags.strategy,
                        "auto, label, or pairwise");
  solve_cmd->add_option("--threshold", flags.threshold,
                        "large-component threshold, an expression over n");

  auto* label_cmd = app.add_subcommand(
      "label", "Print the canonical label of a single-tuple instance file");
  label_cmd->add_option("path", path, "instance file")->required();

  scp::GenParams gen;
  std::string out_path;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd
      ->add_option("family", gen.family,
                   "random, conjugate-pair, equal-components, few-large, "
                   "or mixed")
      ->required();
  gen_cmd->add_option("--n", gen.n, "ground set size")->required();
  gen_cmd->add_option("--d", gen.d, "tuple degree")->required();
  std::size_t gen_s = 0, gen_k = 0;
  gen_cmd->add_option("--s", gen_s, "component size (equal-components)");
  gen_cmd->add_option("--k", gen_k, "component count (few-large)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out", out_path, "output path, default stdout");

  std::vector<std::string> family_specs{"equal-components:s=64"};
  std::vector<std::size_t> sizes;
  std::size_t bench_d = 3, reps = 5;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd =
      app.add_subcommand("bench", "Time solve across a size grid");
  bench_cmd->add_option("--families", family_specs,
                        "family specs, e.g. equal-components:s=64")
      ->delimiter(',');
  bench_cmd->add_option("--sizes", sizes, "ground set sizes")
      ->delimiter(',');
  bench_cmd->add_option("--d", bench_d, "tuple degree");
  bench_cmd->add_option("--reps", reps, "repetitions per point (median)");
  bench_cmd->add_option("--seed", bench_seed, "random seed");
  bench_cmd->add_option("--out", out_path, "CSV path, default stdout");
  bench_cmd->add_option("--strategy", flags.strategy,
                        "auto, label, or pairwise");
  bench_cmd->add_option("--threshold", flags.threshold,
                        "large-component threshold, an expression over n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(path, flags);
    if (label_cmd->parsed())
      return cmd_label(path);
    if (gen_cmd->parsed()) {
      if (gen_s)
        gen.s = gen_s;
      if (gen_k)
        gen.k = gen_k;
      return cmd_gen(gen, out_path);
    }
    return cmd_bench(family_specs, sizes, bench_d, reps, bench_seed, flags,
                     out_path);
  } catch (const scp::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
