// Copyright 2026 The qubopt authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qubopt/polarity.hpp"
#include "qubopt/problems.hpp"
#include "qubopt/sampler.hpp"
#include "qubopt/spectrum.hpp"
#include "qubopt/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;  // "", "csv" or "json"
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const GlobalOpts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + opts.out);
  out << content;
}

void require_format(const GlobalOpts& opts,
                    const std::vector<std::string>& allowed) {
  if (opts.format.empty()) return;
  for (const auto& f : allowed) {
    if (opts.format == f) return;
  }
  throw CLI::ValidationError("--format",
                             "format \"" + opts.format +
                                 "\" is not supported by this subcommand");
}

qubopt::SaConfig sampler_from_cli(std::uint64_t reads, std::uint64_t sweeps,
                                  std::optional<double> beta_start,
                                  std::optional<double> beta_end,
                                  const std::string& schedule,
                                  std::uint64_t seed) {
  qubopt::SaConfig cfg;
  cfg.n_reads = reads;
  cfg.sweeps_per_read = sweeps;
  cfg.beta_start = beta_start;
  cfg.beta_end = beta_end;
  if (schedule == "linear") {
    cfg.schedule = qubopt::SaSchedule::Linear;
  } else if (schedule == "geometric") {
    cfg.schedule = qubopt::SaSchedule::Geometric;
  } else {
    throw CLI::ValidationError("--schedule", "must be geometric or linear");
  }
  cfg.seed = seed;
  return cfg;
}

std::vector<std::pair<double, double>> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::pair<double, double>> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("fit points: expected \"n,probability\" rows");
    }
    try {
      points.emplace_back(std::stod(line.substr(0, comma)),
                          std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      if (points.empty()) continue;  // header row
      throw std::runtime_error("fit points: bad row \"" + line + "\"");
    }
  }
  return points;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "QUBO construction, exact spectrum analysis and annealing sweeps for "
      "graph coloring, clique vertex cover and two-machine scheduling"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "Override the sampler seed");
  app.add_option("--out", opts.out, "Write machine output to a file");
  app.add_option("--format", opts.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));

  // gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a known-answer instance");
  gen->require_subcommand(1);

  std::size_t gen_nodes = 6;
  std::size_t gen_colors = 3;
  auto* gen_gcp =
      gen->add_subcommand("gcp", "Complete k-partite coloring instance");
  gen_gcp->add_option("--nodes", gen_nodes, "Node count")->required();
  gen_gcp->add_option("--colors", gen_colors, "Color count (divides nodes)")
      ->required();

  std::vector<std::size_t> gen_sizes;
  std::size_t gen_cvcp_colors = 0;
  auto* gen_cvcp =
      gen->add_subcommand("cvcp", "Bridged clique union cover instance");
  gen_cvcp->add_option("--sizes", gen_sizes, "Clique sizes (e.g. 3,3,4)")
      ->required()
      ->delimiter(',');
  gen_cvcp->add_option("--colors", gen_cvcp_colors,
                       "Color count (default: one per clique)");

  std::vector<std::int64_t> gen_jobs;
  std::int64_t gen_bound = 3;
  std::size_t gen_machines = 2;
  auto* gen_pmsp = gen->add_subcommand(
      "pmsp", "Balanced two-machine scheduling instance that greedy misses");
  gen_pmsp->add_option("--jobs", gen_jobs, "Job process times (e.g. 7,6,5,4,3,1)")
      ->required()
      ->delimiter(',');
  gen_pmsp->add_option("--slack-bound", gen_bound,
                       "Largest allowed machine load difference M")
      ->required();
  gen_pmsp->add_option("--machines", gen_machines, "Machine count (only 2)");

  // qubo ------------------------------------------------------------------
  auto* qubo = app.add_subcommand("qubo", "Build a problem QUBO from an instance");
  qubo->require_subcommand(1);
  struct QuboArgs {
    std::string file;
    double A = 1.0;
    double B = 1.0;
  };
  QuboArgs qubo_args;
  for (const char* name : {"gcp", "cvcp", "pmsp"}) {
    auto* sub = qubo->add_subcommand(name, std::string("Build the ") + name +
                                               " encoding");
    sub->add_option("--file", qubo_args.file, "Instance JSON file")->required();
    sub->add_option("--A", qubo_args.A, "First penalty weight")->required();
    sub->add_option("--B", qubo_args.B, "Second penalty weight")->required();
  }

  // spectrum ----------------------------------------------------------------
  std::string spectrum_model;
  std::size_t spectrum_cap = 28;
  std::size_t spectrum_ground_cap = 1024;
  std::string spectrum_hist;
  double spectrum_bin_width = 0.0;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Enumerate all states of a model exactly");
  spectrum_cmd->add_option("--model", spectrum_model, "Model JSON file")
      ->required();
  spectrum_cmd->add_option("--max-spins", spectrum_cap, "Enumeration cap");
  spectrum_cmd->add_option("--max-ground", spectrum_ground_cap,
                           "Stored ground states cap");
  spectrum_cmd->add_option("--hist", spectrum_hist,
                           "Also write the histogram CSV to this path");
  spectrum_cmd->add_option("--bin-width", spectrum_bin_width,
                           "Fixed histogram bin width (default: exact bins)");

  // sample ------------------------------------------------------------------
  std::string sample_model;
  std::uint64_t sample_reads = 1000;
  std::uint64_t sample_sweeps = 200;
  std::optional<double> sample_beta_start;
  std::optional<double> sample_beta_end;
  std::string sample_schedule = "geometric";
  std::uint64_t sample_seed = 0;
  auto* sample_cmd =
      app.add_subcommand("sample", "Run the simulated annealing sampler");
  sample_cmd->add_option("--model", sample_model, "Model JSON file")->required();
  sample_cmd->add_option("--reads", sample_reads, "Independent anneal reads");
  sample_cmd->add_option("--sweeps", sample_sweeps, "Sweeps per read");
  sample_cmd->add_option("--beta-start", sample_beta_start,
                         "Starting inverse temperature");
  sample_cmd->add_option("--beta-end", sample_beta_end,
                         "Final inverse temperature");
  sample_cmd->add_option("--schedule", sample_schedule,
                         "geometric or linear");
  sample_cmd->add_option("--sample-seed", sample_seed, "Sampler seed");

  // sweep -------------------------------------------------------------------
  std::string sweep_config;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run a coefficient sweep with convergence counting");
  sweep_cmd->add_option("--config", sweep_config, "SweepSpec JSON file")
      ->required();

  // fit ---------------------------------------------------------------------
  std::string fit_points;
  double fit_beta = 1.0;
  auto* fit_cmd = app.add_subcommand(
      "fit", "Fit log(probability) = intercept - alpha * n^beta");
  fit_cmd->add_option("--points", fit_points,
                      "CSV file with n_spins,probability rows")
      ->required();
  fit_cmd->add_option("--beta", fit_beta, "Fixed exponent");

  // onehot ------------------------------------------------------------------
  std::size_t onehot_spins = 0;
  std::size_t onehot_k = 1;
  double onehot_scale = 1.0;
  auto* onehot_cmd = app.add_subcommand(
      "onehot", "Emit the k-positive polarity Ising coefficients");
  onehot_cmd->add_option("--spins", onehot_spins, "Group size")->required();
  onehot_cmd->add_option("--k-target", onehot_k, "Preferred positive count");
  onehot_cmd->add_option("--scale", onehot_scale, "Coupling scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    using namespace qubopt;

    if (gen_gcp->parsed()) {
      emit(opts, gen_complete_kpartite(gen_nodes, gen_colors).to_json());
    } else if (gen_cvcp->parsed()) {
      emit(opts, gen_clique_union(gen_sizes, gen_cvcp_colors).to_json());
    } else if (gen_pmsp->parsed()) {
      emit(opts,
           gen_balanced_instance(gen_jobs, gen_machines, gen_bound).to_json());
    } else if (qubo->parsed()) {
      require_format(opts, {"json"});
      ProblemInstance inst = parse_instance_json(read_file(qubo_args.file));
      const std::string requested =
          qubo->get_subcommands().front()->get_name();
      if (instance_type(inst) != requested) {
        throw std::runtime_error("instance file has type \"" +
                                 instance_type(inst) + "\", not \"" +
                                 requested + "\"");
      }
      emit(opts,
           build_problem_qubo(inst, qubo_args.A, qubo_args.B).to_json());
    } else if (spectrum_cmd->parsed()) {
      require_format(opts, {"csv", "json"});
      AnyModel model = model_from_json(read_file(spectrum_model));
      EnumerationLimits limits;
      limits.max_spins = spectrum_cap;
      limits.max_ground_states = spectrum_ground_cap;
      SpectrumReport report = std::visit(
          [&](const auto& m) { return enumerate_spectrum(m, limits); }, model);
      const HistogramBinning binning = spectrum_bin_width > 0.0
                                           ? HistogramBinning::FixedWidth
                                           : HistogramBinning::Exact;
      if (!spectrum_hist.empty()) {
        std::ofstream hist(spectrum_hist, std::ios::binary | std::ios::trunc);
        if (!hist) throw std::runtime_error("cannot write " + spectrum_hist);
        hist << histogram_export(report, binning, spectrum_bin_width);
      }
      if (opts.format == "csv") {
        emit(opts, histogram_export(report, binning, spectrum_bin_width));
      } else {
        emit(opts, report.to_json());
      }
    } else if (sample_cmd->parsed()) {
      require_format(opts, {"json"});
      AnyModel model = model_from_json(read_file(sample_model));
      SaConfig cfg = sampler_from_cli(sample_reads, sample_sweeps,
                                      sample_beta_start, sample_beta_end,
                                      sample_schedule, sample_seed);
      if (opts.seed) cfg.seed = *opts.seed;
      SampleSet set = std::visit(
          [&](const auto& m) { return sa_sample(m, cfg); }, model);
      emit(opts, set.to_json());
    } else if (sweep_cmd->parsed()) {
      require_format(opts, {"csv", "json"});
      SweepSpec spec = SweepSpec::from_json(read_file(sweep_config));
      if (opts.seed) spec.sampler.seed = *opts.seed;
      if (opts.out.empty()) opts.out = spec.out_path;
      auto records = run_sweep(spec);
      if (opts.format == "json") {
        emit(opts, sweep_records_to_json(records));
      } else if (opts.out.empty()) {
        std::cout << sweep_records_to_csv(records);
      } else {
        write_sweep_csv(records, opts.out);
      }
    } else if (fit_cmd->parsed()) {
      require_format(opts, {"json"});
      emit(opts, fit_scaling(read_points_csv(fit_points), fit_beta).to_json());
    } else if (onehot_cmd->parsed()) {
      require_format(opts, {"json"});
      emit(opts,
           one_hot_ising({onehot_spins, onehot_k, onehot_scale}).to_json());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
