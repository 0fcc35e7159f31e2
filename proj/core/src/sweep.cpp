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

#include "qubopt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "detail.hpp"

namespace qubopt {

namespace {

std::vector<double> parse_axis(const detail::json& j, const char* name) {
  if (j.contains("value")) {
    return {j["value"].get<double>()};
  }
  const double from = detail::require_key(j, "from", name).get<double>();
  const double to = detail::require_key(j, "to", name).get<double>();
  const auto steps = detail::require_key(j, "steps", name).get<std::size_t>();
  std::string scale = j.value("scale", "linear");
  if (steps < 1) {
    throw std::invalid_argument(std::string(name) + ": steps must be >= 1");
  }
  if (steps == 1) return {from};
  std::vector<double> values;
  values.reserve(steps);
  if (scale == "log") {
    if (from <= 0.0 || to <= 0.0) {
      throw std::invalid_argument(std::string(name) +
                                  ": log scale needs positive endpoints");
    }
    const double ratio = std::pow(to / from, 1.0 / static_cast<double>(steps - 1));
    double v = from;
    for (std::size_t i = 0; i < steps; ++i, v *= ratio) values.push_back(v);
  } else if (scale == "linear") {
    const double step = (to - from) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
      values.push_back(from + static_cast<double>(i) * step);
    }
  } else {
    throw std::invalid_argument(std::string(name) + ": unknown scale \"" +
                                scale + "\"");
  }
  return values;
}

SaConfig parse_sampler(const detail::json& j) {
  SaConfig cfg;
  if (j.contains("n_reads")) cfg.n_reads = j["n_reads"].get<std::uint64_t>();
  if (j.contains("sweeps_per_read")) {
    cfg.sweeps_per_read = j["sweeps_per_read"].get<std::uint64_t>();
  }
  if (j.contains("beta_start")) cfg.beta_start = j["beta_start"].get<double>();
  if (j.contains("beta_end")) cfg.beta_end = j["beta_end"].get<double>();
  if (j.contains("schedule")) {
    const std::string s = j["schedule"].get<std::string>();
    if (s == "geometric") {
      cfg.schedule = SaSchedule::Geometric;
    } else if (s == "linear") {
      cfg.schedule = SaSchedule::Linear;
    } else {
      throw std::invalid_argument("sampler: unknown schedule \"" + s + "\"");
    }
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SweepSpec SweepSpec::from_json(const std::string& text) {
  detail::json j = detail::parse_json(text, "SweepSpec");
  SweepSpec spec;
  if (j.contains("instance")) {
    spec.instance = parse_instance_json(j["instance"].dump());
  } else if (j.contains("instance_file")) {
    spec.instance =
        parse_instance_json(read_file(j["instance_file"].get<std::string>()));
  } else {
    throw std::invalid_argument(
        "SweepSpec: need \"instance\" or \"instance_file\"");
  }

  const detail::json& grid = detail::require_key(j, "grid", "SweepSpec");
  if (grid.contains("points")) {
    for (const auto& p : grid["points"]) {
      spec.grid.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
  } else {
    const auto a_values =
        parse_axis(detail::require_key(grid, "A", "SweepSpec grid"), "grid.A");
    const auto b_values =
        parse_axis(detail::require_key(grid, "B", "SweepSpec grid"), "grid.B");
    for (double a : a_values) {
      for (double b : b_values) spec.grid.emplace_back(a, b);
    }
  }
  if (spec.grid.empty()) {
    throw std::invalid_argument("SweepSpec: empty parameter grid");
  }

  if (j.contains("sampler")) spec.sampler = parse_sampler(j["sampler"]);
  if (j.contains("predicates")) {
    spec.count_ground = false;
    spec.count_practical = false;
    for (const auto& p : j["predicates"]) {
      const std::string name = p.get<std::string>();
      if (name == "ground") {
        spec.count_ground = true;
      } else if (name == "practical") {
        spec.count_practical = true;
      } else {
        throw std::invalid_argument("SweepSpec: unknown predicate \"" + name +
                                    "\"");
      }
    }
  } else {
    spec.count_practical =
        std::holds_alternative<PmspInstance>(spec.instance);
  }
  if (spec.count_practical &&
      !std::holds_alternative<PmspInstance>(spec.instance)) {
    throw std::invalid_argument(
        "SweepSpec: the practical predicate applies to scheduling instances");
  }
  if (j.contains("spectrum_cap")) {
    spec.spectrum_cap = j["spectrum_cap"].get<std::size_t>();
  }
  if (j.contains("ground_tol")) spec.ground_tol = j["ground_tol"].get<double>();
  if (j.contains("normalize_by_degeneracy")) {
    spec.normalize_by_degeneracy = j["normalize_by_degeneracy"].get<bool>();
  }
  if (j.contains("out")) spec.out_path = j["out"].get<std::string>();
  return spec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  if (spec.grid.empty()) {
    throw std::invalid_argument("run_sweep: empty parameter grid");
  }
  const std::size_t n_vars = problem_n_vars(spec.instance);
  const bool spectrum_feasible = n_vars <= spec.spectrum_cap;
  if (!spectrum_feasible) {
    std::fprintf(stderr,
                 "warning: %zu spins exceed the sweep spectrum cap of %zu; "
                 "dynamic_range will be empty\n",
                 n_vars, spec.spectrum_cap);
  }
  std::optional<double> fallback_ground = known_ground_energy(spec.instance);
  if (spec.count_ground && !spectrum_feasible && !fallback_ground) {
    throw std::logic_error(
        "run_sweep: ground counting needs either a feasible spectrum or an "
        "instance with a known optimum");
  }

  const auto* pmsp = std::get_if<PmspInstance>(&spec.instance);
  if (spec.count_practical && pmsp == nullptr) {
    throw std::logic_error("run_sweep: practical counting needs a scheduling "
                           "instance");
  }

  std::vector<SweepRecord> records(spec.grid.size());
  std::atomic<std::size_t> next_point{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    while (true) {
      const std::size_t idx = next_point.fetch_add(1);
      if (idx >= spec.grid.size()) break;
      try {
        const auto [A, B] = spec.grid[idx];
        SweepRecord rec;
        rec.A = A;
        rec.B = B;
        rec.x_axis = sweep_x_axis(spec.instance, A, B);
        rec.seed = detail::splitmix64(spec.sampler.seed ^
                                      (0xa24baed4963ee407ull + idx));
        QuboModel model = build_problem_qubo(spec.instance, A, B);

        std::optional<double> e_min = fallback_ground;
        std::optional<std::uint64_t> ground_degeneracy;
        if (spectrum_feasible) {
          EnumerationLimits limits;
          limits.max_spins = spec.spectrum_cap;
          limits.threads = 1;  // grid points already run in parallel
          SpectrumReport report = enumerate_spectrum(model, limits);
          rec.dynamic_range = report.dynamic_range;
          e_min = report.e_min;
          ground_degeneracy = report.ground_count;
        }

        SaConfig cfg = spec.sampler;
        cfg.seed = rec.seed;
        cfg.threads = 1;
        SampleSet samples = sa_sample(model, cfg);
        rec.n_reads = cfg.n_reads;
        if (spec.count_ground) {
          rec.ground_count = count_convergence(
              samples,
              ConvergencePredicate::ground(*e_min, spec.ground_tol));
          if (spec.normalize_by_degeneracy && ground_degeneracy) {
            rec.ground_norm =
                static_cast<double>(rec.ground_count) /
                (static_cast<double>(cfg.n_reads) *
                 static_cast<double>(*ground_degeneracy));
          }
        }
        if (spec.count_practical) {
          rec.practical_count = count_convergence(
              samples, ConvergencePredicate::practical(*pmsp));
        }
        records[idx] = rec;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned threads = spec.sampler.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads =
      static_cast<unsigned>(std::min<std::size_t>(threads, spec.grid.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

std::string sweep_records_to_csv(const std::vector<SweepRecord>& records) {
  const bool with_norm =
      std::any_of(records.begin(), records.end(),
                  [](const SweepRecord& r) { return r.ground_norm.has_value(); });
  std::string out =
      "A,B,x_axis,dynamic_range,ground_count,practical_count,n_reads,seed";
  if (with_norm) out += ",ground_norm";
  out += '\n';
  for (const auto& r : records) {
    out += detail::format_number(r.A);
    out += ',';
    out += detail::format_number(r.B);
    out += ',';
    out += detail::format_number(r.x_axis);
    out += ',';
    if (r.dynamic_range) out += detail::format_number(*r.dynamic_range);
    out += ',';
    out += std::to_string(r.ground_count);
    out += ',';
    if (r.practical_count) out += std::to_string(*r.practical_count);
    out += ',';
    out += std::to_string(r.n_reads);
    out += ',';
    out += std::to_string(r.seed);
    if (with_norm) {
      out += ',';
      if (r.ground_norm) out += detail::format_number(*r.ground_norm);
    }
    out += '\n';
  }
  return out;
}

std::string sweep_records_to_json(const std::vector<SweepRecord>& records) {
  detail::json arr = detail::json::array();
  for (const auto& r : records) {
    detail::json j;
    j["A"] = r.A;
    j["B"] = r.B;
    j["x_axis"] = r.x_axis;
    if (r.dynamic_range) {
      j["dynamic_range"] = *r.dynamic_range;
    } else {
      j["dynamic_range"] = nullptr;
    }
    j["ground_count"] = r.ground_count;
    if (r.practical_count) {
      j["practical_count"] = *r.practical_count;
    } else {
      j["practical_count"] = nullptr;
    }
    j["n_reads"] = r.n_reads;
    j["seed"] = r.seed;
    if (r.ground_norm) j["ground_norm"] = *r.ground_norm;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

void write_sweep_csv(const std::vector<SweepRecord>& records,
                     const std::string& path) {
  detail::write_file_atomic(path, sweep_records_to_csv(records));
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points,
                       double beta) {
  ScalingFit fit;
  fit.points = points;
  fit.beta = beta;
  std::vector<std::pair<double, double>> usable;  // (n^beta, log p)
  for (const auto& [n, p] : points) {
    if (p > 0.0) {
      usable.emplace_back(std::pow(n, beta), std::log(p));
    } else {
      ++fit.n_dropped;
    }
  }
  fit.n_used = usable.size();
  if (usable.size() < 2) {
    throw std::invalid_argument(
        "fit_scaling: need at least two points with positive probability");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : usable) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(usable.size());
  mean_y /= static_cast<double>(usable.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : usable) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_scaling: degenerate abscissa");
  }
  const double slope = sxy / sxx;
  fit.alpha = -slope;
  fit.intercept = mean_y - slope * mean_x;
  double ss = 0.0;
  for (const auto& [x, y] : usable) {
    const double r = y - (fit.intercept + slope * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(usable.size()));
  return fit;
}

std::string ScalingFit::to_json() const {
  detail::json j;
  detail::json pts = detail::json::array();
  for (const auto& [n, p] : points) pts.push_back({n, p});
  j["points"] = std::move(pts);
  j["beta"] = beta;
  j["alpha"] = alpha;
  j["intercept"] = intercept;
  j["residual"] = residual;
  j["n_used"] = n_used;
  j["n_dropped"] = n_dropped;
  return j.dump();
}

}  // namespace qubopt
