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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qubopt/problems.hpp"
#include "qubopt/sampler.hpp"
#include "qubopt/spectrum.hpp"

namespace qubopt {

/// One coefficient sweep: an instance, a grid of (A, B) points, a sampler
/// budget, and which convergence counts to record.
struct SweepSpec {
  ProblemInstance instance;
  std::vector<std::pair<double, double>> grid;  // (A, B) points in run order
  SaConfig sampler;
  bool count_ground = true;
  bool count_practical = false;  // scheduling instances only
  /// Spin count above which the per-point spectrum (and dynamic range) is
  /// skipped with a warning on stderr. Kept below the enumeration default
  /// because a sweep repeats the enumeration per grid point.
  std::size_t spectrum_cap = 24;
  double ground_tol = 1e-9;
  /// Adds a ground_norm column, ground_count / (n_reads * ground
  /// degeneracy), one normalization among several plausible ones; off by
  /// default and only filled when the spectrum ran.
  bool normalize_by_degeneracy = false;
  /// Default CSV destination ("out" in the JSON spec); a command line --out
  /// takes precedence. Empty means stdout.
  std::string out_path;

  /// Parses the JSON spec: an inline "instance" (or "instance_file" path),
  /// a "grid" given either as explicit "points" or as "A"/"B" axes with
  /// {"value": v} or {"from", "to", "steps", "scale": "linear"|"log"},
  /// an optional "sampler" block, and optional "predicates" such as
  /// ["ground", "practical"].
  static SweepSpec from_json(const std::string& text);
};

struct SweepRecord {
  double A = 0.0;
  double B = 0.0;
  double x_axis = 0.0;  // A for graph problems, term ratio for scheduling
  std::optional<double> dynamic_range;
  std::uint64_t ground_count = 0;
  std::optional<std::uint64_t> practical_count;
  std::uint64_t n_reads = 0;
  std::uint64_t seed = 0;  // per-point seed derived from the master seed
  std::optional<double> ground_norm;  // see normalize_by_degeneracy
};

/// Runs every grid point (parallel across points, deterministic under the
/// master seed) and returns one record per point in grid order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// CSV schema: A,B,x_axis,dynamic_range,ground_count,practical_count,
/// n_reads,seed. Missing optionals are empty fields.
std::string sweep_records_to_csv(const std::vector<SweepRecord>& records);
std::string sweep_records_to_json(const std::vector<SweepRecord>& records);

/// Writes via a temp file + rename so readers never see a partial CSV.
void write_sweep_csv(const std::vector<SweepRecord>& records,
                     const std::string& path);

/// Exponential scaling fit: log p = intercept - alpha * n^beta over the
/// points with p > 0 (zero-probability points are dropped, not clamped).
struct ScalingFit {
  std::vector<std::pair<double, double>> points;  // (n_spins, probability)
  double beta = 1.0;
  double alpha = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of log-space residuals
  std::size_t n_used = 0;
  std::size_t n_dropped = 0;

  std::string to_json() const;
};

/// Least squares in log space; throws std::invalid_argument with fewer than
/// two usable points or a degenerate abscissa.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points,
                       double beta = 1.0);

}  // namespace qubopt
