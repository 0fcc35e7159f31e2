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
#include <vector>

#include "qubopt/model.hpp"
#include "qubopt/pmsp.hpp"

namespace qubopt {

enum class SaSchedule { Geometric, Linear };

/// Simulated annealing configuration. Each read is an independent restart
/// with its own RNG stream derived from (seed, read index), so serial and
/// parallel execution produce identical results.
struct SaConfig {
  std::uint64_t n_reads = 1000;
  std::uint64_t sweeps_per_read = 200;
  /// Unset betas are derived from the model: beta_start = ln 2 / max_i D_i
  /// with D_i the largest possible |energy change| of flipping variable i,
  /// and beta_end = 10 / (typical energy step), where the typical step is
  /// the gcd of the coefficient magnitudes for integer models and the
  /// smallest nonzero magnitude otherwise. This ties the schedule to the
  /// coefficient scale the way hardware auto-gain does, so relative
  /// structure (dynamic range) rather than absolute magnitude drives hit
  /// rates.
  std::optional<double> beta_start;
  std::optional<double> beta_end;
  SaSchedule schedule = SaSchedule::Geometric;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct Sample {
  SpinVector state;
  double energy = 0.0;
  std::uint64_t count = 0;
};

/// Aggregated reads, sorted by (energy, state). Energies are full
/// re-evaluations of the final states against the model.
struct SampleSet {
  std::vector<Sample> samples;
  std::string model_fingerprint;  // fnv1a-64 of the model JSON, hex
  SaConfig config;                // with the resolved beta range echoed back
  VarDomain domain = VarDomain::Binary;

  std::uint64_t total_reads() const;
  double min_energy() const;  // throws std::logic_error when empty

  std::string to_json() const;
};

/// Metropolis single-flip annealing with n_reads independent restarts.
SampleSet sa_sample(const QuboModel& model, const SaConfig& cfg);
SampleSet sa_sample(const IsingModel& model, const SaConfig& cfg);

/// Convergence predicates for counting successful reads: either an energy
/// match within tol of a known ground energy, or the scheduling notion of a
/// usable answer (one-hot assignment at the known minimum makespan, slack
/// bits free).
class ConvergencePredicate {
 public:
  static ConvergencePredicate ground(double e_min, double tol = 0.0);
  /// Throws std::logic_error when inst has no known_min_makespan.
  static ConvergencePredicate practical(PmspInstance inst);

  bool matches(const Sample& sample) const;

 private:
  ConvergencePredicate() = default;
  std::optional<double> e_min_;
  double tol_ = 0.0;
  std::optional<PmspInstance> inst_;
};

/// Number of reads whose final state satisfies the predicate.
std::uint64_t count_convergence(const SampleSet& samples,
                                const ConvergencePredicate& predicate);

/// Narrow adapter seam for plugging in an external sampler (e.g. a real
/// annealer client) out of tree: model JSON plus a read count in, a
/// SampleSet back. No transport lives in this module.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const std::string& model_json,
                           std::uint64_t n_reads) = 0;
};

/// The in-process simulated annealer behind the Sampler seam.
class SaSampler final : public Sampler {
 public:
  explicit SaSampler(SaConfig base) : base_(std::move(base)) {}
  SampleSet sample(const std::string& model_json,
                   std::uint64_t n_reads) override;

 private:
  SaConfig base_;
};

}  // namespace qubopt
