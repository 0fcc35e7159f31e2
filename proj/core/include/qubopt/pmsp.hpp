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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qubopt/model.hpp"

namespace qubopt {

/// Identical parallel machine scheduling instance: assign every job to one
/// of n_machines machines so the longest machine finishes earliest. Machine
/// 0 is the designated longest machine in the encoding; slack_bound is the
/// largest allowed load difference between machine 0 and any other machine.
struct PmspInstance {
  std::vector<std::int64_t> jobs;  // positive process times
  std::size_t n_machines = 2;
  std::int64_t slack_bound = 1;  // M >= 2 required by the log slack encoding
  std::optional<std::int64_t> known_min_makespan;

  std::int64_t total_time() const;
  /// Slack bits per non-designated machine: floor(log2(M - 1)) + 1.
  std::size_t slack_bits() const;
  /// Job spins plus slack spins: jobs * machines + (machines - 1) * bits.
  std::size_t n_spins() const;

  std::string to_json() const;
  static PmspInstance from_json(const std::string& text);
};

/// Weights of the two constraint terms; the makespan term itself is fixed
/// at coefficient 1.
struct PmspParams {
  double A = 1.0;  // one-job-one-machine penalty
  double B = 1.0;  // machine-0-is-longest penalty
};

struct PmspSchedule {
  std::vector<std::size_t> assignment;  // job -> machine
  std::vector<std::int64_t> loads;
  std::int64_t makespan = 0;
};

struct PmspDecoded {
  bool onehot_ok = false;
  std::vector<std::int64_t> loads;
  std::int64_t makespan = 0;  // max load; meaningful when onehot_ok
  bool machine1_is_max = false;
  std::vector<std::int64_t> slack_values;  // one per non-designated machine
};

/// Builds a two-machine instance on which longest-processing-time greedy is
/// provably suboptimal: jobs are placed in descending pairs with each pair's
/// longer job going to the currently longer machine, and the final pair must
/// equalize the two loads exactly (throws std::invalid_argument otherwise,
/// or when greedy happens to match the balanced optimum). The instance keeps
/// the job order given by the caller and gets known_min_makespan =
/// total/2.
PmspInstance gen_balanced_instance(const std::vector<std::int64_t>& base_jobs,
                                   std::size_t n_machines,
                                   std::int64_t slack_bound);

/// Prepends an equal pair (c, c), c >= every existing job, re-checking that
/// the greedy gap survives. Used to grow balanced instances for scaling
/// runs.
PmspInstance pad_balanced_instance(const PmspInstance& inst, std::int64_t c);

/// Longest-processing-time list scheduling: repeatedly give the longest
/// remaining job to the least loaded machine (ties: lowest machine index,
/// then lowest job index).
PmspSchedule greedy_schedule(const PmspInstance& inst);

/// Exhaustive minimum makespan; subset scan for two machines, pruned DFS
/// otherwise. Desk scale only (roughly N <= 24).
std::int64_t exact_min_makespan(const PmspInstance& inst);

/// Builds the scheduling QUBO
///   E = sum_i L_i x_{i,0}
///     + A sum_i (1 - sum_a x_{i,a})^2
///     + B sum_{a>0} (M - sum_i L_i (x_{i,0} - x_{i,a}) - sum_n 2^n z_{n,a})^2
/// with one binary slack register per non-designated machine. Variables are
/// laid out job-major (i * m + a) followed by the slack registers, labeled
/// "x[job=..,machine=..]" and "z[n=..,machine=..]" with 1-based machine
/// numbers (machine 1 = designated longest). Throws when slack_bound < 2.
QuboModel build_pmsp_qubo(const PmspInstance& inst, const PmspParams& p);

/// Energy of the state that assigns every job to every machine except the
/// designated one, with all slack bits clear:
///   A N (m-2)^2 + B (m-1) (M + sum_i L_i)^2.
/// This is the spectrum maximum while A is small enough that the
/// one-job-one-machine term does not dominate.
double pmsp_max_energy(const PmspInstance& inst, const PmspParams& p);

/// Ratio of the one-job-one-machine term's standalone maximum to the
/// longest-machine term's: [A N (m-1)^2] / [B (m-1) (M + sum L)^2]. The
/// sweep diagnostic for scheduling problems.
double term_ratio(const PmspInstance& inst, const PmspParams& p);

PmspDecoded decode_pmsp(const PmspInstance& inst, const SpinVector& x);

/// True when the assignment is one-hot and reaches known_min_makespan,
/// regardless of the slack register or which machine carries the maximum.
/// Throws std::logic_error when the instance has no known optimum.
bool is_practical_correct(const PmspInstance& inst, const SpinVector& x);

}  // namespace qubopt
