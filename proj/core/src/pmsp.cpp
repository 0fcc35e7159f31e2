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

#include "qubopt/pmsp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "detail.hpp"

namespace qubopt {

namespace {

void check_instance(const PmspInstance& inst, const char* what) {
  if (inst.jobs.empty()) {
    throw std::invalid_argument(std::string(what) + ": no jobs");
  }
  for (std::int64_t L : inst.jobs) {
    if (L <= 0) {
      throw std::invalid_argument(std::string(what) +
                                  ": process times must be positive");
    }
  }
  if (inst.n_machines < 2) {
    throw std::invalid_argument(std::string(what) + ": need >= 2 machines");
  }
}

/// Jobs sorted by (length desc, index asc).
std::vector<std::size_t> lpt_order(const std::vector<std::int64_t>& jobs) {
  std::vector<std::size_t> order(jobs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return jobs[a] > jobs[b];
  });
  return order;
}

}  // namespace

std::int64_t PmspInstance::total_time() const {
  return std::accumulate(jobs.begin(), jobs.end(), std::int64_t{0});
}

std::size_t PmspInstance::slack_bits() const {
  if (slack_bound < 2) {
    throw std::invalid_argument(
        "PmspInstance: slack_bound must be >= 2 for the log encoding");
  }
  return std::bit_width(static_cast<std::uint64_t>(slack_bound - 1));
}

std::size_t PmspInstance::n_spins() const {
  return jobs.size() * n_machines + (n_machines - 1) * slack_bits();
}

PmspInstance gen_balanced_instance(const std::vector<std::int64_t>& base_jobs,
                                   std::size_t n_machines,
                                   std::int64_t slack_bound) {
  if (n_machines != 2) {
    throw std::invalid_argument(
        "gen_balanced_instance: construction is defined for 2 machines");
  }
  if (base_jobs.size() < 4 || base_jobs.size() % 2 != 0) {
    throw std::invalid_argument(
        "gen_balanced_instance: need an even job count >= 4");
  }
  PmspInstance inst;
  inst.jobs = base_jobs;
  inst.n_machines = 2;
  inst.slack_bound = slack_bound;
  check_instance(inst, "gen_balanced_instance");
  (void)inst.slack_bits();  // validates slack_bound

  // Place descending pairs, longer job onto the currently longer machine;
  // the final pair has to even the two loads out exactly.
  std::vector<std::int64_t> sorted = base_jobs;
  std::sort(sorted.rbegin(), sorted.rend());
  std::int64_t longer = 0;
  std::int64_t shorter = 0;
  for (std::size_t r = 0; r + 2 < sorted.size(); r += 2) {
    longer += sorted[r];
    shorter += sorted[r + 1];
    if (longer < shorter) std::swap(longer, shorter);
  }
  const std::int64_t a = sorted[sorted.size() - 2];
  const std::int64_t b = sorted[sorted.size() - 1];
  if (shorter + a != longer + b) {
    throw std::invalid_argument(
        "gen_balanced_instance: final job pair cannot equalize the machines");
  }
  const std::int64_t total = inst.total_time();
  inst.known_min_makespan = total / 2;

  if (greedy_schedule(inst).makespan <= total / 2) {
    throw std::invalid_argument(
        "gen_balanced_instance: greedy solves this job list; not a hard "
        "instance");
  }
  return inst;
}

PmspInstance pad_balanced_instance(const PmspInstance& inst, std::int64_t c) {
  if (c < *std::max_element(inst.jobs.begin(), inst.jobs.end())) {
    throw std::invalid_argument(
        "pad_balanced_instance: pad jobs must be at least the longest job");
  }
  std::vector<std::int64_t> jobs;
  jobs.reserve(inst.jobs.size() + 2);
  jobs.push_back(c);
  jobs.push_back(c);
  jobs.insert(jobs.end(), inst.jobs.begin(), inst.jobs.end());
  return gen_balanced_instance(jobs, inst.n_machines, inst.slack_bound);
}

PmspSchedule greedy_schedule(const PmspInstance& inst) {
  check_instance(inst, "greedy_schedule");
  PmspSchedule out;
  out.assignment.assign(inst.jobs.size(), 0);
  out.loads.assign(inst.n_machines, 0);
  for (std::size_t job : lpt_order(inst.jobs)) {
    std::size_t target = 0;
    for (std::size_t m = 1; m < inst.n_machines; ++m) {
      if (out.loads[m] < out.loads[target]) target = m;
    }
    out.assignment[job] = target;
    out.loads[target] += inst.jobs[job];
  }
  out.makespan = *std::max_element(out.loads.begin(), out.loads.end());
  return out;
}

std::int64_t exact_min_makespan(const PmspInstance& inst) {
  check_instance(inst, "exact_min_makespan");
  const std::size_t n = inst.jobs.size();
  const std::int64_t total = inst.total_time();
  if (inst.n_machines == 2) {
    if (n > 30) {
      throw std::invalid_argument("exact_min_makespan: instance too large");
    }
    // Job 0 stays on machine 0; scan the remaining subsets.
    std::int64_t best = total;
    const std::uint64_t limit = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      std::int64_t load0 = inst.jobs[0];
      for (std::size_t i = 1; i < n; ++i) {
        if (mask & (1ull << (i - 1))) load0 += inst.jobs[i];
      }
      best = std::min(best, std::max(load0, total - load0));
    }
    return best;
  }
  if (n > 16) {
    throw std::invalid_argument("exact_min_makespan: instance too large");
  }
  std::vector<std::size_t> order = lpt_order(inst.jobs);
  std::vector<std::int64_t> loads(inst.n_machines, 0);
  std::int64_t best = total;
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      best = std::min(best, *std::max_element(loads.begin(), loads.end()));
      return;
    }
    const std::int64_t L = inst.jobs[order[depth]];
    std::int64_t seen_empty = 0;
    for (std::size_t m = 0; m < inst.n_machines; ++m) {
      if (loads[m] == 0) {
        if (++seen_empty > 1) break;  // empty machines are interchangeable
      }
      if (loads[m] + L >= best) continue;
      loads[m] += L;
      self(self, depth + 1);
      loads[m] -= L;
    }
  };
  dfs(dfs, 0);
  return best;
}

QuboModel build_pmsp_qubo(const PmspInstance& inst, const PmspParams& p) {
  check_instance(inst, "build_pmsp_qubo");
  const std::size_t n = inst.jobs.size();
  const std::size_t m = inst.n_machines;
  const std::size_t bits = inst.slack_bits();
  QuboModel model(inst.n_spins());

  auto job_var = [m](std::size_t i, std::size_t a) { return i * m + a; };
  auto slack_var = [n, m, bits](std::size_t a, std::size_t bit) {
    return n * m + (a - 1) * bits + bit;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      model.set_label(job_var(i, a), "x[job=" + std::to_string(i) +
                                         ",machine=" + std::to_string(a + 1) +
                                         "]");
    }
  }
  for (std::size_t a = 1; a < m; ++a) {
    for (std::size_t bit = 0; bit < bits; ++bit) {
      model.set_label(slack_var(a, bit), "z[n=" + std::to_string(bit) +
                                             ",machine=" +
                                             std::to_string(a + 1) + "]");
    }
  }

  // Makespan term: load of the designated machine.
  for (std::size_t i = 0; i < n; ++i) {
    model.add_linear(job_var(i, 0), static_cast<double>(inst.jobs[i]));
  }

  // One machine per job: A (1 - sum_a x_{i,a})^2.
  for (std::size_t i = 0; i < n; ++i) {
    model.add_offset(p.A);
    for (std::size_t a = 0; a < m; ++a) {
      model.add_linear(job_var(i, a), -p.A);
      for (std::size_t b = a + 1; b < m; ++b) {
        model.add_quadratic(job_var(i, a), job_var(i, b), 2.0 * p.A);
      }
    }
  }

  // Designated machine carries the maximum load, per other machine a:
  //   B (M - sum_i L_i (x_{i,0} - x_{i,a}) - sum_n 2^n z_{n,a})^2.
  // Expand (c0 + sum_t w_t v_t)^2 with v^2 = v.
  std::vector<std::pair<std::size_t, double>> terms;
  for (std::size_t a = 1; a < m; ++a) {
    terms.clear();
    for (std::size_t i = 0; i < n; ++i) {
      terms.emplace_back(job_var(i, 0), -static_cast<double>(inst.jobs[i]));
      terms.emplace_back(job_var(i, a), static_cast<double>(inst.jobs[i]));
    }
    for (std::size_t bit = 0; bit < bits; ++bit) {
      terms.emplace_back(slack_var(a, bit),
                         -static_cast<double>(std::int64_t{1} << bit));
    }
    const double c0 = static_cast<double>(inst.slack_bound);
    model.add_offset(p.B * c0 * c0);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& [vt, wt] = terms[t];
      model.add_linear(vt, p.B * (2.0 * c0 * wt + wt * wt));
      for (std::size_t u = t + 1; u < terms.size(); ++u) {
        const auto& [vu, wu] = terms[u];
        model.add_quadratic(vt, vu, p.B * 2.0 * wt * wu);
      }
    }
  }
  return model;
}

double pmsp_max_energy(const PmspInstance& inst, const PmspParams& p) {
  check_instance(inst, "pmsp_max_energy");
  const double n = static_cast<double>(inst.jobs.size());
  const double m = static_cast<double>(inst.n_machines);
  const double reach =
      static_cast<double>(inst.slack_bound) + static_cast<double>(inst.total_time());
  return p.A * n * (m - 2.0) * (m - 2.0) + p.B * (m - 1.0) * reach * reach;
}

double term_ratio(const PmspInstance& inst, const PmspParams& p) {
  check_instance(inst, "term_ratio");
  const double n = static_cast<double>(inst.jobs.size());
  const double m = static_cast<double>(inst.n_machines);
  const double reach =
      static_cast<double>(inst.slack_bound) + static_cast<double>(inst.total_time());
  return (p.A * n * (m - 1.0) * (m - 1.0)) /
         (p.B * (m - 1.0) * reach * reach);
}

PmspDecoded decode_pmsp(const PmspInstance& inst, const SpinVector& x) {
  check_instance(inst, "decode_pmsp");
  const std::size_t n = inst.jobs.size();
  const std::size_t m = inst.n_machines;
  const std::size_t bits = inst.slack_bits();
  if (x.size() != inst.n_spins()) {
    throw std::invalid_argument("decode_pmsp: assignment length mismatch");
  }
  PmspDecoded out;
  out.onehot_ok = true;
  out.loads.assign(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (x.bit(i * m + a)) {
        ++count;
        out.loads[a] += inst.jobs[i];
      }
    }
    if (count != 1) out.onehot_ok = false;
  }
  out.makespan = *std::max_element(out.loads.begin(), out.loads.end());
  out.machine1_is_max = out.loads[0] == out.makespan;
  out.slack_values.assign(m - 1, 0);
  for (std::size_t a = 1; a < m; ++a) {
    for (std::size_t bit = 0; bit < bits; ++bit) {
      if (x.bit(n * m + (a - 1) * bits + bit)) {
        out.slack_values[a - 1] += std::int64_t{1} << bit;
      }
    }
  }
  return out;
}

bool is_practical_correct(const PmspInstance& inst, const SpinVector& x) {
  if (!inst.known_min_makespan) {
    throw std::logic_error(
        "is_practical_correct: instance has no known_min_makespan");
  }
  PmspDecoded d = decode_pmsp(inst, x);
  return d.onehot_ok && d.makespan == *inst.known_min_makespan;
}

std::string PmspInstance::to_json() const {
  detail::json j;
  j["type"] = "pmsp";
  j["jobs"] = jobs;
  j["m"] = n_machines;
  j["M"] = slack_bound;
  if (known_min_makespan) j["known_min_makespan"] = *known_min_makespan;
  return j.dump();
}

PmspInstance PmspInstance::from_json(const std::string& text) {
  detail::json j = detail::parse_json(text, "PmspInstance");
  if (detail::require_key(j, "type", "PmspInstance") != "pmsp") {
    throw std::invalid_argument("PmspInstance: type is not \"pmsp\"");
  }
  PmspInstance inst;
  inst.jobs = detail::require_key(j, "jobs", "PmspInstance")
                  .get<std::vector<std::int64_t>>();
  inst.n_machines = detail::require_key(j, "m", "PmspInstance").get<std::size_t>();
  inst.slack_bound = detail::require_key(j, "M", "PmspInstance").get<std::int64_t>();
  if (j.contains("known_min_makespan")) {
    inst.known_min_makespan = j["known_min_makespan"].get<std::int64_t>();
  }
  check_instance(inst, "PmspInstance::from_json");
  return inst;
}

}  // namespace qubopt
