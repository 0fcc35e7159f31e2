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

#include "qubopt/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "adapters.hpp"
#include "detail.hpp"

namespace qubopt {

namespace {

struct BetaRange {
  double start = 0.0;
  double end = 0.0;
};

struct ModelScale {
  double max_flip = 0.0;  // largest possible |delta E| of a single flip
  double min_step = 0.0;  // smallest energy granularity a flip can resolve
};

/// `factor` is the energy change per unit coefficient of one flip (1 for
/// binary variables, 2 for spins). For integer models the granularity is the
/// gcd of the coefficient magnitudes: single coefficients combine, so their
/// minimum overstates the finest energy step (e.g. a makespan term moves in
/// single time units even when every squared-penalty coefficient is larger).
template <typename Adapter>
ModelScale measure_scale(const Adapter& adapter,
                         const std::vector<double>& diag, double factor,
                         bool integral) {
  ModelScale s;
  for (std::size_t i = 0; i < adapter.n; ++i) {
    double reach = std::abs(diag[i]);
    for (std::size_t t = adapter.adj.offsets[i]; t < adapter.adj.offsets[i + 1];
         ++t) {
      reach += std::abs(adapter.adj.entries[t].second);
    }
    s.max_flip = std::max(s.max_flip, reach * factor);
  }
  if (integral) {
    std::uint64_t g = 0;
    auto fold = [&](double c) {
      g = std::gcd(g, static_cast<std::uint64_t>(std::llround(std::abs(c))));
    };
    for (std::size_t i = 0; i < adapter.n; ++i) fold(diag[i]);
    for (const auto& [i, j, c] : adapter.pairs) fold(c);
    s.min_step = static_cast<double>(g) * factor;
  } else {
    for (std::size_t i = 0; i < adapter.n; ++i) {
      const double v = std::abs(diag[i]) * factor;
      if (v > 0.0 && (s.min_step == 0.0 || v < s.min_step)) s.min_step = v;
    }
    for (const auto& [i, j, c] : adapter.pairs) {
      const double v = std::abs(c) * factor;
      if (v > 0.0 && (s.min_step == 0.0 || v < s.min_step)) s.min_step = v;
    }
  }
  return s;
}

BetaRange resolve_betas(const SaConfig& cfg, const ModelScale& scale) {
  BetaRange range;
  // Coefficient-scale defaults: hot enough that the worst single flip is
  // accepted half the time, cold enough that the finest energy step is
  // effectively frozen out (see SaConfig).
  double start = scale.max_flip > 0.0 ? std::log(2.0) / scale.max_flip : 0.1;
  double end = scale.min_step > 0.0 ? 10.0 / scale.min_step : 1.0;
  if (start >= end) start = end / 100.0;
  range.start = cfg.beta_start.value_or(start);
  range.end = cfg.beta_end.value_or(end);
  if (!(range.start > 0.0) || !(range.end > 0.0) ||
      !(range.start < range.end)) {
    throw std::invalid_argument(
        "sa_sample: need 0 < beta_start < beta_end (resolved " +
        detail::format_number(range.start) + " .. " +
        detail::format_number(range.end) + ")");
  }
  return range;
}

double beta_at(const BetaRange& range, SaSchedule schedule, std::uint64_t t,
               std::uint64_t total) {
  if (total <= 1) return range.end;
  const double frac =
      static_cast<double>(t) / static_cast<double>(total - 1);
  if (schedule == SaSchedule::Linear) {
    return range.start + (range.end - range.start) * frac;
  }
  return range.start * std::pow(range.end / range.start, frac);
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename Adapter>
void anneal_read(const Adapter& adapter, const BetaRange& range,
                 const SaConfig& cfg, std::uint64_t read_index,
                 std::vector<std::uint8_t>& bits) {
  std::mt19937_64 rng(detail::splitmix64(
      cfg.seed + 0x9e3779b97f4a7c15ull * (read_index + 1)));
  for (std::size_t i = 0; i < adapter.n; ++i) {
    bits[i] = static_cast<std::uint8_t>(rng() & 1u);
  }
  for (std::uint64_t sweep = 0; sweep < cfg.sweeps_per_read; ++sweep) {
    const double beta = beta_at(range, cfg.schedule, sweep, cfg.sweeps_per_read);
    for (std::size_t i = 0; i < adapter.n; ++i) {
      const double delta = adapter.flip_delta(i, bits.data());
      if (delta <= 0.0 || uniform01(rng) < std::exp(-beta * delta)) {
        bits[i] ^= 1u;
      }
    }
  }
}

template <typename Adapter, typename EnergyFn>
SampleSet run_sampler(const Adapter& adapter, const ModelScale& scale,
                      const SaConfig& cfg, const std::string& model_json,
                      VarDomain domain, EnergyFn final_energy) {
  if (cfg.n_reads < 1) {
    throw std::invalid_argument("sa_sample: n_reads must be >= 1");
  }
  const BetaRange range = resolve_betas(cfg, scale);

  unsigned threads = cfg.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, cfg.n_reads));

  std::vector<std::map<SpinVector, std::uint64_t>> locals(threads);
  auto work = [&](unsigned worker) {
    std::vector<std::uint8_t> bits(adapter.n, 0);
    for (std::uint64_t r = worker; r < cfg.n_reads; r += threads) {
      anneal_read(adapter, range, cfg, r, bits);
      SpinVector state(adapter.n, domain);
      for (std::size_t i = 0; i < adapter.n; ++i) {
        if (bits[i]) state.set_bit(i, true);
      }
      ++locals[worker][state];
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  std::map<SpinVector, std::uint64_t> aggregated;
  for (const auto& local : locals) {
    for (const auto& [state, count] : local) aggregated[state] += count;
  }

  SampleSet out;
  out.domain = domain;
  out.model_fingerprint = [&] {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a64(model_json)));
    return std::string(buf);
  }();
  out.config = cfg;
  out.config.beta_start = range.start;
  out.config.beta_end = range.end;
  out.samples.reserve(aggregated.size());
  for (const auto& [state, count] : aggregated) {
    out.samples.push_back({state, final_energy(state), count});
  }
  std::sort(out.samples.begin(), out.samples.end(),
            [](const Sample& a, const Sample& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return a.state < b.state;
            });
  return out;
}

}  // namespace

SampleSet sa_sample(const QuboModel& model, const SaConfig& cfg) {
  detail::QuboAdapter adapter(model);
  const ModelScale scale =
      measure_scale(adapter, adapter.linear, 1.0, model.is_integral());
  return run_sampler(adapter, scale, cfg, model.to_json(), VarDomain::Binary,
                     [&](const SpinVector& s) { return qubo_energy(model, s); });
}

SampleSet sa_sample(const IsingModel& model, const SaConfig& cfg) {
  detail::IsingAdapter adapter(model);
  // A spin flip moves by twice the local field, hence the factor 2.
  const ModelScale scale =
      measure_scale(adapter, adapter.fields, 2.0, model.is_integral());
  return run_sampler(adapter, scale, cfg, model.to_json(), VarDomain::Spin,
                     [&](const SpinVector& s) { return ising_energy(model, s); });
}

std::uint64_t SampleSet::total_reads() const {
  std::uint64_t total = 0;
  for (const auto& s : samples) total += s.count;
  return total;
}

double SampleSet::min_energy() const {
  if (samples.empty()) throw std::logic_error("SampleSet: empty");
  return samples.front().energy;
}

std::string SampleSet::to_json() const {
  detail::json j;
  detail::json arr = detail::json::array();
  for (const auto& s : samples) {
    arr.push_back({{"state", s.state.to_string()},
                   {"energy", s.energy},
                   {"count", s.count}});
  }
  j["samples"] = std::move(arr);
  detail::json cfg;
  cfg["n_reads"] = config.n_reads;
  cfg["sweeps_per_read"] = config.sweeps_per_read;
  if (config.beta_start) cfg["beta_start"] = *config.beta_start;
  if (config.beta_end) cfg["beta_end"] = *config.beta_end;
  cfg["schedule"] =
      config.schedule == SaSchedule::Geometric ? "geometric" : "linear";
  cfg["seed"] = config.seed;
  cfg["vartype"] = domain == VarDomain::Binary ? "binary" : "spin";
  j["config"] = std::move(cfg);
  j["model_fingerprint"] = model_fingerprint;
  return j.dump();
}

ConvergencePredicate ConvergencePredicate::ground(double e_min, double tol) {
  ConvergencePredicate p;
  p.e_min_ = e_min;
  p.tol_ = tol;
  return p;
}

ConvergencePredicate ConvergencePredicate::practical(PmspInstance inst) {
  if (!inst.known_min_makespan) {
    throw std::logic_error(
        "ConvergencePredicate::practical: instance has no known optimum");
  }
  ConvergencePredicate p;
  p.inst_ = std::move(inst);
  return p;
}

bool ConvergencePredicate::matches(const Sample& sample) const {
  if (e_min_) {
    return std::abs(sample.energy - *e_min_) <= tol_;
  }
  const SpinVector state = sample.state.domain() == VarDomain::Binary
                               ? sample.state
                               : sample.state.as_binary();
  return is_practical_correct(*inst_, state);
}

std::uint64_t count_convergence(const SampleSet& samples,
                                const ConvergencePredicate& predicate) {
  std::uint64_t total = 0;
  for (const auto& s : samples.samples) {
    if (predicate.matches(s)) total += s.count;
  }
  return total;
}

SampleSet SaSampler::sample(const std::string& model_json,
                            std::uint64_t n_reads) {
  SaConfig cfg = base_;
  cfg.n_reads = n_reads;
  AnyModel model = model_from_json(model_json);
  if (const auto* q = std::get_if<QuboModel>(&model)) {
    return sa_sample(*q, cfg);
  }
  return sa_sample(std::get<IsingModel>(model), cfg);
}

}  // namespace qubopt
