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

// Test-only reference evaluators. These compute the three problem
// Hamiltonians term by term straight from the instance data, and spectra by
// plain per-state evaluation, so they share no code path with the builders
// or the incremental enumerator they check.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qubopt/cvcp.hpp"
#include "qubopt/gcp.hpp"
#include "qubopt/model.hpp"
#include "qubopt/pmsp.hpp"

namespace qubopt::oracles {

/// A sum_v (1 - sum_i x_{v,i})^2 + B sum_{(u,v) in E} sum_i x_{u,i} x_{v,i}
inline double eval_gcp(const GcpInstance& inst, double A, double B,
                       const SpinVector& x) {
  const std::size_t k = inst.k_colors;
  double h = 0.0;
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += x.bit(v * k + i) ? 1.0 : 0.0;
    h += A * (1.0 - s) * (1.0 - s);
  }
  for (const auto& [u, v] : inst.edges) {
    for (std::size_t i = 0; i < k; ++i) {
      if (x.bit(u * k + i) && x.bit(v * k + i)) h += B;
    }
  }
  return h;
}

/// A sum_v (1 - sum_i x_{v,i})^2
/// + B sum_i [ (-1 + S_i) S_i / 2 - sum_{(u,v) in E} x_{u,i} x_{v,i} ]
inline double eval_cvcp(const CvcpInstance& inst, double A, double B,
                        const SpinVector& x) {
  const std::size_t k = inst.n_cliques;
  double h = 0.0;
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += x.bit(v * k + i) ? 1.0 : 0.0;
    h += A * (1.0 - s) * (1.0 - s);
  }
  for (std::size_t i = 0; i < k; ++i) {
    double s = 0.0;
    for (std::size_t v = 0; v < inst.n_nodes; ++v) {
      s += x.bit(v * k + i) ? 1.0 : 0.0;
    }
    double term = 0.5 * (-1.0 + s) * s;
    for (const auto& [u, v] : inst.edges) {
      if (x.bit(u * k + i) && x.bit(v * k + i)) term -= 1.0;
    }
    h += B * term;
  }
  return h;
}

/// sum_i L_i x_{i,0} + A sum_i (1 - sum_a x_{i,a})^2
/// + B sum_{a>0} (M - sum_i L_i (x_{i,0} - x_{i,a}) - sum_n 2^n z_{n,a})^2
inline double eval_pmsp(const PmspInstance& inst, double A, double B,
                        const SpinVector& x) {
  const std::size_t n = inst.jobs.size();
  const std::size_t m = inst.n_machines;
  const std::size_t bits = inst.slack_bits();
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x.bit(i * m)) h += static_cast<double>(inst.jobs[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t a = 0; a < m; ++a) s += x.bit(i * m + a) ? 1.0 : 0.0;
    h += A * (1.0 - s) * (1.0 - s);
  }
  for (std::size_t a = 1; a < m; ++a) {
    double inner = static_cast<double>(inst.slack_bound);
    for (std::size_t i = 0; i < n; ++i) {
      const double xi0 = x.bit(i * m) ? 1.0 : 0.0;
      const double xia = x.bit(i * m + a) ? 1.0 : 0.0;
      inner -= static_cast<double>(inst.jobs[i]) * (xi0 - xia);
    }
    for (std::size_t bit = 0; bit < bits; ++bit) {
      if (x.bit(n * m + (a - 1) * bits + bit)) {
        inner -= static_cast<double>(std::int64_t{1} << bit);
      }
    }
    h += B * inner * inner;
  }
  return h;
}

struct NaiveSpectrum {
  double e_min = 0.0;
  double e_max = 0.0;
  std::map<double, std::uint64_t> histogram;
  std::vector<std::uint64_t> ground_states;
};

/// Plain per-state evaluation through qubo_energy, no incremental tricks.
inline NaiveSpectrum naive_spectrum(const QuboModel& model) {
  NaiveSpectrum out;
  const std::size_t n = model.n_vars();
  const std::uint64_t n_states = 1ull << n;
  for (std::uint64_t s = 0; s < n_states; ++s) {
    const double e =
        qubo_energy(model, SpinVector::from_bits(s, n, VarDomain::Binary));
    if (s == 0 || e < out.e_min) out.e_min = e;
    if (s == 0 || e > out.e_max) out.e_max = e;
    ++out.histogram[e];
  }
  for (std::uint64_t s = 0; s < n_states; ++s) {
    const double e =
        qubo_energy(model, SpinVector::from_bits(s, n, VarDomain::Binary));
    if (e == out.e_min) out.ground_states.push_back(s);
  }
  return out;
}

inline NaiveSpectrum naive_spectrum(const IsingModel& model) {
  NaiveSpectrum out;
  const std::size_t n = model.n_spins();
  const std::uint64_t n_states = 1ull << n;
  for (std::uint64_t s = 0; s < n_states; ++s) {
    const double e =
        ising_energy(model, SpinVector::from_bits(s, n, VarDomain::Spin));
    if (s == 0 || e < out.e_min) out.e_min = e;
    if (s == 0 || e > out.e_max) out.e_max = e;
    ++out.histogram[e];
  }
  for (std::uint64_t s = 0; s < n_states; ++s) {
    const double e =
        ising_energy(model, SpinVector::from_bits(s, n, VarDomain::Spin));
    if (e == out.e_min) out.ground_states.push_back(s);
  }
  return out;
}

inline SpinVector random_assignment(std::size_t n, std::mt19937_64& rng,
                                    VarDomain domain = VarDomain::Binary) {
  SpinVector x(n, domain);
  for (std::size_t i = 0; i < n; ++i) {
    x.set_bit(i, (rng() & 1u) != 0);
  }
  return x;
}

inline QuboModel random_integer_qubo(std::size_t n, std::mt19937_64& rng,
                                     int coeff_range = 10,
                                     double density = 0.5) {
  QuboModel model(n);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  model.set_offset(coeff(rng));
  for (std::size_t i = 0; i < n; ++i) {
    if (u(rng) < density) model.add_linear(i, coeff(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u(rng) < density) model.add_quadratic(i, j, coeff(rng));
    }
  }
  return model;
}

inline GcpInstance random_graph_gcp(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nodes(3, 8);
  std::uniform_int_distribution<std::size_t> colors(2, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  GcpInstance inst;
  inst.n_nodes = nodes(rng);
  inst.k_colors = colors(rng);
  for (std::size_t a = 0; a < inst.n_nodes; ++a) {
    for (std::size_t b = a + 1; b < inst.n_nodes; ++b) {
      if (u(rng) < 0.5) inst.edges.insert({a, b});
    }
  }
  return inst;
}

inline CvcpInstance random_graph_cvcp(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nodes(3, 8);
  std::uniform_int_distribution<std::size_t> colors(2, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CvcpInstance inst;
  inst.n_nodes = nodes(rng);
  inst.n_cliques = colors(rng);
  for (std::size_t a = 0; a < inst.n_nodes; ++a) {
    for (std::size_t b = a + 1; b < inst.n_nodes; ++b) {
      if (u(rng) < 0.5) inst.edges.insert({a, b});
    }
  }
  return inst;
}

inline PmspInstance random_pmsp(std::mt19937_64& rng, std::size_t max_jobs = 6,
                                std::size_t max_machines = 3) {
  std::uniform_int_distribution<std::size_t> jobs(2, max_jobs);
  std::uniform_int_distribution<std::size_t> machines(2, max_machines);
  std::uniform_int_distribution<std::int64_t> length(1, 30);
  std::uniform_int_distribution<std::int64_t> bound(2, 20);
  PmspInstance inst;
  const std::size_t n = jobs(rng);
  for (std::size_t i = 0; i < n; ++i) inst.jobs.push_back(length(rng));
  inst.n_machines = machines(rng);
  inst.slack_bound = bound(rng);
  return inst;
}

}  // namespace qubopt::oracles
