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

#include "qubopt/polarity.hpp"

#include <set>
#include <stdexcept>

namespace qubopt {

namespace {

void check_group(const PolarityGroup& g) {
  if (g.n_spins < 2) {
    throw std::invalid_argument("polarity group: need at least 2 spins");
  }
  if (g.k_target < 1 || g.k_target > g.n_spins - 1) {
    throw std::invalid_argument(
        "polarity group: k_target must lie in [1, n_spins - 1]");
  }
  if (g.j_scale <= 0.0) {
    throw std::invalid_argument("polarity group: j_scale must be > 0");
  }
}

}  // namespace

IsingModel one_hot_ising(const PolarityGroup& g) {
  check_group(g);
  IsingModel model(g.n_spins);
  const double h =
      g.j_scale * (static_cast<double>(g.n_spins) - 2.0 * static_cast<double>(g.k_target));
  for (std::size_t i = 0; i < g.n_spins; ++i) {
    if (h != 0.0) model.add_field(i, h);
    for (std::size_t j = i + 1; j < g.n_spins; ++j) {
      model.add_coupling(i, j, g.j_scale);
    }
  }
  return model;
}

double polarity_energy(const PolarityGroup& g, std::size_t positives) {
  check_group(g);
  if (positives > g.n_spins) {
    throw std::invalid_argument("polarity_energy: positive count out of range");
  }
  const double n = static_cast<double>(g.n_spins);
  const double q = 2.0 * static_cast<double>(positives) - n;
  const double h = n - 2.0 * static_cast<double>(g.k_target);
  return g.j_scale * ((q * q - n) / 2.0 + h * q);
}

IsingModel apply_polarity_bias(const IsingModel& model,
                               const std::vector<std::size_t>& group,
                               const PolarityGroup& g) {
  check_group(g);
  if (group.size() != g.n_spins) {
    throw std::invalid_argument(
        "apply_polarity_bias: index list size must equal the group size");
  }
  std::set<std::size_t> seen;
  for (std::size_t idx : group) {
    if (idx >= model.n_spins()) {
      throw std::invalid_argument("apply_polarity_bias: index out of range");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("apply_polarity_bias: duplicate index");
    }
  }
  IsingModel out = model;
  const double h =
      g.j_scale * (static_cast<double>(g.n_spins) - 2.0 * static_cast<double>(g.k_target));
  for (std::size_t a = 0; a < group.size(); ++a) {
    if (h != 0.0) out.add_field(group[a], h);
    for (std::size_t b = a + 1; b < group.size(); ++b) {
      out.add_coupling(group[a], group[b], g.j_scale);
    }
  }
  return out;
}

}  // namespace qubopt
