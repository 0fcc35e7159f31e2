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
#include <vector>

#include "qubopt/model.hpp"

namespace qubopt {

/// Fully connected antiferromagnetic spin group whose energy minimum sits
/// exactly at k_target positive spins.
struct PolarityGroup {
  std::size_t n_spins = 0;
  std::size_t k_target = 1;  // 1 <= k_target <= n_spins - 1
  double j_scale = 1.0;
};

/// Uniform couplings J_ij = j_scale and fields h_i = j_scale (N - 2k). With
/// p positive spins the energy is
///   E(p) = j_scale [ ((2p - N)^2 - N) / 2 + (N - 2k)(2p - N) ],
/// strictly minimized over p in {0..N} at p = k, so the ground states are
/// exactly the k-positive assignments (e.g. k = 1 gives h = N - 2 and
/// one-hot minima).
IsingModel one_hot_ising(const PolarityGroup& g);

/// Closed-form E(p) above; test and diagnostics helper.
double polarity_energy(const PolarityGroup& g, std::size_t positives);

/// Adds the group's couplings and fields onto a sub-block of an existing
/// model. Energies change by exactly the group term, which depends only on
/// the spins inside the block. Indices must be distinct, in range, and
/// match g.n_spins in number.
IsingModel apply_polarity_bias(const IsingModel& model,
                               const std::vector<std::size_t>& group,
                               const PolarityGroup& g);

}  // namespace qubopt
