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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qubopt/model.hpp"

namespace qubopt {

using Edge = std::pair<std::size_t, std::size_t>;

/// Graph coloring instance: color each node with one of k_colors so that no
/// edge is monochromatic.
struct GcpInstance {
  std::size_t n_nodes = 0;
  std::size_t k_colors = 0;
  std::set<Edge> edges;  // unordered pairs stored as (min, max)
  /// Set by the generator; absent for graphs loaded from JSON.
  std::optional<std::size_t> known_chromatic;

  std::string to_json() const;
  static GcpInstance from_json(const std::string& text);
};

/// Penalty weights: A on the one-color-per-node term, B on the
/// same-color-edge term.
struct GcpParams {
  double A = 1.0;
  double B = 1.0;
};

/// Complete k-partite graph on N nodes (k must divide N). Parts are
/// contiguous index blocks of size N/k; every inter-part pair is an edge, so
/// the edge count is N^2 (1 - 1/k) / 2. Coloring each part with a distinct
/// color is an optimum, hence known_chromatic = k.
GcpInstance gen_complete_kpartite(std::size_t n_nodes, std::size_t k);

/// Builds the coloring QUBO
///   E = A sum_v (1 - sum_i x_{v,i})^2 + B sum_{(u,v) in E} sum_i x_{u,i} x_{v,i}
/// on n_nodes * k_colors variables, indexed node * k + color and labeled
/// "x[v=..,color=..]". Proper one-hot colorings evaluate to 0.
QuboModel build_gcp_qubo(const GcpInstance& inst, const GcpParams& p);

/// Analytic estimate of the spectral gap near the ground state: removing a
/// color from a proper coloring costs exactly A, which is the smallest
/// excitation while A stays balanced against B. Exact gaps come from
/// spectrum enumeration.
double gcp_gap_estimate(const GcpInstance& inst, const GcpParams& p);

/// Energy of the all-ones assignment, A N (k-1)^2 + B |E| k, which maximizes
/// both penalty terms.
double gcp_max_energy(const GcpInstance& inst, const GcpParams& p);

struct GcpDecoded {
  bool valid_onehot = false;
  bool proper = false;  // meaningful only when valid_onehot
  std::optional<std::vector<std::size_t>> coloring;  // node -> color
};

/// Reads a coloring back out of an assignment produced for build_gcp_qubo.
GcpDecoded decode_coloring(const GcpInstance& inst, const SpinVector& x);

}  // namespace qubopt
