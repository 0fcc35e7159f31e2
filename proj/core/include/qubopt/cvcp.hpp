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
#include <vector>

#include "qubopt/gcp.hpp"
#include "qubopt/model.hpp"

namespace qubopt {

/// Clique vertex cover instance: partition the nodes into n_cliques color
/// classes such that every class induces a clique.
struct CvcpInstance {
  std::size_t n_nodes = 0;
  std::size_t n_cliques = 0;  // number of colors available
  std::set<Edge> edges;
  /// Generator metadata: sizes of the disjoint cliques, empty when loaded
  /// from an arbitrary graph.
  std::vector<std::size_t> clique_sizes;

  std::string to_json() const;
  static CvcpInstance from_json(const std::string& text);
};

struct CvcpParams {
  double A = 1.0;  // one-color-per-node weight
  double B = 1.0;  // non-clique same-color pair weight
};

/// Disjoint cliques on contiguous index blocks, chained by one bridge edge
/// between the lowest-index nodes of consecutive cliques. Coloring clique j
/// with color j is a known zero-energy cover. n_colors defaults to the
/// clique count; passing a larger value leaves spare colors (more degenerate
/// ground states).
CvcpInstance gen_clique_union(const std::vector<std::size_t>& sizes,
                              std::size_t n_colors = 0);

/// Builds the clique cover QUBO. The color term
///   B sum_i [ (S_i^2 - S_i)/2 - sum_{(u,v) in E} x_{u,i} x_{v,i} ],
/// with S_i the size of color class i, counts same-color pairs and subtracts
/// the adjacent ones, so it reduces to +B on every same-color NON-adjacent
/// pair. That reduced form is what gets emitted; correct one-hot covers
/// evaluate to 0.
QuboModel build_cvcp_qubo(const CvcpInstance& inst, const CvcpParams& p);

struct CvcpDecoded {
  bool valid_onehot = false;
  bool is_clique_cover = false;
  std::optional<std::vector<std::size_t>> assignment;  // node -> color
};

CvcpDecoded decode_cover(const CvcpInstance& inst, const SpinVector& x);

}  // namespace qubopt
