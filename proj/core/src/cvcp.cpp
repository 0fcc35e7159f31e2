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

#include "qubopt/cvcp.hpp"

#include <numeric>
#include <stdexcept>

#include "detail.hpp"

namespace qubopt {

CvcpInstance gen_clique_union(const std::vector<std::size_t>& sizes,
                              std::size_t n_colors) {
  if (sizes.empty()) {
    throw std::invalid_argument("gen_clique_union: need at least one clique");
  }
  for (std::size_t s : sizes) {
    if (s == 0) {
      throw std::invalid_argument("gen_clique_union: clique sizes must be >= 1");
    }
  }
  if (n_colors == 0) n_colors = sizes.size();
  if (n_colors < sizes.size()) {
    throw std::invalid_argument(
        "gen_clique_union: need at least one color per clique");
  }
  CvcpInstance inst;
  inst.clique_sizes = sizes;
  inst.n_nodes = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  inst.n_cliques = n_colors;
  std::size_t base = 0;
  std::size_t prev_base = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t u = base; u < base + sizes[c]; ++u) {
      for (std::size_t v = u + 1; v < base + sizes[c]; ++v) {
        inst.edges.insert({u, v});
      }
    }
    if (c > 0) inst.edges.insert({prev_base, base});  // bridge
    prev_base = base;
    base += sizes[c];
  }
  return inst;
}

QuboModel build_cvcp_qubo(const CvcpInstance& inst, const CvcpParams& p) {
  const std::size_t k = inst.n_cliques;
  QuboModel model(inst.n_nodes * k);
  auto var = [k](std::size_t node, std::size_t color) {
    return node * k + color;
  };
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      model.set_label(var(v, i), "x[v=" + std::to_string(v) +
                                     ",color=" + std::to_string(i) + "]");
    }
  }
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    model.add_offset(p.A);
    for (std::size_t i = 0; i < k; ++i) {
      model.add_linear(var(v, i), -p.A);
      for (std::size_t j = i + 1; j < k; ++j) {
        model.add_quadratic(var(v, i), var(v, j), 2.0 * p.A);
      }
    }
  }
  for (std::size_t u = 0; u < inst.n_nodes; ++u) {
    for (std::size_t v = u + 1; v < inst.n_nodes; ++v) {
      if (inst.edges.count({u, v})) continue;
      for (std::size_t i = 0; i < k; ++i) {
        model.add_quadratic(var(u, i), var(v, i), p.B);
      }
    }
  }
  return model;
}

CvcpDecoded decode_cover(const CvcpInstance& inst, const SpinVector& x) {
  const std::size_t k = inst.n_cliques;
  if (x.size() != inst.n_nodes * k) {
    throw std::invalid_argument("decode_cover: assignment length mismatch");
  }
  CvcpDecoded out;
  std::vector<std::size_t> assignment(inst.n_nodes, 0);
  out.valid_onehot = true;
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (x.bit(v * k + i)) {
        ++count;
        assignment[v] = i;
      }
    }
    if (count != 1) {
      out.valid_onehot = false;
      return out;
    }
  }
  out.is_clique_cover = true;
  for (std::size_t u = 0; u < inst.n_nodes && out.is_clique_cover; ++u) {
    for (std::size_t v = u + 1; v < inst.n_nodes; ++v) {
      if (assignment[u] == assignment[v] && !inst.edges.count({u, v})) {
        out.is_clique_cover = false;
        break;
      }
    }
  }
  out.assignment = std::move(assignment);
  return out;
}

std::string CvcpInstance::to_json() const {
  detail::json j;
  j["type"] = "cvcp";
  j["n_nodes"] = n_nodes;
  j["n_cliques"] = n_cliques;
  detail::json edges_json = detail::json::array();
  for (const auto& [u, v] : edges) edges_json.push_back({u, v});
  j["edges"] = std::move(edges_json);
  if (!clique_sizes.empty()) j["clique_sizes"] = clique_sizes;
  return j.dump();
}

CvcpInstance CvcpInstance::from_json(const std::string& text) {
  detail::json j = detail::parse_json(text, "CvcpInstance");
  if (detail::require_key(j, "type", "CvcpInstance") != "cvcp") {
    throw std::invalid_argument("CvcpInstance: type is not \"cvcp\"");
  }
  CvcpInstance inst;
  inst.n_nodes = detail::require_key(j, "n_nodes", "CvcpInstance").get<std::size_t>();
  inst.n_cliques = detail::require_key(j, "n_cliques", "CvcpInstance").get<std::size_t>();
  for (const auto& e : detail::require_key(j, "edges", "CvcpInstance")) {
    std::size_t u = e.at(0).get<std::size_t>();
    std::size_t v = e.at(1).get<std::size_t>();
    if (u == v) throw std::invalid_argument("CvcpInstance: self-loop edge");
    if (u > v) std::swap(u, v);
    if (v >= inst.n_nodes) {
      throw std::invalid_argument("CvcpInstance: edge endpoint out of range");
    }
    inst.edges.insert({u, v});
  }
  if (j.contains("clique_sizes")) {
    inst.clique_sizes = j["clique_sizes"].get<std::vector<std::size_t>>();
  }
  return inst;
}

}  // namespace qubopt
