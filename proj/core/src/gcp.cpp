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

#include "qubopt/gcp.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace qubopt {

namespace {

void check_instance(const GcpInstance& inst, const char* what) {
  for (const auto& [u, v] : inst.edges) {
    if (u >= v || v >= inst.n_nodes) {
      throw std::invalid_argument(std::string(what) +
                                  ": edges must be (u < v) pairs within range");
    }
  }
}

}  // namespace

GcpInstance gen_complete_kpartite(std::size_t n_nodes, std::size_t k) {
  if (k < 2) {
    throw std::invalid_argument("gen_complete_kpartite: need k >= 2");
  }
  if (n_nodes == 0 || n_nodes % k != 0) {
    throw std::invalid_argument(
        "gen_complete_kpartite: k must divide the node count");
  }
  GcpInstance inst;
  inst.n_nodes = n_nodes;
  inst.k_colors = k;
  inst.known_chromatic = k;
  const std::size_t part = n_nodes / k;
  for (std::size_t u = 0; u < n_nodes; ++u) {
    for (std::size_t v = u + 1; v < n_nodes; ++v) {
      if (u / part != v / part) inst.edges.insert({u, v});
    }
  }
  return inst;
}

QuboModel build_gcp_qubo(const GcpInstance& inst, const GcpParams& p) {
  check_instance(inst, "build_gcp_qubo");
  const std::size_t k = inst.k_colors;
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
  // (1 - sum_i x_i)^2 = 1 - sum_i x_i + 2 sum_{i<j} x_i x_j  (x^2 = x)
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    model.add_offset(p.A);
    for (std::size_t i = 0; i < k; ++i) {
      model.add_linear(var(v, i), -p.A);
      for (std::size_t j = i + 1; j < k; ++j) {
        model.add_quadratic(var(v, i), var(v, j), 2.0 * p.A);
      }
    }
  }
  for (const auto& [u, v] : inst.edges) {
    for (std::size_t i = 0; i < k; ++i) {
      model.add_quadratic(var(u, i), var(v, i), p.B);
    }
  }
  return model;
}

double gcp_gap_estimate(const GcpInstance&, const GcpParams& p) { return p.A; }

double gcp_max_energy(const GcpInstance& inst, const GcpParams& p) {
  const double k = static_cast<double>(inst.k_colors);
  return p.A * static_cast<double>(inst.n_nodes) * (k - 1.0) * (k - 1.0) +
         p.B * static_cast<double>(inst.edges.size()) * k;
}

GcpDecoded decode_coloring(const GcpInstance& inst, const SpinVector& x) {
  const std::size_t k = inst.k_colors;
  if (x.size() != inst.n_nodes * k) {
    throw std::invalid_argument("decode_coloring: assignment length mismatch");
  }
  GcpDecoded out;
  std::vector<std::size_t> coloring(inst.n_nodes, 0);
  out.valid_onehot = true;
  for (std::size_t v = 0; v < inst.n_nodes; ++v) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (x.bit(v * k + i)) {
        ++count;
        coloring[v] = i;
      }
    }
    if (count != 1) {
      out.valid_onehot = false;
      return out;
    }
  }
  out.proper = true;
  for (const auto& [u, v] : inst.edges) {
    if (coloring[u] == coloring[v]) {
      out.proper = false;
      break;
    }
  }
  out.coloring = std::move(coloring);
  return out;
}

std::string GcpInstance::to_json() const {
  detail::json j;
  j["type"] = "gcp";
  j["n_nodes"] = n_nodes;
  j["k_colors"] = k_colors;
  detail::json edges_json = detail::json::array();
  for (const auto& [u, v] : edges) edges_json.push_back({u, v});
  j["edges"] = std::move(edges_json);
  if (known_chromatic) j["known_chromatic"] = *known_chromatic;
  return j.dump();
}

GcpInstance GcpInstance::from_json(const std::string& text) {
  detail::json j = detail::parse_json(text, "GcpInstance");
  if (detail::require_key(j, "type", "GcpInstance") != "gcp") {
    throw std::invalid_argument("GcpInstance: type is not \"gcp\"");
  }
  GcpInstance inst;
  inst.n_nodes = detail::require_key(j, "n_nodes", "GcpInstance").get<std::size_t>();
  inst.k_colors = detail::require_key(j, "k_colors", "GcpInstance").get<std::size_t>();
  for (const auto& e : detail::require_key(j, "edges", "GcpInstance")) {
    std::size_t u = e.at(0).get<std::size_t>();
    std::size_t v = e.at(1).get<std::size_t>();
    if (u == v) throw std::invalid_argument("GcpInstance: self-loop edge");
    if (u > v) std::swap(u, v);
    inst.edges.insert({u, v});
  }
  if (j.contains("known_chromatic")) {
    inst.known_chromatic = j["known_chromatic"].get<std::size_t>();
  }
  check_instance(inst, "GcpInstance::from_json");
  return inst;
}

}  // namespace qubopt
