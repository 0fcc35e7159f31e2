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

#include "qubopt/problems.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace qubopt {

ProblemInstance parse_instance_json(const std::string& text) {
  detail::json j = detail::parse_json(text, "problem instance");
  const std::string type =
      detail::require_key(j, "type", "problem instance").get<std::string>();
  if (type == "gcp") return GcpInstance::from_json(text);
  if (type == "cvcp") return CvcpInstance::from_json(text);
  if (type == "pmsp") return PmspInstance::from_json(text);
  throw std::invalid_argument("problem instance: unknown type \"" + type +
                              "\"");
}

std::string instance_to_json(const ProblemInstance& inst) {
  return std::visit([](const auto& i) { return i.to_json(); }, inst);
}

std::string instance_type(const ProblemInstance& inst) {
  struct Visitor {
    std::string operator()(const GcpInstance&) const { return "gcp"; }
    std::string operator()(const CvcpInstance&) const { return "cvcp"; }
    std::string operator()(const PmspInstance&) const { return "pmsp"; }
  };
  return std::visit(Visitor{}, inst);
}

QuboModel build_problem_qubo(const ProblemInstance& inst, double A, double B) {
  struct Visitor {
    double A, B;
    QuboModel operator()(const GcpInstance& i) const {
      return build_gcp_qubo(i, GcpParams{A, B});
    }
    QuboModel operator()(const CvcpInstance& i) const {
      return build_cvcp_qubo(i, CvcpParams{A, B});
    }
    QuboModel operator()(const PmspInstance& i) const {
      return build_pmsp_qubo(i, PmspParams{A, B});
    }
  };
  return std::visit(Visitor{A, B}, inst);
}

std::size_t problem_n_vars(const ProblemInstance& inst) {
  struct Visitor {
    std::size_t operator()(const GcpInstance& i) const {
      return i.n_nodes * i.k_colors;
    }
    std::size_t operator()(const CvcpInstance& i) const {
      return i.n_nodes * i.n_cliques;
    }
    std::size_t operator()(const PmspInstance& i) const { return i.n_spins(); }
  };
  return std::visit(Visitor{}, inst);
}

double sweep_x_axis(const ProblemInstance& inst, double A, double B) {
  if (const auto* pmsp = std::get_if<PmspInstance>(&inst)) {
    return term_ratio(*pmsp, PmspParams{A, B});
  }
  return A;
}

std::optional<double> known_ground_energy(const ProblemInstance& inst) {
  struct Visitor {
    std::optional<double> operator()(const GcpInstance& i) const {
      if (i.known_chromatic && *i.known_chromatic <= i.k_colors) return 0.0;
      return std::nullopt;
    }
    std::optional<double> operator()(const CvcpInstance& i) const {
      if (!i.clique_sizes.empty() && i.n_cliques >= i.clique_sizes.size()) {
        return 0.0;
      }
      return std::nullopt;
    }
    std::optional<double> operator()(const PmspInstance& i) const {
      if (!i.known_min_makespan) return std::nullopt;
      // The slack register must reach exactly M and no further; otherwise
      // states outside the intended constraint set can sit below the
      // minimum-makespan level and the construction-time value is not the
      // ground energy.
      const std::int64_t reach = (std::int64_t{1} << i.slack_bits()) - 1;
      if (reach != i.slack_bound) return std::nullopt;
      return static_cast<double>(*i.known_min_makespan);
    }
  };
  return std::visit(Visitor{}, inst);
}

}  // namespace qubopt
