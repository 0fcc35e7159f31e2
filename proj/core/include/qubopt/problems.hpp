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

#include <optional>
#include <string>
#include <variant>

#include "qubopt/cvcp.hpp"
#include "qubopt/gcp.hpp"
#include "qubopt/model.hpp"
#include "qubopt/pmsp.hpp"

namespace qubopt {

using ProblemInstance = std::variant<GcpInstance, CvcpInstance, PmspInstance>;

/// Dispatches on the "type" field: "gcp", "cvcp" or "pmsp".
ProblemInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const ProblemInstance& inst);
std::string instance_type(const ProblemInstance& inst);

/// Builds the problem QUBO with weights (A, B) on the two penalty terms
/// (for scheduling the makespan term stays at 1).
QuboModel build_problem_qubo(const ProblemInstance& inst, double A, double B);

std::size_t problem_n_vars(const ProblemInstance& inst);

/// Sweep abscissa convention: raw A for the graph problems, the
/// penalty-term ratio for scheduling.
double sweep_x_axis(const ProblemInstance& inst, double A, double B);

/// Ground energy known from construction, when the encoding guarantees it:
/// 0 for generated colorable/coverable graphs, the known minimum makespan
/// for scheduling instances whose slack register range is exactly [0, M].
/// Absent otherwise; exact values always come from spectrum enumeration.
std::optional<double> known_ground_energy(const ProblemInstance& inst);

}  // namespace qubopt
