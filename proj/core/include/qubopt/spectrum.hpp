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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubopt/model.hpp"

namespace qubopt {

/// Thrown when an enumeration would visit more states than the configured
/// cap allows.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t max_spins = 28;
  std::size_t max_ground_states = 1024;  // stored states; the count stays exact
  unsigned threads = 0;                  // 0 = hardware concurrency
};

/// Exact classical spectrum of a model from visiting all 2^n states.
/// Energies are binned exactly for integer models and within 1e-9 absolute
/// otherwise.
struct SpectrumReport {
  std::size_t n_spins = 0;
  std::uint64_t n_states = 0;
  double e_min = 0.0;
  double e_second = 0.0;  // smallest distinct energy above e_min
  double e_max = 0.0;
  double gap = 0.0;     // e_second - e_min; 0 for constant spectra
  double spread = 0.0;  // e_max - e_min
  /// gap / spread; absent for constant spectra.
  std::optional<double> dynamic_range;
  bool constant_spectrum = false;
  std::uint64_t ground_count = 0;
  bool ground_truncated = false;
  std::vector<SpinVector> ground_states;  // lowest state indices first
  std::vector<std::pair<double, std::uint64_t>> histogram;  // energy -> count
  double bin_tolerance = 0.0;

  std::string to_json() const;
};

SpectrumReport enumerate_spectrum(const QuboModel& model,
                                  const EnumerationLimits& limits = {});
SpectrumReport enumerate_spectrum(const IsingModel& model,
                                  const EnumerationLimits& limits = {});

/// gap / spread; throws std::domain_error for a constant spectrum.
double dynamic_range(const SpectrumReport& report);

/// Total number of states within tol of the given energy.
std::uint64_t degeneracy(const SpectrumReport& report, double energy,
                         double tol = 0.0);

enum class HistogramBinning { Exact, FixedWidth };

/// CSV rows "bin_center,count". Exact binning emits one row per distinct
/// energy; fixed-width rebins from e_min upward and preserves the total
/// state count. width <= 0 is rejected for fixed-width binning.
std::string histogram_export(const SpectrumReport& report,
                             HistogramBinning binning = HistogramBinning::Exact,
                             double width = 0.0);

}  // namespace qubopt
