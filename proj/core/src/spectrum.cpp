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

#include "qubopt/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "adapters.hpp"
#include "detail.hpp"

namespace qubopt {

namespace {

// Chunk boundaries are fixed multiples of this, so energies (one full
// evaluation at each chunk head, single-flip deltas inside) do not depend on
// how chunks land on threads.
constexpr std::uint64_t kChunkStates = 1ull << 16;

struct ChunkResult {
  std::unordered_map<double, std::uint64_t> histogram;
  double e_min = 0.0;
  double e_max = 0.0;
  std::vector<std::pair<std::uint64_t, double>> ground;  // (state, energy)
};

/// Visits states gray(j) = j ^ (j >> 1) for j in [begin, end); consecutive
/// j differ in bit countr_zero(j).
template <typename Adapter>
ChunkResult walk_chunk(const Adapter& adapter, std::uint64_t begin,
                       std::uint64_t end, std::size_t ground_cap, double tol) {
  ChunkResult out;
  std::uint64_t state = begin ^ (begin >> 1);
  double energy = adapter.full_energy(state);
  out.e_min = out.e_max = energy;

  auto visit = [&](std::uint64_t s, double e) {
    ++out.histogram[e];
    if (e > out.e_max) out.e_max = e;
    if (e < out.e_min - tol) {
      out.e_min = e;
      std::erase_if(out.ground,
                    [&](const auto& g) { return g.second > e + tol; });
    } else if (e < out.e_min) {
      out.e_min = e;
    }
    if (e <= out.e_min + tol) out.ground.emplace_back(s, e);
  };

  visit(state, energy);
  for (std::uint64_t j = begin + 1; j < end; ++j) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(j));
    energy += adapter.flip_delta(bit, state);
    state ^= 1ull << bit;
    visit(state, energy);
  }

  std::erase_if(out.ground,
                [&](const auto& g) { return g.second > out.e_min + tol; });
  if (out.ground.size() > ground_cap) {
    std::nth_element(out.ground.begin(),
                     out.ground.begin() + static_cast<std::ptrdiff_t>(ground_cap),
                     out.ground.end());
    out.ground.resize(ground_cap);
  }
  return out;
}

template <typename Adapter>
SpectrumReport enumerate(const Adapter& adapter, bool integral,
                         const EnumerationLimits& limits, VarDomain domain) {
  if (adapter.n > limits.max_spins) {
    throw EnumerationCapError(
        "enumerate_spectrum: " + std::to_string(adapter.n) +
        " spins exceed the cap of " + std::to_string(limits.max_spins) +
        "; raise limits.max_spins explicitly to proceed");
  }
  if (adapter.n >= 63) {
    throw EnumerationCapError("enumerate_spectrum: state space too large");
  }
  const double tol = integral ? 0.0 : 1e-9;
  const std::uint64_t n_states = 1ull << adapter.n;
  const std::uint64_t n_chunks = (n_states + kChunkStates - 1) / kChunkStates;

  unsigned threads = limits.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));

  std::vector<ChunkResult> results(n_chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  auto work = [&]() {
    while (true) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= n_chunks) break;
      const std::uint64_t begin = c * kChunkStates;
      const std::uint64_t end = std::min(begin + kChunkStates, n_states);
      results[c] =
          walk_chunk(adapter, begin, end, limits.max_ground_states, tol);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  double raw_min = results[0].e_min;
  double raw_max = results[0].e_max;
  for (const auto& r : results) {
    raw_min = std::min(raw_min, r.e_min);
    raw_max = std::max(raw_max, r.e_max);
  }
  std::map<double, std::uint64_t> merged;
  for (const auto& r : results) {
    for (const auto& [e, c] : r.histogram) merged[e] += c;
  }

  SpectrumReport report;
  report.n_spins = adapter.n;
  report.n_states = n_states;
  report.bin_tolerance = tol;
  report.e_min = raw_min;
  report.e_max = raw_max;

  // Group raw energies into bins keyed by the lowest member.
  double bin_start = 0.0;
  std::uint64_t bin_count = 0;
  bool open = false;
  for (const auto& [e, c] : merged) {
    if (open && e - bin_start <= tol) {
      bin_count += c;
    } else {
      if (open) report.histogram.emplace_back(bin_start, bin_count);
      bin_start = e;
      bin_count = c;
      open = true;
    }
  }
  if (open) report.histogram.emplace_back(bin_start, bin_count);

  report.constant_spectrum = report.histogram.size() <= 1;
  report.ground_count = report.histogram.front().second;
  report.e_second =
      report.constant_spectrum ? report.e_min : report.histogram[1].first;
  report.gap = report.e_second - report.e_min;
  report.spread = report.e_max - report.e_min;
  if (!report.constant_spectrum) {
    report.dynamic_range = report.gap / report.spread;
  }

  std::vector<std::pair<std::uint64_t, double>> ground;
  for (const auto& r : results) {
    for (const auto& [s, e] : r.ground) {
      if (e <= raw_min + tol) ground.emplace_back(s, e);
    }
  }
  std::sort(ground.begin(), ground.end());
  if (ground.size() > limits.max_ground_states) {
    ground.resize(limits.max_ground_states);
  }
  report.ground_truncated = ground.size() < report.ground_count;
  report.ground_states.reserve(ground.size());
  for (const auto& [s, e] : ground) {
    report.ground_states.push_back(SpinVector::from_bits(s, adapter.n, domain));
  }
  return report;
}

}  // namespace

SpectrumReport enumerate_spectrum(const QuboModel& model,
                                  const EnumerationLimits& limits) {
  return enumerate(detail::QuboAdapter(model), model.is_integral(), limits,
                   VarDomain::Binary);
}

SpectrumReport enumerate_spectrum(const IsingModel& model,
                                  const EnumerationLimits& limits) {
  return enumerate(detail::IsingAdapter(model), model.is_integral(), limits,
                   VarDomain::Spin);
}

double dynamic_range(const SpectrumReport& report) {
  if (!report.dynamic_range) {
    throw std::domain_error("dynamic_range: undefined for a constant spectrum");
  }
  return *report.dynamic_range;
}

std::uint64_t degeneracy(const SpectrumReport& report, double energy,
                         double tol) {
  std::uint64_t total = 0;
  for (const auto& [e, c] : report.histogram) {
    if (std::abs(e - energy) <= tol) total += c;
  }
  return total;
}

std::string histogram_export(const SpectrumReport& report,
                             HistogramBinning binning, double width) {
  std::string out = "bin_center,count\n";
  if (binning == HistogramBinning::Exact) {
    for (const auto& [e, c] : report.histogram) {
      out += detail::format_number(e);
      out += ',';
      out += std::to_string(c);
      out += '\n';
    }
    return out;
  }
  if (width <= 0.0) {
    throw std::invalid_argument("histogram_export: bin width must be > 0");
  }
  std::map<std::uint64_t, std::uint64_t> bins;
  for (const auto& [e, c] : report.histogram) {
    const auto idx =
        static_cast<std::uint64_t>(std::floor((e - report.e_min) / width));
    bins[idx] += c;
  }
  for (const auto& [idx, c] : bins) {
    const double center =
        report.e_min + (static_cast<double>(idx) + 0.5) * width;
    out += detail::format_number(center);
    out += ',';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

std::string SpectrumReport::to_json() const {
  detail::json j;
  j["n_spins"] = n_spins;
  j["n_states"] = n_states;
  j["e_min"] = e_min;
  j["e_second"] = e_second;
  j["e_max"] = e_max;
  j["gap"] = gap;
  j["spread"] = spread;
  if (dynamic_range) {
    j["dynamic_range"] = *dynamic_range;
  } else {
    j["dynamic_range"] = nullptr;
  }
  j["constant_spectrum"] = constant_spectrum;
  j["ground_count"] = ground_count;
  j["ground_truncated"] = ground_truncated;
  detail::json states = detail::json::array();
  for (const auto& s : ground_states) states.push_back(s.to_string());
  j["ground_states"] = std::move(states);
  detail::json hist = detail::json::array();
  for (const auto& [e, c] : histogram) hist.push_back({e, c});
  j["histogram"] = std::move(hist);
  j["bin_tolerance"] = bin_tolerance;
  return j.dump();
}

}  // namespace qubopt
