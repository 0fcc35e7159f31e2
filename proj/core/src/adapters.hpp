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

// Internal flat views of the sparse models for tight enumeration and
// annealing loops. Not installed.

#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qubopt/model.hpp"

namespace qubopt::detail {

struct Adjacency {
  std::vector<std::size_t> offsets;  // n + 1
  std::vector<std::pair<std::uint32_t, double>> entries;
};

inline Adjacency build_adjacency(
    std::size_t n,
    const std::map<std::pair<std::size_t, std::size_t>, double>& pairs) {
  Adjacency adj;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [ij, c] : pairs) {
    ++degree[ij.first];
    ++degree[ij.second];
  }
  adj.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    adj.offsets[i + 1] = adj.offsets[i] + degree[i];
  }
  adj.entries.resize(adj.offsets.back());
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [ij, c] : pairs) {
    adj.entries[cursor[ij.first]++] = {static_cast<std::uint32_t>(ij.second), c};
    adj.entries[cursor[ij.second]++] = {static_cast<std::uint32_t>(ij.first), c};
  }
  return adj;
}

/// Binary model view. States come either as u64 masks (enumeration, n <= 63)
/// or as byte arrays with bits[j] in {0,1} (annealing, any n).
struct QuboAdapter {
  std::size_t n = 0;
  double offset = 0.0;
  std::vector<double> linear;
  Adjacency adj;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> pairs;

  explicit QuboAdapter(const QuboModel& model)
      : n(model.n_vars()), offset(model.offset()), linear(model.n_vars(), 0.0) {
    for (const auto& [i, c] : model.linear_terms()) linear[i] = c;
    adj = build_adjacency(n, model.quadratic_terms());
    for (const auto& [ij, c] : model.quadratic_terms()) {
      pairs.emplace_back(static_cast<std::uint32_t>(ij.first),
                         static_cast<std::uint32_t>(ij.second), c);
    }
  }

  double full_energy(std::uint64_t state) const {
    double e = offset;
    for (std::size_t i = 0; i < n; ++i) {
      if ((state >> i) & 1u) e += linear[i];
    }
    for (const auto& [i, j, c] : pairs) {
      if (((state >> i) & 1u) && ((state >> j) & 1u)) e += c;
    }
    return e;
  }

  double flip_delta(std::size_t i, std::uint64_t state) const {
    double field = linear[i];
    for (std::size_t t = adj.offsets[i]; t < adj.offsets[i + 1]; ++t) {
      const auto& [j, c] = adj.entries[t];
      if ((state >> j) & 1u) field += c;
    }
    return ((state >> i) & 1u) ? -field : field;
  }

  double flip_delta(std::size_t i, const std::uint8_t* bits) const {
    double field = linear[i];
    for (std::size_t t = adj.offsets[i]; t < adj.offsets[i + 1]; ++t) {
      const auto& [j, c] = adj.entries[t];
      if (bits[j]) field += c;
    }
    return bits[i] ? -field : field;
  }
};

/// Spin model view; bit b reads as spin s = 2b - 1.
struct IsingAdapter {
  std::size_t n = 0;
  double offset = 0.0;
  std::vector<double> fields;
  Adjacency adj;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> pairs;

  explicit IsingAdapter(const IsingModel& model)
      : n(model.n_spins()), offset(model.offset()), fields(model.n_spins(), 0.0) {
    for (const auto& [i, h] : model.fields()) fields[i] = h;
    adj = build_adjacency(n, model.couplings());
    for (const auto& [ij, c] : model.couplings()) {
      pairs.emplace_back(static_cast<std::uint32_t>(ij.first),
                         static_cast<std::uint32_t>(ij.second), c);
    }
  }

  static double spin_of(std::uint64_t state, std::size_t i) {
    return ((state >> i) & 1u) ? 1.0 : -1.0;
  }

  double full_energy(std::uint64_t state) const {
    double e = offset;
    for (std::size_t i = 0; i < n; ++i) e += fields[i] * spin_of(state, i);
    for (const auto& [i, j, c] : pairs) {
      e += c * spin_of(state, i) * spin_of(state, j);
    }
    return e;
  }

  double flip_delta(std::size_t i, std::uint64_t state) const {
    double local = fields[i];
    for (std::size_t t = adj.offsets[i]; t < adj.offsets[i + 1]; ++t) {
      const auto& [j, c] = adj.entries[t];
      local += c * spin_of(state, j);
    }
    return -2.0 * spin_of(state, i) * local;
  }

  double flip_delta(std::size_t i, const std::uint8_t* bits) const {
    double local = fields[i];
    for (std::size_t t = adj.offsets[i]; t < adj.offsets[i + 1]; ++t) {
      const auto& [j, c] = adj.entries[t];
      local += bits[j] ? c : -c;
    }
    return (bits[i] ? -2.0 : 2.0) * local;
  }
};

}  // namespace qubopt::detail
