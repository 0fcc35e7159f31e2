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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qubopt {

/// Interpretation of a packed assignment: binary variables in {0,1} or
/// spins in {-1,+1}. The two views share the same underlying bits via
/// s = 2x - 1.
enum class VarDomain { Binary, Spin };

/// Packed assignment of n binary/spin variables. Bit i holds variable i;
/// in the Spin view a set bit reads as +1 and a clear bit as -1.
class SpinVector {
 public:
  SpinVector() = default;
  SpinVector(std::size_t n, VarDomain domain);

  /// Builds a vector from the low n bits of `bits` (bit 0 -> variable 0).
  static SpinVector from_bits(std::uint64_t bits, std::size_t n,
                              VarDomain domain);
  /// Parses "0110..." where the leftmost character is variable 0.
  static SpinVector from_string(std::string_view text, VarDomain domain);

  std::size_t size() const { return n_; }
  VarDomain domain() const { return domain_; }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);
  /// Spin view of variable i: set -> +1, clear -> -1.
  int spin(std::size_t i) const { return bit(i) ? +1 : -1; }

  /// Same bits reinterpreted in the other domain (s = 2x - 1 and back).
  SpinVector as_binary() const;
  SpinVector as_spin() const;

  std::size_t count_ones() const;
  std::string to_string() const;

  friend bool operator==(const SpinVector&, const SpinVector&) = default;
  friend auto operator<=>(const SpinVector&, const SpinVector&) = default;

 private:
  std::size_t n_ = 0;
  VarDomain domain_ = VarDomain::Binary;
  std::vector<std::uint64_t> words_;
};

/// Quadratic unconstrained binary optimization model
///   E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_ij x_i x_j
/// over x in {0,1}^n. Quadratic keys are stored strictly upper triangular;
/// diagonal entries are rejected rather than folded (x^2 = x, so builders
/// must put them on the linear term explicitly). Coefficients that cancel
/// to exactly zero are dropped.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(std::size_t n_vars) : n_vars_(n_vars) {}

  std::size_t n_vars() const { return n_vars_; }
  double offset() const { return offset_; }
  void set_offset(double c) { offset_ = c; }
  void add_offset(double c) { offset_ += c; }

  void add_linear(std::size_t i, double c);
  void add_quadratic(std::size_t i, std::size_t j, double c);

  double linear(std::size_t i) const;
  double quadratic(std::size_t i, std::size_t j) const;

  const std::map<std::size_t, double>& linear_terms() const { return linear_; }
  const std::map<std::pair<std::size_t, std::size_t>, double>&
  quadratic_terms() const {
    return quadratic_;
  }

  void set_label(std::size_t i, std::string label);
  const std::map<std::size_t, std::string>& labels() const { return labels_; }

  /// True when every coefficient and the offset are exact integers.
  bool is_integral() const;

  std::string to_json() const;
  static QuboModel from_json(const std::string& text);

 private:
  std::size_t n_vars_ = 0;
  double offset_ = 0.0;
  std::map<std::size_t, double> linear_;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic_;
  std::map<std::size_t, std::string> labels_;
};

/// Ising model E(s) = offset + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j over
/// spins s in {-1,+1}^n. Same index hygiene as QuboModel.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(std::size_t n_spins) : n_spins_(n_spins) {}

  std::size_t n_spins() const { return n_spins_; }
  double offset() const { return offset_; }
  void set_offset(double c) { offset_ = c; }
  void add_offset(double c) { offset_ += c; }

  void add_field(std::size_t i, double h);
  void add_coupling(std::size_t i, std::size_t j, double J);

  double field(std::size_t i) const;
  double coupling(std::size_t i, std::size_t j) const;

  const std::map<std::size_t, double>& fields() const { return fields_; }
  const std::map<std::pair<std::size_t, std::size_t>, double>& couplings()
      const {
    return couplings_;
  }

  void set_label(std::size_t i, std::string label);
  const std::map<std::size_t, std::string>& labels() const { return labels_; }

  bool is_integral() const;

  std::string to_json() const;
  static IsingModel from_json(const std::string& text);

 private:
  std::size_t n_spins_ = 0;
  double offset_ = 0.0;
  std::map<std::size_t, double> fields_;
  std::map<std::pair<std::size_t, std::size_t>, double> couplings_;
  std::map<std::size_t, std::string> labels_;
};

/// Evaluates a QUBO at a binary assignment. Throws std::invalid_argument on
/// length mismatch and std::domain_error when x is not a binary view.
double qubo_energy(const QuboModel& model, const SpinVector& x);

/// Evaluates an Ising model at a +/-1 assignment. Throws
/// std::invalid_argument on length mismatch and std::domain_error when s is
/// not a spin view.
double ising_energy(const IsingModel& model, const SpinVector& s);

/// Exact change of variables x = (1 + s) / 2. For every assignment,
/// qubo_energy(q, x) == ising_energy(qubo_to_ising(q), 2x - 1); constants
/// move into the offset and labels are carried over. Integer coefficients
/// pick up factors of 1/2 and 1/4, which are exact binary fractions, so the
/// equality is bit-exact for integer inputs and the inverse map restores
/// the integers.
IsingModel qubo_to_ising(const QuboModel& model);

/// Inverse map s = 2x - 1, exact energy equality on all assignments.
QuboModel ising_to_qubo(const IsingModel& model);

using AnyModel = std::variant<QuboModel, IsingModel>;

/// Loads either model flavor, sniffing "n_vars"/"linear"/"quadratic" vs
/// "n_spins"/"h"/"J" keys.
AnyModel model_from_json(const std::string& text);
std::string model_to_json(const AnyModel& model);
std::size_t model_size(const AnyModel& model);

}  // namespace qubopt
