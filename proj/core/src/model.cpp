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

#include "qubopt/model.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "detail.hpp"

namespace qubopt {

namespace {

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    throw std::invalid_argument(std::string(what) + ": index " +
                                std::to_string(i) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

bool integral(double v) { return std::nearbyint(v) == v && std::isfinite(v); }

template <typename Map, typename Key>
void accumulate(Map& map, const Key& key, double c) {
  auto [it, inserted] = map.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) map.erase(it);
  } else if (c == 0.0) {
    map.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SpinVector

SpinVector::SpinVector(std::size_t n, VarDomain domain)
    : n_(n), domain_(domain), words_((n + 63) / 64, 0) {}

SpinVector SpinVector::from_bits(std::uint64_t bits, std::size_t n,
                                 VarDomain domain) {
  if (n > 64) {
    throw std::invalid_argument("from_bits supports at most 64 variables");
  }
  SpinVector v(n, domain);
  if (n > 0) {
    std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    v.words_[0] = bits & mask;
  }
  return v;
}

SpinVector SpinVector::from_string(std::string_view text, VarDomain domain) {
  SpinVector v(text.size(), domain);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set_bit(i, true);
    } else if (text[i] != '0') {
      throw std::invalid_argument("state string must contain only 0/1");
    }
  }
  return v;
}

bool SpinVector::bit(std::size_t i) const {
  check_index(i, n_, "SpinVector::bit");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void SpinVector::set_bit(std::size_t i, bool value) {
  check_index(i, n_, "SpinVector::set_bit");
  std::uint64_t mask = 1ull << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

SpinVector SpinVector::as_binary() const {
  SpinVector v = *this;
  v.domain_ = VarDomain::Binary;
  return v;
}

SpinVector SpinVector::as_spin() const {
  SpinVector v = *this;
  v.domain_ = VarDomain::Spin;
  return v;
}

std::size_t SpinVector::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

std::string SpinVector::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuboModel

void QuboModel::add_linear(std::size_t i, double c) {
  check_index(i, n_vars_, "QuboModel::add_linear");
  accumulate(linear_, i, c);
}

void QuboModel::add_quadratic(std::size_t i, std::size_t j, double c) {
  check_index(i, n_vars_, "QuboModel::add_quadratic");
  check_index(j, n_vars_, "QuboModel::add_quadratic");
  if (i == j) {
    throw std::invalid_argument(
        "QuboModel::add_quadratic: diagonal entry (" + std::to_string(i) +
        "," + std::to_string(j) + "); fold x^2 = x into the linear term");
  }
  if (i > j) std::swap(i, j);
  accumulate(quadratic_, std::make_pair(i, j), c);
}

double QuboModel::linear(std::size_t i) const {
  auto it = linear_.find(i);
  return it == linear_.end() ? 0.0 : it->second;
}

double QuboModel::quadratic(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? 0.0 : it->second;
}

void QuboModel::set_label(std::size_t i, std::string label) {
  check_index(i, n_vars_, "QuboModel::set_label");
  labels_[i] = std::move(label);
}

bool QuboModel::is_integral() const {
  if (!integral(offset_)) return false;
  for (const auto& [i, c] : linear_) {
    if (!integral(c)) return false;
  }
  for (const auto& [ij, c] : quadratic_) {
    if (!integral(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// IsingModel

void IsingModel::add_field(std::size_t i, double h) {
  check_index(i, n_spins_, "IsingModel::add_field");
  accumulate(fields_, i, h);
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, double J) {
  check_index(i, n_spins_, "IsingModel::add_coupling");
  check_index(j, n_spins_, "IsingModel::add_coupling");
  if (i == j) {
    throw std::invalid_argument(
        "IsingModel::add_coupling: diagonal entry; s^2 = 1 is a constant");
  }
  if (i > j) std::swap(i, j);
  accumulate(couplings_, std::make_pair(i, j), J);
}

double IsingModel::field(std::size_t i) const {
  auto it = fields_.find(i);
  return it == fields_.end() ? 0.0 : it->second;
}

double IsingModel::coupling(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = couplings_.find({i, j});
  return it == couplings_.end() ? 0.0 : it->second;
}

void IsingModel::set_label(std::size_t i, std::string label) {
  check_index(i, n_spins_, "IsingModel::set_label");
  labels_[i] = std::move(label);
}

bool IsingModel::is_integral() const {
  if (!integral(offset_)) return false;
  for (const auto& [i, c] : fields_) {
    if (!integral(c)) return false;
  }
  for (const auto& [ij, c] : couplings_) {
    if (!integral(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Energy evaluation

double qubo_energy(const QuboModel& model, const SpinVector& x) {
  if (x.size() != model.n_vars()) {
    throw std::invalid_argument("qubo_energy: assignment length " +
                                std::to_string(x.size()) + " != n_vars " +
                                std::to_string(model.n_vars()));
  }
  if (x.domain() != VarDomain::Binary) {
    throw std::domain_error("qubo_energy: expected a binary assignment");
  }
  double e = model.offset();
  for (const auto& [i, c] : model.linear_terms()) {
    if (x.bit(i)) e += c;
  }
  for (const auto& [ij, c] : model.quadratic_terms()) {
    if (x.bit(ij.first) && x.bit(ij.second)) e += c;
  }
  return e;
}

double ising_energy(const IsingModel& model, const SpinVector& s) {
  if (s.size() != model.n_spins()) {
    throw std::invalid_argument("ising_energy: assignment length " +
                                std::to_string(s.size()) + " != n_spins " +
                                std::to_string(model.n_spins()));
  }
  if (s.domain() != VarDomain::Spin) {
    throw std::domain_error("ising_energy: expected a +/-1 spin assignment");
  }
  double e = model.offset();
  for (const auto& [i, h] : model.fields()) {
    e += h * s.spin(i);
  }
  for (const auto& [ij, J] : model.couplings()) {
    e += J * s.spin(ij.first) * s.spin(ij.second);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Conversions
//
// Substituting x = (1 + s) / 2:
//   c x          -> c/2 + (c/2) s
//   q x_i x_j    -> q/4 (1 + s_i + s_j + s_i s_j)
// and the inverse s = 2x - 1:
//   h s          -> 2h x - h
//   J s_i s_j    -> 4J x_i x_j - 2J x_i - 2J x_j + J

IsingModel qubo_to_ising(const QuboModel& model) {
  IsingModel out(model.n_vars());
  out.set_offset(model.offset());
  for (const auto& [i, c] : model.linear_terms()) {
    out.add_field(i, c / 2.0);
    out.add_offset(c / 2.0);
  }
  for (const auto& [ij, q] : model.quadratic_terms()) {
    out.add_coupling(ij.first, ij.second, q / 4.0);
    out.add_field(ij.first, q / 4.0);
    out.add_field(ij.second, q / 4.0);
    out.add_offset(q / 4.0);
  }
  for (const auto& [i, label] : model.labels()) {
    out.set_label(i, label);
  }
  return out;
}

QuboModel ising_to_qubo(const IsingModel& model) {
  QuboModel out(model.n_spins());
  out.set_offset(model.offset());
  for (const auto& [i, h] : model.fields()) {
    out.add_linear(i, 2.0 * h);
    out.add_offset(-h);
  }
  for (const auto& [ij, J] : model.couplings()) {
    out.add_quadratic(ij.first, ij.second, 4.0 * J);
    out.add_linear(ij.first, -2.0 * J);
    out.add_linear(ij.second, -2.0 * J);
    out.add_offset(J);
  }
  for (const auto& [i, label] : model.labels()) {
    out.set_label(i, label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using detail::json;

json labels_to_json(const std::map<std::size_t, std::string>& labels) {
  json j = json::object();
  for (const auto& [i, label] : labels) {
    j[std::to_string(i)] = label;
  }
  return j;
}

void labels_from_json(const json& j, std::size_t n,
                      const std::function<void(std::size_t, std::string)>& set) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t i = std::stoull(it.key());
    if (i >= n) {
      throw std::invalid_argument("model JSON: label index out of range");
    }
    set(i, it.value().get<std::string>());
  }
}

}  // namespace

std::string QuboModel::to_json() const {
  json j;
  j["n_vars"] = n_vars_;
  j["offset"] = offset_;
  json lin = json::array();
  for (const auto& [i, c] : linear_) lin.push_back({i, c});
  j["linear"] = std::move(lin);
  json quad = json::array();
  for (const auto& [ij, c] : quadratic_) quad.push_back({ij.first, ij.second, c});
  j["quadratic"] = std::move(quad);
  j["labels"] = labels_to_json(labels_);
  return j.dump();
}

QuboModel QuboModel::from_json(const std::string& text) {
  json j = detail::parse_json(text, "QuboModel");
  QuboModel model(detail::require_key(j, "n_vars", "QuboModel").get<std::size_t>());
  if (j.contains("offset")) model.set_offset(j["offset"].get<double>());
  if (j.contains("linear")) {
    for (const auto& entry : j["linear"]) {
      model.add_linear(entry.at(0).get<std::size_t>(), entry.at(1).get<double>());
    }
  }
  if (j.contains("quadratic")) {
    for (const auto& entry : j["quadratic"]) {
      model.add_quadratic(entry.at(0).get<std::size_t>(),
                          entry.at(1).get<std::size_t>(),
                          entry.at(2).get<double>());
    }
  }
  if (j.contains("labels")) {
    labels_from_json(j["labels"], model.n_vars(),
                     [&](std::size_t i, std::string s) { model.set_label(i, std::move(s)); });
  }
  return model;
}

std::string IsingModel::to_json() const {
  json j;
  j["n_spins"] = n_spins_;
  j["offset"] = offset_;
  json h = json::array();
  for (const auto& [i, c] : fields_) h.push_back({i, c});
  j["h"] = std::move(h);
  json J = json::array();
  for (const auto& [ij, c] : couplings_) J.push_back({ij.first, ij.second, c});
  j["J"] = std::move(J);
  j["labels"] = labels_to_json(labels_);
  return j.dump();
}

IsingModel IsingModel::from_json(const std::string& text) {
  json j = detail::parse_json(text, "IsingModel");
  IsingModel model(detail::require_key(j, "n_spins", "IsingModel").get<std::size_t>());
  if (j.contains("offset")) model.set_offset(j["offset"].get<double>());
  if (j.contains("h")) {
    for (const auto& entry : j["h"]) {
      model.add_field(entry.at(0).get<std::size_t>(), entry.at(1).get<double>());
    }
  }
  if (j.contains("J")) {
    for (const auto& entry : j["J"]) {
      model.add_coupling(entry.at(0).get<std::size_t>(),
                         entry.at(1).get<std::size_t>(),
                         entry.at(2).get<double>());
    }
  }
  if (j.contains("labels")) {
    labels_from_json(j["labels"], model.n_spins(),
                     [&](std::size_t i, std::string s) { model.set_label(i, std::move(s)); });
  }
  return model;
}

AnyModel model_from_json(const std::string& text) {
  json j = detail::parse_json(text, "model");
  if (j.contains("n_vars")) return QuboModel::from_json(text);
  if (j.contains("n_spins")) return IsingModel::from_json(text);
  throw std::invalid_argument("model JSON: expected \"n_vars\" or \"n_spins\"");
}

std::string model_to_json(const AnyModel& model) {
  return std::visit([](const auto& m) { return m.to_json(); }, model);
}

std::size_t model_size(const AnyModel& model) {
  if (const auto* q = std::get_if<QuboModel>(&model)) return q->n_vars();
  return std::get<IsingModel>(model).n_spins();
}

namespace detail {

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace detail

}  // namespace qubopt
