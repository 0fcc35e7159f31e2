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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qubopt/gcp.hpp"
#include "qubopt/model.hpp"
#include "qubopt/polarity.hpp"

using namespace qubopt;

TEST_CASE("spin vector basics") {
  SpinVector x = SpinVector::from_string("0110", VarDomain::Binary);
  CHECK(x.size() == 4);
  CHECK(!x.bit(0));
  CHECK(x.bit(1));
  CHECK(x.to_string() == "0110");
  CHECK(x.count_ones() == 2);
  CHECK(x.as_spin().spin(0) == -1);
  CHECK(x.as_spin().spin(1) == +1);
  CHECK(SpinVector::from_bits(0b0110, 4, VarDomain::Binary) == x);
  CHECK_THROWS_AS(SpinVector::from_string("01x", VarDomain::Binary),
                  std::invalid_argument);

  SpinVector wide(100, VarDomain::Binary);
  wide.set_bit(99, true);
  CHECK(wide.count_ones() == 1);
  CHECK(wide.to_string().back() == '1');
}

TEST_CASE("qubo energy") {
  SUBCASE("constant model returns the offset") {
    QuboModel model(3);
    model.set_offset(5.0);
    CHECK(qubo_energy(model, SpinVector::from_string("101", VarDomain::Binary)) ==
          5.0);
    CHECK(qubo_energy(model, SpinVector::from_string("000", VarDomain::Binary)) ==
          5.0);
  }
  SUBCASE("hand expansion") {
    QuboModel model(2);
    model.add_linear(0, 1.0);
    model.add_linear(1, 3.0);
    model.add_quadratic(0, 1, 2.0);
    CHECK(qubo_energy(model, SpinVector::from_string("11", VarDomain::Binary)) ==
          6.0);
  }
  SUBCASE("proper coloring of a generated graph sits at zero") {
    GcpInstance inst = gen_complete_kpartite(6, 3);
    QuboModel model = build_gcp_qubo(inst, {4.0, 7.0});
    SpinVector x(model.n_vars(), VarDomain::Binary);
    for (std::size_t v = 0; v < 6; ++v) x.set_bit(v * 3 + v / 2, true);
    CHECK(qubo_energy(model, x) == 0.0);
  }
  SUBCASE("errors") {
    QuboModel model(2);
    CHECK_THROWS_AS(qubo_energy(model, SpinVector(3, VarDomain::Binary)),
                    std::invalid_argument);
    CHECK_THROWS_AS(qubo_energy(model, SpinVector(2, VarDomain::Spin)),
                    std::domain_error);
  }
}

TEST_CASE("ising energy") {
  IsingModel pair(2);
  pair.add_coupling(0, 1, 1.0);
  CHECK(ising_energy(pair, SpinVector::from_string("10", VarDomain::Spin)) ==
        -1.0);
  CHECK(ising_energy(pair, SpinVector::from_string("11", VarDomain::Spin)) ==
        1.0);
  CHECK_THROWS_AS(ising_energy(pair, SpinVector(2, VarDomain::Binary)),
                  std::domain_error);

  // One-positive states of the 5-spin one-hot group are the brute-force
  // minima.
  IsingModel onehot = one_hot_ising({5, 1, 1.0});
  double brute_min = 0.0;
  for (std::uint64_t s = 0; s < 32; ++s) {
    const double e =
        ising_energy(onehot, SpinVector::from_bits(s, 5, VarDomain::Spin));
    if (s == 0 || e < brute_min) brute_min = e;
  }
  SpinVector one_pos(5, VarDomain::Spin);
  one_pos.set_bit(2, true);
  CHECK(ising_energy(onehot, one_pos) == brute_min);
}

TEST_CASE("qubo to ising") {
  SUBCASE("single linear term") {
    QuboModel model(1);
    model.add_linear(0, 4.0);
    IsingModel ising = qubo_to_ising(model);
    CHECK(ising.field(0) == 2.0);
    CHECK(ising.offset() == 2.0);
    CHECK(ising_energy(ising, SpinVector::from_string("0", VarDomain::Spin)) ==
          0.0);
    CHECK(ising_energy(ising, SpinVector::from_string("1", VarDomain::Spin)) ==
          4.0);
  }
  SUBCASE("zero model maps to zero model") {
    IsingModel ising = qubo_to_ising(QuboModel(4));
    CHECK(ising.fields().empty());
    CHECK(ising.couplings().empty());
    CHECK(ising.offset() == 0.0);
    QuboModel back = ising_to_qubo(IsingModel(4));
    CHECK(back.linear_terms().empty());
    CHECK(back.quadratic_terms().empty());
  }
  SUBCASE("energy equality on all states of a random 10-variable model") {
    std::mt19937_64 rng(7);
    QuboModel model = oracles::random_integer_qubo(10, rng);
    IsingModel ising = qubo_to_ising(model);
    for (std::uint64_t s = 0; s < 1024; ++s) {
      SpinVector x = SpinVector::from_bits(s, 10, VarDomain::Binary);
      CHECK(qubo_energy(model, x) == ising_energy(ising, x.as_spin()));
    }
  }
}

TEST_CASE("ising to qubo") {
  SUBCASE("round trip reproduces every energy") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      QuboModel model = oracles::random_integer_qubo(12, rng);
      QuboModel back = ising_to_qubo(qubo_to_ising(model));
      for (std::uint64_t s = 0; s < 4096; ++s) {
        SpinVector x = SpinVector::from_bits(s, 12, VarDomain::Binary);
        CHECK(qubo_energy(model, x) == qubo_energy(back, x));
      }
    }
  }
  SUBCASE("one-hot group maps to a QUBO with one-hot minima") {
    QuboModel qubo = ising_to_qubo(one_hot_ising({3, 1, 1.0}));
    auto naive = oracles::naive_spectrum(qubo);
    CHECK(naive.ground_states.size() == 3);
    for (std::uint64_t s : naive.ground_states) {
      CHECK(SpinVector::from_bits(s, 3, VarDomain::Binary).count_ones() == 1);
    }
  }
}

TEST_CASE("model invariants") {
  SUBCASE("diagonal quadratic entries are rejected") {
    QuboModel model(3);
    CHECK_THROWS_AS(model.add_quadratic(1, 1, 2.0), std::invalid_argument);
    IsingModel ising(3);
    CHECK_THROWS_AS(ising.add_coupling(2, 2, 1.0), std::invalid_argument);
  }
  SUBCASE("offset shifts every energy and no argmin") {
    std::mt19937_64 rng(3);
    QuboModel model = oracles::random_integer_qubo(8, rng);
    QuboModel shifted = model;
    shifted.add_offset(17.0);
    for (std::uint64_t s = 0; s < 256; ++s) {
      SpinVector x = SpinVector::from_bits(s, 8, VarDomain::Binary);
      CHECK(qubo_energy(shifted, x) == qubo_energy(model, x) + 17.0);
    }
  }
  SUBCASE("energy equivalence holds for real coefficients within 1e-9") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    QuboModel model(8);
    for (std::size_t i = 0; i < 8; ++i) {
      model.add_linear(i, coeff(rng));
      for (std::size_t j = i + 1; j < 8; ++j) {
        model.add_quadratic(i, j, coeff(rng));
      }
    }
    IsingModel ising = qubo_to_ising(model);
    for (std::uint64_t s = 0; s < 256; ++s) {
      SpinVector x = SpinVector::from_bits(s, 8, VarDomain::Binary);
      const double eq = qubo_energy(model, x);
      const double ei = ising_energy(ising, x.as_spin());
      CHECK(std::abs(eq - ei) <= 1e-9 * std::max(1.0, std::abs(eq)));
    }
  }
  SUBCASE("labels survive both conversions") {
    QuboModel model(2);
    model.add_linear(0, 1.0);
    model.set_label(0, "x[v=0,color=0]");
    model.set_label(1, "x[v=0,color=1]");
    IsingModel ising = qubo_to_ising(model);
    CHECK(ising.labels().at(0) == "x[v=0,color=0]");
    QuboModel back = ising_to_qubo(ising);
    CHECK(back.labels().at(1) == "x[v=0,color=1]");
  }
}

TEST_CASE("model json") {
  SUBCASE("integer round trip is exact") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      QuboModel model = oracles::random_integer_qubo(9, rng);
      model.set_label(0, "a");
      QuboModel back = QuboModel::from_json(model.to_json());
      CHECK(back.n_vars() == model.n_vars());
      CHECK(back.offset() == model.offset());
      CHECK(back.linear_terms() == model.linear_terms());
      CHECK(back.quadratic_terms() == model.quadratic_terms());
      CHECK(back.labels() == model.labels());
      CHECK(back.to_json() == model.to_json());
    }
  }
  SUBCASE("ising round trip") {
    IsingModel model = one_hot_ising({4, 2, 1.0});
    model.set_offset(-2.5);
    IsingModel back = IsingModel::from_json(model.to_json());
    CHECK(back.to_json() == model.to_json());
  }
  SUBCASE("model sniffing") {
    QuboModel q(2);
    q.add_linear(0, 1.0);
    AnyModel any = model_from_json(q.to_json());
    CHECK(std::holds_alternative<QuboModel>(any));
    CHECK(model_size(any) == 2);
    AnyModel ising = model_from_json(IsingModel(3).to_json());
    CHECK(std::holds_alternative<IsingModel>(ising));
    CHECK_THROWS_AS(model_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(model_from_json("not json"), std::invalid_argument);
  }
}
