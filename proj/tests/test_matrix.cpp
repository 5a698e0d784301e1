// Copyright 2026 The cs3 Authors
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

#include "cs3/matrix.hpp"

#include <doctest.h>

#include "cs3/circuit.hpp"
#include "oracles.hpp"

using namespace cs3;
using cs3::testing::det_cofactor;

namespace {

const Gate3 kGenerators[9] = {Gate3::ScalarI, Gate3::K0,   Gate3::K1,
                              Gate3::K2,      Gate3::S0,   Gate3::S1,
                              Gate3::S2,      Gate3::CS01, Gate3::CS12};

ExactMatrix random_generator_product(std::mt19937_64& rng, size_t len) {
  ExactMatrix m = ExactMatrix::identity(8);
  std::uniform_int_distribution<size_t> pick(0, 8);
  for (size_t i = 0; i < len; ++i) m = m * gate_matrix(kGenerators[pick(rng)]);
  return m;
}

}  // namespace

TEST_CASE("matmul basics") {
  const ExactMatrix& k = block_K();
  // K^2 = i^3 I
  ExactMatrix k2 = k * k;
  CHECK(k2 == ExactMatrix::scalar(2, DyadicGaussian::i_power(3)));

  // (SK)^3 = i^3 I
  ExactMatrix sk = block_S() * k;
  CHECK(sk * sk * sk == ExactMatrix::scalar(2, DyadicGaussian::i_power(3)));

  // I * A = A
  CHECK(ExactMatrix::identity(2) * k == k);

  CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 2), DimensionError);
}

TEST_CASE("tensor") {
  // CS (x) I2 is the 8x8 two-qubit phase on qubits 0 and 1
  ExactMatrix cs01 = tensor(block_CS(), ExactMatrix::identity(2));
  CHECK(cs01 == testing::diag_phase_3q([](int a, int b, int) { return a * b; }));

  ExactMatrix i2 = ExactMatrix::identity(2);
  CHECK(tensor(tensor(i2, i2), i2) == ExactMatrix::identity(8));

  // associativity instance: K (x) I4 = (K (x) I2) (x) I2
  CHECK(tensor(block_K(), ExactMatrix::identity(4)) ==
        tensor(tensor(block_K(), i2), i2));
}

TEST_CASE("adjoint and unitarity") {
  auto [kadj, kunit] = adjoint_and_unitarity(block_K());
  CHECK(kunit);
  CHECK(kadj * block_K() == ExactMatrix::identity(2));

  ExactMatrix d = ExactMatrix::identity(4);
  d.at(3, 3) = DyadicGaussian::from_integers(2, 0);
  CHECK_FALSE(d.is_unitary());

  for (Gate3 g : kGenerators) CHECK(gate_matrix(g).is_unitary());

  // (A B)^dag = B^dag A^dag on random generator products
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    ExactMatrix a = random_generator_product(rng, 6);
    ExactMatrix b = random_generator_product(rng, 6);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK((a * b).is_unitary());
    CHECK(tensor(block_K(), block_K()).is_unitary());
  }
}

TEST_CASE("determinants") {
  CHECK(block_CS().det_exact() == DyadicGaussian::imag_unit());
  // det K = i by 2x2 cofactor expansion
  CHECK(block_K().det_exact() == DyadicGaussian::imag_unit());
  CHECK(block_K().det_exact() == det_cofactor(block_K()));

  for (Gate3 g : kGenerators) {
    DyadicGaussian d = gate_matrix(g).det_exact();
    bool pm1 = d.is_one() || d == DyadicGaussian::from_integers(-1, 0);
    CHECK(pm1);
    CHECK(d == det_cofactor(gate_matrix(g)));
  }
  // det(CS01) = det(CS)^2 = -1
  CHECK(gate_matrix(Gate3::CS01).det_exact() == DyadicGaussian::from_integers(-1, 0));

  // multiplicativity on random generator products, against the cofactor oracle
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix a = random_generator_product(rng, 5);
    ExactMatrix b = random_generator_product(rng, 5);
    DyadicGaussian da = a.det_exact(), db = b.det_exact();
    CHECK((a * b).det_exact() == da * db);
    CHECK(da == det_cofactor(a));
  }

  // Bareiss handles a singular matrix and a pivot-swap case
  ExactMatrix z(3, 3);
  CHECK(z.det_exact() == DyadicGaussian::zero());
  ExactMatrix p(3, 3);
  p.at(0, 1) = DyadicGaussian::one();
  p.at(1, 0) = DyadicGaussian::one();
  p.at(2, 2) = DyadicGaussian::one();
  CHECK(p.det_exact() == DyadicGaussian::from_integers(-1, 0));
  CHECK(p.det_exact() == det_cofactor(p));
}

TEST_CASE("determinant fuzz against the cofactor oracle") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> kd(0, 2);
  std::uniform_int_distribution<size_t> nd(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = nd(rng);
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (rng() % 4 == 0) continue;  // sprinkle exact zeros
        m.at(i, j) = DyadicGaussian(entry(rng), entry(rng),
                                    static_cast<uint32_t>(kd(rng)));
      }
    if (rng() % 5 == 0 && n >= 2) {
      // duplicate a row: determinant must come out exactly zero
      for (size_t j = 0; j < n; ++j) m.at(1, j) = m.at(0, j);
    }
    CHECK(m.det_exact() == det_cofactor(m));
  }
}

TEST_CASE("level matrices") {
  ExactMatrix i0 = level_matrix(LevelKind::I, 0, std::nullopt, 2);
  CHECK(i0.at(0, 0) == DyadicGaussian::imag_unit());
  CHECK(i0.at(1, 1).is_one());

  CHECK(level_matrix(LevelKind::X, 0, 1, 2) == block_X());
  CHECK(level_matrix(LevelKind::K, 0, 1, 2) == block_K());

  for (size_t n : {2, 5, 8})
    for (size_t j = 0; j < n; ++j)
      CHECK(level_matrix(LevelKind::I, j, std::nullopt, n).det_exact() ==
            DyadicGaussian::imag_unit());

  CHECK_THROWS_AS(level_matrix(LevelKind::K, 3, 2, 8), std::out_of_range);
  CHECK_THROWS_AS(level_matrix(LevelKind::I, 9, std::nullopt, 8), std::out_of_range);

  // embedded two-level blocks are unitary
  CHECK(level_matrix(LevelKind::K, 1, 5, 8).is_unitary());
  CHECK(level_matrix(LevelKind::X, 2, 3, 8).is_unitary());
}

TEST_CASE("structure predicates") {
  CHECK(ExactMatrix::identity(8).is_permutation());
  CHECK(ExactMatrix::identity(8).is_monomial());
  CHECK(gate_matrix(Gate3::S0).is_diagonal());
  CHECK(gate_matrix(Gate3::S0).is_monomial());
  CHECK_FALSE(gate_matrix(Gate3::S0).is_permutation());
  CHECK_FALSE(gate_matrix(Gate3::K0).is_monomial());
  CHECK(gate_matrix(Gate3::CCX0).is_permutation());
}

TEST_CASE("json dump round-trip") {
  std::mt19937_64 rng(37);
  ExactMatrix m = random_generator_product(rng, 8);
  CHECK(ExactMatrix::from_json(m.to_json()) == m);
  CHECK(m.pretty().size() > 0);
}
