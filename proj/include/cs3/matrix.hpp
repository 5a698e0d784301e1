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

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cs3/ring.hpp"

namespace cs3 {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense matrix over Z[1/2, i] with exact arithmetic throughout.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(size_t n);
  /// Scalar matrix c * I_n.
  static ExactMatrix scalar(size_t n, const DyadicGaussian& c);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const DyadicGaussian& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  DyadicGaussian& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const DyadicGaussian& operator()(size_t i, size_t j) const { return at(i, j); }

  bool operator==(const ExactMatrix&) const = default;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled_by(const DyadicGaussian& c) const;
  ExactMatrix adjoint() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool is_unitary() const;
  bool is_diagonal() const;
  /// True when the matrix is 0/1 with exactly one 1 per row and column.
  bool is_permutation() const;
  /// True when there is exactly one nonzero entry per row and column.
  bool is_monomial() const;

  /// Exact determinant by fraction-free (Bareiss) elimination over the
  /// Gaussian integers after clearing all entries to a common (1+i)-power.
  DyadicGaussian det_exact() const;

  /// Array of rows of [re, im, k] triples.
  nlohmann::json to_json() const;
  static ExactMatrix from_json(const nlohmann::json& j);
  std::string pretty() const;
  /// Compact serialization usable as a map/set key.
  std::string key() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<DyadicGaussian> entries_;
};

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

/// Conjugate transpose plus an exact unitarity check, in one call.
std::pair<ExactMatrix, bool> adjoint_and_unitarity(const ExactMatrix& a);

enum class LevelKind : uint8_t { I, X, K };

/// The one- and two-level generators of U_n(Z[1/2,i]): i at index j, or the
/// X / K block placed at rows and columns j < k.
ExactMatrix level_matrix(LevelKind kind, size_t j, std::optional<size_t> k, size_t n);

/// The 2x2 blocks the generators are built from.
const ExactMatrix& block_K();
const ExactMatrix& block_S();
const ExactMatrix& block_X();
const ExactMatrix& block_CS();

}  // namespace cs3
