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

#include <sstream>

namespace cs3 {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = DyadicGaussian::one();
  return m;
}

ExactMatrix ExactMatrix::scalar(size_t n, const DyadicGaussian& c) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matmul: " + std::to_string(a.cols_) + " x " +
                         std::to_string(b.rows_) + " inner dimensions");
  ExactMatrix c(a.rows_, b.cols_);
  // Skip zero multiplicands: group elements here are often monomial or
  // two-level, which makes the product effectively O(n^2).
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const DyadicGaussian& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const DyadicGaussian& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix ExactMatrix::scaled_by(const DyadicGaussian& c) const {
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_unitary() const {
  if (!is_square()) return false;
  return (*this * adjoint()).is_identity();
}

bool ExactMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_permutation() const {
  if (!is_square()) return false;
  std::vector<uint8_t> row_hit(rows_, 0);
  for (size_t j = 0; j < cols_; ++j) {
    size_t hits = 0, hit_row = 0;
    for (size_t i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      if (!at(i, j).is_one()) return false;
      ++hits;
      hit_row = i;
    }
    if (hits != 1 || row_hit[hit_row]++) return false;
  }
  return true;
}

bool ExactMatrix::is_monomial() const {
  if (!is_square()) return false;
  std::vector<uint8_t> row_hit(rows_, 0);
  for (size_t j = 0; j < cols_; ++j) {
    size_t hits = 0, hit_row = 0;
    for (size_t i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      ++hits;
      hit_row = i;
    }
    if (hits != 1 || row_hit[hit_row]++) return false;
  }
  return true;
}

namespace {

struct GaussInt {
  BigInt re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt gi_sub(const GaussInt& a, const GaussInt& b) {
  return {a.re - b.re, a.im - b.im};
}

// Exact division in Z[i]; the Bareiss invariant guarantees divisibility.
GaussInt gi_div_exact(const GaussInt& a, const GaussInt& d) {
  BigInt norm = d.re * d.re + d.im * d.im;
  GaussInt num = gi_mul(a, {d.re, -d.im});
  if (num.re % norm != 0 || num.im % norm != 0)
    throw InternalError("det_exact: non-exact division in Bareiss step");
  return {num.re / norm, num.im / norm};
}

}  // namespace

DyadicGaussian ExactMatrix::det_exact() const {
  if (!is_square()) throw DimensionError("det_exact: matrix not square");
  size_t n = rows_;
  if (n == 0) return DyadicGaussian::one();

  uint32_t kmax = 0;
  for (const auto& e : entries_) kmax = std::max(kmax, e.denom_exp());

  // Clear to Gaussian integers: entry * (1+i)^kmax.
  std::vector<GaussInt> m(n * n);
  for (size_t i = 0; i < n * n; ++i) {
    BigInt re = entries_[i].num_re(), im = entries_[i].num_im();
    for (uint32_t t = entries_[i].denom_exp(); t < kmax; ++t) mul_one_plus_i(re, im);
    m[i] = {std::move(re), std::move(im)};
  }
  auto at2 = [&](size_t i, size_t j) -> GaussInt& { return m[i * n + j]; };

  GaussInt prev{1, 0};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (at2(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && at2(p, k).is_zero()) ++p;
      if (p == n) return DyadicGaussian::zero();
      for (size_t j = 0; j < n; ++j) std::swap(at2(k, j), at2(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        GaussInt t = gi_sub(gi_mul(at2(i, j), at2(k, k)), gi_mul(at2(i, k), at2(k, j)));
        at2(i, j) = gi_div_exact(t, prev);
      }
      at2(i, k) = {0, 0};
    }
    prev = at2(k, k);
  }
  GaussInt det = at2(n - 1, n - 1);
  if (sign < 0) det = {-det.re, -det.im};
  return DyadicGaussian(std::move(det.re), std::move(det.im),
                        kmax * static_cast<uint32_t>(n));
}

nlohmann::json ExactMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < cols_; ++j) row.push_back(at(i, j).to_json());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix ExactMatrix::from_json(const nlohmann::json& j) {
  size_t rows = j.size();
  size_t cols = rows ? j[0].size() : 0;
  ExactMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t c = 0; c < cols; ++c) m.at(i, c) = DyadicGaussian::from_json(j[i][c]);
  return m;
}

std::string ExactMatrix::pretty() const {
  std::vector<std::string> cells(rows_ * cols_);
  std::vector<size_t> width(cols_, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      cells[i * cols_ + j] = at(i, j).str();
      width[j] = std::max(width[j], cells[i * cols_ + j].size());
    }
  std::ostringstream out;
  for (size_t i = 0; i < rows_; ++i) {
    out << "[ ";
    for (size_t j = 0; j < cols_; ++j) {
      const std::string& s = cells[i * cols_ + j];
      out << std::string(width[j] - s.size(), ' ') << s << (j + 1 < cols_ ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

std::string ExactMatrix::key() const {
  std::ostringstream out;
  out << rows_ << 'x' << cols_ << ':';
  for (const auto& e : entries_)
    out << e.num_re().str() << ',' << e.num_im().str() << ',' << e.denom_exp() << ';';
  return out.str();
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t ia = 0; ia < a.rows(); ++ia)
    for (size_t ja = 0; ja < a.cols(); ++ja) {
      if (a.at(ia, ja).is_zero()) continue;
      for (size_t ib = 0; ib < b.rows(); ++ib)
        for (size_t jb = 0; jb < b.cols(); ++jb)
          c.at(ia * b.rows() + ib, ja * b.cols() + jb) = a.at(ia, ja) * b.at(ib, jb);
    }
  return c;
}

std::pair<ExactMatrix, bool> adjoint_and_unitarity(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionError("adjoint_and_unitarity: matrix not square");
  ExactMatrix adj = a.adjoint();
  return {adj, (a * adj).is_identity()};
}

ExactMatrix level_matrix(LevelKind kind, size_t j, std::optional<size_t> k, size_t n) {
  if (j >= n || (k && (*k >= n || j >= *k)))
    throw std::out_of_range("level_matrix: indices out of range (need j < k < n)");
  ExactMatrix m = ExactMatrix::identity(n);
  switch (kind) {
    case LevelKind::I:
      m.at(j, j) = DyadicGaussian::imag_unit();
      break;
    case LevelKind::X: {
      if (!k) throw std::out_of_range("level_matrix: X requires two indices");
      m.at(j, j) = DyadicGaussian::zero();
      m.at(*k, *k) = DyadicGaussian::zero();
      m.at(j, *k) = DyadicGaussian::one();
      m.at(*k, j) = DyadicGaussian::one();
      break;
    }
    case LevelKind::K: {
      if (!k) throw std::out_of_range("level_matrix: K requires two indices");
      DyadicGaussian h = DyadicGaussian::inv_one_plus_i();
      m.at(j, j) = h;
      m.at(j, *k) = h;
      m.at(*k, j) = h;
      m.at(*k, *k) = -h;
      break;
    }
  }
  return m;
}

const ExactMatrix& block_K() {
  static const ExactMatrix m = level_matrix(LevelKind::K, 0, 1, 2);
  return m;
}

const ExactMatrix& block_X() {
  static const ExactMatrix m = level_matrix(LevelKind::X, 0, 1, 2);
  return m;
}

const ExactMatrix& block_S() {
  static const ExactMatrix m = [] {
    ExactMatrix s = ExactMatrix::identity(2);
    s.at(1, 1) = DyadicGaussian::imag_unit();
    return s;
  }();
  return m;
}

const ExactMatrix& block_CS() {
  static const ExactMatrix m = [] {
    ExactMatrix cs = ExactMatrix::identity(4);
    cs.at(3, 3) = DyadicGaussian::imag_unit();
    return cs;
  }();
  return m;
}

}  // namespace cs3
