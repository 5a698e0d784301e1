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

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace cs3 {

using BigInt = boost::multiprecision::cpp_int;

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// An exact element of Z[1/2, i], stored in (1+i)-adic canonical form:
/// the value is (num_re + num_im*i) / (1+i)^denom_exp, and either
/// denom_exp = 0 or num_re + num_im is odd (so (1+i) does not divide the
/// numerator). Two values are equal iff their canonical fields are equal.
class DyadicGaussian {
 public:
  DyadicGaussian() = default;  // zero

  /// Canonicalizing constructor for (re + im*i) / (1+i)^denom_exp.
  DyadicGaussian(BigInt re, BigInt im, uint32_t denom_exp)
      : re_(std::move(re)), im_(std::move(im)), k_(denom_exp) {
    canonicalize();
  }

  static DyadicGaussian from_integers(BigInt re, BigInt im) {
    return DyadicGaussian(std::move(re), std::move(im), 0);
  }
  static DyadicGaussian zero() { return {}; }
  static DyadicGaussian one() { return from_integers(1, 0); }
  static DyadicGaussian imag_unit() { return from_integers(0, 1); }
  /// 1/(1+i), the matrix entry of the scaled Hadamard gate K.
  static DyadicGaussian inv_one_plus_i() { return DyadicGaussian(1, 0, 1); }
  /// i^e for any integer e.
  static DyadicGaussian i_power(int64_t e);

  const BigInt& num_re() const { return re_; }
  const BigInt& num_im() const { return im_; }
  uint32_t denom_exp() const { return k_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return k_ == 0 && re_ == 1 && im_ == 0; }

  friend DyadicGaussian operator+(const DyadicGaussian& a, const DyadicGaussian& b);
  friend DyadicGaussian operator-(const DyadicGaussian& a, const DyadicGaussian& b);
  friend DyadicGaussian operator*(const DyadicGaussian& a, const DyadicGaussian& b);
  DyadicGaussian operator-() const { return DyadicGaussian(-re_, -im_, k_); }

  DyadicGaussian& operator+=(const DyadicGaussian& o) { return *this = *this + o; }
  DyadicGaussian& operator-=(const DyadicGaussian& o) { return *this = *this - o; }
  DyadicGaussian& operator*=(const DyadicGaussian& o) { return *this = *this * o; }

  /// Complex conjugate. Exact: conj((a+bi)/(1+i)^k) = i^k (a-bi)/(1+i)^k.
  DyadicGaussian conj() const;
  /// Multiplication by the scalar i (a rotation of the numerator).
  DyadicGaussian times_i() const { return DyadicGaussian(-im_, re_, k_); }
  /// |a|^2 = a * conj(a); always real and non-negative.
  DyadicGaussian norm_squared() const { return *this * conj(); }

  /// If the value is exactly i^e for e in {0,1,2,3}, returns e.
  std::optional<int> as_i_power() const;

  bool operator==(const DyadicGaussian&) const = default;
  /// Arbitrary total order on canonical fields (for ordered containers).
  std::strong_ordering operator<=>(const DyadicGaussian& o) const;

  /// Rendering like "1+2i/(1+i)^3"; "0", "1", "i", "-i", ... for simple values.
  std::string str() const;
  /// JSON triple [re, im, k]; numerators as decimal strings (they can
  /// exceed the exact integer range of JSON numbers).
  nlohmann::json to_json() const;
  static DyadicGaussian from_json(const nlohmann::json& j);

 private:
  BigInt re_{0};
  BigInt im_{0};
  uint32_t k_{0};

  void canonicalize();
};

/// Numerator of value * (1+i): (a, b) -> (a - b, a + b).
inline void mul_one_plus_i(BigInt& re, BigInt& im) {
  BigInt t = re - im;
  im += re;
  re = std::move(t);
}

}  // namespace cs3
