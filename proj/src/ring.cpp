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

#include "cs3/ring.hpp"

namespace cs3 {

void DyadicGaussian::canonicalize() {
  if (re_ == 0 && im_ == 0) {
    k_ = 0;
    return;
  }
  // (a+bi)/(1+i) = ((a+b) + (b-a)i) / 2, integral iff a+b is even.
  while (k_ > 0 && ((re_ + im_) & 1) == 0) {
    BigInt nre = (re_ + im_) / 2;
    BigInt nim = (im_ - re_) / 2;
    re_ = std::move(nre);
    im_ = std::move(nim);
    --k_;
  }
}

DyadicGaussian DyadicGaussian::i_power(int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return from_integers(1, 0);
    case 1: return from_integers(0, 1);
    case 2: return from_integers(-1, 0);
    default: return from_integers(0, -1);
  }
}

DyadicGaussian operator+(const DyadicGaussian& a, const DyadicGaussian& b) {
  BigInt are = a.re_, aim = a.im_, bre = b.re_, bim = b.im_;
  uint32_t k = std::max(a.k_, b.k_);
  for (uint32_t t = a.k_; t < k; ++t) mul_one_plus_i(are, aim);
  for (uint32_t t = b.k_; t < k; ++t) mul_one_plus_i(bre, bim);
  return DyadicGaussian(are + bre, aim + bim, k);
}

DyadicGaussian operator-(const DyadicGaussian& a, const DyadicGaussian& b) {
  return a + (-b);
}

DyadicGaussian operator*(const DyadicGaussian& a, const DyadicGaussian& b) {
  return DyadicGaussian(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_, a.k_ + b.k_);
}

DyadicGaussian DyadicGaussian::conj() const {
  // conj over (1+i)^k: (1-i) = -i(1+i), so 1/(1-i)^k = i^k/(1+i)^k.
  BigInt re = re_, im = -im_;
  for (uint32_t t = 0; t < k_ % 4; ++t) {
    BigInt nre = -im, nim = re;
    re = std::move(nre);
    im = std::move(nim);
  }
  return DyadicGaussian(std::move(re), std::move(im), k_);
}

std::optional<int> DyadicGaussian::as_i_power() const {
  if (k_ != 0) return std::nullopt;
  if (re_ == 1 && im_ == 0) return 0;
  if (re_ == 0 && im_ == 1) return 1;
  if (re_ == -1 && im_ == 0) return 2;
  if (re_ == 0 && im_ == -1) return 3;
  return std::nullopt;
}

std::strong_ordering DyadicGaussian::operator<=>(const DyadicGaussian& o) const {
  if (auto c = k_ <=> o.k_; c != 0) return c;
  if (re_ != o.re_) return re_ < o.re_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (im_ != o.im_) return im_ < o.im_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicGaussian::str() const {
  if (is_zero()) return "0";
  std::string num;
  if (im_ == 0) {
    num = re_.str();
  } else if (re_ == 0) {
    if (im_ == 1) num = "i";
    else if (im_ == -1) num = "-i";
    else num = im_.str() + "i";
  } else {
    num = re_.str();
    if (im_ == 1) num += "+i";
    else if (im_ == -1) num += "-i";
    else num += (im_ > 0 ? "+" : "") + im_.str() + "i";
  }
  if (k_ == 0) return num;
  std::string den = k_ == 1 ? "(1+i)" : "(1+i)^" + std::to_string(k_);
  if (im_ != 0 && re_ != 0) num = "(" + num + ")";
  return num + "/" + den;
}

nlohmann::json DyadicGaussian::to_json() const {
  return nlohmann::json::array({re_.str(), im_.str(), k_});
}

DyadicGaussian DyadicGaussian::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("expected [re, im, k] triple");
  auto parse = [](const nlohmann::json& v) -> BigInt {
    if (v.is_string()) return BigInt(v.get<std::string>());
    return BigInt(v.get<int64_t>());
  };
  return DyadicGaussian(parse(j[0]), parse(j[1]), j[2].get<uint32_t>());
}

}  // namespace cs3
