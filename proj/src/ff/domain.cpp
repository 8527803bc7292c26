// Copyright 2026 The carbonzk Authors.
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

#include "carbonzk/poly/domain.hpp"

#include <stdexcept>
#include <utility>

#include "carbonzk/ff/bigint.hpp"

namespace carbonzk {

EvaluationDomain::EvaluationDomain(size_t min_size) {
  while (size_ < min_size) {
    size_ <<= 1;
    ++log_size_;
  }
  if (log_size_ > Bn254FrConfig::kTwoAdicity) {
    throw std::invalid_argument("evaluation domain too large for Fr");
  }
  BigInt exp = (to_bigint(Fr::kModulus) - 1) >> log_size_;
  omega_ = Fr::from_uint(Bn254FrConfig::kMultiplicativeGenerator).pow(to_u256(exp));
  omega_inv_ = omega_.inverse();
  size_inv_ = Fr::from_uint(size_).inverse();
  // twiddles_[k] = omega^k for k < n/2.
  twiddles_.resize(size_ / 2 + 1);
  inv_twiddles_.resize(size_ / 2 + 1);
  Fr w = Fr::one(), wi = Fr::one();
  for (size_t k = 0; k < twiddles_.size(); ++k) {
    twiddles_[k] = w;
    inv_twiddles_[k] = wi;
    w *= omega_;
    wi *= omega_inv_;
  }
}

Fr EvaluationDomain::element(size_t i) const { return omega_.pow(U256(i)); }

void EvaluationDomain::transform(std::span<Fr> a, const std::vector<Fr>& tw) const {
  if (a.size() != size_) throw std::invalid_argument("fft input size mismatch");
  const size_t n = size_;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t half = len / 2;
    const size_t step = n / len;
    for (size_t start = 0; start < n; start += len) {
      for (size_t k = 0; k < half; ++k) {
        Fr t = a[start + k + half] * tw[k * step];
        a[start + k + half] = a[start + k] - t;
        a[start + k] += t;
      }
    }
  }
}

void EvaluationDomain::fft(std::span<Fr> values) const { transform(values, twiddles_); }

void EvaluationDomain::ifft(std::span<Fr> values) const {
  transform(values, inv_twiddles_);
  for (auto& v : values) v *= size_inv_;
}

void EvaluationDomain::coset_fft(std::span<Fr> values, const Fr& shift) const {
  Fr s = Fr::one();
  for (auto& v : values) {
    v *= s;
    s *= shift;
  }
  fft(values);
}

void EvaluationDomain::coset_ifft(std::span<Fr> values, const Fr& shift) const {
  ifft(values);
  Fr inv = shift.inverse();
  Fr s = Fr::one();
  for (auto& v : values) {
    v *= s;
    s *= inv;
  }
}

Fr EvaluationDomain::vanishing_at(const Fr& x) const {
  return x.pow(U256(size_)) - Fr::one();
}

std::vector<Fr> EvaluationDomain::lagrange_at(const Fr& x) const {
  // L_i(x) = Z(x) * omega^i / (n * (x - omega^i))
  std::vector<Fr> denoms(size_);
  Fr w = Fr::one();
  for (size_t i = 0; i < size_; ++i) {
    denoms[i] = x - w;
    w *= omega_;
  }
  batch_invert(std::span<Fr>(denoms));
  Fr scale = vanishing_at(x) * size_inv_;
  w = Fr::one();
  for (size_t i = 0; i < size_; ++i) {
    denoms[i] *= scale * w;
    w *= omega_;
  }
  return denoms;
}

}  // namespace carbonzk
