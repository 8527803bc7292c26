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

#ifndef CARBONZK_POLY_DOMAIN_HPP_
#define CARBONZK_POLY_DOMAIN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "carbonzk/ff/bn254.hpp"

namespace carbonzk {

// Multiplicative subgroup of Fr of power-of-two order, with radix-2 FFTs.
class EvaluationDomain {
 public:
  // Smallest power-of-two domain holding at least min_size points.
  explicit EvaluationDomain(size_t min_size);

  size_t size() const { return size_; }
  const Fr& generator() const { return omega_; }
  Fr element(size_t i) const;

  // Coefficients -> evaluations over the domain (and the inverse).
  void fft(std::span<Fr> values) const;
  void ifft(std::span<Fr> values) const;
  // Same, over the coset shift * <omega>.
  void coset_fft(std::span<Fr> values, const Fr& shift) const;
  void coset_ifft(std::span<Fr> values, const Fr& shift) const;

  // Z(x) = x^n - 1.
  Fr vanishing_at(const Fr& x) const;
  // L_0(x), ..., L_{n-1}(x); x must lie outside the domain.
  std::vector<Fr> lagrange_at(const Fr& x) const;

 private:
  void transform(std::span<Fr> values, const std::vector<Fr>& twiddles) const;

  size_t size_ = 1;
  unsigned log_size_ = 0;
  Fr omega_, omega_inv_, size_inv_;
  std::vector<Fr> twiddles_, inv_twiddles_;
};

}  // namespace carbonzk

#endif  // CARBONZK_POLY_DOMAIN_HPP_
