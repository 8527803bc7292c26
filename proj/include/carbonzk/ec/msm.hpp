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

// Multi-scalar multiplication (Pippenger buckets) and fixed-base batch
// multiplication for trusted setup.

#ifndef CARBONZK_EC_MSM_HPP_
#define CARBONZK_EC_MSM_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "carbonzk/ec/weierstrass.hpp"
#include "carbonzk/ff/uint256.hpp"

namespace carbonzk {

namespace detail {

inline uint64_t scalar_window(const U256& s, size_t offset, size_t width) {
  const size_t limb = offset / 64;
  const size_t shift = offset % 64;
  if (limb >= 4) return 0;
  uint64_t v = s.limb[limb] >> shift;
  if (shift + width > 64 && limb + 1 < 4) v |= s.limb[limb + 1] << (64 - shift);
  return v & ((uint64_t{1} << width) - 1);
}

inline size_t msm_window_bits(size_t n) {
  if (n < 32) return 3;
  return static_cast<size_t>(std::log(static_cast<double>(n))) + 2;
}

}  // namespace detail

// sum_i scalars[i] * bases[i]; scalars are canonical integers below 2^bits.
template <typename Point>
Point msm(std::span<const typename Point::Affine> bases, std::span<const U256> scalars,
          size_t bits = 254) {
  if (bases.size() != scalars.size()) throw std::invalid_argument("msm length mismatch");
  const size_t n = bases.size();
  Point small_sum;  // scalars equal to one are common (boolean wires)
  std::vector<size_t> active;
  active.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (scalars[i].is_zero() || bases[i].infinity) continue;
    if (scalars[i] == U256(1)) {
      small_sum = small_sum.add_mixed(bases[i]);
      continue;
    }
    active.push_back(i);
  }
  if (active.empty()) return small_sum;

  const size_t c = detail::msm_window_bits(active.size());
  const size_t windows = (bits + c - 1) / c;
  std::vector<Point> buckets((size_t{1} << c) - 1);
  Point result;
  for (size_t w = windows; w-- > 0;) {
    for (size_t k = 0; k < c; ++k) result = result.dbl();
    std::fill(buckets.begin(), buckets.end(), Point());
    for (size_t i : active) {
      uint64_t digit = detail::scalar_window(scalars[i], w * c, c);
      if (digit != 0) buckets[digit - 1] = buckets[digit - 1].add_mixed(bases[i]);
    }
    Point running, window_sum;
    for (size_t b = buckets.size(); b-- > 0;) {
      running += buckets[b];
      window_sum += running;
    }
    result += window_sum;
  }
  return result + small_sum;
}

// Precomputed multiples of a fixed base for many scalar multiplications.
template <typename Point>
class FixedBaseTable {
 public:
  using Affine = typename Point::Affine;

  FixedBaseTable(const Point& base, size_t scalar_bits, size_t window = 8)
      : window_(window), windows_((scalar_bits + window - 1) / window) {
    const size_t per = size_t{1} << window_;
    std::vector<Point> jac(windows_ * per);
    Point step = base;  // 2^(w * window) * base
    for (size_t w = 0; w < windows_; ++w) {
      Point acc;
      for (size_t j = 0; j < per; ++j) {
        jac[w * per + j] = acc;
        acc += step;
      }
      step = acc;  // per * step
    }
    table_ = batch_to_affine<typename Point::Field, typename Affine::CurveType>(jac);
  }

  Point mul(const U256& scalar) const {
    const size_t per = size_t{1} << window_;
    Point acc;
    for (size_t w = 0; w < windows_; ++w) {
      uint64_t digit = detail::scalar_window(scalar, w * window_, window_);
      if (digit != 0) acc = acc.add_mixed(table_[w * per + digit]);
    }
    return acc;
  }

  template <typename F>
  std::vector<Affine> batch_mul(std::span<const F> scalars) const {
    std::vector<Point> out(scalars.size());
    for (size_t i = 0; i < scalars.size(); ++i) out[i] = mul(scalars[i].to_canonical());
    return batch_to_affine<typename Point::Field, typename Affine::CurveType>(out);
  }

 private:
  size_t window_;
  size_t windows_;
  std::vector<Affine> table_;
};

}  // namespace carbonzk

#endif  // CARBONZK_EC_MSM_HPP_
