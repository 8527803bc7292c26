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

#ifndef CARBONZK_FF_PRIME_FIELD_HPP_
#define CARBONZK_FF_PRIME_FIELD_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carbonzk/ff/uint256.hpp"

namespace carbonzk {

namespace detail {

constexpr uint64_t montgomery_inverse(uint64_t p0) {
  uint64_t x = p0;  // correct to 3 bits for odd p0
  for (int i = 0; i < 6; ++i) x *= 2 - p0 * x;
  return ~x + 1;  // -p^-1 mod 2^64
}

constexpr U256 double_mod(U256 a, const U256& p) {
  uint64_t carry = add_to(a, a);
  if (carry != 0 || a >= p) sub_from(a, p);
  return a;
}

constexpr U256 pow2_mod(unsigned k, const U256& p) {
  U256 acc(1);
  for (unsigned i = 0; i < k; ++i) acc = double_mod(acc, p);
  return acc;
}

}  // namespace detail

// Prime field in Montgomery representation over four 64-bit limbs.
// Config supplies `static constexpr U256 kModulus` (odd, top limb < 2^63 - 1).
template <typename Config>
class PrimeField {
 public:
  static constexpr U256 kModulus = Config::kModulus;
  static constexpr uint64_t kInv = detail::montgomery_inverse(kModulus.limb[0]);
  static constexpr U256 kR = detail::pow2_mod(256, kModulus);
  static constexpr U256 kR2 = detail::pow2_mod(512, kModulus);
  static constexpr size_t kBits = kModulus.bit_length();

  constexpr PrimeField() = default;

  static constexpr PrimeField zero() { return PrimeField(); }
  static constexpr PrimeField one() { return from_mont(kR); }

  static constexpr PrimeField from_uint(uint64_t v) {
    return from_canonical(U256(v));
  }
  static PrimeField from_int(int64_t v) {
    return v >= 0 ? from_uint(static_cast<uint64_t>(v))
                  : -from_uint(static_cast<uint64_t>(-(v + 1)) + 1);
  }

  // Requires v < modulus.
  static constexpr PrimeField from_canonical(const U256& v) {
    return from_mont(mont_mul(v, kR2));
  }
  static constexpr std::optional<PrimeField> try_from_canonical(const U256& v) {
    if (v >= kModulus) return std::nullopt;
    return from_canonical(v);
  }
  // Reduces any 256-bit value.
  static constexpr PrimeField reduce(U256 v) {
    while (v >= kModulus) sub_from(v, kModulus);
    return from_canonical(v);
  }
  // Uniform sample from 64 bytes (little-endian), bias negligible.
  static PrimeField from_wide_bytes(std::span<const uint8_t, 64> bytes) {
    U256 lo, hi;
    for (size_t i = 0; i < 32; ++i) {
      lo.limb[i / 8] |= static_cast<uint64_t>(bytes[i]) << (8 * (i % 8));
      hi.limb[i / 8] |= static_cast<uint64_t>(bytes[32 + i]) << (8 * (i % 8));
    }
    return reduce(lo) + reduce(hi) * from_canonical(kR);
  }
  // Throws std::invalid_argument unless text is a canonical decimal < p.
  static PrimeField from_decimal(std::string_view text) {
    U256 v = U256::from_decimal(text);
    if (v >= kModulus) throw std::invalid_argument("field element out of range");
    if (text.size() > 1 && text[0] == '0') {
      throw std::invalid_argument("non-canonical decimal field element");
    }
    return from_canonical(v);
  }

  static constexpr PrimeField from_mont(const U256& m) {
    PrimeField f;
    f.mont_ = m;
    return f;
  }
  constexpr const U256& mont() const { return mont_; }

  constexpr U256 to_canonical() const { return mont_mul(mont_, U256(1)); }
  std::string to_decimal() const { return to_canonical().to_decimal(); }

  constexpr bool is_zero() const { return mont_.is_zero(); }
  constexpr bool is_one() const { return mont_ == kR; }
  constexpr bool operator==(const PrimeField&) const = default;

  constexpr PrimeField operator+(const PrimeField& o) const {
    PrimeField r = *this;
    r += o;
    return r;
  }
  constexpr PrimeField& operator+=(const PrimeField& o) {
    uint64_t carry = add_to(mont_, o.mont_);
    if (carry != 0 || mont_ >= kModulus) sub_from(mont_, kModulus);
    return *this;
  }
  constexpr PrimeField operator-(const PrimeField& o) const {
    PrimeField r = *this;
    r -= o;
    return r;
  }
  constexpr PrimeField& operator-=(const PrimeField& o) {
    if (sub_from(mont_, o.mont_) != 0) add_to(mont_, kModulus);
    return *this;
  }
  constexpr PrimeField operator-() const {
    if (is_zero()) return *this;
    return from_mont(sub(kModulus, mont_));
  }
  constexpr PrimeField operator*(const PrimeField& o) const {
    return from_mont(mont_mul(mont_, o.mont_));
  }
  constexpr PrimeField& operator*=(const PrimeField& o) {
    mont_ = mont_mul(mont_, o.mont_);
    return *this;
  }
  constexpr PrimeField square() const { return *this * *this; }
  constexpr PrimeField dbl() const { return *this + *this; }

  constexpr PrimeField pow(const U256& e) const {
    PrimeField acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }

  // Inverse of zero is zero.
  constexpr PrimeField inverse() const {
    return pow(sub(kModulus, U256(2)));
  }

  std::array<uint8_t, 32> to_bytes_be() const { return to_canonical().to_bytes_be(); }

 private:
  // CIOS Montgomery multiplication without the extra carry words; valid
  // because the top modulus limb is below 2^63 - 1.
  static_assert(kModulus.limb[3] < 0x7fffffffffffffffULL);
  static constexpr U256 mont_mul(const U256& a, const U256& b) {
    uint64_t t[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u128 cur = static_cast<u128>(a.limb[0]) * b.limb[i] + t[0];
      uint64_t hi_a = static_cast<uint64_t>(cur >> 64);
      t[0] = static_cast<uint64_t>(cur);
      const uint64_t m = t[0] * kInv;
      cur = static_cast<u128>(m) * kModulus.limb[0] + t[0];
      uint64_t hi_c = static_cast<uint64_t>(cur >> 64);
      for (int j = 1; j < 4; ++j) {
        cur = static_cast<u128>(a.limb[j]) * b.limb[i] + t[j] + hi_a;
        hi_a = static_cast<uint64_t>(cur >> 64);
        t[j] = static_cast<uint64_t>(cur);
        cur = static_cast<u128>(m) * kModulus.limb[j] + t[j] + hi_c;
        hi_c = static_cast<uint64_t>(cur >> 64);
        t[j - 1] = static_cast<uint64_t>(cur);
      }
      t[3] = hi_c + hi_a;
    }
    U256 r(t[0], t[1], t[2], t[3]);
    if (r >= kModulus) sub_from(r, kModulus);
    return r;
  }

  U256 mont_{};
};

template <typename Config>
std::ostream& operator<<(std::ostream& os, const PrimeField<Config>& f) {
  return os << f.to_decimal();
}

// Montgomery batch inversion; zero entries stay zero.
template <typename F>
void batch_invert(std::span<F> values) {
  std::vector<F> prefix(values.size());
  F acc = F::one();
  for (size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    if (!values[i].is_zero()) acc *= values[i];
  }
  F inv = acc.inverse();
  for (size_t i = values.size(); i-- > 0;) {
    if (values[i].is_zero()) continue;
    F next = inv * values[i];
    values[i] = inv * prefix[i];
    inv = next;
  }
}

}  // namespace carbonzk

#endif  // CARBONZK_FF_PRIME_FIELD_HPP_
