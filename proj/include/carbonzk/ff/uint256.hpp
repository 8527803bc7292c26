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

#ifndef CARBONZK_FF_UINT256_HPP_
#define CARBONZK_FF_UINT256_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace carbonzk {

using u128 = unsigned __int128;

// Fixed-width unsigned 256-bit integer, little-endian 64-bit limbs.
struct U256 {
  std::array<uint64_t, 4> limb{};

  constexpr U256() = default;
  constexpr explicit U256(uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  constexpr bool operator==(const U256&) const = default;

  constexpr bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }
  constexpr bool bit(size_t i) const {
    return i < 256 && ((limb[i / 64] >> (i % 64)) & 1U) != 0;
  }
  constexpr size_t bit_length() const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != 0) {
        return static_cast<size_t>(i) * 64 + 64 -
               static_cast<size_t>(__builtin_clzll(limb[i]));
      }
    }
    return 0;
  }

  // Throws std::invalid_argument on a non-decimal string or overflow.
  static U256 from_decimal(std::string_view text);
  std::string to_decimal() const;
  std::string to_hex() const;

  std::array<uint8_t, 32> to_bytes_be() const;
  static U256 from_bytes_be(std::span<const uint8_t, 32> bytes);
};

constexpr int compare(const U256& a, const U256& b) {
  for (int i = 3; i >= 0; --i) {
    if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i] ? -1 : 1;
  }
  return 0;
}

constexpr bool operator<(const U256& a, const U256& b) {
  return compare(a, b) < 0;
}
constexpr bool operator>=(const U256& a, const U256& b) {
  return compare(a, b) >= 0;
}

// Returns the carry out.
constexpr uint64_t add_to(U256& a, const U256& b) {
  uint64_t carry = 0;
  for (int i = 0; i < 4; ++i) {
    u128 t = static_cast<u128>(a.limb[i]) + b.limb[i] + carry;
    a.limb[i] = static_cast<uint64_t>(t);
    carry = static_cast<uint64_t>(t >> 64);
  }
  return carry;
}

// Returns the borrow out.
constexpr uint64_t sub_from(U256& a, const U256& b) {
  uint64_t borrow = 0;
  for (int i = 0; i < 4; ++i) {
    u128 t = static_cast<u128>(a.limb[i]) - b.limb[i] - borrow;
    a.limb[i] = static_cast<uint64_t>(t);
    borrow = static_cast<uint64_t>(t >> 64) & 1U;
  }
  return borrow;
}

constexpr U256 add(U256 a, const U256& b) {
  add_to(a, b);
  return a;
}
constexpr U256 sub(U256 a, const U256& b) {
  sub_from(a, b);
  return a;
}

constexpr U256 shr1(U256 a) {
  for (int i = 0; i < 3; ++i) a.limb[i] = (a.limb[i] >> 1) | (a.limb[i + 1] << 63);
  a.limb[3] >>= 1;
  return a;
}

}  // namespace carbonzk

#endif  // CARBONZK_FF_UINT256_HPP_
