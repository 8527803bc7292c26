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

#include "carbonzk/ff/uint256.hpp"

#include <algorithm>
#include <stdexcept>

#include "carbonzk/ff/bigint.hpp"

namespace carbonzk {

BigInt to_bigint(const U256& v) {
  BigInt out = 0;
  for (int i = 3; i >= 0; --i) {
    out <<= 64;
    out += v.limb[i];
  }
  return out;
}

U256 to_u256(const BigInt& v) {
  if (v < 0 || boost::multiprecision::msb(v + 1) > 256) {
    throw std::out_of_range("integer does not fit in 256 bits");
  }
  U256 out;
  BigInt rest = v;
  for (int i = 0; i < 4; ++i) {
    out.limb[i] = static_cast<uint64_t>(rest & BigInt(~uint64_t{0}));
    rest >>= 64;
  }
  return out;
}

U256 U256::from_decimal(std::string_view text) {
  if (text.empty() || text.size() > 78) {
    throw std::invalid_argument("invalid decimal integer");
  }
  U256 out;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid decimal integer");
    // out = out * 10 + digit
    uint64_t carry = static_cast<uint64_t>(ch - '0');
    for (int i = 0; i < 4; ++i) {
      u128 t = static_cast<u128>(out.limb[i]) * 10 + carry;
      out.limb[i] = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
    }
    if (carry != 0) throw std::invalid_argument("decimal integer exceeds 256 bits");
  }
  return out;
}

std::string U256::to_decimal() const {
  if (is_zero()) return "0";
  std::string digits;
  U256 v = *this;
  while (!v.is_zero()) {
    uint64_t rem = 0;
    for (int i = 3; i >= 0; --i) {
      u128 cur = (static_cast<u128>(rem) << 64) | v.limb[i];
      v.limb[i] = static_cast<uint64_t>(cur / 10);
      rem = static_cast<uint64_t>(cur % 10);
    }
    digits.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string U256::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : to_bytes_be()) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::array<uint8_t, 32> U256::to_bytes_be() const {
  std::array<uint8_t, 32> out{};
  for (size_t i = 0; i < 32; ++i) {
    out[31 - i] = static_cast<uint8_t>(limb[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

U256 U256::from_bytes_be(std::span<const uint8_t, 32> bytes) {
  U256 out;
  for (size_t i = 0; i < 32; ++i) {
    out.limb[i / 8] |= static_cast<uint64_t>(bytes[31 - i]) << (8 * (i % 8));
  }
  return out;
}

}  // namespace carbonzk
