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

// Hashing, hex and a SHA-256 counter-mode byte generator.

#ifndef CARBONZK_UTIL_BYTES_HPP_
#define CARBONZK_UTIL_BYTES_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carbonzk {

using Bytes = std::vector<uint8_t>;
using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
std::array<uint8_t, 64> sha512(std::span<const uint8_t> data);

std::string to_hex(std::span<const uint8_t> data);
// Throws std::invalid_argument on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

// Deterministic generator: block_i = SHA-256(seed || label || i).
class ByteStream {
 public:
  ByteStream(std::span<const uint8_t> seed, std::string_view label);

  void fill(std::span<uint8_t> out);
  template <typename F>
  F next_field() {
    std::array<uint8_t, 64> wide{};
    fill(wide);
    return F::from_wide_bytes(wide);
  }

 private:
  Bytes prefix_;
  uint64_t counter_ = 0;
  Digest block_{};
  size_t used_ = block_.size();
};

// Fresh entropy from the operating system.
Bytes os_random_bytes(size_t n);

// Little-endian append/read helpers for binary formats.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u32(uint32_t v);
  void u64(uint64_t v);
  void raw(std::span<const uint8_t> data) { out_.insert(out_.end(), data.begin(), data.end()); }
  void blob(std::span<const uint8_t> data);  // u64 length prefix
  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Throws Error(kMalformedProof) on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  std::span<const uint8_t> raw(size_t n);
  std::span<const uint8_t> blob();
  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace carbonzk

#endif  // CARBONZK_UTIL_BYTES_HPP_
