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

#include "carbonzk/util/bytes.hpp"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>
#include <stdexcept>

#include "carbonzk/util/error.hpp"

namespace carbonzk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrecisionLoss: return "PrecisionLoss";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kMalformedPoint: return "MalformedPoint";
    case ErrorCode::kRoleViolation: return "RoleViolation";
    case ErrorCode::kUnallocatedVariable: return "UnallocatedVariable";
    case ErrorCode::kIncompleteInput: return "IncompleteInput";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnsatisfiedWitness: return "UnsatisfiedWitness";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kMalformedProof: return "MalformedProof";
    case ErrorCode::kChainInvalid: return "ChainInvalid";
    case ErrorCode::kEmissionMismatch: return "EmissionMismatch";
    case ErrorCode::kSumMismatch: return "SumMismatch";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

Digest sha256(std::span<const uint8_t> data) {
  Digest out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

std::array<uint8_t, 64> sha512(std::span<const uint8_t> data) {
  std::array<uint8_t, 64> out{};
  SHA512(data.data(), data.size(), out.data());
  return out;
}

std::string to_hex(std::span<const uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex character");
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

ByteStream::ByteStream(std::span<const uint8_t> seed, std::string_view label) {
  prefix_.assign(seed.begin(), seed.end());
  prefix_.insert(prefix_.end(), label.begin(), label.end());
}

void ByteStream::fill(std::span<uint8_t> out) {
  for (uint8_t& b : out) {
    if (used_ == block_.size()) {
      Bytes input = prefix_;
      for (int i = 0; i < 8; ++i) input.push_back(static_cast<uint8_t>(counter_ >> (8 * i)));
      block_ = sha256(input);
      ++counter_;
      used_ = 0;
    }
    b = block_[used_++];
  }
}

Bytes os_random_bytes(size_t n) {
  Bytes out(n);
  if (n > 0 && RAND_bytes(out.data(), static_cast<int>(n)) != 1) {
    throw std::runtime_error("operating-system entropy unavailable");
  }
  return out;
}

void ByteWriter::u32(uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::blob(std::span<const uint8_t> data) {
  u64(data.size());
  raw(data);
}

uint8_t ByteReader::u8() { return raw(1)[0]; }

uint32_t ByteReader::u32() {
  auto b = raw(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
  return v;
}

uint64_t ByteReader::u64() {
  auto b = raw(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

std::span<const uint8_t> ByteReader::raw(size_t n) {
  if (n > data_.size() - pos_) throw Error(ErrorCode::kMalformedProof, "truncated input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::span<const uint8_t> ByteReader::blob() { return raw(u64()); }

}  // namespace carbonzk
