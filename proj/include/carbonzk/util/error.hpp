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

#ifndef CARBONZK_UTIL_ERROR_HPP_
#define CARBONZK_UTIL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace carbonzk {

enum class ErrorCode {
  kPrecisionLoss,
  kOutOfRange,
  kMalformedPoint,
  kRoleViolation,
  kUnallocatedVariable,
  kIncompleteInput,
  kLengthMismatch,
  kUnsatisfiedWitness,
  kKeyMismatch,
  kMalformedProof,
  kChainInvalid,
  kEmissionMismatch,
  kSumMismatch,
  kSchemaViolation,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class UnsatisfiedWitness : public Error {
 public:
  explicit UnsatisfiedWitness(size_t constraint)
      : Error(ErrorCode::kUnsatisfiedWitness,
              "constraint " + std::to_string(constraint) + " does not hold"),
        constraint_(constraint) {}
  size_t constraint() const { return constraint_; }

 private:
  size_t constraint_;
};

class SchemaViolation : public Error {
 public:
  SchemaViolation(std::string path, const std::string& message)
      : Error(ErrorCode::kSchemaViolation, path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class IncompleteInput : public Error {
 public:
  explicit IncompleteInput(std::string field)
      : Error(ErrorCode::kIncompleteInput, "missing " + field), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A signature chain failed native verification. link follows
// sigchain::ChainVerdict: i names certificate i, the chain length names the
// leaf signature.
class ChainInvalid : public Error {
 public:
  ChainInvalid(std::string chain, size_t link, const std::string& reason)
      : Error(ErrorCode::kChainInvalid,
              chain + " chain, link " + std::to_string(link) + ": " + reason),
        chain_(std::move(chain)),
        link_(link) {}
  const std::string& chain() const { return chain_; }
  size_t link() const { return link_; }

 private:
  std::string chain_;
  size_t link_;
};

}  // namespace carbonzk

#endif  // CARBONZK_UTIL_ERROR_HPP_
