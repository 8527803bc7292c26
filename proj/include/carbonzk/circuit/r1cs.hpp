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

// Rank-1 constraint systems over the BN254 scalar field and a builder that
// records constraints and computes the witness in the same pass.

#ifndef CARBONZK_CIRCUIT_R1CS_HPP_
#define CARBONZK_CIRCUIT_R1CS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "carbonzk/ff/bn254.hpp"
#include "carbonzk/util/bytes.hpp"

namespace carbonzk::circuit {

enum class Visibility { kPublic, kPrivate };

struct Variable {
  uint32_t index = 0;
  static constexpr Variable one() { return Variable{0}; }
  constexpr bool operator==(const Variable&) const = default;
};

struct Term {
  uint32_t index;
  Fr coeff;
  bool operator==(const Term&) const = default;
};

// Sum of coeff * variable; kept sorted by index with no zero coefficients.
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(Variable v) : terms_{{v.index, Fr::one()}} {}  // NOLINT
  static LinearCombination constant(const Fr& c);
  static LinearCombination from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].index == 0);
  }
  Fr constant_value() const;  // requires is_constant()
  uint32_t max_index() const { return terms_.empty() ? 0 : terms_.back().index; }

  Fr evaluate(std::span<const Fr> assignment) const;

  LinearCombination operator+(const LinearCombination& o) const;
  LinearCombination operator-(const LinearCombination& o) const { return *this + o * -Fr::one(); }
  LinearCombination operator-() const { return *this * -Fr::one(); }
  LinearCombination operator*(const Fr& k) const;
  LinearCombination& operator+=(const LinearCombination& o) { return *this = *this + o; }
  LinearCombination& operator-=(const LinearCombination& o) { return *this = *this - o; }
  bool operator==(const LinearCombination&) const = default;

 private:
  std::vector<Term> terms_;
};

using LC = LinearCombination;

struct Constraint {
  LC a, b, c;  // a * b = c
};

// A labelled, contiguous range of constraints for diagnostics.
struct Section {
  std::string name;
  size_t begin = 0;
  size_t end = 0;  // exclusive
};

using WitnessAssignment = std::vector<Fr>;

class ConstraintSystem {
 public:
  std::string name;
  uint32_t layout_version = 1;
  size_t num_variables = 1;             // including the constant one
  std::vector<uint32_t> public_inputs;  // layout order
  std::vector<std::string> public_names;
  std::vector<Constraint> constraints;
  std::vector<Section> sections;

  size_t num_constraints() const { return constraints.size(); }
  bool is_public(uint32_t index) const;

  // Canonical byte encoding of everything that affects proving.
  Bytes canonical_bytes() const;
  // Inverse of canonical_bytes (public names and sections are not encoded).
  // Throws Error(kMalformedProof) on truncated or inconsistent input.
  static ConstraintSystem from_canonical_bytes(std::span<const uint8_t> bytes);
  Digest digest() const;
  // {"layout": {...}, "constraints": [{"a": [[index, "coeff"], ...], ...}]}
  std::string to_debug_json() const;
  // Name of the section containing constraint i, or "" if none.
  std::string section_of(size_t constraint) const;
};

struct SatisfactionResult {
  bool satisfied = true;
  size_t failing_constraint = 0;
  explicit operator bool() const { return satisfied; }
};

// Throws Error(kLengthMismatch) if the witness length differs from
// num_variables or the constant slot is not one.
SatisfactionResult is_satisfied(const ConstraintSystem& cs, std::span<const Fr> witness);

std::vector<Fr> public_slice(const ConstraintSystem& cs, std::span<const Fr> witness);

class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::string name = "", uint32_t layout_version = 1);

  Variable alloc(Visibility visibility, const Fr& value, std::string public_name = "");
  Variable alloc_private(const Fr& value) { return alloc(Visibility::kPrivate, value); }
  Variable alloc_public(std::string name, const Fr& value) {
    return alloc(Visibility::kPublic, value, std::move(name));
  }

  // Records a * b = c. Throws Error(kUnallocatedVariable) if a term names an
  // index that has not been allocated.
  void enforce(const LC& a, const LC& b, const LC& c);
  void enforce_equal(const LC& a, const LC& b) { enforce(a - b, LC::constant(Fr::one()), LC()); }

  Fr value(Variable v) const { return values_[v.index]; }
  Fr value(const LC& lc) const { return lc.evaluate(values_); }

  void begin_section(std::string name);
  void end_section();

  size_t num_variables() const { return values_.size(); }
  size_t num_constraints() const { return cs_.constraints.size(); }

  const ConstraintSystem& system() const { return cs_; }
  const WitnessAssignment& witness() const { return values_; }
  ConstraintSystem take_system();

 private:
  ConstraintSystem cs_;
  WitnessAssignment values_;
  std::vector<size_t> open_sections_;
};

}  // namespace carbonzk::circuit

#endif  // CARBONZK_CIRCUIT_R1CS_HPP_
