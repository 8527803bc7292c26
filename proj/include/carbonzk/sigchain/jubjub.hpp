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

// Baby Jubjub: the twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 with
// a = 168700, d = 168696 over the BN254 scalar field. The group has order
// 8 * l with l a 251-bit prime; keys live in the order-l subgroup generated
// by the base point B.

#ifndef CARBONZK_SIGCHAIN_JUBJUB_HPP_
#define CARBONZK_SIGCHAIN_JUBJUB_HPP_

#include "carbonzk/ff/bn254.hpp"

namespace carbonzk::sigchain {

struct JubjubScalarConfig {
  static constexpr U256 kModulus{0x677297dc392126f1ULL, 0xab3eedb83920ee0aULL,
                                 0x370a08b6d0302b0bULL, 0x060c89ce5c263405ULL};
};
// Integers modulo the prime subgroup order l.
using JubjubScalar = PrimeField<JubjubScalarConfig>;

inline constexpr U256 kSubgroupOrder = JubjubScalarConfig::kModulus;
inline constexpr uint64_t kCofactor = 8;

Fr edwards_a();
Fr edwards_d();

struct EdwardsPoint {
  Fr x = Fr::zero();
  Fr y = Fr::one();

  static EdwardsPoint identity() { return EdwardsPoint(); }
  static EdwardsPoint base_point();

  bool operator==(const EdwardsPoint&) const = default;
  bool is_identity() const { return x.is_zero() && y.is_one(); }
  bool is_on_curve() const;
  // l * P == identity; requires an on-curve point.
  bool in_prime_subgroup() const;

  EdwardsPoint operator+(const EdwardsPoint& o) const;
  EdwardsPoint operator-() const { return {-x, y}; }
  EdwardsPoint dbl() const { return *this + *this; }
  EdwardsPoint mul(const U256& k) const;
  EdwardsPoint mul(const JubjubScalar& k) const { return mul(k.to_canonical()); }
};

// Reduces a base-field element's canonical integer modulo l.
JubjubScalar scalar_from_field(const Fr& v);
Fr field_from_scalar(const JubjubScalar& s);

}  // namespace carbonzk::sigchain

#endif  // CARBONZK_SIGCHAIN_JUBJUB_HPP_
