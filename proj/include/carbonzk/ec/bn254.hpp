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

#ifndef CARBONZK_EC_BN254_HPP_
#define CARBONZK_EC_BN254_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "carbonzk/ec/weierstrass.hpp"
#include "carbonzk/ff/bn254.hpp"

namespace carbonzk::bn254 {

struct G1Curve {
  static Fq b() { return Fq::from_uint(3); }
  static AffinePoint<Fq, G1Curve> generator() {
    return AffinePoint<Fq, G1Curve>::from_xy(Fq::from_uint(1), Fq::from_uint(2));
  }
};

// Sextic D-type twist y^2 = x^3 + 3 / (9 + i).
struct G2Curve {
  static Fq2 b();
  static AffinePoint<Fq2, G2Curve> generator();
};

using G1 = JacobianPoint<Fq, G1Curve>;
using G2 = JacobianPoint<Fq2, G2Curve>;
using G1Affine = AffinePoint<Fq, G1Curve>;
using G2Affine = AffinePoint<Fq2, G2Curve>;

inline constexpr size_t kG1Bytes = 64;
inline constexpr size_t kG2Bytes = 128;

// Uncompressed big-endian encodings; the identity encodes as all zeros.
std::array<uint8_t, kG1Bytes> encode_g1(const G1Affine& p);
std::array<uint8_t, kG2Bytes> encode_g2(const G2Affine& p);
// Return nullopt for non-canonical coordinates, off-curve points or (G2)
// points outside the order-r subgroup.
std::optional<G1Affine> decode_g1(std::span<const uint8_t, kG1Bytes> bytes);
std::optional<G2Affine> decode_g2(std::span<const uint8_t, kG2Bytes> bytes,
                                  bool check_subgroup = true);

bool g2_in_subgroup(const G2Affine& p);

// Optimal ate pairing.
Fq12 miller_loop(const G1Affine& p, const G2Affine& q);
Fq12 final_exponentiation(const Fq12& f);
Fq12 pairing(const G1Affine& p, const G2Affine& q);
// True iff prod e(p_i, q_i) == 1.
bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs);

}  // namespace carbonzk::bn254

#endif  // CARBONZK_EC_BN254_HPP_
