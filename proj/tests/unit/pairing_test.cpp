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

#include <random>

#include "carbonzk/ec/bn254.hpp"
#include "gtest/gtest.h"

namespace carbonzk::bn254 {
namespace {

U256 random_scalar(std::mt19937_64& rng) {
  std::array<uint8_t, 64> wide{};
  for (auto& b : wide) b = static_cast<uint8_t>(rng());
  return Fr::from_wide_bytes(wide).to_canonical();
}

TEST(Bn254, GeneratorsHavePrimeOrder) {
  EXPECT_TRUE(G1Curve::generator().is_on_curve());
  EXPECT_TRUE(G2Curve::generator().is_on_curve());
  EXPECT_TRUE(G1::generator().mul(Fr::kModulus).is_identity());
  EXPECT_TRUE(g2_in_subgroup(G2Curve::generator()));
}

TEST(Bn254, GroupLawConsistency) {
  std::mt19937_64 rng(7);
  G1 g = G1::generator();
  for (int i = 0; i < 20; ++i) {
    U256 a = random_scalar(rng);
    U256 b = random_scalar(rng);
    U256 sum = (Fr::from_canonical(a) + Fr::from_canonical(b)).to_canonical();
    EXPECT_EQ(g.mul(a) + g.mul(b), g.mul(sum));
    EXPECT_EQ(g.mul(a).add_mixed(g.mul(b).to_affine()), g.mul(sum));
    EXPECT_EQ(g.mul(a) + g.mul(a), g.mul(a).dbl());
    EXPECT_TRUE((g.mul(a) - g.mul(a)).is_identity());
  }
}

TEST(Bn254, EncodingRoundTripAndRejection) {
  G1Affine p = G1::generator().mul(U256(12345)).to_affine();
  auto bytes = encode_g1(p);
  EXPECT_EQ(decode_g1(bytes), p);
  bytes[63] ^= 1;
  EXPECT_FALSE(decode_g1(bytes).has_value());
  G2Affine q = G2::generator().mul(U256(999)).to_affine();
  auto qb = encode_g2(q);
  EXPECT_EQ(decode_g2(qb), q);
  qb[10] ^= 0x40;
  EXPECT_FALSE(decode_g2(qb).has_value());
  EXPECT_TRUE(decode_g1(encode_g1(G1Affine::identity()))->infinity);
}

TEST(Bn254, PairingIsBilinearAndNonDegenerate) {
  std::mt19937_64 rng(11);
  G1Affine p = G1Curve::generator();
  G2Affine q = G2Curve::generator();
  Fq12 base = pairing(p, q);
  EXPECT_FALSE(base.is_one());
  for (int i = 0; i < 3; ++i) {
    U256 a = random_scalar(rng);
    U256 b = random_scalar(rng);
    U256 ab = (Fr::from_canonical(a) * Fr::from_canonical(b)).to_canonical();
    Fq12 lhs = pairing(G1(p).mul(a).to_affine(), G2(q).mul(b).to_affine());
    Fq12 rhs = pairing(G1(p).mul(ab).to_affine(), q);
    EXPECT_EQ(lhs, rhs);
  }
  // e(P, Q)^r == 1
  Fq12 acc = Fq12::one();
  for (size_t i = Fr::kModulus.bit_length(); i-- > 0;) {
    acc = acc.square();
    if (Fr::kModulus.bit(i)) acc *= base;
  }
  EXPECT_TRUE(acc.is_one());
}

TEST(Bn254, PairingProductCheck) {
  G1Affine p = G1::generator().mul(U256(5)).to_affine();
  G2Affine q = G2::generator().mul(U256(7)).to_affine();
  G1Affine p35 = G1::generator().mul(U256(35)).to_affine();
  std::vector<std::pair<G1Affine, G2Affine>> pairs = {{p, q}, {-p35, G2Curve::generator()}};
  EXPECT_TRUE(pairing_product_is_one(pairs));
  pairs[1].first = -G1::generator().mul(U256(36)).to_affine();
  EXPECT_FALSE(pairing_product_is_one(pairs));
}

}  // namespace
}  // namespace carbonzk::bn254
