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

#include "carbonzk/circuit/gadgets.hpp"

#include <random>

#include "carbonzk/sigchain/poseidon.hpp"
#include "carbonzk/sigchain/signature.hpp"
#include "gtest/gtest.h"

namespace carbonzk::circuit {
namespace {

using sigchain::DomainTag;
using sigchain::EdwardsPoint;
using sigchain::JubjubScalar;

bool satisfied(const CircuitBuilder& b) { return bool(is_satisfied(b.system(), b.witness())); }

Fr random_fr(std::mt19937_64& rng) {
  std::array<uint8_t, 64> wide{};
  for (auto& byte : wide) byte = static_cast<uint8_t>(rng());
  return Fr::from_wide_bytes(wide);
}

JubjubScalar random_scalar(std::mt19937_64& rng) {
  std::array<uint8_t, 64> wide{};
  for (auto& byte : wide) byte = static_cast<uint8_t>(rng());
  return JubjubScalar::from_wide_bytes(wide);
}

sigchain::KeyPair key(uint64_t n) {
  std::array<uint8_t, sigchain::kSeedBytes> seed{};
  for (size_t i = 0; i < 8; ++i) seed[i] = static_cast<uint8_t>(n >> (8 * i));
  return sigchain::keygen(sigchain::Role::kMeter, seed);
}

const EdwardsPoint kTwoTorsion{Fr::zero(), -Fr::one()};

TEST(EdwardsGadget, AddAndDoubleMatchNative) {
  std::mt19937_64 rng(1);
  const EdwardsPoint base = EdwardsPoint::base_point();
  for (int t = 0; t < 20; ++t) {
    EdwardsPoint p = base.mul(random_scalar(rng));
    EdwardsPoint q = base.mul(random_scalar(rng));
    CircuitBuilder b;
    PointVar pv = alloc_point(b, p);
    PointVar qv = alloc_point(b, q);
    EXPECT_EQ(point_value(b, point_add(b, pv, qv)), p + q);
    EXPECT_EQ(point_value(b, point_double(b, pv)), p.dbl());
    EXPECT_EQ(point_value(b, point_add(b, pv, pv)), p.dbl());
    EXPECT_EQ(point_value(b, point_add(b, pv, PointVar::identity())), p);
    enforce_on_curve(b, pv);
    EXPECT_TRUE(satisfied(b));
  }
}

TEST(EdwardsGadget, OnCurveRejectsOffCurvePoints) {
  CircuitBuilder b;
  enforce_on_curve(b, alloc_point(b, {Fr::from_uint(1), Fr::from_uint(2)}));
  EXPECT_FALSE(satisfied(b));
}

TEST(EdwardsGadget, FixedBaseMultiplication) {
  std::mt19937_64 rng(2);
  const EdwardsPoint base = EdwardsPoint::base_point();
  auto run = [&](const U256& k) {
    CircuitBuilder b;
    auto k_bits = bits(b, b.alloc_private(Fr::from_canonical(k)), 251);
    PointVar out = fixed_base_mul(b, k_bits, base);
    EXPECT_TRUE(satisfied(b));
    return point_value(b, out);
  };
  EXPECT_EQ(run(U256(1)), base);
  EXPECT_EQ(run(U256(2)), base.dbl());
  EXPECT_EQ(run(U256(0)), EdwardsPoint::identity());
  for (int t = 0; t < 100; ++t) {
    const JubjubScalar k = random_scalar(rng);
    ASSERT_EQ(run(k.to_canonical()), base.mul(k));
  }
}

TEST(EdwardsGadget, VariableBaseMultiplication) {
  std::mt19937_64 rng(3);
  const EdwardsPoint base = EdwardsPoint::base_point();
  for (int t = 0; t < 100; ++t) {
    const EdwardsPoint p = base.mul(random_scalar(rng));
    const Fr k = t == 0 ? Fr::one() : t == 1 ? Fr::from_uint(2) : random_fr(rng);
    CircuitBuilder b;
    PointVar pv = alloc_point(b, p);
    auto k_bits = bits_strict(b, b.alloc_private(k));
    PointVar out = variable_base_mul(b, k_bits, pv);
    ASSERT_TRUE(satisfied(b));
    ASSERT_EQ(point_value(b, out), p.mul(k.to_canonical()));
  }
}

TEST(EdwardsGadget, TamperedOutputsAreUnsatisfiable) {
  std::mt19937_64 rng(4);
  const EdwardsPoint base = EdwardsPoint::base_point();
  for (int t = 0; t < 100; ++t) {
    const EdwardsPoint p = base.mul(random_scalar(rng));
    CircuitBuilder b;
    PointVar pv = alloc_point(b, p);
    auto k_bits = bits(b, b.alloc_private(Fr::from_uint(rng())), 64);
    PointVar out = variable_base_mul(b, k_bits, pv);
    // Claim the product equals a different point.
    const EdwardsPoint wrong = point_value(b, out) + base;
    PointVar claimed = alloc_point(b, wrong);
    enforce_point_equal(b, out, claimed);
    ASSERT_FALSE(satisfied(b));
  }
}

TEST(EdwardsGadget, SubgroupCheck) {
  const EdwardsPoint p = EdwardsPoint::base_point().mul(U256(123456789));
  {
    CircuitBuilder b;
    enforce_in_prime_subgroup(b, alloc_point(b, p));
    EXPECT_TRUE(satisfied(b));
  }
  {
    CircuitBuilder b;
    enforce_in_prime_subgroup(b, alloc_point(b, p + kTwoTorsion));
    EXPECT_FALSE(satisfied(b));
  }
  {
    CircuitBuilder b;
    enforce_in_prime_subgroup(b, alloc_point(b, {Fr::from_uint(1), Fr::from_uint(2)}));
    EXPECT_FALSE(satisfied(b));
  }
  {
    CircuitBuilder b;
    enforce_not_identity(b, alloc_point(b, EdwardsPoint::identity()));
    EXPECT_FALSE(satisfied(b));
  }
}

TEST(SpongeGadget, MatchesNative) {
  std::mt19937_64 rng(5);
  for (size_t n = 1; n <= 9; ++n) {
    std::vector<Fr> inputs;
    for (size_t i = 0; i < n; ++i) inputs.push_back(random_fr(rng));
    const Fr tag = random_fr(rng);
    CircuitBuilder b;
    std::vector<LC> vars;
    for (const Fr& v : inputs) vars.push_back(b.alloc_private(v));
    LC out = sponge(b, tag, vars);
    LC again = sponge(b, tag, vars);
    ASSERT_TRUE(satisfied(b));
    ASSERT_EQ(b.value(out), sigchain::sponge_hash(tag, inputs));
    ASSERT_EQ(b.value(again), b.value(out));
    // A different domain tag changes the output.
    LC other = sponge(b, tag + Fr::one(), vars);
    ASSERT_NE(b.value(other), b.value(out));
  }
}

TEST(SpongeGadget, FixedVector) {
  CircuitBuilder b;
  std::vector<LC> vars{b.alloc_private(Fr::from_uint(1)), b.alloc_private(Fr::from_uint(2)),
                       b.alloc_private(Fr::from_uint(3))};
  LC out = sponge(b, Fr::from_uint(7), vars);
  EXPECT_TRUE(satisfied(b));
  EXPECT_EQ(b.value(out).to_decimal(),
            "11934314945740436350242344807690456239553190388552839892849772481137201659552");
}

TEST(SpongeGadget, TamperedOutputUnsatisfiable) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    CircuitBuilder b;
    std::vector<LC> vars{b.alloc_private(random_fr(rng)), b.alloc_private(random_fr(rng))};
    LC out = sponge(b, Fr::from_uint(9), vars);
    Variable claimed = b.alloc_private(b.value(out) + Fr::from_uint(1 + rng() % 1000));
    b.enforce_equal(out, claimed);
    ASSERT_FALSE(satisfied(b));
  }
}

// Builds the verification gadget for a (possibly invalid) signature.
bool gadget_accepts(const EdwardsPoint& pk, const std::vector<Fr>& msg,
                    const sigchain::Signature& sig, DomainTag domain) {
  CircuitBuilder b;
  PointVar pkv = alloc_point(b, pk);
  std::vector<LC> mv;
  for (const Fr& m : msg) mv.push_back(b.alloc_private(m));
  verify_signature(b, pkv, mv, alloc_signature(b, sig.r, sig.s), domain);
  return satisfied(b);
}

TEST(SignatureGadget, ValidSignatureSatisfiable) {
  const auto kp = key(1);
  std::vector<Fr> msg{Fr::from_uint(1), Fr::from_uint(2), Fr::from_uint(3), Fr::from_uint(4)};
  const auto sig = sigchain::sign(kp, msg, DomainTag::kMeterReading);
  EXPECT_TRUE(gadget_accepts(kp.public_key, msg, sig, DomainTag::kMeterReading));
  auto bumped = sig;
  add_to(bumped.s, U256(1));
  EXPECT_FALSE(gadget_accepts(kp.public_key, msg, bumped, DomainTag::kMeterReading));
  EXPECT_FALSE(gadget_accepts(kp.public_key, msg, sig, DomainTag::kIntensity));
}

TEST(SignatureGadget, NonCanonicalScalarRejected) {
  const auto kp = key(2);
  std::vector<Fr> msg{Fr::from_uint(10)};
  auto sig = sigchain::sign(kp, msg, DomainTag::kCertificateSignature);
  add_to(sig.s, sigchain::kSubgroupOrder);  // s + l still < p
  ASSERT_TRUE(sig.s < Fr::kModulus);
  EXPECT_FALSE(sigchain::verify(kp.public_key, msg, sig, DomainTag::kCertificateSignature));
  EXPECT_FALSE(gadget_accepts(kp.public_key, msg, sig, DomainTag::kCertificateSignature));
}

TEST(SignatureGadget, RandomForgeriesUnsatisfiable) {
  std::mt19937_64 rng(7);
  const auto kp = key(3);
  std::vector<Fr> msg{Fr::from_uint(77)};
  for (int t = 0; t < 100; ++t) {
    sigchain::Signature forged{EdwardsPoint::base_point().mul(random_scalar(rng)),
                               random_scalar(rng).to_canonical()};
    ASSERT_FALSE(gadget_accepts(kp.public_key, msg, forged, DomainTag::kMeterReading));
  }
}

TEST(SignatureGadget, AgreesWithNativeVerify) {
  std::mt19937_64 rng(8);
  int valid = 0, invalid = 0;
  for (int t = 0; t < 200; ++t) {
    const auto kp = key(1000 + t);
    std::vector<Fr> msg{random_fr(rng), random_fr(rng)};
    auto sig = sigchain::sign(kp, msg, DomainTag::kIntensity);
    EdwardsPoint pk = kp.public_key;
    if (t % 2 == 1) {
      switch (rng() % 5) {
        case 0: msg[rng() % 2] += Fr::one(); break;
        case 1: sig.s.limb[0] ^= uint64_t{1} << (rng() % 64); break;
        case 2: sig.r = sig.r + EdwardsPoint::base_point(); break;
        case 3: pk = key(999'999 - t).public_key; break;
        default: sig.r = sig.r + kTwoTorsion; break;
      }
    }
    const bool native = sigchain::verify(pk, msg, sig, DomainTag::kIntensity);
    ASSERT_EQ(gadget_accepts(pk, msg, sig, DomainTag::kIntensity), native) << t;
    (native ? valid : invalid)++;
  }
  EXPECT_EQ(valid, 100);
  EXPECT_EQ(invalid, 100);
}

bool emissions_ok(uint64_t i, uint64_t x, uint64_t c, uint64_t ce, uint64_t r) {
  CircuitBuilder b;
  emissions(b, b.alloc_private(Fr::from_uint(i)), b.alloc_private(Fr::from_uint(x)),
            b.alloc_private(Fr::from_uint(c)), b.alloc_public("ce", Fr::from_uint(ce)),
            b.alloc_private(Fr::from_uint(r)));
  return satisfied(b);
}

TEST(EmissionsGadget, DocumentedExamples) {
  EXPECT_TRUE(emissions_ok(200'000, 1'000'000, 50'000, 10'000'000, 0));
  EXPECT_FALSE(emissions_ok(200'000, 1'000'000, 50'000, 10'000'001, 0));
  EXPECT_FALSE(emissions_ok(200'000, 1'000'000, 50'000, 9'999'999, 0));
  EXPECT_TRUE(emissions_ok(0, 123, 456, 0, 0));
  EXPECT_FALSE(emissions_ok(0, 123, 456, 1, 0));
  EXPECT_TRUE(emissions_ok(333'333, 1'000, 333'333, 111'110, 888'889'000));
  EXPECT_FALSE(emissions_ok(333'333, 1'000, 333'333, 111'111, 888'889'000));
  EXPECT_FALSE(emissions_ok(333'333, 1'000, 333'333, 111'109, 888'889'000));
  // Shifting the quotient into the remainder breaks the remainder bound.
  EXPECT_FALSE(emissions_ok(333'333, 1'000, 333'333, 111'109, 1'888'889'000));
}

TEST(EmissionsGadget, BoundsEnforced) {
  EXPECT_FALSE(emissions_ok(uint64_t{1} << 40, 1, 1, 0, uint64_t{1} << 40));
  EXPECT_FALSE(emissions_ok(1, uint64_t{1} << 50, 1, 1'125'899, 906'842'624));
  EXPECT_FALSE(emissions_ok(1000, 1000, 1'000'001, 1, 1'000));
  EXPECT_TRUE(emissions_ok(1000, 1000, 1'000'000, 1000, 0));
}

TEST(EmissionsGadget, WrapAroundForgeryRejected) {
  // ce = (i*x*c - r) / 10^9 computed in the field for a wrong remainder gives
  // a huge ce that the 2^81 bound rejects.
  CircuitBuilder b;
  const Fr i = Fr::from_uint(7), x = Fr::from_uint(11), c = Fr::from_uint(13);
  const Fr r = Fr::from_uint(5);
  const Fr ce = (i * x * c - r) * Fr::from_uint(1'000'000'000).inverse();
  emissions(b, b.alloc_private(i), b.alloc_private(x), b.alloc_private(c),
            b.alloc_public("ce", ce), b.alloc_private(r));
  EXPECT_FALSE(satisfied(b));
}

}  // namespace
}  // namespace carbonzk::circuit
