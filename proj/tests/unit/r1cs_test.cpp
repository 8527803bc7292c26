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

#include "carbonzk/circuit/r1cs.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "carbonzk/circuit/gadgets.hpp"
#include "carbonzk/util/error.hpp"
#include "gtest/gtest.h"

namespace carbonzk::circuit {
namespace {

bool satisfied(const CircuitBuilder& b) { return bool(is_satisfied(b.system(), b.witness())); }

LC k(uint64_t v) { return LC::constant(Fr::from_uint(v)); }

TEST(LinearCombination, NormalizesTerms) {
  const Variable x{1}, y{2};
  LC lc = LC(x) + LC(y) + LC(x) * Fr::from_uint(3) - LC(y);
  ASSERT_EQ(lc.terms().size(), 1u);
  EXPECT_EQ(lc.terms()[0].index, 1u);
  EXPECT_EQ(lc.terms()[0].coeff, Fr::from_uint(4));
  EXPECT_TRUE((LC(x) - LC(x)).terms().empty());
  EXPECT_TRUE(k(7).is_constant());
  EXPECT_FALSE(LC(x).is_constant());
  LC merged = LC::from_terms({{2, Fr::one()}, {1, Fr::one()}, {2, -Fr::one()}});
  ASSERT_EQ(merged.terms().size(), 1u);
  EXPECT_EQ(merged.terms()[0].index, 1u);
}

TEST(CircuitBuilder, AllocationOrder) {
  CircuitBuilder b;
  Variable first = b.alloc_private(Fr::one());
  EXPECT_EQ(first.index, 1u);
  Variable p1 = b.alloc_public("a", Fr::one());
  Variable mid = b.alloc_private(Fr::one());
  Variable p2 = b.alloc_public("b", Fr::one());
  EXPECT_NE(first.index, mid.index);
  const auto& cs = b.system();
  ASSERT_EQ(cs.public_inputs.size(), 2u);
  EXPECT_EQ(cs.public_inputs[0], p1.index);
  EXPECT_EQ(cs.public_inputs[1], p2.index);
  EXPECT_EQ(cs.public_names[0], "a");
  EXPECT_EQ(cs.num_variables, 5u);
  EXPECT_EQ(b.witness().size(), 5u);
}

TEST(CircuitBuilder, EnforceExamples) {
  CircuitBuilder b;
  Variable x = b.alloc_private(Fr::from_uint(3));
  Variable y = b.alloc_private(Fr::from_uint(9));
  b.enforce(x, k(1), x);
  b.enforce(x, x, y);
  EXPECT_TRUE(satisfied(b));

  CircuitBuilder bad;
  Variable x2 = bad.alloc_private(Fr::from_uint(3));
  Variable y2 = bad.alloc_private(Fr::from_uint(8));
  bad.enforce(x2, k(1), x2);
  bad.enforce(x2, x2, y2);
  auto result = is_satisfied(bad.system(), bad.witness());
  EXPECT_FALSE(result);
  EXPECT_EQ(result.failing_constraint, 1u);
}

TEST(CircuitBuilder, RejectsUnallocatedVariables) {
  CircuitBuilder b;
  Variable x = b.alloc_private(Fr::one());
  try {
    b.enforce(x, Variable{5}, x);
    FAIL() << "expected UnallocatedVariable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnallocatedVariable);
  }
}

TEST(IsSatisfied, EmptySystemAndLengthMismatch) {
  ConstraintSystem empty;
  std::vector<Fr> w{Fr::one()};
  EXPECT_TRUE(is_satisfied(empty, w));
  std::vector<Fr> longer{Fr::one(), Fr::one()};
  EXPECT_THROW(is_satisfied(empty, longer), Error);
  std::vector<Fr> bad_one{Fr::zero()};
  EXPECT_THROW(is_satisfied(empty, bad_one), Error);
}

TEST(BitsGadget, Examples) {
  {
    CircuitBuilder b;
    auto bits_out = bits(b, b.alloc_private(Fr::from_uint(5)), 3);
    EXPECT_TRUE(satisfied(b));
    EXPECT_EQ(b.value(bits_out[0]), Fr::one());
    EXPECT_EQ(b.value(bits_out[1]), Fr::zero());
    EXPECT_EQ(b.value(bits_out[2]), Fr::one());
  }
  {
    CircuitBuilder b;
    bits(b, b.alloc_private(Fr::from_uint(8)), 3);
    EXPECT_FALSE(satisfied(b));
  }
  {
    CircuitBuilder b;
    auto bits_out = bits(b, b.alloc_private(Fr::zero()), 8);
    EXPECT_TRUE(satisfied(b));
    for (auto v : bits_out) EXPECT_TRUE(b.value(v).is_zero());
  }
  CircuitBuilder b;
  EXPECT_THROW(bits(b, b.alloc_private(Fr::zero()), 253), std::invalid_argument);
}

TEST(BitsGadget, NonBooleanWitnessRejected) {
  // Hand-assign bit values 2 and 0 that recompose to 4 = 0b100 without booleanity.
  CircuitBuilder b;
  Variable v = b.alloc_private(Fr::from_uint(4));
  auto out = bits(b, v, 3);
  auto w = b.witness();
  w[out[1].index] = Fr::from_uint(2);
  w[out[2].index] = Fr::zero();
  EXPECT_FALSE(is_satisfied(b.system(), w));
}

TEST(RangeGadget, Examples) {
  auto check = [](uint64_t v, uint64_t bound) {
    CircuitBuilder b;
    range_lt(b, b.alloc_private(Fr::from_uint(v)), U256(bound));
    return satisfied(b);
  };
  EXPECT_TRUE(check(999'999'999, 1'000'000'000));
  EXPECT_FALSE(check(1'000'000'000, 1'000'000'000));
  EXPECT_TRUE(check(0, 1'000'000'000));
  EXPECT_TRUE(check(0, 1));
  EXPECT_FALSE(check(1, 1));
}

TEST(RangeGadget, ExhaustiveSmallBounds) {
  for (uint64_t bound = 1; bound <= 40; ++bound) {
    for (uint64_t v = 0; v < 70; ++v) {
      CircuitBuilder b;
      range_lt(b, b.alloc_private(Fr::from_uint(v)), U256(bound));
      ASSERT_EQ(satisfied(b), v < bound) << v << " < " << bound;
    }
  }
}

TEST(RangeGadget, ComparatorRejectsEveryForgedBitPattern) {
  // For 5-bit values, every boolean assignment of the bits either encodes a
  // value below the bound or is rejected by the comparator.
  for (uint64_t bound = 1; bound < 32; ++bound) {
    for (uint64_t v = 0; v < 32; ++v) {
      CircuitBuilder b;
      std::vector<Variable> bits_le;
      for (int i = 0; i < 5; ++i) bits_le.push_back(b.alloc_private(Fr::from_uint((v >> i) & 1)));
      enforce_bits_below(b, bits_le, U256(bound));
      ASSERT_EQ(satisfied(b), v < bound);
    }
  }
}

TEST(RangeGadget, RandomOutOfRangeValuesUnsatisfiable) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const uint64_t bound = 1 + rng() % (uint64_t{1} << 60);
    const uint64_t over = bound + rng() % (uint64_t{1} << 60);
    const uint64_t under = rng() % bound;
    CircuitBuilder ok;
    range_lt(ok, ok.alloc_private(Fr::from_uint(under)), U256(bound));
    ASSERT_TRUE(satisfied(ok));
    CircuitBuilder bad;
    range_lt(bad, bad.alloc_private(Fr::from_uint(over)), U256(bound));
    ASSERT_FALSE(satisfied(bad));
  }
  // Field elements far above the bound (negative small integers).
  CircuitBuilder neg;
  range_lt(neg, neg.alloc_private(-Fr::one()), U256(1000));
  EXPECT_FALSE(satisfied(neg));
}

TEST(StrictBits, RejectsAliasedDecomposition) {
  CircuitBuilder b;
  const Fr v = Fr::from_uint(12345);
  auto out = bits_strict(b, b.alloc_private(v));
  ASSERT_TRUE(satisfied(b));
  // Replace the bits with those of v + p (< 2^254): recomposition still holds
  // in the field but the comparator must reject it.
  U256 alias = v.to_canonical();
  add_to(alias, Fr::kModulus);
  auto w = b.witness();
  for (size_t i = 0; i < out.size(); ++i) w[out[i].index] = Fr::from_uint(alias.bit(i) ? 1 : 0);
  EXPECT_FALSE(is_satisfied(b.system(), w));

  CircuitBuilder top;
  bits_strict(top, top.alloc_private(-Fr::one()));
  EXPECT_TRUE(satisfied(top));
}

TEST(Sections, LocateFailingConstraint) {
  CircuitBuilder b;
  Variable x = b.alloc_private(Fr::from_uint(2));
  b.begin_section("outer");
  b.enforce(x, x, k(4));
  b.begin_section("inner");
  b.enforce(x, x, k(5));
  b.end_section();
  b.end_section();
  auto r = is_satisfied(b.system(), b.witness());
  ASSERT_FALSE(r);
  EXPECT_EQ(b.system().section_of(r.failing_constraint), "inner");
  EXPECT_EQ(b.system().section_of(0), "outer");
}

CircuitBuilder golden_example() {
  // x^3 + x + 5 = out with x < 6.
  CircuitBuilder b("golden-example", 1);
  Variable out = b.alloc_public("out", Fr::from_uint(35));
  Variable x = b.alloc_private(Fr::from_uint(3));
  LC x2 = mul(b, x, x);
  LC x3 = mul(b, x2, x);
  b.enforce_equal(x3 + LC(x) + k(5), out);
  range_lt(b, x, U256(6));
  return b;
}

TEST(DebugExport, MatchesGoldenFile) {
  CircuitBuilder b = golden_example();
  ASSERT_TRUE(satisfied(b));
  std::ifstream in(std::string(CARBONZK_GOLDEN_DIR) + "/example_circuit.json");
  ASSERT_TRUE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(b.system().to_debug_json(), golden.str());
}

TEST(Digest, StableAndStructureSensitive) {
  EXPECT_EQ(golden_example().system().digest(), golden_example().system().digest());
  CircuitBuilder other = golden_example();
  other.enforce(k(1), k(1), k(1));
  EXPECT_NE(other.system().digest(), golden_example().system().digest());
}

}  // namespace
}  // namespace carbonzk::circuit
