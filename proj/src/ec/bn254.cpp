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

#include "carbonzk/ec/bn254.hpp"

#include <cstring>

#include "carbonzk/ff/bigint.hpp"

namespace carbonzk::bn254 {
namespace {

Fq fq_dec(const char* s) { return Fq::from_decimal(s); }

struct FrobeniusConstants {
  Fq2 x_coeff;  // xi^((p-1)/3)
  Fq2 y_coeff;  // xi^((p-1)/2)
};

const FrobeniusConstants& frobenius_constants() {
  static const FrobeniusConstants kConstants = [] {
    const Fq2 xi(Fq::from_uint(9), Fq::from_uint(1));
    BigInt p = to_bigint(Fq::kModulus);
    FrobeniusConstants c;
    c.x_coeff = xi.pow(to_u256((p - 1) / 3));
    c.y_coeff = xi.pow(to_u256((p - 1) / 2));
    return c;
  }();
  return kConstants;
}

// Bits of (p^6 + 1) / r, most significant first.
const std::vector<bool>& final_exponent_bits() {
  static const std::vector<bool> kBits = [] {
    BigInt p = to_bigint(Fq::kModulus);
    BigInt r = to_bigint(Fr::kModulus);
    BigInt e = (boost::multiprecision::pow(p, 6) + 1) / r;
    std::vector<bool> bits;
    for (size_t i = boost::multiprecision::msb(e) + 1; i-- > 0;) {
      bits.push_back(boost::multiprecision::bit_test(e, i));
    }
    return bits;
  }();
  return kBits;
}

// 6u + 2 for u = 4965661367192848881.
const U256& ate_loop_count() {
  static const U256 kCount = U256::from_decimal("29793968203157093288");
  return kCount;
}

G2Affine frobenius(const G2Affine& q) {
  const auto& c = frobenius_constants();
  return G2Affine::from_xy(q.x.conjugate() * c.x_coeff, q.y.conjugate() * c.y_coeff);
}

Fq12 line_value(const Fq2& lambda, const G2Affine& t, const G1Affine& p) {
  Fq6 c0(Fq2(p.y, Fq::zero()), Fq2(), Fq2());
  Fq6 c1(-(lambda * p.x), lambda * t.x - t.y, Fq2());
  return {c0, c1};
}

// Tangent line at t evaluated at p; t becomes 2t.
Fq12 double_step(G2Affine& t, const G1Affine& p) {
  Fq2 xx = t.x.square();
  Fq2 lambda = (xx.dbl() + xx) * t.y.dbl().inverse();
  Fq12 line = line_value(lambda, t, p);
  Fq2 x3 = lambda.square() - t.x.dbl();
  Fq2 y3 = lambda * (t.x - x3) - t.y;
  t = G2Affine::from_xy(x3, y3);
  return line;
}

// Chord through t and q evaluated at p; t becomes t + q.
Fq12 add_step(G2Affine& t, const G2Affine& q, const G1Affine& p) {
  if (t.x == q.x) {
    if (t.y == q.y) return double_step(t, p);
    // Vertical line: lies in Fq6 and vanishes under the final exponentiation.
    t = G2Affine::identity();
    return Fq12::one();
  }
  Fq2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
  Fq12 line = line_value(lambda, t, p);
  Fq2 x3 = lambda.square() - t.x - q.x;
  Fq2 y3 = lambda * (t.x - x3) - t.y;
  t = G2Affine::from_xy(x3, y3);
  return line;
}

std::array<uint8_t, 32> read32(std::span<const uint8_t> bytes, size_t offset) {
  std::array<uint8_t, 32> out{};
  std::memcpy(out.data(), bytes.data() + offset, 32);
  return out;
}

std::optional<Fq> decode_fq(std::span<const uint8_t> bytes, size_t offset) {
  auto raw = read32(bytes, offset);
  return Fq::try_from_canonical(U256::from_bytes_be(raw));
}

void write_fq(uint8_t* out, const Fq& v) {
  auto b = v.to_bytes_be();
  std::memcpy(out, b.data(), 32);
}

}  // namespace

Fq2 G2Curve::b() {
  static const Fq2 kB = Fq2(Fq::from_uint(3), Fq::zero()) *
                        Fq2(Fq::from_uint(9), Fq::from_uint(1)).inverse();
  return kB;
}

AffinePoint<Fq2, G2Curve> G2Curve::generator() {
  static const G2Affine kGen = G2Affine::from_xy(
      Fq2(fq_dec("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
          fq_dec("11559732032986387107991004021392285783925812861821192530917403151452391805634")),
      Fq2(fq_dec("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
          fq_dec("4082367875863433681332203403145435568316851327593401208105741076214120093531")));
  return kGen;
}

std::array<uint8_t, kG1Bytes> encode_g1(const G1Affine& p) {
  std::array<uint8_t, kG1Bytes> out{};
  if (p.infinity) return out;
  write_fq(out.data(), p.x);
  write_fq(out.data() + 32, p.y);
  return out;
}

std::array<uint8_t, kG2Bytes> encode_g2(const G2Affine& p) {
  std::array<uint8_t, kG2Bytes> out{};
  if (p.infinity) return out;
  write_fq(out.data(), p.x.c1);
  write_fq(out.data() + 32, p.x.c0);
  write_fq(out.data() + 64, p.y.c1);
  write_fq(out.data() + 96, p.y.c0);
  return out;
}

std::optional<G1Affine> decode_g1(std::span<const uint8_t, kG1Bytes> bytes) {
  bool all_zero = true;
  for (uint8_t b : bytes) all_zero = all_zero && b == 0;
  if (all_zero) return G1Affine::identity();
  auto x = decode_fq(bytes, 0);
  auto y = decode_fq(bytes, 32);
  if (!x || !y) return std::nullopt;
  G1Affine p = G1Affine::from_xy(*x, *y);
  if (!p.is_on_curve()) return std::nullopt;
  return p;  // cofactor 1: on-curve implies in G1
}

std::optional<G2Affine> decode_g2(std::span<const uint8_t, kG2Bytes> bytes,
                                  bool check_subgroup) {
  bool all_zero = true;
  for (uint8_t b : bytes) all_zero = all_zero && b == 0;
  if (all_zero) return G2Affine::identity();
  auto x1 = decode_fq(bytes, 0);
  auto x0 = decode_fq(bytes, 32);
  auto y1 = decode_fq(bytes, 64);
  auto y0 = decode_fq(bytes, 96);
  if (!x0 || !x1 || !y0 || !y1) return std::nullopt;
  G2Affine p = G2Affine::from_xy(Fq2(*x0, *x1), Fq2(*y0, *y1));
  if (!p.is_on_curve()) return std::nullopt;
  if (check_subgroup && !g2_in_subgroup(p)) return std::nullopt;
  return p;
}

bool g2_in_subgroup(const G2Affine& p) {
  return G2(p).mul(Fr::kModulus).is_identity();
}

Fq12 miller_loop(const G1Affine& p, const G2Affine& q) {
  if (p.infinity || q.infinity) return Fq12::one();
  const U256& count = ate_loop_count();
  Fq12 f = Fq12::one();
  G2Affine t = q;
  for (size_t i = count.bit_length() - 1; i-- > 0;) {
    f = f.square() * double_step(t, p);
    if (count.bit(i)) f *= add_step(t, q, p);
  }
  G2Affine q1 = frobenius(q);
  G2Affine q2 = -frobenius(q1);
  f *= add_step(t, q1, p);
  f *= add_step(t, q2, p);
  return f;
}

Fq12 final_exponentiation(const Fq12& f) {
  // f^(p^6 - 1), then the remaining (p^6 + 1) / r by square-and-multiply.
  Fq12 g = f.conjugate() * f.inverse();
  Fq12 acc = Fq12::one();
  for (bool bit : final_exponent_bits()) {
    acc = acc.square();
    if (bit) acc *= g;
  }
  return acc;
}

Fq12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}

bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
  Fq12 f = Fq12::one();
  for (const auto& [p, q] : pairs) f *= miller_loop(p, q);
  return final_exponentiation(f).is_one();
}

}  // namespace carbonzk::bn254
