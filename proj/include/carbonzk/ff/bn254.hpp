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

// Base and scalar fields of the BN254 (alt_bn128) pairing curve and the
// degree-12 extension tower used by the pairing:
//   Fq2  = Fq[i] / (i^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + i
//   Fq12 = Fq6[w] / (w^2 - v)

#ifndef CARBONZK_FF_BN254_HPP_
#define CARBONZK_FF_BN254_HPP_

#include "carbonzk/ff/prime_field.hpp"

namespace carbonzk {

struct Bn254FqConfig {
  static constexpr U256 kModulus{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};

struct Bn254FrConfig {
  static constexpr U256 kModulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
  static constexpr uint64_t kMultiplicativeGenerator = 5;
  static constexpr unsigned kTwoAdicity = 28;
};

using Fq = PrimeField<Bn254FqConfig>;
// Scalar field of BN254; the proof field for every circuit.
using Fr = PrimeField<Bn254FrConfig>;

class Fq2 {
 public:
  Fq c0, c1;

  constexpr Fq2() = default;
  constexpr Fq2(const Fq& a, const Fq& b) : c0(a), c1(b) {}

  static constexpr Fq2 zero() { return Fq2(); }
  static constexpr Fq2 one() { return Fq2(Fq::one(), Fq::zero()); }

  constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  constexpr bool operator==(const Fq2&) const = default;

  constexpr Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  constexpr Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  constexpr Fq2 operator-() const { return {-c0, -c1}; }
  constexpr Fq2& operator+=(const Fq2& o) { return *this = *this + o; }
  constexpr Fq2& operator-=(const Fq2& o) { return *this = *this - o; }
  constexpr Fq2 operator*(const Fq2& o) const {
    Fq aa = c0 * o.c0;
    Fq bb = c1 * o.c1;
    Fq cross = (c0 + c1) * (o.c0 + o.c1);
    return {aa - bb, cross - aa - bb};
  }
  constexpr Fq2& operator*=(const Fq2& o) { return *this = *this * o; }
  constexpr Fq2 operator*(const Fq& s) const { return {c0 * s, c1 * s}; }
  constexpr Fq2 square() const {
    Fq ab = c0 * c1;
    return {(c0 + c1) * (c0 - c1), ab + ab};
  }
  constexpr Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  constexpr Fq2 conjugate() const { return {c0, -c1}; }
  constexpr Fq2 inverse() const {
    Fq t = (c0.square() + c1.square()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  // Multiplication by xi = 9 + i.
  constexpr Fq2 mul_by_nonresidue() const {
    Fq nine_c0 = c0.dbl().dbl().dbl() + c0;
    Fq nine_c1 = c1.dbl().dbl().dbl() + c1;
    return {nine_c0 - c1, c0 + nine_c1};
  }
  Fq2 pow(const U256& e) const {
    Fq2 acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
};

class Fq6 {
 public:
  Fq2 c0, c1, c2;

  constexpr Fq6() = default;
  constexpr Fq6(const Fq2& a, const Fq2& b, const Fq2& c) : c0(a), c1(b), c2(c) {}

  static constexpr Fq6 zero() { return Fq6(); }
  static constexpr Fq6 one() { return Fq6(Fq2::one(), Fq2(), Fq2()); }

  constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  constexpr bool operator==(const Fq6&) const = default;

  constexpr Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  constexpr Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  constexpr Fq6 operator-() const { return {-c0, -c1, -c2}; }
  constexpr Fq6 operator*(const Fq6& o) const {
    Fq2 v0 = c0 * o.c0;
    Fq2 v1 = c1 * o.c1;
    Fq2 v2 = c2 * o.c2;
    Fq2 t0 = ((c1 + c2) * (o.c1 + o.c2) - v1 - v2).mul_by_nonresidue() + v0;
    Fq2 t1 = (c0 + c1) * (o.c0 + o.c1) - v0 - v1 + v2.mul_by_nonresidue();
    Fq2 t2 = (c0 + c2) * (o.c0 + o.c2) - v0 - v2 + v1;
    return {t0, t1, t2};
  }
  constexpr Fq6& operator*=(const Fq6& o) { return *this = *this * o; }
  constexpr Fq6 square() const { return *this * *this; }
  // Multiplication by v.
  constexpr Fq6 mul_by_nonresidue() const { return {c2.mul_by_nonresidue(), c0, c1}; }
  constexpr Fq6 inverse() const {
    Fq2 a = c0.square() - (c1 * c2).mul_by_nonresidue();
    Fq2 b = c2.square().mul_by_nonresidue() - c0 * c1;
    Fq2 c = c1.square() - c0 * c2;
    Fq2 t = (c0 * a + (c2 * b).mul_by_nonresidue() + (c1 * c).mul_by_nonresidue()).inverse();
    return {a * t, b * t, c * t};
  }
};

class Fq12 {
 public:
  Fq6 c0, c1;

  constexpr Fq12() = default;
  constexpr Fq12(const Fq6& a, const Fq6& b) : c0(a), c1(b) {}

  static constexpr Fq12 one() { return Fq12(Fq6::one(), Fq6()); }

  constexpr bool is_one() const { return c0 == Fq6::one() && c1.is_zero(); }
  constexpr bool operator==(const Fq12&) const = default;

  constexpr Fq12 operator*(const Fq12& o) const {
    Fq6 aa = c0 * o.c0;
    Fq6 bb = c1 * o.c1;
    Fq6 cross = (c0 + c1) * (o.c0 + o.c1) - aa - bb;
    return {aa + bb.mul_by_nonresidue(), cross};
  }
  constexpr Fq12& operator*=(const Fq12& o) { return *this = *this * o; }
  constexpr Fq12 square() const {
    Fq6 ab = c0 * c1;
    Fq6 t = (c0 + c1) * (c0 + c1.mul_by_nonresidue()) - ab - ab.mul_by_nonresidue();
    return {t, ab + ab};
  }
  // x^(p^6): conjugation over Fq6.
  constexpr Fq12 conjugate() const { return {c0, -c1}; }
  constexpr Fq12 inverse() const {
    Fq6 t = (c0.square() - c1.square().mul_by_nonresidue()).inverse();
    return {c0 * t, -(c1 * t)};
  }
};

}  // namespace carbonzk

#endif  // CARBONZK_FF_BN254_HPP_
