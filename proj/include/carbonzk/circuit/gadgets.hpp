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

// Constraint gadgets: multiplication, bit decomposition and comparison,
// Baby Jubjub point arithmetic, the Poseidon sponge, Schnorr signature
// verification and the emissions divmod.
//
// Every gadget computes its outputs from the builder's current values, so
// the same code synthesizes the constraint structure (with placeholder
// inputs) and honest witnesses. Structure never depends on values; a
// gadget only skips a constraint when an operand is a compile-time
// constant linear combination.

#ifndef CARBONZK_CIRCUIT_GADGETS_HPP_
#define CARBONZK_CIRCUIT_GADGETS_HPP_

#include <span>
#include <vector>

#include "carbonzk/circuit/r1cs.hpp"
#include "carbonzk/sigchain/domain.hpp"
#include "carbonzk/sigchain/jubjub.hpp"

namespace carbonzk::circuit {

// a * b, as a fresh variable unless either side is constant.
LC mul(CircuitBuilder& b, const LC& x, const LC& y);
// num / den; the caller guarantees den != 0 for honest witnesses.
LC div(CircuitBuilder& b, const LC& num, const LC& den);
// Enforces v != 0 by exhibiting its inverse.
void enforce_nonzero(CircuitBuilder& b, const LC& v);
void enforce_boolean(CircuitBuilder& b, const LC& v);
// bit ? if_true : if_false, with bit boolean.
LC select(CircuitBuilder& b, const LC& bit, const LC& if_true, const LC& if_false);

// Little-endian bits of v with booleanity and recomposition; proves
// 0 <= v < 2^n. Requires n < 253.
std::vector<Variable> bits(CircuitBuilder& b, const LC& v, size_t n);
// Enforces that the integer with little-endian bits is < bound.
void enforce_bits_below(CircuitBuilder& b, std::span<const Variable> bits_le, const U256& bound);
// Proves v < bound for bound < 2^252.
void range_lt(CircuitBuilder& b, const LC& v, const U256& bound);
// Canonical 254-bit decomposition of any field element.
std::vector<Variable> bits_strict(CircuitBuilder& b, const LC& v);
LC recompose(std::span<const Variable> bits_le);

struct PointVar {
  LC x, y;
  static PointVar constant(const sigchain::EdwardsPoint& p);
  static PointVar identity() { return constant(sigchain::EdwardsPoint::identity()); }
};

PointVar alloc_point(CircuitBuilder& b, const sigchain::EdwardsPoint& p);
sigchain::EdwardsPoint point_value(const CircuitBuilder& b, const PointVar& p);

void enforce_on_curve(CircuitBuilder& b, const PointVar& p);
void enforce_point_equal(CircuitBuilder& b, const PointVar& p, const PointVar& q);
PointVar point_add(CircuitBuilder& b, const PointVar& p, const PointVar& q);
PointVar point_double(CircuitBuilder& b, const PointVar& p);
PointVar point_select(CircuitBuilder& b, const LC& bit, const PointVar& if_true,
                      const PointVar& if_false);
// sum bits[i] * 2^i * base for a constant base.
PointVar fixed_base_mul(CircuitBuilder& b, std::span<const Variable> bits_le,
                        const sigchain::EdwardsPoint& base);
// Double-and-add, most significant bit first.
PointVar variable_base_mul(CircuitBuilder& b, std::span<const Variable> bits_le,
                           const PointVar& p);
// P = 8 * Q for a witnessed on-curve Q, i.e. P lies in the order-l subgroup.
void enforce_in_prime_subgroup(CircuitBuilder& b, const PointVar& p);
// Non-identity for subgroup points: x != 0.
void enforce_not_identity(CircuitBuilder& b, const PointVar& p);

std::array<LC, 3> poseidon_permute(CircuitBuilder& b, std::array<LC, 3> state);
LC sponge(CircuitBuilder& b, sigchain::DomainTag domain, std::span<const LC> inputs);
LC sponge(CircuitBuilder& b, const Fr& domain_tag, std::span<const LC> inputs);

struct SignatureVar {
  PointVar r;
  LC s;
};

SignatureVar alloc_signature(CircuitBuilder& b, const sigchain::EdwardsPoint& r, const U256& s);
// Satisfiable iff native sigchain::verify accepts.
void verify_signature(CircuitBuilder& b, const PointVar& pk, std::span<const LC> message,
                      const SignatureVar& sig, sigchain::DomainTag domain);

// i * x * c = ce * 10^9 + r with r < 10^9, i < 2^40, x < 2^50,
// c <= 10^6 and ce < 2^81.
void emissions(CircuitBuilder& b, const LC& i, const LC& x, const LC& c, const LC& ce,
               const LC& r);

}  // namespace carbonzk::circuit

#endif  // CARBONZK_CIRCUIT_GADGETS_HPP_
