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

#include <stdexcept>

#include "carbonzk/sigchain/poseidon.hpp"

namespace carbonzk::circuit {

using sigchain::EdwardsPoint;

namespace {

const LC& one_lc() {
  static const LC kOne = LC::constant(Fr::one());
  return kOne;
}

std::vector<Variable> bits_unchecked(CircuitBuilder& b, const LC& v, size_t n) {
  const U256 value = b.value(v).to_canonical();
  std::vector<Variable> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Variable bit = b.alloc_private(Fr::from_uint(i < 256 && value.bit(i) ? 1 : 0));
    enforce_boolean(b, bit);
    out.push_back(bit);
  }
  b.enforce_equal(recompose(out), v);
  return out;
}

LC pow5(CircuitBuilder& b, const LC& x) {
  LC x2 = mul(b, x, x);
  LC x4 = mul(b, x2, x2);
  return mul(b, x4, x);
}

}  // namespace

LC mul(CircuitBuilder& b, const LC& x, const LC& y) {
  if (x.is_constant()) return y * x.constant_value();
  if (y.is_constant()) return x * y.constant_value();
  Variable out = b.alloc_private(b.value(x) * b.value(y));
  b.enforce(x, y, out);
  return out;
}

LC div(CircuitBuilder& b, const LC& num, const LC& den) {
  if (den.is_constant()) return num * den.constant_value().inverse();
  Variable out = b.alloc_private(b.value(num) * b.value(den).inverse());
  b.enforce(out, den, num);
  return out;
}

void enforce_nonzero(CircuitBuilder& b, const LC& v) {
  Variable inv = b.alloc_private(b.value(v).inverse());
  b.enforce(v, inv, one_lc());
}

void enforce_boolean(CircuitBuilder& b, const LC& v) { b.enforce(v, v - one_lc(), LC()); }

LC select(CircuitBuilder& b, const LC& bit, const LC& if_true, const LC& if_false) {
  const LC diff = if_true - if_false;
  if (diff.is_constant() || bit.is_constant()) return if_false + mul(b, bit, diff);
  // A fresh output keeps chained selections from growing the combination.
  Variable out = b.alloc_private(b.value(if_false) + b.value(bit) * b.value(diff));
  b.enforce(bit, diff, LC(out) - if_false);
  return out;
}

LC recompose(std::span<const Variable> bits_le) {
  std::vector<Term> terms;
  terms.reserve(bits_le.size());
  Fr pow = Fr::one();
  for (Variable v : bits_le) {
    terms.push_back({v.index, pow});
    pow = pow.dbl();
  }
  return LC::from_terms(std::move(terms));
}

std::vector<Variable> bits(CircuitBuilder& b, const LC& v, size_t n) {
  if (n >= Fr::kBits - 1) throw std::invalid_argument("bit decomposition too wide to be unique");
  return bits_unchecked(b, v, n);
}

void enforce_bits_below(CircuitBuilder& b, std::span<const Variable> bits_le, const U256& bound) {
  if (bound.is_zero()) throw std::invalid_argument("no value is below zero");
  const size_t n = bits_le.size();
  if (bound.bit_length() > n) return;  // every n-bit value qualifies
  // Scan from the most significant bit; eq is one while the prefix of the
  // value equals the prefix of the bound. Where the bound has a run of
  // zeros, eq * (sum of the run's bits) = 0 forces the whole run to zero
  // while the prefix is still equal.
  LC eq = one_lc();
  LC zero_run;
  auto close_run = [&] {
    if (!zero_run.terms().empty()) b.enforce(eq, zero_run, LC());
    zero_run = LC();
  };
  for (size_t i = n; i-- > 0;) {
    if (bound.bit(i)) {
      close_run();
      eq = mul(b, eq, bits_le[i]);
    } else {
      zero_run += bits_le[i];
    }
  }
  close_run();
  b.enforce(eq, one_lc(), LC());
}

void range_lt(CircuitBuilder& b, const LC& v, const U256& bound) {
  if (bound.is_zero()) throw std::invalid_argument("no value is below zero");
  const size_t n = sub(bound, U256(1)).bit_length();
  if (n == 0) {
    b.enforce_equal(v, LC());
    return;
  }
  const auto v_bits = bits(b, v, n);
  enforce_bits_below(b, v_bits, bound);
}

std::vector<Variable> bits_strict(CircuitBuilder& b, const LC& v) {
  auto out = bits_unchecked(b, v, Fr::kBits);
  enforce_bits_below(b, out, Fr::kModulus);
  return out;
}

PointVar PointVar::constant(const EdwardsPoint& p) {
  return {LC::constant(p.x), LC::constant(p.y)};
}

PointVar alloc_point(CircuitBuilder& b, const EdwardsPoint& p) {
  return {b.alloc_private(p.x), b.alloc_private(p.y)};
}

EdwardsPoint point_value(const CircuitBuilder& b, const PointVar& p) {
  return {b.value(p.x), b.value(p.y)};
}

void enforce_on_curve(CircuitBuilder& b, const PointVar& p) {
  LC xx = mul(b, p.x, p.x);
  LC yy = mul(b, p.y, p.y);
  b.enforce(xx * sigchain::edwards_d(), yy, xx * sigchain::edwards_a() + yy - one_lc());
}

void enforce_point_equal(CircuitBuilder& b, const PointVar& p, const PointVar& q) {
  b.enforce_equal(p.x, q.x);
  b.enforce_equal(p.y, q.y);
}

PointVar point_add(CircuitBuilder& b, const PointVar& p, const PointVar& q) {
  const Fr a = sigchain::edwards_a();
  const Fr d = sigchain::edwards_d();
  LC beta = mul(b, p.x, q.y);
  LC gamma = mul(b, p.y, q.x);
  LC delta = mul(b, p.y - p.x * a, q.x + q.y);
  LC tau = mul(b, beta, gamma);
  LC x3 = div(b, beta + gamma, one_lc() + tau * d);
  LC y3 = div(b, delta + beta * a - gamma, one_lc() - tau * d);
  return {x3, y3};
}

PointVar point_double(CircuitBuilder& b, const PointVar& p) {
  const Fr a = sigchain::edwards_a();
  const Fr d = sigchain::edwards_d();
  LC beta = mul(b, p.x, p.y);
  LC delta = mul(b, p.y - p.x * a, p.x + p.y);
  LC tau = mul(b, beta, beta);
  LC x3 = div(b, beta * Fr::from_uint(2), one_lc() + tau * d);
  LC y3 = div(b, delta + beta * (a - Fr::one()), one_lc() - tau * d);
  return {x3, y3};
}

PointVar point_select(CircuitBuilder& b, const LC& bit, const PointVar& if_true,
                      const PointVar& if_false) {
  return {select(b, bit, if_true.x, if_false.x), select(b, bit, if_true.y, if_false.y)};
}

PointVar fixed_base_mul(CircuitBuilder& b, std::span<const Variable> bits_le,
                        const EdwardsPoint& base) {
  PointVar acc = PointVar::identity();
  EdwardsPoint power = base;  // 2^i * base
  for (Variable bit : bits_le) {
    // Adding a constant point keeps beta, gamma and delta linear.
    PointVar sum = point_add(b, acc, PointVar::constant(power));
    acc = point_select(b, bit, sum, acc);
    power = power.dbl();
  }
  return acc;
}

PointVar variable_base_mul(CircuitBuilder& b, std::span<const Variable> bits_le,
                           const PointVar& p) {
  PointVar acc = PointVar::identity();
  for (size_t i = bits_le.size(); i-- > 0;) {
    acc = point_double(b, acc);
    PointVar sum = point_add(b, acc, p);
    acc = point_select(b, bits_le[i], sum, acc);
  }
  return acc;
}

void enforce_in_prime_subgroup(CircuitBuilder& b, const PointVar& p) {
  static const U256 kInverseCofactor =
      sigchain::JubjubScalar::from_uint(sigchain::kCofactor).inverse().to_canonical();
  PointVar q = alloc_point(b, point_value(b, p).mul(kInverseCofactor));
  enforce_on_curve(b, q);
  PointVar q8 = point_double(b, point_double(b, point_double(b, q)));
  enforce_point_equal(b, q8, p);
}

void enforce_not_identity(CircuitBuilder& b, const PointVar& p) { enforce_nonzero(b, p.x); }

std::array<LC, 3> poseidon_permute(CircuitBuilder& b, std::array<LC, 3> state) {
  const auto& c = sigchain::poseidon_constants();
  for (size_t r = 0; r < sigchain::kPoseidonRounds; ++r) {
    for (size_t i = 0; i < 3; ++i) state[i] += LC::constant(c.round_constants[r][i]);
    if (sigchain::poseidon_full_round(r)) {
      for (auto& v : state) v = pow5(b, v);
    } else {
      state[0] = pow5(b, state[0]);
    }
    std::array<LC, 3> next;
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = 0; j < 3; ++j) next[i] += state[j] * c.mds[i][j];
    }
    state = std::move(next);
  }
  return state;
}

LC sponge(CircuitBuilder& b, const Fr& domain_tag, std::span<const LC> inputs) {
  if (inputs.empty()) throw std::invalid_argument("sponge input must be non-empty");
  std::vector<LC> seq{LC::constant(Fr::from_uint(inputs.size()))};
  seq.insert(seq.end(), inputs.begin(), inputs.end());
  if (seq.size() % 2 != 0) seq.push_back(LC());
  std::array<LC, 3> state{LC::constant(domain_tag), LC(), LC()};
  for (size_t k = 0; k < seq.size(); k += 2) {
    state[1] += seq[k];
    state[2] += seq[k + 1];
    state = poseidon_permute(b, std::move(state));
  }
  return state[1];
}

LC sponge(CircuitBuilder& b, sigchain::DomainTag domain, std::span<const LC> inputs) {
  return sponge(b, sigchain::domain_tag_value(domain), inputs);
}

SignatureVar alloc_signature(CircuitBuilder& b, const EdwardsPoint& r, const U256& s) {
  auto s_field = Fr::try_from_canonical(s);
  if (!s_field) throw std::invalid_argument("signature scalar is not a field element");
  return {alloc_point(b, r), b.alloc_private(*s_field)};
}

void verify_signature(CircuitBuilder& b, const PointVar& pk, std::span<const LC> message,
                      const SignatureVar& sig, sigchain::DomainTag domain) {
  enforce_in_prime_subgroup(b, pk);
  enforce_not_identity(b, pk);
  enforce_in_prime_subgroup(b, sig.r);

  const auto s_bits = bits(b, sig.s, sigchain::kSubgroupOrder.bit_length());
  enforce_bits_below(b, s_bits, sigchain::kSubgroupOrder);

  std::vector<LC> inputs{sig.r.x, sig.r.y, pk.x, pk.y};
  inputs.insert(inputs.end(), message.begin(), message.end());
  const LC c = sponge(b, domain, inputs);
  const auto c_bits = bits_strict(b, c);

  const PointVar lhs = fixed_base_mul(b, s_bits, EdwardsPoint::base_point());
  const PointVar rhs = point_add(b, sig.r, variable_base_mul(b, c_bits, pk));
  enforce_point_equal(b, lhs, rhs);
}

void emissions(CircuitBuilder& b, const LC& i, const LC& x, const LC& c, const LC& ce,
               const LC& r) {
  const Fr divisor = Fr::from_uint(1'000'000'000);
  const LC p1 = mul(b, i, x);
  b.enforce(p1, c, ce * divisor + r);
  range_lt(b, r, U256(1'000'000'000));
  range_lt(b, i, U256(uint64_t{1} << 40));
  range_lt(b, x, U256(uint64_t{1} << 50));
  range_lt(b, c, U256(1'000'001));
  U256 ce_bound;
  ce_bound.limb[1] = uint64_t{1} << (81 - 64);
  range_lt(b, ce, ce_bound);
}

}  // namespace carbonzk::circuit
