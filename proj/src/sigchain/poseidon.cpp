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

#include "carbonzk/sigchain/poseidon.hpp"

#include <bitset>
#include <stdexcept>

namespace carbonzk::sigchain {
namespace {

// Grain LFSR in self-shrinking mode, seeded with the instance parameters.
class GrainLfsr {
 public:
  GrainLfsr(unsigned field_bits, unsigned width, unsigned full_rounds, unsigned partial_rounds) {
    size_t pos = 0;
    auto push = [&](uint64_t value, unsigned n) {
      for (unsigned i = n; i-- > 0;) state_[pos++] = (value >> i) & 1;
    };
    push(1, 2);  // prime field
    push(0, 4);  // x^alpha S-box
    push(field_bits, 12);
    push(width, 12);
    push(full_rounds, 10);
    push(partial_rounds, 10);
    push((uint64_t{1} << 30) - 1, 30);
    for (int i = 0; i < 160; ++i) step();
  }

  U256 next_bits(unsigned n) {
    U256 v;
    for (unsigned i = 0; i < n; ++i) {
      bool b = next_bit();
      if (b) v.limb[(n - 1 - i) / 64] |= uint64_t{1} << ((n - 1 - i) % 64);
    }
    return v;
  }

 private:
  bool step() {
    bool nb = state_[(head_ + 62) % 80] ^ state_[(head_ + 51) % 80] ^ state_[(head_ + 38) % 80] ^
              state_[(head_ + 23) % 80] ^ state_[(head_ + 13) % 80] ^ state_[head_];
    state_[head_] = nb;
    head_ = (head_ + 1) % 80;
    return nb;
  }

  bool next_bit() {
    for (;;) {
      bool b1 = step();
      bool b2 = step();
      if (b1) return b2;
    }
  }

  std::bitset<80> state_;
  size_t head_ = 0;
};

PoseidonConstants generate_constants() {
  GrainLfsr lfsr(static_cast<unsigned>(Fr::kBits), kPoseidonWidth, kPoseidonFullRounds,
                 kPoseidonPartialRounds);
  PoseidonConstants c;
  c.round_constants.resize(kPoseidonRounds);
  for (auto& row : c.round_constants) {
    for (auto& v : row) {
      std::optional<Fr> f;
      while (!(f = Fr::try_from_canonical(lfsr.next_bits(Fr::kBits)))) {
      }
      v = *f;
    }
  }
  PoseidonState xs, ys;
  for (auto& v : xs) v = Fr::reduce(lfsr.next_bits(Fr::kBits));
  for (auto& v : ys) v = Fr::reduce(lfsr.next_bits(Fr::kBits));
  for (size_t i = 0; i < kPoseidonWidth; ++i) {
    for (size_t j = 0; j < kPoseidonWidth; ++j) c.mds[i][j] = (xs[i] + ys[j]).inverse();
  }
  return c;
}

Fr pow5(const Fr& x) {
  Fr x2 = x.square();
  return x2.square() * x;
}

}  // namespace

const PoseidonConstants& poseidon_constants() {
  static const PoseidonConstants kConstants = generate_constants();
  return kConstants;
}

void poseidon_permute(PoseidonState& state) {
  const auto& c = poseidon_constants();
  for (size_t r = 0; r < kPoseidonRounds; ++r) {
    for (size_t i = 0; i < kPoseidonWidth; ++i) state[i] += c.round_constants[r][i];
    if (poseidon_full_round(r)) {
      for (auto& v : state) v = pow5(v);
    } else {
      state[0] = pow5(state[0]);
    }
    PoseidonState next{};
    for (size_t i = 0; i < kPoseidonWidth; ++i) {
      for (size_t j = 0; j < kPoseidonWidth; ++j) next[i] += c.mds[i][j] * state[j];
    }
    state = next;
  }
}

std::vector<Fr> sponge_absorb_sequence(std::span<const Fr> inputs) {
  if (inputs.empty()) throw std::invalid_argument("sponge input must be non-empty");
  std::vector<Fr> seq;
  seq.reserve(inputs.size() + 2);
  seq.push_back(Fr::from_uint(inputs.size()));
  seq.insert(seq.end(), inputs.begin(), inputs.end());
  if (seq.size() % 2 != 0) seq.push_back(Fr::zero());
  return seq;
}

Fr sponge_hash(const Fr& domain_tag, std::span<const Fr> inputs) {
  const std::vector<Fr> seq = sponge_absorb_sequence(inputs);
  PoseidonState state{domain_tag, Fr::zero(), Fr::zero()};
  for (size_t k = 0; k < seq.size(); k += 2) {
    state[1] += seq[k];
    state[2] += seq[k + 1];
    poseidon_permute(state);
  }
  return state[1];
}

}  // namespace carbonzk::sigchain
