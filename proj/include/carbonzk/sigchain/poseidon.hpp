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

// Poseidon permutation over the BN254 scalar field (width 3, x^5 S-box,
// 8 full and 57 partial rounds) and the sponge built on it.
//
// Round constants and the Cauchy MDS matrix are generated by the Grain
// LFSR procedure of the Poseidon reference implementation; the resulting
// permutation matches the widely deployed circomlib instantiation.

#ifndef CARBONZK_SIGCHAIN_POSEIDON_HPP_
#define CARBONZK_SIGCHAIN_POSEIDON_HPP_

#include <array>
#include <span>
#include <vector>

#include "carbonzk/ff/bn254.hpp"

namespace carbonzk::sigchain {

inline constexpr size_t kPoseidonWidth = 3;
inline constexpr size_t kPoseidonFullRounds = 8;
inline constexpr size_t kPoseidonPartialRounds = 57;
inline constexpr size_t kPoseidonRounds = kPoseidonFullRounds + kPoseidonPartialRounds;

using PoseidonState = std::array<Fr, kPoseidonWidth>;

struct PoseidonConstants {
  std::vector<PoseidonState> round_constants;  // one row per round
  std::array<PoseidonState, kPoseidonWidth> mds;
};

const PoseidonConstants& poseidon_constants();

inline constexpr bool poseidon_full_round(size_t round) {
  return round < kPoseidonFullRounds / 2 ||
         round >= kPoseidonFullRounds / 2 + kPoseidonPartialRounds;
}

void poseidon_permute(PoseidonState& state);

// Sponge with capacity element initialised to the domain tag and rate 2.
// Absorbs [len(inputs), inputs...] zero-padded to an even count and squeezes
// one element. Throws std::invalid_argument on empty input.
Fr sponge_hash(const Fr& domain_tag, std::span<const Fr> inputs);
inline Fr sponge_hash(const Fr& domain_tag, std::initializer_list<Fr> inputs) {
  return sponge_hash(domain_tag, std::span<const Fr>(inputs.begin(), inputs.size()));
}

// The padded absorption sequence used by sponge_hash (shared with the gadget).
std::vector<Fr> sponge_absorb_sequence(std::span<const Fr> inputs);

}  // namespace carbonzk::sigchain

#endif  // CARBONZK_SIGCHAIN_POSEIDON_HPP_
