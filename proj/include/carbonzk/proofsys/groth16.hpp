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

// Groth16 over BN254 with a single-party development setup.

#ifndef CARBONZK_PROOFSYS_GROTH16_HPP_
#define CARBONZK_PROOFSYS_GROTH16_HPP_

#include <string>
#include <vector>

#include "carbonzk/ec/bn254.hpp"
#include "carbonzk/proofsys/backend.hpp"

namespace carbonzk::proofsys {

// A (G1) | B (G2) | C (G1), uncompressed.
inline constexpr size_t kGroth16ProofBytes = 2 * bn254::kG1Bytes + bn254::kG2Bytes;

struct Groth16VerifyingKey {
  bn254::G1Affine alpha_g1;
  bn254::G2Affine beta_g2, gamma_g2, delta_g2;
  std::vector<bn254::G1Affine> ic;  // one per public input, plus the constant

  Bytes encode() const;
  // Checks point validity, including G2 subgroup membership.
  static Groth16VerifyingKey decode(std::span<const uint8_t> payload);
};

struct Groth16ProvingKey {
  size_t num_variables = 0;
  size_t num_public = 0;
  size_t domain_size = 0;
  bn254::G1Affine alpha_g1, beta_g1, delta_g1;
  bn254::G2Affine beta_g2, delta_g2;
  std::vector<bn254::G1Affine> a_query, b_g1_query, l_query, h_query;
  std::vector<bn254::G2Affine> b_g2_query;

  Bytes encode() const;
  static Groth16ProvingKey decode(std::span<const uint8_t> payload);
};

class Groth16Backend final : public Backend {
 public:
  BackendKind kind() const override { return BackendKind::kGroth16; }
  SetupArtifacts setup(const circuit::ConstraintSystem& system,
                       std::span<const uint8_t> randomness) const override;
  Proof prove(std::span<const uint8_t> proving_key, const circuit::ConstraintSystem& system,
              std::span<const Fr> witness, std::span<const uint8_t> randomness) const override;
  bool verify(std::span<const uint8_t> verifying_key, std::span<const Fr> public_inputs,
              const Proof& proof) const override;
};

// JSON export of a verifying-key artifact (decimal coordinates), and its
// inverse, for verifier-only deployments.
std::string verifying_key_to_json(std::span<const uint8_t> verifying_key);
Bytes verifying_key_from_json(std::string_view json);

}  // namespace carbonzk::proofsys

#endif  // CARBONZK_PROOFSYS_GROTH16_HPP_
