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

#include "carbonzk/proofsys/oracle.hpp"

#include "carbonzk/util/error.hpp"

namespace carbonzk::proofsys {
namespace {

using circuit::ConstraintSystem;

Error malformed(const std::string& what) { return Error(ErrorCode::kMalformedProof, what); }

ArtifactHeader oracle_header(const ConstraintSystem& cs, ArtifactKind kind) {
  ArtifactHeader h;
  h.backend = BackendKind::kOracle;
  h.kind = kind;
  h.circuit_digest = cs.digest();
  h.insecure_dev_setup = false;
  h.zero_knowledge = false;
  return h;
}

}  // namespace

SetupArtifacts OracleBackend::setup(const ConstraintSystem& cs,
                                    std::span<const uint8_t> /*randomness*/) const {
  // Both keys simply carry the constraint system.
  const Bytes system = cs.canonical_bytes();
  SetupArtifacts out;
  out.circuit_digest = sha256(system);
  out.proving_key = encode_artifact(oracle_header(cs, ArtifactKind::kProvingKey), {});
  out.verifying_key = encode_artifact(oracle_header(cs, ArtifactKind::kVerifyingKey), system);
  return out;
}

Proof OracleBackend::prove(std::span<const uint8_t> proving_key, const ConstraintSystem& cs,
                           std::span<const Fr> witness,
                           std::span<const uint8_t> /*randomness*/) const {
  const auto artifact = decode_artifact(proving_key);
  if (artifact.header.backend != BackendKind::kOracle ||
      artifact.header.kind != ArtifactKind::kProvingKey) {
    throw Error(ErrorCode::kKeyMismatch, "not an oracle proving key");
  }
  if (artifact.header.circuit_digest != cs.digest()) {
    throw Error(ErrorCode::kKeyMismatch, "proving key was generated for a different circuit");
  }
  const auto sat = circuit::is_satisfied(cs, witness);
  if (!sat) throw UnsatisfiedWitness(sat.failing_constraint);
  // The attestation is the witness itself.
  ByteWriter w;
  w.u64(witness.size());
  for (const Fr& v : witness) w.raw(v.to_bytes_be());
  return Proof{BackendKind::kOracle, w.take()};
}

bool OracleBackend::verify(std::span<const uint8_t> verifying_key,
                           std::span<const Fr> public_inputs, const Proof& proof) const {
  const auto artifact = decode_artifact(verifying_key);
  if (artifact.header.backend != BackendKind::kOracle ||
      artifact.header.kind != ArtifactKind::kVerifyingKey) {
    throw malformed("not an oracle verifying key");
  }
  if (proof.backend != BackendKind::kOracle) throw malformed("proof is not an oracle proof");
  if (sha256(artifact.payload) != artifact.header.circuit_digest) {
    throw malformed("oracle verifying key digest mismatch");
  }
  const ConstraintSystem cs = ConstraintSystem::from_canonical_bytes(artifact.payload);
  if (public_inputs.size() != cs.public_inputs.size()) {
    throw Error(ErrorCode::kLengthMismatch, "expected " + std::to_string(cs.public_inputs.size()) +
                                                " public inputs, got " +
                                                std::to_string(public_inputs.size()));
  }
  ByteReader r(proof.bytes);
  const uint64_t n = r.u64();
  if (n != cs.num_variables || r.remaining() != n * 32) throw malformed("oracle proof length");
  std::vector<Fr> witness(n);
  for (auto& v : witness) {
    auto raw = r.raw(32);
    std::array<uint8_t, 32> buf{};
    std::copy(raw.begin(), raw.end(), buf.begin());
    auto fe = Fr::try_from_canonical(U256::from_bytes_be(buf));
    if (!fe) throw malformed("non-canonical witness element");
    v = *fe;
  }
  if (!witness[0].is_one()) return false;
  for (size_t i = 0; i < public_inputs.size(); ++i) {
    if (witness[cs.public_inputs[i]] != public_inputs[i]) return false;
  }
  return bool(circuit::is_satisfied(cs, witness));
}

}  // namespace carbonzk::proofsys
