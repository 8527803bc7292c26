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

// Proving-backend contract: setup, prove and verify over opaque key and
// proof bytes, plus the shared artifact file format.

#ifndef CARBONZK_PROOFSYS_BACKEND_HPP_
#define CARBONZK_PROOFSYS_BACKEND_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carbonzk/circuit/r1cs.hpp"
#include "carbonzk/ff/bn254.hpp"
#include "carbonzk/util/bytes.hpp"

namespace carbonzk::proofsys {

enum class BackendKind : uint8_t {
  kGroth16 = 1,  // succinct, zero-knowledge
  kOracle = 2,   // direct evaluation; reveals the witness
};

// "groth16-bn254" / "oracle".
std::string_view backend_name(BackendKind kind);
// Throws Error(kSchemaViolation) for unknown names.
BackendKind parse_backend(std::string_view name);

enum class ArtifactKind : uint8_t { kProvingKey = 1, kVerifyingKey = 2 };

inline constexpr char kArtifactMagic[8] = {'C', 'A', 'R', 'B', 'O', 'N', 'Z', 'K'};
inline constexpr uint32_t kArtifactVersion = 1;

// Metadata carried by every key file.
struct ArtifactHeader {
  BackendKind backend = BackendKind::kGroth16;
  ArtifactKind kind = ArtifactKind::kProvingKey;
  Digest circuit_digest{};
  bool insecure_dev_setup = false;  // toxic waste came from a single party
  bool zero_knowledge = true;       // false: proofs disclose the witness
};

// magic(8) | version u32 | backend u8 | kind u8 | flags u8 | digest(32) |
// payload (u64 length prefix).
Bytes encode_artifact(const ArtifactHeader& header, std::span<const uint8_t> payload);

struct DecodedArtifact {
  ArtifactHeader header;
  std::span<const uint8_t> payload;  // view into the input bytes
};
// Throws Error(kMalformedProof) on bad magic, version or truncation.
DecodedArtifact decode_artifact(std::span<const uint8_t> bytes);

struct SetupArtifacts {
  Bytes proving_key;    // encoded artifact
  Bytes verifying_key;  // encoded artifact
  Digest circuit_digest{};

  BackendKind backend() const;
  bool insecure_dev_setup() const;
  bool zero_knowledge() const;
};

struct Proof {
  BackendKind backend = BackendKind::kGroth16;
  Bytes bytes;
  size_t size() const { return bytes.size(); }
};

using PublicInputs = std::vector<Fr>;

class Backend {
 public:
  virtual ~Backend() = default;

  virtual BackendKind kind() const = 0;

  // Deterministic in (system, randomness).
  virtual SetupArtifacts setup(const circuit::ConstraintSystem& system,
                               std::span<const uint8_t> randomness) const = 0;

  // Refuses unsatisfied witnesses (UnsatisfiedWitness) and keys for another
  // circuit (KeyMismatch). Blinding comes from randomness, or from the
  // operating system when it is empty.
  virtual Proof prove(std::span<const uint8_t> proving_key,
                      const circuit::ConstraintSystem& system, std::span<const Fr> witness,
                      std::span<const uint8_t> randomness = {}) const = 0;

  // Accept/reject verdict. Throws Error(kMalformedProof) for undecodable
  // proofs or keys and Error(kLengthMismatch) for a wrong public-input count.
  virtual bool verify(std::span<const uint8_t> verifying_key, std::span<const Fr> public_inputs,
                      const Proof& proof) const = 0;
};

// Throws std::invalid_argument when the backend is compiled out.
std::unique_ptr<Backend> make_backend(BackendKind kind);

// Whether the oracle backend was compiled in.
bool oracle_backend_available();

// <dir>/proving.key, <dir>/verifying.key and <dir>/verifying_key.json.
void save_setup(const std::filesystem::path& dir, const SetupArtifacts& setup);
// Throws Error(kIo) for missing files and Error(kMalformedProof) for bad ones.
SetupArtifacts load_setup(const std::filesystem::path& dir);
Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> data);

}  // namespace carbonzk::proofsys

#endif  // CARBONZK_PROOFSYS_BACKEND_HPP_
