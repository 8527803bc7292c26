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

// Direct-evaluation backend for tests: the "proof" carries the full witness
// and verification re-checks satisfaction. It has no privacy whatsoever and
// is only compiled when CARBONZK_ORACLE_BACKEND is set.

#ifndef CARBONZK_PROOFSYS_ORACLE_HPP_
#define CARBONZK_PROOFSYS_ORACLE_HPP_

#ifndef CARBONZK_ORACLE_BACKEND
#error "the oracle backend is disabled in this build"
#endif

#include "carbonzk/proofsys/backend.hpp"

namespace carbonzk::proofsys {

class OracleBackend final : public Backend {
 public:
  BackendKind kind() const override { return BackendKind::kOracle; }
  SetupArtifacts setup(const circuit::ConstraintSystem& system,
                       std::span<const uint8_t> randomness) const override;
  Proof prove(std::span<const uint8_t> proving_key, const circuit::ConstraintSystem& system,
              std::span<const Fr> witness, std::span<const uint8_t> randomness) const override;
  bool verify(std::span<const uint8_t> verifying_key, std::span<const Fr> public_inputs,
              const Proof& proof) const override;
};

}  // namespace carbonzk::proofsys

#endif  // CARBONZK_PROOFSYS_ORACLE_HPP_
