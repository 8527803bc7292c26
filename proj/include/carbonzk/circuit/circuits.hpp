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

// The claim circuit (both signature chains plus the emissions divmod) and
// the share-completeness circuit.

#ifndef CARBONZK_CIRCUIT_CIRCUITS_HPP_
#define CARBONZK_CIRCUIT_CIRCUITS_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "carbonzk/circuit/r1cs.hpp"
#include "carbonzk/quantities/quantities.hpp"
#include "carbonzk/sigchain/certificate.hpp"

namespace carbonzk::circuit {

inline constexpr uint32_t kClaimLayoutVersion = 1;
inline constexpr std::string_view kClaimCircuitName = "carbonzk-claim";

// Public inputs of the claim circuit, in order.
inline constexpr std::array<std::string_view, 9> kClaimPublicInputs = {
    "customer_emission", "ca_m_pk_x",  "ca_m_pk_y",     "ca_es_pk_x",  "ca_es_pk_y",
    "period_start",      "period_end", "datacentre_id", "customer_id",
};

// Every value the claim circuit consumes. Fields are optional so that
// synthesis can name the first missing one.
struct ClaimWitnessInput {
  std::optional<quantities::EmissionsQuantity> customer_emission;
  std::optional<uint64_t> remainder;
  std::optional<quantities::IntensityQuantity> carbon_intensity;
  std::optional<quantities::EnergyQuantity> total_consumption;
  std::optional<quantities::ShareFraction> customer_share;
  std::optional<quantities::ReportingPeriod> period;
  std::optional<Fr> datacentre_id;
  std::optional<Fr> customer_id;
  std::optional<Fr> region_id;
  std::optional<Fr> meter_id;
  std::optional<sigchain::EdwardsPoint> ca_m_pk;
  std::optional<sigchain::EdwardsPoint> ca_es_pk;
  std::optional<sigchain::Certificate> manufacturer_cert;
  std::optional<sigchain::Certificate> meter_cert;
  std::optional<sigchain::Signature> reading_signature;
  std::optional<sigchain::Certificate> supplier_cert;
  std::optional<sigchain::Signature> intensity_signature;
};

// Public input vector in layout order.
std::vector<Fr> claim_public_inputs(const quantities::EmissionsQuantity& ce,
                                    const sigchain::EdwardsPoint& ca_m_pk,
                                    const sigchain::EdwardsPoint& ca_es_pk,
                                    const quantities::ReportingPeriod& period,
                                    const Fr& datacentre_id, const Fr& customer_id);

ConstraintSystem build_claim_circuit();

// Throws IncompleteInput naming the first missing field, and
// Error(kKeyMismatch) if system is not the claim circuit.
WitnessAssignment synthesize_witness(const ConstraintSystem& system,
                                     const ClaimWitnessInput& input);

struct CompletenessEntry {
  Fr customer_id;
  quantities::ShareFraction share;
  Fr blinding;
};

struct CompletenessWitnessInput {
  Fr datacentre_id;
  quantities::ReportingPeriod period;
  std::vector<CompletenessEntry> entries;
};

std::string completeness_circuit_name(size_t n);

// Public inputs: n share commitments, datacentre_id, period start and end.
// Requires n >= 1.
ConstraintSystem build_completeness_circuit(size_t n);

// Throws Error(kLengthMismatch) if the entry count differs from the circuit
// and Error(kKeyMismatch) if system is not a completeness circuit.
WitnessAssignment synthesize_completeness_witness(const ConstraintSystem& system,
                                                  const CompletenessWitnessInput& input);

}  // namespace carbonzk::circuit

#endif  // CARBONZK_CIRCUIT_CIRCUITS_HPP_
