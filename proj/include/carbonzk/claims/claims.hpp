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

// Claim lifecycle: assemble the prover's input, prove it into a bundle that
// discloses only the public layout, verify bundles against caller-supplied
// trust anchors, and prove that customer shares add up to 100%.

#ifndef CARBONZK_CLAIMS_CLAIMS_HPP_
#define CARBONZK_CLAIMS_CLAIMS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carbonzk/circuit/circuits.hpp"
#include "carbonzk/proofsys/backend.hpp"
#include "carbonzk/quantities/quantities.hpp"
#include "carbonzk/sigchain/certificate.hpp"

namespace carbonzk::claims {

// Everything the prover knows; never leaves the prover.
struct ProverInput {
  quantities::EmissionsQuantity customer_emission;
  uint64_t remainder = 0;
  quantities::IntensityQuantity carbon_intensity;
  quantities::EnergyQuantity total_consumption;
  quantities::ShareFraction customer_share;
  quantities::ReportingPeriod period;
  Fr datacentre_id, customer_id, region_id, meter_id;
  sigchain::Certificate manufacturer_cert;
  sigchain::Certificate meter_cert;
  sigchain::Signature reading_signature;
  sigchain::Certificate supplier_cert;
  sigchain::Signature intensity_signature;
  sigchain::EdwardsPoint ca_m_pk, ca_es_pk;

  bool operator==(const ProverInput&) const = default;
  circuit::ClaimWitnessInput witness_input() const;
};

// Raw parts use the circuit's all-optional input record. A caller-supplied
// customer_emission is only checked, never trusted; remainder is ignored.
// Throws IncompleteInput, EmissionMismatch (Error), ChainInvalid, or
// OutOfRange for quantities outside their bounds.
ProverInput assemble_prover_input(const circuit::ClaimWitnessInput& parts);

inline constexpr std::string_view kMeterChain = "meter";
inline constexpr std::string_view kSupplierChain = "supplier";

// What a customer receives: the public layout plus the proof.
struct ClaimBundle {
  uint32_t layout_version = circuit::kClaimLayoutVersion;
  proofsys::BackendKind backend = proofsys::BackendKind::kGroth16;
  quantities::EmissionsQuantity customer_emission;
  sigchain::EdwardsPoint ca_m_pk, ca_es_pk;
  quantities::ReportingPeriod period;
  Fr datacentre_id, customer_id;
  Bytes proof;

  bool operator==(const ClaimBundle&) const = default;
  std::vector<Fr> public_inputs() const;
};

// Keys of the JSON fields that carry public inputs (the layout names); the
// remaining keys are metadata: backend, kind, layout_version, proof, version.
std::vector<std::string> bundle_public_fields();

// The shared claim circuit, built once per process.
const circuit::ConstraintSystem& claim_circuit();

// Throws KeyMismatch if setup is not for the claim circuit, plus anything
// the backend raises. randomness seeds the proof blinding (empty: OS).
ClaimBundle build_and_prove(const ProverInput& input, const proofsys::Backend& backend,
                            const proofsys::SetupArtifacts& setup,
                            std::span<const uint8_t> randomness = {});

struct TrustAnchors {
  sigchain::EdwardsPoint ca_m_pk, ca_es_pk;
};

enum class RejectReason { kNone, kProofInvalid, kAnchorMismatch, kMalformed, kLayoutVersionUnknown };

// "proof-invalid", "anchor-mismatch", "malformed", "layout-version-unknown"
// ("" for kNone).
std::string_view reject_reason_name(RejectReason reason);

struct VerificationReport {
  bool accepted = false;
  RejectReason reason = RejectReason::kNone;
  std::string summary;
  std::optional<quantities::EmissionsQuantity> customer_emission;

  bool operator==(const VerificationReport&) const = default;
};

// Never throws: every failure becomes a reject with a reason.
VerificationReport verify_claim(const ClaimBundle& bundle, const TrustAnchors& anchors,
                                std::span<const uint8_t> verifying_key);

// Selects the backend from the verifying key's header (oracle keys are
// honoured only when that backend is compiled in).
VerificationReport verify_claim(const ClaimBundle& bundle, const TrustAnchors& anchors,
                                const proofsys::Backend& backend,
                                std::span<const uint8_t> verifying_key);

// (customer, datacentre, period): a re-issued bundle with the same key
// replaces the earlier one.
std::string bundle_key(const ClaimBundle& bundle);

// Customer shares of one datacentre over one period; the shares sum to
// exactly 10^6 parts per million.
class ShareTable {
 public:
  struct Entry {
    Fr customer_id;
    quantities::ShareFraction share;
    Fr blinding;
    bool operator==(const Entry&) const = default;
  };

  // Throws Error(kSumMismatch) unless the shares add up to 10^6, and
  // Error(kOutOfRange) for an empty table or a share above 10^6.
  ShareTable(Fr datacentre_id, quantities::ReportingPeriod period, std::vector<Entry> entries);

  struct Usage {
    Fr customer_id;
    uint64_t amount = 0;  // any unit, e.g. energy in Wh attributed to the customer
  };
  // Proportional allocation floor(amount * 10^6 / total); the rounding
  // residue goes to an "operator overhead" pseudo-customer (always present,
  // possibly with share 0). Blindings derive from blinding_seed.
  static ShareTable from_usage(Fr datacentre_id, quantities::ReportingPeriod period,
                               std::span<const Usage> usage,
                               std::span<const uint8_t> blinding_seed);

  const Fr& datacentre_id() const { return datacentre_id_; }
  const quantities::ReportingPeriod& period() const { return period_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<Entry> find(const Fr& customer_id) const;
  std::vector<Fr> commitments() const;

  bool operator==(const ShareTable&) const = default;

 private:
  Fr datacentre_id_;
  quantities::ReportingPeriod period_;
  std::vector<Entry> entries_;
};

// identity_id("operator-overhead").
Fr operator_overhead_id();

struct AggregateCompletenessProof {
  proofsys::BackendKind backend = proofsys::BackendKind::kGroth16;
  std::vector<Fr> commitments;
  Fr datacentre_id;
  quantities::ReportingPeriod period;
  Bytes proof;

  bool operator==(const AggregateCompletenessProof&) const = default;
  std::vector<Fr> public_inputs() const;
};

// Completeness circuit for n customers, cached per n.
const circuit::ConstraintSystem& completeness_circuit(size_t n);

// Throws KeyMismatch if setup does not match the table's customer count.
AggregateCompletenessProof prove_completeness(const ShareTable& table,
                                              const proofsys::Backend& backend,
                                              const proofsys::SetupArtifacts& setup,
                                              std::span<const uint8_t> randomness = {});

// Never throws. Reasons as for claims; a key for another customer count is
// reported as malformed.
VerificationReport verify_completeness(const AggregateCompletenessProof& aggregate,
                                       std::span<const uint8_t> verifying_key);

// Index of the customer's commitment in the aggregate, if present.
std::optional<size_t> find_own_commitment(const AggregateCompletenessProof& aggregate,
                                          const Fr& customer_id, quantities::ShareFraction share,
                                          const Fr& blinding);

// Canonical JSON documents. Parsers throw SchemaViolation with a JSON path.
std::string to_json(const ProverInput& input);
std::string to_json(const ClaimBundle& bundle);
std::string to_json(const VerificationReport& report);
std::string to_json(const ShareTable& table);
std::string to_json(const AggregateCompletenessProof& aggregate);
ProverInput prover_input_from_json(std::string_view text);
ClaimBundle bundle_from_json(std::string_view text);
VerificationReport report_from_json(std::string_view text);
// Also enforces the share-sum invariant (Error(kSumMismatch)).
ShareTable share_table_from_json(std::string_view text);
AggregateCompletenessProof aggregate_from_json(std::string_view text);

}  // namespace carbonzk::claims

#endif  // CARBONZK_CLAIMS_CLAIMS_HPP_
