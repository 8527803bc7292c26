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

// Certificates, the two trust chains (CA-M -> manufacturer -> meter and
// CA-ES -> supplier), signed readings and share commitments.

#ifndef CARBONZK_SIGCHAIN_CERTIFICATE_HPP_
#define CARBONZK_SIGCHAIN_CERTIFICATE_HPP_

#include <span>
#include <string>
#include <vector>

#include "carbonzk/quantities/quantities.hpp"
#include "carbonzk/sigchain/signature.hpp"

namespace carbonzk::sigchain {

struct Certificate {
  EdwardsPoint subject_pk;
  Role subject_role = Role::kMeter;
  Signature issuer_sig;
  bool operator==(const Certificate&) const = default;
};

// Permitted issuer -> subject edges of the chain topology.
bool can_issue(Role issuer, Role subject);

// H_cert-body(role tag, pk.x, pk.y): the message a certificate signs.
Fr certificate_digest(Role subject_role, const EdwardsPoint& subject_pk);

// Throws Error(kRoleViolation) if the topology disallows issuer -> subject.
Certificate issue_certificate(const KeyPair& issuer, const EdwardsPoint& subject_pk,
                              Role subject_role);

// The statement signed by the leaf key of a chain.
struct LeafStatement {
  DomainTag domain = DomainTag::kMeterReading;
  std::vector<Fr> message;
};

struct ChainVerdict {
  bool accepted = false;
  // Index of the failing element: i < chain.size() names certificate i,
  // chain.size() names the leaf signature.
  size_t failing_link = 0;
  std::string reason;
  explicit operator bool() const { return accepted; }
};

ChainVerdict verify_chain(const EdwardsPoint& anchor_pk, std::span<const Certificate> chain,
                          const Signature& leaf_sig, const LeafStatement& leaf);

std::vector<Fr> meter_reading_message(const Fr& meter_id, const quantities::ReportingPeriod& period,
                                      quantities::EnergyQuantity x);
std::vector<Fr> intensity_message(const Fr& region_id, const quantities::ReportingPeriod& period,
                                  quantities::IntensityQuantity i);

Signature sign_meter_reading(const KeyPair& meter, const Fr& meter_id,
                             const quantities::ReportingPeriod& period,
                             quantities::EnergyQuantity x);
Signature sign_intensity(const KeyPair& supplier, const Fr& region_id,
                         const quantities::ReportingPeriod& period,
                         quantities::IntensityQuantity i);

Fr commit_share(const Fr& customer_id, quantities::ShareFraction c, const Fr& blinding);

}  // namespace carbonzk::sigchain

#endif  // CARBONZK_SIGCHAIN_CERTIFICATE_HPP_
