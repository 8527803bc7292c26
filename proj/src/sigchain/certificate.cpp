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

#include "carbonzk/sigchain/certificate.hpp"

#include "carbonzk/sigchain/poseidon.hpp"
#include "carbonzk/util/error.hpp"

namespace carbonzk::sigchain {
namespace {

bool issued_by_anchor(Role subject) {
  return subject == Role::kManufacturer || subject == Role::kSupplier;
}

}  // namespace

bool can_issue(Role issuer, Role subject) {
  return (issuer == Role::kCaM && subject == Role::kManufacturer) ||
         (issuer == Role::kManufacturer && subject == Role::kMeter) ||
         (issuer == Role::kCaEs && subject == Role::kSupplier);
}

Fr certificate_digest(Role subject_role, const EdwardsPoint& subject_pk) {
  return sponge_hash(domain_tag_value(DomainTag::kCertificateBody),
                     {role_tag(subject_role), subject_pk.x, subject_pk.y});
}

Certificate issue_certificate(const KeyPair& issuer, const EdwardsPoint& subject_pk,
                              Role subject_role) {
  if (!can_issue(issuer.role, subject_role)) {
    throw Error(ErrorCode::kRoleViolation, std::string(role_name(issuer.role)) +
                                               " may not issue a certificate to " +
                                               std::string(role_name(subject_role)));
  }
  const Fr digest = certificate_digest(subject_role, subject_pk);
  return {subject_pk, subject_role,
          sign(issuer, std::span<const Fr>(&digest, 1), DomainTag::kCertificateSignature)};
}

ChainVerdict verify_chain(const EdwardsPoint& anchor_pk, std::span<const Certificate> chain,
                          const Signature& leaf_sig, const LeafStatement& leaf) {
  auto reject = [](size_t link, std::string reason) {
    return ChainVerdict{false, link, std::move(reason)};
  };
  EdwardsPoint issuer_pk = anchor_pk;
  for (size_t i = 0; i < chain.size(); ++i) {
    const Certificate& cert = chain[i];
    const bool topology_ok = i == 0 ? issued_by_anchor(cert.subject_role)
                                    : can_issue(chain[i - 1].subject_role, cert.subject_role);
    if (!topology_ok) {
      return reject(i, "certificate for " + std::string(role_name(cert.subject_role)) +
                           " is not permitted at this position");
    }
    const Fr digest = certificate_digest(cert.subject_role, cert.subject_pk);
    try {
      if (!verify(issuer_pk, std::span<const Fr>(&digest, 1), cert.issuer_sig,
                  DomainTag::kCertificateSignature)) {
        return reject(i, "certificate signature does not verify");
      }
    } catch (const Error& e) {
      return reject(i, e.what());
    }
    issuer_pk = cert.subject_pk;
  }
  try {
    if (!verify(issuer_pk, leaf.message, leaf_sig, leaf.domain)) {
      return reject(chain.size(), "leaf signature does not verify");
    }
  } catch (const Error& e) {
    return reject(chain.size(), e.what());
  }
  return {true, 0, ""};
}

std::vector<Fr> meter_reading_message(const Fr& meter_id, const quantities::ReportingPeriod& period,
                                      quantities::EnergyQuantity x) {
  return {meter_id, Fr::from_uint(period.start), Fr::from_uint(period.end), Fr::from_uint(x.value)};
}

std::vector<Fr> intensity_message(const Fr& region_id, const quantities::ReportingPeriod& period,
                                  quantities::IntensityQuantity i) {
  return {region_id, Fr::from_uint(period.start), Fr::from_uint(period.end), Fr::from_uint(i.value)};
}

Signature sign_meter_reading(const KeyPair& meter, const Fr& meter_id,
                             const quantities::ReportingPeriod& period,
                             quantities::EnergyQuantity x) {
  return sign(meter, meter_reading_message(meter_id, period, x), DomainTag::kMeterReading);
}

Signature sign_intensity(const KeyPair& supplier, const Fr& region_id,
                         const quantities::ReportingPeriod& period,
                         quantities::IntensityQuantity i) {
  return sign(supplier, intensity_message(region_id, period, i), DomainTag::kIntensity);
}

Fr commit_share(const Fr& customer_id, quantities::ShareFraction c, const Fr& blinding) {
  return sponge_hash(domain_tag_value(DomainTag::kShareCommitment),
                     {customer_id, Fr::from_uint(c.value), blinding});
}

}  // namespace carbonzk::sigchain
