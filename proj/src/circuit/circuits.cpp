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

#include "carbonzk/circuit/circuits.hpp"

#include <stdexcept>

#include "carbonzk/circuit/gadgets.hpp"
#include "carbonzk/util/error.hpp"

namespace carbonzk::circuit {

using sigchain::Certificate;
using sigchain::DomainTag;
using sigchain::EdwardsPoint;
using sigchain::Role;
using sigchain::Signature;

namespace {

template <typename T>
const T& require(const std::optional<T>& v, const char* field) {
  if (!v) throw IncompleteInput(field);
  return *v;
}

Fr emissions_field(const quantities::EmissionsQuantity& ce) {
  U256 v(static_cast<uint64_t>(ce.value), static_cast<uint64_t>(ce.value >> 64), 0, 0);
  return Fr::from_canonical(v);
}

struct ClaimValues {
  quantities::EmissionsQuantity ce;
  uint64_t remainder = 0;
  quantities::IntensityQuantity i;
  quantities::EnergyQuantity x;
  quantities::ShareFraction c;
  quantities::ReportingPeriod period{0, 1};
  Fr datacentre_id, customer_id, region_id, meter_id;
  EdwardsPoint ca_m_pk, ca_es_pk;
  Certificate manufacturer_cert, meter_cert, supplier_cert;
  Signature reading_sig, intensity_sig;
};

ClaimValues complete(const ClaimWitnessInput& in) {
  ClaimValues v;
  v.ce = require(in.customer_emission, "customer emission");
  v.remainder = require(in.remainder, "emissions remainder");
  v.i = require(in.carbon_intensity, "carbon intensity");
  v.x = require(in.total_consumption, "total consumption");
  v.c = require(in.customer_share, "customer share");
  v.period = require(in.period, "reporting period");
  v.datacentre_id = require(in.datacentre_id, "datacentre id");
  v.customer_id = require(in.customer_id, "customer id");
  v.region_id = require(in.region_id, "region id");
  v.meter_id = require(in.meter_id, "meter id");
  v.ca_m_pk = require(in.ca_m_pk, "CA-M public key");
  v.ca_es_pk = require(in.ca_es_pk, "CA-ES public key");
  v.manufacturer_cert = require(in.manufacturer_cert, "manufacturer certificate");
  v.meter_cert = require(in.meter_cert, "meter certificate");
  v.reading_sig = require(in.reading_signature, "meter reading signature");
  v.supplier_cert = require(in.supplier_cert, "supplier certificate");
  v.intensity_sig = require(in.intensity_signature, "supplier signature");
  return v;
}

// Certificate for subject (role, pk) signed by issuer_pk.
void verify_certificate(CircuitBuilder& b, const PointVar& issuer_pk, Role subject_role,
                        const PointVar& subject_pk, const SignatureVar& sig) {
  const std::vector<LC> body{LC::constant(sigchain::role_tag(subject_role)), subject_pk.x,
                             subject_pk.y};
  const LC digest = sponge(b, DomainTag::kCertificateBody, body);
  verify_signature(b, issuer_pk, std::span<const LC>(&digest, 1), sig,
                   DomainTag::kCertificateSignature);
}

CircuitBuilder build_claim(const ClaimValues& v) {
  CircuitBuilder b(std::string(kClaimCircuitName), kClaimLayoutVersion);
  const auto pub = claim_public_inputs(v.ce, v.ca_m_pk, v.ca_es_pk, v.period, v.datacentre_id,
                                       v.customer_id);
  std::vector<Variable> p;
  for (size_t k = 0; k < kClaimPublicInputs.size(); ++k) {
    p.push_back(b.alloc_public(std::string(kClaimPublicInputs[k]), pub[k]));
  }
  const LC ce = p[0];
  const PointVar ca_m{p[1], p[2]};
  const PointVar ca_es{p[3], p[4]};
  const LC start = p[5];
  const LC end = p[6];

  const LC i = b.alloc_private(Fr::from_uint(v.i.value));
  const LC x = b.alloc_private(Fr::from_uint(v.x.value));
  const LC c = b.alloc_private(Fr::from_uint(v.c.value));
  const LC r = b.alloc_private(Fr::from_uint(v.remainder));
  const LC region_id = b.alloc_private(v.region_id);
  const LC meter_id = b.alloc_private(v.meter_id);
  const PointVar manufacturer_pk = alloc_point(b, v.manufacturer_cert.subject_pk);
  const PointVar meter_pk = alloc_point(b, v.meter_cert.subject_pk);
  const PointVar supplier_pk = alloc_point(b, v.supplier_cert.subject_pk);
  auto sig_var = [&](const Signature& s) { return alloc_signature(b, s.r, s.s); };
  const SignatureVar manufacturer_sig = sig_var(v.manufacturer_cert.issuer_sig);
  const SignatureVar meter_cert_sig = sig_var(v.meter_cert.issuer_sig);
  const SignatureVar reading_sig = sig_var(v.reading_sig);
  const SignatureVar supplier_sig = sig_var(v.supplier_cert.issuer_sig);
  const SignatureVar intensity_sig = sig_var(v.intensity_sig);

  b.begin_section("ca-m certifies manufacturer");
  verify_certificate(b, ca_m, Role::kManufacturer, manufacturer_pk, manufacturer_sig);
  b.end_section();

  b.begin_section("manufacturer certifies meter");
  verify_certificate(b, manufacturer_pk, Role::kMeter, meter_pk, meter_cert_sig);
  b.end_section();

  b.begin_section("meter signs reading");
  const std::vector<LC> reading{meter_id, start, end, x};
  verify_signature(b, meter_pk, reading, reading_sig, DomainTag::kMeterReading);
  b.end_section();

  b.begin_section("ca-es certifies supplier");
  verify_certificate(b, ca_es, Role::kSupplier, supplier_pk, supplier_sig);
  b.end_section();

  b.begin_section("supplier signs intensity");
  const std::vector<LC> intensity{region_id, start, end, i};
  verify_signature(b, supplier_pk, intensity, intensity_sig, DomainTag::kIntensity);
  b.end_section();

  b.begin_section("emissions");
  emissions(b, i, x, c, ce, r);
  b.end_section();
  return b;
}

ClaimValues placeholder_claim() {
  ClaimValues v;
  return v;
}

void check_same_system(const ConstraintSystem& expected, const ConstraintSystem& built) {
  if (expected.name != built.name || expected.num_variables != built.num_variables ||
      expected.num_constraints() != built.num_constraints() ||
      expected.digest() != built.digest()) {
    throw Error(ErrorCode::kKeyMismatch,
                "constraint system does not match circuit " + built.name);
  }
}

CircuitBuilder build_completeness(const CompletenessWitnessInput& in) {
  const size_t n = in.entries.size();
  CircuitBuilder b(completeness_circuit_name(n), 1);
  std::vector<Variable> commitments;
  for (size_t k = 0; k < n; ++k) {
    const auto& e = in.entries[k];
    commitments.push_back(b.alloc_public("commitment_" + std::to_string(k),
                                         sigchain::commit_share(e.customer_id, e.share, e.blinding)));
  }
  b.alloc_public("datacentre_id", in.datacentre_id);
  b.alloc_public("period_start", Fr::from_uint(in.period.start));
  b.alloc_public("period_end", Fr::from_uint(in.period.end));

  LC total;
  for (size_t k = 0; k < n; ++k) {
    const auto& e = in.entries[k];
    b.begin_section("entry " + std::to_string(k));
    const LC customer = b.alloc_private(e.customer_id);
    const LC share = b.alloc_private(Fr::from_uint(e.share.value));
    const LC blinding = b.alloc_private(e.blinding);
    const std::vector<LC> opening{customer, share, blinding};
    b.enforce_equal(sponge(b, DomainTag::kShareCommitment, opening), commitments[k]);
    range_lt(b, share, U256(quantities::kShareFull + 1));
    total += share;
    b.end_section();
  }
  b.begin_section("share sum");
  b.enforce_equal(total, LC::constant(Fr::from_uint(quantities::kShareFull)));
  b.end_section();
  return b;
}

}  // namespace

std::vector<Fr> claim_public_inputs(const quantities::EmissionsQuantity& ce,
                                    const EdwardsPoint& ca_m_pk, const EdwardsPoint& ca_es_pk,
                                    const quantities::ReportingPeriod& period,
                                    const Fr& datacentre_id, const Fr& customer_id) {
  return {emissions_field(ce),         ca_m_pk.x,
          ca_m_pk.y,                   ca_es_pk.x,
          ca_es_pk.y,                  Fr::from_uint(period.start),
          Fr::from_uint(period.end),   datacentre_id,
          customer_id};
}

ConstraintSystem build_claim_circuit() { return build_claim(placeholder_claim()).take_system(); }

WitnessAssignment synthesize_witness(const ConstraintSystem& system,
                                     const ClaimWitnessInput& input) {
  const ClaimValues values = complete(input);
  for (const Signature* s :
       {&values.manufacturer_cert.issuer_sig, &values.meter_cert.issuer_sig, &values.reading_sig,
        &values.supplier_cert.issuer_sig, &values.intensity_sig}) {
    if (!(s->s < Fr::kModulus)) {
      throw Error(ErrorCode::kOutOfRange, "signature scalar is not a field element");
    }
  }
  CircuitBuilder b = build_claim(values);
  check_same_system(system, b.system());
  return b.witness();
}

std::string completeness_circuit_name(size_t n) {
  return "carbonzk-completeness-" + std::to_string(n);
}

ConstraintSystem build_completeness_circuit(size_t n) {
  if (n == 0) throw std::invalid_argument("completeness circuit needs at least one customer");
  CompletenessWitnessInput placeholder;
  placeholder.period = {0, 1};
  placeholder.entries.resize(n);
  return build_completeness(placeholder).take_system();
}

WitnessAssignment synthesize_completeness_witness(const ConstraintSystem& system,
                                                  const CompletenessWitnessInput& input) {
  if (completeness_circuit_name(input.entries.size()) != system.name) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(input.entries.size()) + " entries for circuit " + system.name);
  }
  CircuitBuilder b = build_completeness(input);
  check_same_system(system, b.system());
  return b.witness();
}

}  // namespace carbonzk::circuit
