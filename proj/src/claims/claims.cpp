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

#include "carbonzk/claims/claims.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "carbonzk/claims/codec.hpp"
#include "carbonzk/sigchain/domain.hpp"
#include "carbonzk/util/error.hpp"

namespace carbonzk::claims {
namespace {

using circuit::ClaimWitnessInput;
using circuit::ConstraintSystem;
using proofsys::BackendKind;
using quantities::EmissionsQuantity;

// Completeness verification builds the circuit for the claimed customer
// count, so bound it.
constexpr size_t kMaxCustomers = 4096;

template <typename T>
const T& require(const std::optional<T>& v, const char* name) {
  if (!v) throw IncompleteInput(name);
  return *v;
}

void require_bounds(const std::optional<std::string>& problem) {
  if (problem) throw Error(ErrorCode::kOutOfRange, *problem);
}

std::string short_id(const Fr& id) {
  const std::string s = id.to_decimal();
  return s.size() <= 12 ? s : s.substr(0, 12) + "...";
}

std::string period_text(const quantities::ReportingPeriod& p) {
  return std::to_string(p.start) + ".." + std::to_string(p.end);
}

VerificationReport reject(RejectReason reason, std::string summary,
                          std::optional<EmissionsQuantity> ce = std::nullopt) {
  VerificationReport r;
  r.accepted = false;
  r.reason = reason;
  r.summary = "reject (" + std::string(reject_reason_name(reason)) + "): " + std::move(summary);
  r.customer_emission = ce;
  return r;
}

BackendKind backend_field(ObjectReader& r) {
  const std::string name = r.string("backend");
  try {
    return proofsys::parse_backend(name);
  } catch (const SchemaViolation&) {
    throw SchemaViolation(r.child("backend"), "unknown backend '" + name + "'");
  }
}


}  // namespace

ClaimWitnessInput ProverInput::witness_input() const {
  ClaimWitnessInput in;
  in.customer_emission = customer_emission;
  in.remainder = remainder;
  in.carbon_intensity = carbon_intensity;
  in.total_consumption = total_consumption;
  in.customer_share = customer_share;
  in.period = period;
  in.datacentre_id = datacentre_id;
  in.customer_id = customer_id;
  in.region_id = region_id;
  in.meter_id = meter_id;
  in.ca_m_pk = ca_m_pk;
  in.ca_es_pk = ca_es_pk;
  in.manufacturer_cert = manufacturer_cert;
  in.meter_cert = meter_cert;
  in.reading_signature = reading_signature;
  in.supplier_cert = supplier_cert;
  in.intensity_signature = intensity_signature;
  return in;
}

ProverInput assemble_prover_input(const ClaimWitnessInput& parts) {
  ProverInput in;
  in.carbon_intensity = require(parts.carbon_intensity, "carbon intensity");
  in.total_consumption = require(parts.total_consumption, "total consumption");
  in.customer_share = require(parts.customer_share, "customer share");
  in.period = require(parts.period, "reporting period");
  in.datacentre_id = require(parts.datacentre_id, "datacentre id");
  in.customer_id = require(parts.customer_id, "customer id");
  in.region_id = require(parts.region_id, "region id");
  in.meter_id = require(parts.meter_id, "meter id");
  in.ca_m_pk = require(parts.ca_m_pk, "CA-M public key");
  in.ca_es_pk = require(parts.ca_es_pk, "CA-ES public key");
  in.manufacturer_cert = require(parts.manufacturer_cert, "manufacturer certificate");
  in.meter_cert = require(parts.meter_cert, "meter certificate");
  in.reading_signature = require(parts.reading_signature, "meter reading signature");
  in.supplier_cert = require(parts.supplier_cert, "supplier certificate");
  in.intensity_signature = require(parts.intensity_signature, "supplier signature");

  require_bounds(quantities::check_bounds(in.carbon_intensity));
  require_bounds(quantities::check_bounds(in.total_consumption));
  require_bounds(quantities::check_bounds(in.customer_share));
  require_bounds(quantities::check_bounds(in.period));

  const sigchain::Certificate meter_chain[] = {in.manufacturer_cert, in.meter_cert};
  const auto meter = sigchain::verify_chain(
      in.ca_m_pk, meter_chain, in.reading_signature,
      {sigchain::DomainTag::kMeterReading,
       sigchain::meter_reading_message(in.meter_id, in.period, in.total_consumption)});
  if (!meter) throw ChainInvalid(std::string(kMeterChain), meter.failing_link, meter.reason);

  const sigchain::Certificate supplier_chain[] = {in.supplier_cert};
  const auto supplier = sigchain::verify_chain(
      in.ca_es_pk, supplier_chain, in.intensity_signature,
      {sigchain::DomainTag::kIntensity,
       sigchain::intensity_message(in.region_id, in.period, in.carbon_intensity)});
  if (!supplier) {
    throw ChainInvalid(std::string(kSupplierChain), supplier.failing_link, supplier.reason);
  }
  // Chains first, so tampered readings are reported as such. CE is always
  // recomputed; a caller-supplied value is only cross-checked.
  const auto result =
      quantities::compute_emissions(in.carbon_intensity, in.total_consumption, in.customer_share);
  if (parts.customer_emission && *parts.customer_emission != result.ce) {
    throw Error(ErrorCode::kEmissionMismatch,
                "supplied customer emission " + u128_json(parts.customer_emission->value) +
                    " differs from the recomputed " + u128_json(result.ce.value));
  }
  in.customer_emission = result.ce;
  in.remainder = result.remainder;
  return in;
}

std::vector<Fr> ClaimBundle::public_inputs() const {
  return circuit::claim_public_inputs(customer_emission, ca_m_pk, ca_es_pk, period, datacentre_id,
                                      customer_id);
}

std::vector<std::string> bundle_public_fields() {
  return {circuit::kClaimPublicInputs.begin(), circuit::kClaimPublicInputs.end()};
}

const ConstraintSystem& claim_circuit() {
  static const ConstraintSystem kSystem = circuit::build_claim_circuit();
  return kSystem;
}

ClaimBundle build_and_prove(const ProverInput& input, const proofsys::Backend& backend,
                            const proofsys::SetupArtifacts& setup,
                            std::span<const uint8_t> randomness) {
  const ConstraintSystem& cs = claim_circuit();
  if (setup.circuit_digest != cs.digest()) {
    throw Error(ErrorCode::kKeyMismatch, "setup artifacts are not for the claim circuit");
  }
  const auto witness = circuit::synthesize_witness(cs, input.witness_input());
  const proofsys::Proof proof = backend.prove(setup.proving_key, cs, witness, randomness);
  ClaimBundle b;
  b.backend = backend.kind();
  b.customer_emission = input.customer_emission;
  b.ca_m_pk = input.ca_m_pk;
  b.ca_es_pk = input.ca_es_pk;
  b.period = input.period;
  b.datacentre_id = input.datacentre_id;
  b.customer_id = input.customer_id;
  b.proof = proof.bytes;
  return b;
}

std::string_view reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "";
    case RejectReason::kProofInvalid: return "proof-invalid";
    case RejectReason::kAnchorMismatch: return "anchor-mismatch";
    case RejectReason::kMalformed: return "malformed";
    case RejectReason::kLayoutVersionUnknown: return "layout-version-unknown";
  }
  return "";
}

VerificationReport verify_claim(const ClaimBundle& bundle, const TrustAnchors& anchors,
                                const proofsys::Backend& backend,
                                std::span<const uint8_t> verifying_key) {
  const auto ce = bundle.customer_emission;
  if (bundle.layout_version != circuit::kClaimLayoutVersion) {
    return reject(RejectReason::kLayoutVersionUnknown,
                  "bundle uses layout version " + std::to_string(bundle.layout_version));
  }
  // The bundle's CA keys are context; the caller's anchors are the root of
  // trust.
  if (bundle.ca_m_pk != anchors.ca_m_pk) {
    return reject(RejectReason::kAnchorMismatch,
                  "bundle CA-M key differs from the trusted anchor", ce);
  }
  if (bundle.ca_es_pk != anchors.ca_es_pk) {
    return reject(RejectReason::kAnchorMismatch,
                  "bundle CA-ES key differs from the trusted anchor", ce);
  }
  try {
    const auto header = proofsys::decode_artifact(verifying_key).header;
    if (header.kind != proofsys::ArtifactKind::kVerifyingKey) {
      return reject(RejectReason::kMalformed, "not a verifying key", ce);
    }
    if (header.backend != bundle.backend || backend.kind() != bundle.backend) {
      return reject(RejectReason::kMalformed, "proof backend does not match the verifying key", ce);
    }
    if (header.circuit_digest != claim_circuit().digest()) {
      return reject(RejectReason::kMalformed, "verifying key is for a different circuit", ce);
    }
    const proofsys::Proof proof{bundle.backend, bundle.proof};
    if (!backend.verify(verifying_key, bundle.public_inputs(), proof)) {
      return reject(RejectReason::kProofInvalid, "proof does not verify for the stated claim", ce);
    }
  } catch (const Error& e) {
    return reject(RejectReason::kMalformed, e.what(), ce);
  }
  VerificationReport r;
  r.accepted = true;
  r.customer_emission = ce;
  r.summary = "accept: customer " + short_id(bundle.customer_id) + " emitted " +
              quantities::format_quantity(ce) + " kgCO2e at datacentre " +
              short_id(bundle.datacentre_id) + " over period " + period_text(bundle.period);
  return r;
}

VerificationReport verify_claim(const ClaimBundle& bundle, const TrustAnchors& anchors,
                                std::span<const uint8_t> verifying_key) {
  std::unique_ptr<proofsys::Backend> backend;
  try {
    backend = proofsys::make_backend(proofsys::decode_artifact(verifying_key).header.backend);
  } catch (const std::exception& e) {
    if (bundle.layout_version != circuit::kClaimLayoutVersion) {
      return reject(RejectReason::kLayoutVersionUnknown,
                    "bundle uses layout version " + std::to_string(bundle.layout_version));
    }
    return reject(RejectReason::kMalformed, e.what(), bundle.customer_emission);
  }
  return verify_claim(bundle, anchors, *backend, verifying_key);
}

std::string bundle_key(const ClaimBundle& bundle) {
  return bundle.customer_id.to_decimal() + "/" + bundle.datacentre_id.to_decimal() + "/" +
         std::to_string(bundle.period.start) + "-" + std::to_string(bundle.period.end);
}

ShareTable::ShareTable(Fr datacentre_id, quantities::ReportingPeriod period,
                       std::vector<Entry> entries)
    : datacentre_id_(datacentre_id), period_(period), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::kOutOfRange, "share table has no customers");
  if (entries_.size() > kMaxCustomers) {
    throw Error(ErrorCode::kOutOfRange, "share table has too many customers");
  }
  if (!period_.valid()) throw Error(ErrorCode::kOutOfRange, "period must end after it starts");
  std::set<std::string> seen;
  uint64_t sum = 0;
  for (const Entry& e : entries_) {
    if (e.share.value > quantities::kShareFull) {
      throw Error(ErrorCode::kOutOfRange, "share above 100%");
    }
    if (!seen.insert(e.customer_id.to_decimal()).second) {
      throw Error(ErrorCode::kOutOfRange, "customer listed twice");
    }
    sum += e.share.value;
  }
  if (sum != quantities::kShareFull) {
    throw Error(ErrorCode::kSumMismatch, "shares sum to " + std::to_string(sum) +
                                             " ppm, expected " +
                                             std::to_string(quantities::kShareFull));
  }
}

Fr operator_overhead_id() {
  static const Fr kId = sigchain::identity_id("operator-overhead");
  return kId;
}

ShareTable ShareTable::from_usage(Fr datacentre_id, quantities::ReportingPeriod period,
                                  std::span<const Usage> usage,
                                  std::span<const uint8_t> blinding_seed) {
  u128 total = 0;
  for (const Usage& u : usage) total += u.amount;
  if (total == 0) throw Error(ErrorCode::kOutOfRange, "total usage is zero");
  ByteStream blinding(blinding_seed, "carbonzk/share-blinding");
  std::vector<Entry> entries;
  uint64_t allocated = 0;
  for (const Usage& u : usage) {
    if (u.customer_id == operator_overhead_id()) {
      throw Error(ErrorCode::kOutOfRange, "operator overhead is not a customer");
    }
    const auto share =
        static_cast<uint64_t>(static_cast<u128>(u.amount) * quantities::kShareFull / total);
    allocated += share;
    entries.push_back({u.customer_id, {share}, blinding.next_field<Fr>()});
  }
  entries.push_back(
      {operator_overhead_id(), {quantities::kShareFull - allocated}, blinding.next_field<Fr>()});
  return ShareTable(datacentre_id, period, std::move(entries));
}

std::optional<ShareTable::Entry> ShareTable::find(const Fr& customer_id) const {
  for (const Entry& e : entries_) {
    if (e.customer_id == customer_id) return e;
  }
  return std::nullopt;
}

std::vector<Fr> ShareTable::commitments() const {
  std::vector<Fr> out;
  for (const Entry& e : entries_) {
    out.push_back(sigchain::commit_share(e.customer_id, e.share, e.blinding));
  }
  return out;
}

std::vector<Fr> AggregateCompletenessProof::public_inputs() const {
  std::vector<Fr> out = commitments;
  out.push_back(datacentre_id);
  out.push_back(Fr::from_uint(period.start));
  out.push_back(Fr::from_uint(period.end));
  return out;
}

const ConstraintSystem& completeness_circuit(size_t n) {
  static std::mutex mu;
  static std::map<size_t, std::unique_ptr<ConstraintSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<ConstraintSystem>(circuit::build_completeness_circuit(n));
  return *slot;
}

AggregateCompletenessProof prove_completeness(const ShareTable& table,
                                              const proofsys::Backend& backend,
                                              const proofsys::SetupArtifacts& setup,
                                              std::span<const uint8_t> randomness) {
  const size_t n = table.entries().size();
  const ConstraintSystem& cs = completeness_circuit(n);
  if (setup.circuit_digest != cs.digest()) {
    throw Error(ErrorCode::kKeyMismatch,
                "setup artifacts are not for a " + std::to_string(n) + "-customer table");
  }
  circuit::CompletenessWitnessInput in;
  in.datacentre_id = table.datacentre_id();
  in.period = table.period();
  for (const auto& e : table.entries()) in.entries.push_back({e.customer_id, e.share, e.blinding});
  const auto witness = circuit::synthesize_completeness_witness(cs, in);
  const auto proof = backend.prove(setup.proving_key, cs, witness, randomness);
  AggregateCompletenessProof out;
  out.backend = backend.kind();
  out.commitments = table.commitments();
  out.datacentre_id = table.datacentre_id();
  out.period = table.period();
  out.proof = proof.bytes;
  return out;
}

VerificationReport verify_completeness(const AggregateCompletenessProof& aggregate,
                                       std::span<const uint8_t> verifying_key) {
  const size_t n = aggregate.commitments.size();
  if (n == 0 || n > kMaxCustomers) {
    return reject(RejectReason::kMalformed, "unsupported customer count " + std::to_string(n));
  }
  try {
    const auto header = proofsys::decode_artifact(verifying_key).header;
    if (header.kind != proofsys::ArtifactKind::kVerifyingKey || header.backend != aggregate.backend) {
      return reject(RejectReason::kMalformed, "verifying key does not match the proof backend");
    }
    if (header.circuit_digest != completeness_circuit(n).digest()) {
      return reject(RejectReason::kMalformed, "verifying key is not for " + std::to_string(n) +
                                                  " customers");
    }
    const auto backend = proofsys::make_backend(header.backend);
    if (!backend->verify(verifying_key, aggregate.public_inputs(),
                         {aggregate.backend, aggregate.proof})) {
      return reject(RejectReason::kProofInvalid, "shares are not proven to sum to 100%");
    }
  } catch (const std::exception& e) {
    return reject(RejectReason::kMalformed, e.what());
  }
  VerificationReport r;
  r.accepted = true;
  r.summary = "accept: " + std::to_string(n) + " customer shares at datacentre " +
              short_id(aggregate.datacentre_id) + " sum to 100% over period " +
              period_text(aggregate.period);
  return r;
}

std::optional<size_t> find_own_commitment(const AggregateCompletenessProof& aggregate,
                                          const Fr& customer_id, quantities::ShareFraction share,
                                          const Fr& blinding) {
  const Fr mine = sigchain::commit_share(customer_id, share, blinding);
  for (size_t i = 0; i < aggregate.commitments.size(); ++i) {
    if (aggregate.commitments[i] == mine) return i;
  }
  return std::nullopt;
}

// --- JSON documents -------------------------------------------------------

std::string to_json(const ProverInput& in) {
  Json doc = new_document("carbonzk-prover-input");
  doc["customer_emission"] = u128_json(in.customer_emission.value);
  doc["remainder"] = u64_json(in.remainder);
  doc["carbon_intensity"] = u64_json(in.carbon_intensity.value);
  doc["total_consumption"] = u64_json(in.total_consumption.value);
  doc["customer_share"] = u64_json(in.customer_share.value);
  doc["period_start"] = u64_json(in.period.start);
  doc["period_end"] = u64_json(in.period.end);
  doc["datacentre_id"] = field_json(in.datacentre_id);
  doc["customer_id"] = field_json(in.customer_id);
  doc["region_id"] = field_json(in.region_id);
  doc["meter_id"] = field_json(in.meter_id);
  doc["ca_m_pk"] = point_json(in.ca_m_pk);
  doc["ca_es_pk"] = point_json(in.ca_es_pk);
  doc["manufacturer_cert"] = certificate_json(in.manufacturer_cert);
  doc["meter_cert"] = certificate_json(in.meter_cert);
  doc["reading_signature"] = signature_json(in.reading_signature);
  doc["supplier_cert"] = certificate_json(in.supplier_cert);
  doc["intensity_signature"] = signature_json(in.intensity_signature);
  return dump_canonical(doc);
}

ProverInput prover_input_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-prover-input");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  ClaimWitnessInput parts;
  parts.customer_emission = EmissionsQuantity{r.u128_value("customer_emission")};
  parts.remainder = r.u64("remainder");
  parts.carbon_intensity = quantities::IntensityQuantity{r.u64("carbon_intensity")};
  parts.total_consumption = quantities::EnergyQuantity{r.u64("total_consumption")};
  parts.customer_share = quantities::ShareFraction{r.u64("customer_share")};
  parts.period = r.period("period_start", "period_end");
  parts.datacentre_id = r.field("datacentre_id");
  parts.customer_id = r.field("customer_id");
  parts.region_id = r.field("region_id");
  parts.meter_id = r.field("meter_id");
  parts.ca_m_pk = r.point("ca_m_pk");
  parts.ca_es_pk = r.point("ca_es_pk");
  parts.manufacturer_cert = r.certificate("manufacturer_cert");
  parts.meter_cert = r.certificate("meter_cert");
  parts.reading_signature = r.signature("reading_signature");
  parts.supplier_cert = r.certificate("supplier_cert");
  parts.intensity_signature = r.signature("intensity_signature");
  r.finish();
  // A prover input on disk must satisfy the same invariants as an
  // assembled one.
  ProverInput in = assemble_prover_input(parts);
  if (in.remainder != *parts.remainder) {
    throw Error(ErrorCode::kEmissionMismatch, "remainder differs from the recomputed value");
  }
  return in;
}

std::string to_json(const ClaimBundle& b) {
  Json doc = new_document("carbonzk-claim");
  doc["layout_version"] = b.layout_version;
  doc["backend"] = std::string(proofsys::backend_name(b.backend));
  doc["customer_emission"] = u128_json(b.customer_emission.value);
  doc["ca_m_pk_x"] = field_json(b.ca_m_pk.x);
  doc["ca_m_pk_y"] = field_json(b.ca_m_pk.y);
  doc["ca_es_pk_x"] = field_json(b.ca_es_pk.x);
  doc["ca_es_pk_y"] = field_json(b.ca_es_pk.y);
  doc["period_start"] = u64_json(b.period.start);
  doc["period_end"] = u64_json(b.period.end);
  doc["datacentre_id"] = field_json(b.datacentre_id);
  doc["customer_id"] = field_json(b.customer_id);
  doc["proof"] = to_hex(b.proof);
  return dump_canonical(doc);
}

ClaimBundle bundle_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-claim");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  ClaimBundle b;
  const Json& layout = r.at("layout_version");
  if (!layout.is_number_unsigned() || layout.get<uint64_t>() > UINT32_MAX) {
    throw SchemaViolation("$.layout_version", "expected an integer");
  }
  // An unknown layout is a verification verdict, not a parse error.
  b.layout_version = layout.get<uint32_t>();
  b.backend = backend_field(r);
  b.customer_emission = EmissionsQuantity{r.u128_value("customer_emission")};
  b.ca_m_pk = {r.field("ca_m_pk_x"), r.field("ca_m_pk_y")};
  b.ca_es_pk = {r.field("ca_es_pk_x"), r.field("ca_es_pk_y")};
  b.period = {r.u64("period_start"), r.u64("period_end")};
  b.datacentre_id = r.field("datacentre_id");
  b.customer_id = r.field("customer_id");
  b.proof = r.hex("proof");
  r.finish();
  return b;
}

std::string to_json(const VerificationReport& report) {
  Json doc = new_document("carbonzk-verification-report");
  doc["verdict"] = report.accepted ? "accept" : "reject";
  doc["reason"] = report.accepted ? "none" : std::string(reject_reason_name(report.reason));
  doc["summary"] = report.summary;
  if (report.customer_emission) {
    doc["customer_emission"] = u128_json(report.customer_emission->value);
    doc["customer_emission_kgco2e"] = quantities::format_quantity(*report.customer_emission);
  }
  return dump_canonical(doc);
}

VerificationReport report_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-verification-report");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  VerificationReport out;
  const std::string verdict = r.string("verdict");
  if (verdict != "accept" && verdict != "reject") {
    throw SchemaViolation("$.verdict", "expected accept or reject");
  }
  out.accepted = verdict == "accept";
  const std::string reason = r.string("reason");
  bool known = false;
  for (RejectReason k : {RejectReason::kProofInvalid, RejectReason::kAnchorMismatch,
                         RejectReason::kMalformed, RejectReason::kLayoutVersionUnknown}) {
    if (reject_reason_name(k) == reason) {
      out.reason = k;
      known = true;
    }
  }
  if (out.accepted ? reason != "none" : !known) {
    throw SchemaViolation("$.reason", "unknown reason '" + reason + "'");
  }
  out.summary = r.string("summary");
  if (r.has("customer_emission")) {
    out.customer_emission = EmissionsQuantity{r.u128_value("customer_emission")};
    if (r.string("customer_emission_kgco2e") !=
        quantities::format_quantity(*out.customer_emission)) {
      throw SchemaViolation("$.customer_emission_kgco2e", "inconsistent with customer_emission");
    }
  }
  r.finish();
  return out;
}

std::string to_json(const ShareTable& table) {
  Json doc = new_document("carbonzk-share-table");
  doc["datacentre_id"] = field_json(table.datacentre_id());
  doc["period_start"] = u64_json(table.period().start);
  doc["period_end"] = u64_json(table.period().end);
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({{"customer_id", field_json(e.customer_id)},
                       {"share", u64_json(e.share.value)},
                       {"blinding", field_json(e.blinding)}});
  }
  doc["entries"] = entries;
  return dump_canonical(doc);
}

ShareTable share_table_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-share-table");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  const Fr dc = r.field("datacentre_id");
  const auto period = r.period("period_start", "period_end");
  const Json& list = r.at("entries");
  if (!list.is_array()) throw SchemaViolation("$.entries", "expected an array");
  std::vector<ShareTable::Entry> entries;
  for (size_t i = 0; i < list.size(); ++i) {
    ObjectReader e(list[i], "$.entries[" + std::to_string(i) + "]");
    entries.push_back({e.field("customer_id"), {e.u64("share")}, e.field("blinding")});
    e.finish();
  }
  r.finish();
  return ShareTable(dc, period, std::move(entries));
}

std::string to_json(const AggregateCompletenessProof& a) {
  Json doc = new_document("carbonzk-completeness-aggregate");
  doc["backend"] = std::string(proofsys::backend_name(a.backend));
  Json commitments = Json::array();
  for (const Fr& c : a.commitments) commitments.push_back(field_json(c));
  doc["commitments"] = commitments;
  doc["datacentre_id"] = field_json(a.datacentre_id);
  doc["period_start"] = u64_json(a.period.start);
  doc["period_end"] = u64_json(a.period.end);
  doc["proof"] = to_hex(a.proof);
  return dump_canonical(doc);
}

AggregateCompletenessProof aggregate_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-completeness-aggregate");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  AggregateCompletenessProof a;
  a.backend = backend_field(r);
  const Json& list = r.at("commitments");
  if (!list.is_array()) throw SchemaViolation("$.commitments", "expected an array");
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.commitments[" + std::to_string(i) + "]";
    if (!list[i].is_string()) throw SchemaViolation(path, "expected a decimal string");
    try {
      a.commitments.push_back(Fr::from_decimal(list[i].get<std::string>()));
    } catch (const std::exception&) {
      throw SchemaViolation(path, "not a field element");
    }
  }
  a.datacentre_id = r.field("datacentre_id");
  a.period = {r.u64("period_start"), r.u64("period_end")};
  a.proof = r.hex("proof");
  r.finish();
  return a;
}

}  // namespace carbonzk::claims
