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

#include "carbonzk/claims/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "carbonzk/util/error.hpp"

namespace carbonzk::claims {
namespace {

using sigchain::Certificate;
using sigchain::EdwardsPoint;
using sigchain::Signature;

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
         (s.size() == 1 || s[0] != '0');
}

}  // namespace

ObjectReader::ObjectReader(const Json& json, std::string path)
    : json_(json), path_(std::move(path)) {
  if (!json_.is_object()) throw SchemaViolation(path_, "expected an object");
}

std::string ObjectReader::child(std::string_view key) const {
  return path_ + "." + std::string(key);
}

bool ObjectReader::has(std::string_view key) const { return json_.contains(key); }

const Json& ObjectReader::at(std::string_view key) {
  auto it = json_.find(key);
  if (it == json_.end()) throw SchemaViolation(child(key), "missing field");
  seen_.emplace(key);
  return *it;
}

std::string ObjectReader::string(std::string_view key) {
  const Json& v = at(key);
  if (!v.is_string()) throw SchemaViolation(child(key), "expected a string");
  return v.get<std::string>();
}

bool ObjectReader::boolean(std::string_view key) {
  const Json& v = at(key);
  if (!v.is_boolean()) throw SchemaViolation(child(key), "expected true or false");
  return v.get<bool>();
}

uint32_t ObjectReader::version(std::string_view key) {
  const Json& v = at(key);
  if (!v.is_number_unsigned()) throw SchemaViolation(child(key), "expected an integer version");
  const uint64_t n = v.get<uint64_t>();
  if (n != kFormatVersion) {
    throw SchemaViolation(child(key), "unknown version " + std::to_string(n));
  }
  return static_cast<uint32_t>(n);
}

uint64_t ObjectReader::u64(std::string_view key) {
  const u128 v = u128_value(key);
  if (v > UINT64_MAX) throw SchemaViolation(child(key), "value exceeds 64 bits");
  return static_cast<uint64_t>(v);
}

u128 ObjectReader::u128_value(std::string_view key) {
  const std::string s = string(key);
  if (!is_decimal(s)) throw SchemaViolation(child(key), "expected a canonical decimal string");
  try {
    return quantities::u128_from_decimal(s);
  } catch (const std::exception&) {
    throw SchemaViolation(child(key), "decimal value out of range");
  }
}

Fr ObjectReader::field(std::string_view key) {
  const std::string s = string(key);
  if (!is_decimal(s)) throw SchemaViolation(child(key), "expected a canonical decimal string");
  try {
    return Fr::from_decimal(s);
  } catch (const std::exception&) {
    throw SchemaViolation(child(key), "not a field element");
  }
}

Bytes ObjectReader::hex(std::string_view key) {
  const std::string s = string(key);
  try {
    return from_hex(s);
  } catch (const std::exception&) {
    throw SchemaViolation(child(key), "expected lowercase hex");
  }
}

sigchain::Role ObjectReader::role(std::string_view key) {
  const std::string s = string(key);
  auto r = sigchain::parse_role(s);
  if (!r) throw SchemaViolation(child(key), "unknown role '" + s + "'");
  return *r;
}

EdwardsPoint ObjectReader::point(std::string_view key) {
  ObjectReader obj(at(key), child(key));
  EdwardsPoint p{obj.field("x"), obj.field("y")};
  obj.finish();
  if (!p.is_on_curve()) throw SchemaViolation(child(key), "point is not on the curve");
  return p;
}

Signature ObjectReader::signature(std::string_view key) {
  ObjectReader obj(at(key), child(key));
  Signature sig;
  sig.r = obj.point("r");
  // s stays an integer so that out-of-range values reach verification, but
  // it must fit the scalar field to be embeddable in a witness.
  sig.s = obj.field("s").to_canonical();
  obj.finish();
  return sig;
}

Certificate ObjectReader::certificate(std::string_view key) {
  ObjectReader obj(at(key), child(key));
  Certificate c;
  c.issuer_sig = obj.signature("issuer_signature");
  c.subject_pk = obj.point("subject_pk");
  c.subject_role = obj.role("subject_role");
  obj.finish();
  return c;
}

quantities::ReportingPeriod ObjectReader::period(std::string_view start_key,
                                                 std::string_view end_key) {
  quantities::ReportingPeriod p{u64(start_key), u64(end_key)};
  if (!p.valid()) throw SchemaViolation(child(end_key), "period must end after it starts");
  return p;
}

void ObjectReader::finish() const {
  for (const auto& [k, v] : json_.items()) {
    if (!seen_.contains(k)) throw SchemaViolation(child(k), "unknown field");
  }
}

std::string u64_json(uint64_t v) { return std::to_string(v); }
std::string u128_json(u128 v) { return quantities::u128_to_decimal(v); }
std::string field_json(const Fr& v) { return v.to_decimal(); }

Json point_json(const EdwardsPoint& p) { return {{"x", field_json(p.x)}, {"y", field_json(p.y)}}; }

Json signature_json(const Signature& sig) {
  return {{"r", point_json(sig.r)}, {"s", sig.s.to_decimal()}};
}

Json certificate_json(const Certificate& c) {
  return {{"issuer_signature", signature_json(c.issuer_sig)},
          {"subject_pk", point_json(c.subject_pk)},
          {"subject_role", std::string(sigchain::role_name(c.subject_role))}};
}

std::string dump_canonical(const Json& json) { return json.dump(2) + "\n"; }

Json new_document(std::string_view kind) {
  return {{"kind", std::string(kind)}, {"version", kFormatVersion}};
}

Json parse_document(std::string_view text, std::string_view kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaViolation("$", std::string("invalid JSON: ") + e.what());
  }
  ObjectReader r(doc, "$");
  const std::string actual = r.string("kind");
  if (actual != kind) {
    throw SchemaViolation("$.kind", "expected '" + std::string(kind) + "', found '" + actual + "'");
  }
  r.version();
  return doc;
}

std::string key_to_json(const sigchain::KeyPair& key) {
  Json doc = new_document("carbonzk-key");
  doc["role"] = std::string(sigchain::role_name(key.role));
  doc["secret"] = key.secret.to_decimal();
  doc["public_key"] = point_json(key.public_key);
  return dump_canonical(doc);
}

sigchain::KeyPair key_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-key");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  const sigchain::Role role = r.role("role");
  const std::string secret = r.string("secret");
  sigchain::JubjubScalar scalar;
  try {
    if (!is_decimal(secret)) throw std::invalid_argument("not decimal");
    scalar = sigchain::JubjubScalar::from_decimal(secret);
  } catch (const std::exception&) {
    throw SchemaViolation("$.secret", "not a subgroup scalar");
  }
  if (scalar.is_zero()) throw SchemaViolation("$.secret", "secret must be non-zero");
  const EdwardsPoint pk = r.point("public_key");
  r.finish();
  sigchain::KeyPair key = sigchain::keypair_from_secret(role, scalar);
  if (key.public_key != pk) throw SchemaViolation("$.public_key", "does not match the secret");
  return key;
}

std::string public_key_to_json(const PublicKeyDocument& d) {
  Json doc = new_document("carbonzk-public-key");
  doc["role"] = std::string(sigchain::role_name(d.role));
  doc["public_key"] = point_json(d.public_key);
  return dump_canonical(doc);
}

PublicKeyDocument public_key_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-public-key");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  PublicKeyDocument out{r.role("role"), r.point("public_key")};
  r.finish();
  return out;
}

std::string certificate_to_json(const Certificate& cert) {
  Json doc = new_document("carbonzk-certificate");
  doc["certificate"] = certificate_json(cert);
  return dump_canonical(doc);
}

Certificate certificate_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-certificate");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  Certificate c = r.certificate("certificate");
  r.finish();
  return c;
}

std::string reading_to_json(const SignedReading& reading) {
  Json doc = new_document("carbonzk-meter-reading");
  doc["meter_id"] = field_json(reading.meter_id);
  doc["period_start"] = u64_json(reading.period.start);
  doc["period_end"] = u64_json(reading.period.end);
  doc["total_consumption"] = u64_json(reading.total_consumption.value);
  doc["signature"] = signature_json(reading.signature);
  return dump_canonical(doc);
}

SignedReading reading_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-meter-reading");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  SignedReading out;
  out.meter_id = r.field("meter_id");
  out.period = r.period("period_start", "period_end");
  out.total_consumption = {r.u64("total_consumption")};
  out.signature = r.signature("signature");
  r.finish();
  return out;
}

std::string intensity_to_json(const SignedIntensity& intensity) {
  Json doc = new_document("carbonzk-carbon-intensity");
  doc["region_id"] = field_json(intensity.region_id);
  doc["period_start"] = u64_json(intensity.period.start);
  doc["period_end"] = u64_json(intensity.period.end);
  doc["carbon_intensity"] = u64_json(intensity.carbon_intensity.value);
  doc["signature"] = signature_json(intensity.signature);
  return dump_canonical(doc);
}

SignedIntensity intensity_from_json(std::string_view text) {
  const Json doc = parse_document(text, "carbonzk-carbon-intensity");
  ObjectReader r(doc, "$");
  r.string("kind");
  r.version();
  SignedIntensity out;
  out.region_id = r.field("region_id");
  out.period = r.period("period_start", "period_end");
  out.carbon_intensity = {r.u64("carbon_intensity")};
  out.signature = r.signature("signature");
  r.finish();
  return out;
}

}  // namespace carbonzk::claims
