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

// Canonical JSON for every file the toolkit reads or writes: sorted keys,
// numerics as decimal strings, a "kind" and a "version" field per document.

#ifndef CARBONZK_CLAIMS_CODEC_HPP_
#define CARBONZK_CLAIMS_CODEC_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"

#include "carbonzk/quantities/quantities.hpp"
#include "carbonzk/sigchain/certificate.hpp"
#include "carbonzk/util/bytes.hpp"

namespace carbonzk::claims {

using Json = nlohmann::json;

inline constexpr uint32_t kFormatVersion = 1;

// Strict view of a JSON object. Getters throw SchemaViolation carrying the
// JSON path; finish() rejects keys that were never read.
class ObjectReader {
 public:
  ObjectReader(const Json& json, std::string path);

  const std::string& path() const { return path_; }
  std::string child(std::string_view key) const;
  bool has(std::string_view key) const;
  const Json& at(std::string_view key);

  std::string string(std::string_view key);
  bool boolean(std::string_view key);
  uint32_t version(std::string_view key = "version");
  uint64_t u64(std::string_view key);
  u128 u128_value(std::string_view key);
  Fr field(std::string_view key);
  Bytes hex(std::string_view key);
  sigchain::Role role(std::string_view key);
  sigchain::EdwardsPoint point(std::string_view key);
  sigchain::Signature signature(std::string_view key);
  sigchain::Certificate certificate(std::string_view key);
  quantities::ReportingPeriod period(std::string_view start_key, std::string_view end_key);

  void finish() const;

 private:
  const Json& json_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

std::string u64_json(uint64_t v);
std::string u128_json(u128 v);
std::string field_json(const Fr& v);
Json point_json(const sigchain::EdwardsPoint& p);      // {"x", "y"}
Json signature_json(const sigchain::Signature& sig);   // {"r": point, "s"}
Json certificate_json(const sigchain::Certificate& c);  // {"issuer_signature", "subject_pk", "subject_role"}

// Two-space indented dump with a trailing newline; keys come out sorted.
std::string dump_canonical(const Json& json);

// Parses text and checks the document kind and version. Throws
// SchemaViolation (for example "$.version") on any mismatch.
Json parse_document(std::string_view text, std::string_view kind);
// Starts a document of the given kind.
Json new_document(std::string_view kind);

// Key and signature-chain documents used by the command-line tools.
struct PublicKeyDocument {
  sigchain::Role role = sigchain::Role::kMeter;
  sigchain::EdwardsPoint public_key;
};

struct SignedReading {
  Fr meter_id;
  quantities::ReportingPeriod period;
  quantities::EnergyQuantity total_consumption;
  sigchain::Signature signature;
};

struct SignedIntensity {
  Fr region_id;
  quantities::ReportingPeriod period;
  quantities::IntensityQuantity carbon_intensity;
  sigchain::Signature signature;
};

std::string key_to_json(const sigchain::KeyPair& key);
// Rejects a public key that does not match the secret.
sigchain::KeyPair key_from_json(std::string_view text);
std::string public_key_to_json(const PublicKeyDocument& doc);
PublicKeyDocument public_key_from_json(std::string_view text);
std::string certificate_to_json(const sigchain::Certificate& cert);
sigchain::Certificate certificate_from_json(std::string_view text);
std::string reading_to_json(const SignedReading& reading);
SignedReading reading_from_json(std::string_view text);
std::string intensity_to_json(const SignedIntensity& intensity);
SignedIntensity intensity_from_json(std::string_view text);

}  // namespace carbonzk::claims

#endif  // CARBONZK_CLAIMS_CODEC_HPP_
