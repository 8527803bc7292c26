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

#include "carbonzk/sigchain/domain.hpp"

#include <stdexcept>
#include <vector>

#include "carbonzk/sigchain/poseidon.hpp"

namespace carbonzk::sigchain {
namespace {

Fr pack_chunk(std::string_view bytes) {
  Fr acc = Fr::zero();
  const Fr k256 = Fr::from_uint(256);
  for (unsigned char ch : bytes) acc = acc * k256 + Fr::from_uint(ch);
  return acc;
}

}  // namespace

std::string_view domain_label(DomainTag tag) {
  switch (tag) {
    case DomainTag::kCertificateBody: return "carbonzk/certificate-body/v1";
    case DomainTag::kCertificateSignature: return "carbonzk/certificate-sig/v1";
    case DomainTag::kMeterReading: return "carbonzk/meter-reading/v1";
    case DomainTag::kIntensity: return "carbonzk/intensity/v1";
    case DomainTag::kNonce: return "carbonzk/nonce/v1";
    case DomainTag::kShareCommitment: return "carbonzk/share-commitment/v1";
    case DomainTag::kIdentity: return "carbonzk/identity/v1";
  }
  return "";
}

Fr pack_label(std::string_view label) {
  if (label.size() > 31) throw std::invalid_argument("domain label longer than 31 bytes");
  return pack_chunk(label);
}

Fr domain_tag_value(DomainTag tag) { return pack_label(domain_label(tag)); }

Fr identity_id(std::string_view name) {
  std::vector<Fr> inputs{Fr::from_uint(name.size())};
  for (size_t pos = 0; pos < name.size(); pos += 31) inputs.push_back(pack_chunk(name.substr(pos, 31)));
  return sponge_hash(domain_tag_value(DomainTag::kIdentity), inputs);
}

}  // namespace carbonzk::sigchain
