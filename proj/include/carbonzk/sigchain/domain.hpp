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

// Domain-separation tags and identifier derivation.

#ifndef CARBONZK_SIGCHAIN_DOMAIN_HPP_
#define CARBONZK_SIGCHAIN_DOMAIN_HPP_

#include <string_view>

#include "carbonzk/ff/bn254.hpp"

namespace carbonzk::sigchain {

enum class DomainTag {
  kCertificateBody,
  kCertificateSignature,
  kMeterReading,
  kIntensity,
  kNonce,
  kShareCommitment,
  kIdentity,
};

inline constexpr DomainTag kAllDomainTags[] = {
    DomainTag::kCertificateBody, DomainTag::kCertificateSignature, DomainTag::kMeterReading,
    DomainTag::kIntensity,       DomainTag::kNonce,                DomainTag::kShareCommitment,
    DomainTag::kIdentity,
};

// ASCII label packed big-endian into one field element.
std::string_view domain_label(DomainTag tag);
Fr domain_tag_value(DomainTag tag);
// Throws std::invalid_argument if the label exceeds 31 bytes.
Fr pack_label(std::string_view label);

// Single field element naming a data centre, customer, region or meter:
// sponge over the UTF-8 bytes in 31-byte big-endian chunks, prefixed by the
// byte length.
Fr identity_id(std::string_view name);

}  // namespace carbonzk::sigchain

#endif  // CARBONZK_SIGCHAIN_DOMAIN_HPP_
