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

#include "carbonzk/sigchain/signature.hpp"

#include "carbonzk/sigchain/poseidon.hpp"
#include "carbonzk/util/bytes.hpp"
#include "carbonzk/util/error.hpp"

namespace carbonzk::sigchain {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::kCaM: return "ca-m";
    case Role::kCaEs: return "ca-es";
    case Role::kManufacturer: return "manufacturer";
    case Role::kSupplier: return "supplier";
    case Role::kMeter: return "meter";
  }
  return "";
}

std::optional<Role> parse_role(std::string_view name) {
  for (Role role : kAllRoles) {
    if (role_name(role) == name) return role;
  }
  return std::nullopt;
}

Fr role_tag(Role role) { return Fr::from_uint(static_cast<uint64_t>(role) + 1); }

KeyPair keypair_from_secret(Role role, const JubjubScalar& secret) {
  return {secret, EdwardsPoint::base_point().mul(secret), role};
}

KeyPair keygen(Role role, std::span<const uint8_t, kSeedBytes> seed) {
  const auto wide = sha512(seed);
  JubjubScalar secret = JubjubScalar::from_wide_bytes(wide);
  if (secret.is_zero()) secret = JubjubScalar::one();
  return keypair_from_secret(role, secret);
}

Fr signature_challenge(const EdwardsPoint& r, const EdwardsPoint& pk, std::span<const Fr> message,
                       DomainTag domain) {
  std::vector<Fr> inputs{r.x, r.y, pk.x, pk.y};
  inputs.insert(inputs.end(), message.begin(), message.end());
  return sponge_hash(domain_tag_value(domain), inputs);
}

Signature sign(const KeyPair& kp, std::span<const Fr> message, DomainTag domain) {
  std::vector<Fr> nonce_input{field_from_scalar(kp.secret), domain_tag_value(domain)};
  nonce_input.insert(nonce_input.end(), message.begin(), message.end());
  const JubjubScalar r =
      scalar_from_field(sponge_hash(domain_tag_value(DomainTag::kNonce), nonce_input));
  const EdwardsPoint big_r = EdwardsPoint::base_point().mul(r);
  const JubjubScalar c =
      scalar_from_field(signature_challenge(big_r, kp.public_key, message, domain));
  return {big_r, (r + c * kp.secret).to_canonical()};
}

bool verify(const EdwardsPoint& pk, std::span<const Fr> message, const Signature& sig,
            DomainTag domain) {
  if (!pk.is_on_curve()) throw Error(ErrorCode::kMalformedPoint, "public key is not on the curve");
  if (!sig.r.is_on_curve()) {
    throw Error(ErrorCode::kMalformedPoint, "signature point R is not on the curve");
  }
  if (!(sig.s < kSubgroupOrder)) return false;
  if (pk.is_identity() || !pk.in_prime_subgroup() || !sig.r.in_prime_subgroup()) return false;
  const Fr c = signature_challenge(sig.r, pk, message, domain);
  const EdwardsPoint lhs = EdwardsPoint::base_point().mul(sig.s);
  const EdwardsPoint rhs = sig.r + pk.mul(c.to_canonical());
  return lhs == rhs;
}

}  // namespace carbonzk::sigchain
