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

// Schnorr signatures over Baby Jubjub with a Poseidon challenge:
//   R = r*B,  c = H_domain(R.x, R.y, A.x, A.y, m...),  s = r + c*a mod l,
// accepted iff s < l and s*B = R + c*A with R, A in the prime subgroup.

#ifndef CARBONZK_SIGCHAIN_SIGNATURE_HPP_
#define CARBONZK_SIGCHAIN_SIGNATURE_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "carbonzk/sigchain/domain.hpp"
#include "carbonzk/sigchain/jubjub.hpp"

namespace carbonzk::sigchain {

enum class Role { kCaM, kCaEs, kManufacturer, kSupplier, kMeter };

inline constexpr Role kAllRoles[] = {Role::kCaM, Role::kCaEs, Role::kManufacturer,
                                     Role::kSupplier, Role::kMeter};

// "ca-m", "ca-es", "manufacturer", "supplier", "meter".
std::string_view role_name(Role role);
std::optional<Role> parse_role(std::string_view name);
Fr role_tag(Role role);

struct KeyPair {
  JubjubScalar secret;
  EdwardsPoint public_key;
  Role role = Role::kMeter;
};

struct Signature {
  EdwardsPoint r;
  U256 s;  // canonical integer; valid signatures have s < l
  bool operator==(const Signature&) const = default;
};

inline constexpr size_t kSeedBytes = 32;

// secret = SHA-512(seed) mod l (never zero), public = secret * B.
KeyPair keygen(Role role, std::span<const uint8_t, kSeedBytes> seed);
KeyPair keypair_from_secret(Role role, const JubjubScalar& secret);

Fr signature_challenge(const EdwardsPoint& r, const EdwardsPoint& pk, std::span<const Fr> message,
                       DomainTag domain);

// Deterministic nonce from (secret, domain, message).
Signature sign(const KeyPair& kp, std::span<const Fr> message, DomainTag domain);

// Throws Error(kMalformedPoint) if pk or R is off the curve; otherwise
// returns the verdict.
bool verify(const EdwardsPoint& pk, std::span<const Fr> message, const Signature& sig,
            DomainTag domain);

}  // namespace carbonzk::sigchain

#endif  // CARBONZK_SIGCHAIN_SIGNATURE_HPP_
