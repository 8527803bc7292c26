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

// A complete, deterministic fixture universe: five role keys, both
// certificate chains, a signed reading and intensity, the prover input and
// the datacentre's share table.

#ifndef CARBONZK_CLAIMS_DEMO_HPP_
#define CARBONZK_CLAIMS_DEMO_HPP_

#include <span>
#include <string>

#include "carbonzk/claims/claims.hpp"
#include "carbonzk/claims/codec.hpp"

namespace carbonzk::claims {

struct DemoUniverse {
  sigchain::KeyPair ca_m, ca_es, manufacturer, meter, supplier;
  sigchain::Certificate manufacturer_cert, meter_cert, supplier_cert;
  SignedReading reading;
  SignedIntensity intensity;
  ShareTable shares;
  ProverInput prover_input;  // for the first customer
  std::string datacentre_name, customer_name, region_name, meter_name;
};

// Seed bytes for the demo's role keys: SHA-256(seed || "/" || role name).
std::array<uint8_t, sigchain::kSeedBytes> demo_key_seed(std::span<const uint8_t> seed,
                                                        sigchain::Role role);

// Same seed, same universe, byte for byte.
DemoUniverse make_demo_universe(std::span<const uint8_t> seed);

// The seed used when none is given.
Bytes default_demo_seed();

}  // namespace carbonzk::claims

#endif  // CARBONZK_CLAIMS_DEMO_HPP_
