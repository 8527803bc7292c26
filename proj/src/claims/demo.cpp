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

#include "carbonzk/claims/demo.hpp"

#include <string_view>

#include "carbonzk/sigchain/domain.hpp"

namespace carbonzk::claims {
namespace {

using quantities::EnergyQuantity;
using quantities::IntensityQuantity;
using sigchain::Role;

// 2026-01-01T00:00:00Z .. 2026-02-01T00:00:00Z.
constexpr quantities::ReportingPeriod kDemoPeriod{1767225600, 1769904000};

// 0.233 kgCO2e/kWh and 48213.250 kWh.
constexpr IntensityQuantity kDemoIntensity{233'000};
constexpr EnergyQuantity kDemoConsumption{48'213'250};

struct DemoCustomer {
  std::string_view name;
  uint64_t usage_wh;
};
constexpr DemoCustomer kDemoCustomers[] = {
    {"customer-a", 21'000'000},
    {"customer-b", 14'000'000},
    {"customer-c", 13'213'250},
};

}  // namespace

std::array<uint8_t, sigchain::kSeedBytes> demo_key_seed(std::span<const uint8_t> seed, Role role) {
  Bytes material(seed.begin(), seed.end());
  material.push_back('/');
  const std::string_view name = sigchain::role_name(role);
  material.insert(material.end(), name.begin(), name.end());
  return sha256(material);
}

Bytes default_demo_seed() {
  const std::string_view label = "carbonzk demo universe v1";
  const Digest d = sha256(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(label.data()), label.size()));
  return Bytes(d.begin(), d.end());
}

DemoUniverse make_demo_universe(std::span<const uint8_t> seed) {
  auto key = [&](Role role) { return sigchain::keygen(role, demo_key_seed(seed, role)); };
  const auto ca_m = key(Role::kCaM), ca_es = key(Role::kCaEs);
  const auto manufacturer = key(Role::kManufacturer), meter = key(Role::kMeter);
  const auto supplier = key(Role::kSupplier);
  const auto manufacturer_cert =
      sigchain::issue_certificate(ca_m, manufacturer.public_key, Role::kManufacturer);
  const auto meter_cert = sigchain::issue_certificate(manufacturer, meter.public_key, Role::kMeter);
  const auto supplier_cert =
      sigchain::issue_certificate(ca_es, supplier.public_key, Role::kSupplier);

  const std::string dc_name = "dc-london-1", region_name = "uk-south", meter_name = "meter-0001";
  const Fr dc = sigchain::identity_id(dc_name);
  const Fr meter_id = sigchain::identity_id(meter_name);
  const Fr region_id = sigchain::identity_id(region_name);
  const SignedReading reading{
      meter_id, kDemoPeriod, kDemoConsumption,
      sigchain::sign_meter_reading(meter, meter_id, kDemoPeriod, kDemoConsumption)};
  const SignedIntensity intensity{
      region_id, kDemoPeriod, kDemoIntensity,
      sigchain::sign_intensity(supplier, region_id, kDemoPeriod, kDemoIntensity)};

  std::vector<ShareTable::Usage> usage;
  for (const auto& c : kDemoCustomers) usage.push_back({sigchain::identity_id(c.name), c.usage_wh});
  Bytes blinding_seed(seed.begin(), seed.end());
  blinding_seed.push_back('b');
  ShareTable shares = ShareTable::from_usage(dc, kDemoPeriod, usage, blinding_seed);

  circuit::ClaimWitnessInput parts;
  parts.carbon_intensity = kDemoIntensity;
  parts.total_consumption = kDemoConsumption;
  parts.customer_share = shares.entries().front().share;
  parts.period = kDemoPeriod;
  parts.datacentre_id = dc;
  parts.customer_id = shares.entries().front().customer_id;
  parts.region_id = region_id;
  parts.meter_id = meter_id;
  parts.ca_m_pk = ca_m.public_key;
  parts.ca_es_pk = ca_es.public_key;
  parts.manufacturer_cert = manufacturer_cert;
  parts.meter_cert = meter_cert;
  parts.reading_signature = reading.signature;
  parts.supplier_cert = supplier_cert;
  parts.intensity_signature = intensity.signature;
  ProverInput input = assemble_prover_input(parts);

  return DemoUniverse{ca_m,          ca_es,
                      manufacturer,  meter,
                      supplier,      manufacturer_cert,
                      meter_cert,    supplier_cert,
                      reading,       intensity,
                      std::move(shares), std::move(input),
                      dc_name,       std::string(kDemoCustomers[0].name),
                      region_name,   meter_name};
}

}  // namespace carbonzk::claims
