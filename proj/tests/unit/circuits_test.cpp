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

#include <fstream>
#include <map>

#include "../support/claim_fixture.hpp"
#include "carbonzk/util/error.hpp"
#include "gtest/gtest.h"

namespace carbonzk::circuit {
namespace {

using testing::make_claim_fixture;

const ConstraintSystem& claim_system() {
  static const ConstraintSystem kSystem = build_claim_circuit();
  return kSystem;
}

SatisfactionResult check(const ClaimWitnessInput& in) {
  const auto w = synthesize_witness(claim_system(), in);
  return is_satisfied(claim_system(), w);
}

std::map<std::string, std::string> read_golden() {
  std::ifstream in(std::string(CARBONZK_GOLDEN_DIR) + "/claim_circuit.txt");
  std::map<std::string, std::string> out;
  std::string key, value;
  while (in >> key >> value) out[key] = value;
  return out;
}

TEST(ClaimCircuit, HonestWitnessSatisfies) {
  const auto f = make_claim_fixture();
  const auto w = synthesize_witness(claim_system(), f.input);
  EXPECT_EQ(w.size(), claim_system().num_variables);
  EXPECT_TRUE(is_satisfied(claim_system(), w));
  EXPECT_EQ(synthesize_witness(claim_system(), f.input), w);
}

TEST(ClaimCircuit, PublicLayoutIsExact) {
  const auto& cs = claim_system();
  ASSERT_EQ(cs.public_names.size(), kClaimPublicInputs.size());
  for (size_t i = 0; i < kClaimPublicInputs.size(); ++i) {
    EXPECT_EQ(cs.public_names[i], kClaimPublicInputs[i]);
  }
  const auto f = make_claim_fixture();
  const auto w = synthesize_witness(cs, f.input);
  const auto& in = f.input;
  EXPECT_EQ(public_slice(cs, w),
            claim_public_inputs(*in.customer_emission, *in.ca_m_pk, *in.ca_es_pk, *in.period,
                                *in.datacentre_id, *in.customer_id));
  // No private value sits in a public slot.
  for (const Fr& v : public_slice(cs, w)) {
    for (const Fr& secret :
         {Fr::from_uint(in.carbon_intensity->value), Fr::from_uint(in.total_consumption->value),
          Fr::from_uint(in.customer_share->value), in.meter_cert->subject_pk.x,
          in.manufacturer_cert->subject_pk.x, in.supplier_cert->subject_pk.x,
          in.reading_signature->r.x}) {
      EXPECT_NE(v, secret);
    }
  }
}

TEST(ClaimCircuit, ConstraintCountMatchesGolden) {
  const auto golden = read_golden();
  ASSERT_TRUE(golden.count("constraints"));
  const ConstraintSystem again = build_claim_circuit();
  EXPECT_EQ(std::to_string(claim_system().num_constraints()), golden.at("constraints"));
  EXPECT_EQ(std::to_string(claim_system().num_variables), golden.at("variables"));
  EXPECT_EQ(to_hex(claim_system().digest()), golden.at("digest"));
  EXPECT_EQ(again.digest(), claim_system().digest());
}

TEST(ClaimCircuit, TamperMatrix) {
  using namespace sigchain;
  const auto f = make_claim_fixture();
  ASSERT_TRUE(check(f.input));

  struct Case {
    const char* name;
    std::function<void(ClaimWitnessInput&)> mutate;
  };
  const std::vector<Case> cases = {
      {"ce plus one", [](auto& in) { in.customer_emission->value += 1; }},
      {"ce minus one", [](auto& in) { in.customer_emission->value -= 1; }},
      {"x altered after signing",
       [](auto& in) {
         in.total_consumption->value += 1;
         auto e = quantities::compute_emissions(*in.carbon_intensity, *in.total_consumption,
                                                *in.customer_share);
         in.customer_emission = e.ce;
         in.remainder = e.remainder;
       }},
      {"i altered after signing",
       [](auto& in) {
         in.carbon_intensity->value += 1;
         auto e = quantities::compute_emissions(*in.carbon_intensity, *in.total_consumption,
                                                *in.customer_share);
         in.customer_emission = e.ce;
         in.remainder = e.remainder;
       }},
      {"c altered", [](auto& in) { in.customer_share->value += 1; }},
      {"meter pk swapped",
       [](auto& in) { in.meter_cert->subject_pk = testing::fixture_key(Role::kMeter, 9).public_key; }},
      {"manufacturer cert from wrong ca",
       [&](auto& in) {
         in.manufacturer_cert = issue_certificate(testing::fixture_key(Role::kCaM, 9),
                                                  f.manufacturer.public_key, Role::kManufacturer);
       }},
      {"supplier signature over other period",
       [&](auto& in) {
         quantities::ReportingPeriod other{in.period->start + 3600, in.period->end + 3600};
         in.intensity_signature =
             sign_intensity(f.supplier, *in.region_id, other, *in.carbon_intensity);
       }},
  };
  for (const auto& c : cases) {
    ClaimWitnessInput in = f.input;
    c.mutate(in);
    EXPECT_FALSE(check(in)) << c.name;
  }
}

TEST(ClaimCircuit, FlippedEmissionFailsInEmissionsSection) {
  auto f = make_claim_fixture();
  f.input.customer_emission->value += 1;
  const auto r = check(f.input);
  ASSERT_FALSE(r);
  EXPECT_EQ(claim_system().section_of(r.failing_constraint), "emissions");
}

TEST(ClaimCircuit, MissingFieldsNamed) {
  const auto f = make_claim_fixture();
  auto in = f.input;
  in.intensity_signature.reset();
  try {
    synthesize_witness(claim_system(), in);
    FAIL() << "expected IncompleteInput";
  } catch (const IncompleteInput& e) {
    EXPECT_EQ(e.field(), "supplier signature");
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteInput);
  }
  in = f.input;
  in.total_consumption.reset();
  EXPECT_THROW(synthesize_witness(claim_system(), in), IncompleteInput);
}

TEST(ClaimCircuit, RejectsForeignSystem) {
  const auto f = make_claim_fixture();
  const ConstraintSystem other = build_completeness_circuit(1);
  try {
    synthesize_witness(other, f.input);
    FAIL() << "expected KeyMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeyMismatch);
  }
}

TEST(ClaimCircuit, RandomHonestInputsSatisfy) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto f = make_claim_fixture(1000 + t, &rng);
    ASSERT_TRUE(check(f.input)) << t;
  }
}

CompletenessWitnessInput shares_input(const std::vector<uint64_t>& shares) {
  CompletenessWitnessInput in;
  in.datacentre_id = sigchain::identity_id("dc");
  in.period = {10, 20};
  for (size_t k = 0; k < shares.size(); ++k) {
    in.entries.push_back({sigchain::identity_id("customer-" + std::to_string(k)),
                          quantities::ShareFraction{shares[k]}, Fr::from_uint(1000 + k)});
  }
  return in;
}

bool completeness_ok(const std::vector<uint64_t>& shares) {
  const auto cs = build_completeness_circuit(shares.size());
  return bool(is_satisfied(cs, synthesize_completeness_witness(cs, shares_input(shares))));
}

TEST(CompletenessCircuit, Examples) {
  EXPECT_TRUE(completeness_ok({500'000, 300'000, 200'000}));
  EXPECT_FALSE(completeness_ok({500'000, 500'000, 1}));
  EXPECT_TRUE(completeness_ok({1'000'000}));
  EXPECT_FALSE(completeness_ok({999'999}));
  EXPECT_TRUE(completeness_ok({0, 1'000'000}));
}

TEST(CompletenessCircuit, OverflowingShareRejected) {
  // Wrap-around: p - 1 and 10^6 + 1 sum to 10^6 in the field.
  const auto cs = build_completeness_circuit(2);
  auto in = shares_input({1'000'001, 0});
  auto w = synthesize_completeness_witness(cs, in);
  EXPECT_FALSE(is_satisfied(cs, w));
}

TEST(CompletenessCircuit, PublicInputsAreCommitments) {
  const auto cs = build_completeness_circuit(3);
  ASSERT_EQ(cs.public_inputs.size(), 6u);
  const auto in = shares_input({500'000, 300'000, 200'000});
  const auto pub = public_slice(cs, synthesize_completeness_witness(cs, in));
  for (size_t k = 0; k < 3; ++k) {
    const auto& e = in.entries[k];
    EXPECT_EQ(pub[k], sigchain::commit_share(e.customer_id, e.share, e.blinding));
  }
  EXPECT_EQ(cs.public_names[3], "datacentre_id");
  EXPECT_THROW(build_completeness_circuit(0), std::invalid_argument);
  EXPECT_THROW(synthesize_completeness_witness(cs, shares_input({1'000'000})), Error);
}

}  // namespace
}  // namespace carbonzk::circuit
