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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Tolerances are fixed constants below.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "../support/claim_fixture.hpp"
#include "carbonzk/circuit/gadgets.hpp"
#include "carbonzk/claims/claims.hpp"
#include "carbonzk/claims/demo.hpp"
#include "carbonzk/proofsys/groth16.hpp"
#include "carbonzk/proofsys/oracle.hpp"
#include "carbonzk/util/error.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace carbonzk::acceptance {
namespace {

using circuit::ClaimWitnessInput;
using nlohmann::json;
using sigchain::Role;

// Pinned limits and sample sizes.
constexpr double kDemoWallClockLimitSeconds = 300.0;
constexpr size_t kProofSizeLimitBytes = 4096;
constexpr int kEmissionTriples = 1000;
constexpr uint64_t kEmissionTolerance = 0;
constexpr int kTamperCases = 8;
constexpr int kEquivalenceValid = 100;
constexpr int kEquivalenceInvalid = 100;
constexpr int kSignaturesValid = 100;
constexpr int kSignaturesInvalid = 100;
constexpr size_t kSmallTable = 1;
constexpr size_t kLargeTable = 50;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& args) {
  const std::string cmd = "'" CARBONZK_CLI "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Shared state built once: the claim-circuit setups for both backends and
// the demo bundle written by the CLI.
struct Shared {
  fs::path work;
  std::unique_ptr<proofsys::Backend> groth16 = proofsys::make_backend(proofsys::BackendKind::kGroth16);
  std::unique_ptr<proofsys::Backend> oracle = proofsys::make_backend(proofsys::BackendKind::kOracle);
  proofsys::SetupArtifacts groth16_setup, oracle_setup;
  std::optional<claims::ClaimBundle> demo_bundle;
  std::vector<claims::ClaimBundle> corpus;                  // valid Groth16 bundles
  std::vector<circuit::ClaimWitnessInput> corpus_inputs;    // their private inputs
  std::vector<testing::ClaimFixture> corpus_fixtures;
};

Bytes seed_bytes(std::string_view label) {
  const Digest d = sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(label.data()),
                                                   label.size()));
  return Bytes(d.begin(), d.end());
}

// 1. demo + claim prove + claim verify through the executable.
Outcome end_to_end(Shared& s) {
  const fs::path dir = s.work / "demo";
  const auto t0 = std::chrono::steady_clock::now();
  const int demo = shell("demo --out '" + dir.string() + "'");
  const int prove = shell("claim prove --input '" + (dir / "customer-a.prover.json").string() +
                          "' --setup '" + (dir / "setup/claim").string() + "' --out '" +
                          (s.work / "e2e.claim.json").string() + "'");
  const int verify = shell("claim verify --bundle '" + (s.work / "e2e.claim.json").string() +
                           "' --ca-m '" + (dir / "keys/ca-m.pub.json").string() + "' --ca-es '" +
                           (dir / "keys/ca-es.pub.json").string() + "' --setup '" +
                           (dir / "setup/claim").string() + "'");
  const double elapsed = seconds_since(t0);
  if (prove == 0) s.demo_bundle = claims::bundle_from_json(slurp(s.work / "e2e.claim.json"));
  std::ostringstream d;
  d << "exit codes demo=" << demo << " prove=" << prove << " verify=" << verify << ", "
    << elapsed << " s wall clock (limit " << kDemoWallClockLimitSeconds << " s)";
  return {demo == 0 && prove == 0 && verify == 0 && elapsed < kDemoWallClockLimitSeconds,
          d.str()};
}

// 2. Size of the succinct proof carried in the bundle.
Outcome proof_size(const Shared& s) {
  if (!s.demo_bundle) return {false, "no bundle from the end-to-end run"};
  const size_t n = s.demo_bundle->proof.size();
  return {s.demo_bundle->backend == proofsys::BackendKind::kGroth16 && n <= kProofSizeLimitBytes,
          std::to_string(n) + " bytes (limit " + std::to_string(kProofSizeLimitBytes) + ")"};
}

// 3. compute_emissions against an arbitrary-precision divmod, and the
//    emissions gadget against the same oracle values.
Outcome emissions_oracle() {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(20260301);
  int mismatches = 0, gadget_mismatches = 0;
  for (int t = 0; t < kEmissionTriples; ++t) {
    // Mix full-range draws with values at the bounds.
    auto draw = [&](uint64_t bound_exclusive) {
      switch (rng() % 8) {
        case 0: return uint64_t{0};
        case 1: return bound_exclusive - 1;
        default: return rng() % bound_exclusive;
      }
    };
    const uint64_t i = draw(quantities::kIntensityBound);
    const uint64_t x = draw(quantities::kEnergyBound);
    const uint64_t c = draw(quantities::kShareFull + 1);
    const cpp_int product = cpp_int(i) * x * c;
    const cpp_int ce_oracle = product / quantities::kEmissionsDivisor;
    const cpp_int r_oracle = product % quantities::kEmissionsDivisor;

    const auto got = quantities::compute_emissions({i}, {x}, {c});
    const cpp_int ce_got = (cpp_int(static_cast<uint64_t>(got.ce.value >> 64)) << 64) +
                           static_cast<uint64_t>(got.ce.value);
    const cpp_int diff = ce_got > ce_oracle ? ce_got - ce_oracle : ce_oracle - ce_got;
    if (diff > kEmissionTolerance || cpp_int(got.remainder) != r_oracle) ++mismatches;

    auto gadget = [&](const cpp_int& ce) {
      circuit::CircuitBuilder b;
      circuit::emissions(b, b.alloc_private(Fr::from_uint(i)), b.alloc_private(Fr::from_uint(x)),
                         b.alloc_private(Fr::from_uint(c)),
                         b.alloc_public("ce", Fr::from_decimal(ce.str())),
                         b.alloc_private(Fr::from_uint(static_cast<uint64_t>(r_oracle))));
      return bool(circuit::is_satisfied(b.system(), b.witness()));
    };
    if (t % 10 == 0 && (!gadget(ce_oracle) || gadget(ce_oracle + 1))) ++gadget_mismatches;
  }
  return {mismatches == 0 && gadget_mismatches == 0,
          std::to_string(kEmissionTriples) + " triples, " + std::to_string(mismatches) +
              " mismatches (tolerance " + std::to_string(kEmissionTolerance) + "), " +
              std::to_string(gadget_mismatches) + " gadget disagreements on " +
              std::to_string(kEmissionTriples / 10) + " sampled"};
}

// A tampered witness is rejected when the prover cannot prove it, i.e.
// the constraint system is unsatisfied and the backend refuses to prove.
bool prover_refuses(const Shared& s, const ClaimWitnessInput& in) {
  const auto& cs = claims::claim_circuit();
  const auto w = circuit::synthesize_witness(cs, in);
  if (circuit::is_satisfied(cs, w)) return false;
  try {
    (void)s.groth16->prove(s.groth16_setup.proving_key, cs, w, seed_bytes("tamper"));
    return false;
  } catch (const Error& e) {
    return e.code() == ErrorCode::kUnsatisfiedWitness;
  }
}

claims::ClaimBundle prove_groth16(const Shared& s, const claims::ProverInput& input,
                                  std::string_view label) {
  return claims::build_and_prove(input, *s.groth16, s.groth16_setup, seed_bytes(label));
}

bool rejected(const Shared& s, const claims::ClaimBundle& b, const claims::TrustAnchors& a) {
  return !claims::verify_claim(b, a, s.groth16_setup.verifying_key).accepted;
}

// 4. Tamper matrix.
Outcome tamper_matrix(const Shared& s) {
  using namespace sigchain;
  const auto f = testing::make_claim_fixture(4000);
  const auto input = claims::assemble_prover_input(f.input);
  const auto honest = prove_groth16(s, input, "tamper/honest");
  const claims::TrustAnchors anchors{f.ca_m.public_key, f.ca_es.public_key};
  auto recompute = [](ClaimWitnessInput& in) {
    const auto e = quantities::compute_emissions(*in.carbon_intensity, *in.total_consumption,
                                                 *in.customer_share);
    in.customer_emission = e.ce;
    in.remainder = e.remainder;
  };

  struct Case {
    const char* name;
    std::function<bool()> is_rejected;
  };
  auto witness_case = [&](std::function<void(ClaimWitnessInput&)> mutate) {
    return [&, mutate] {
      ClaimWitnessInput in = f.input;
      mutate(in);
      return prover_refuses(s, in);
    };
  };
  auto ce_case = [&](int delta) {
    return [&, delta] {
      ClaimWitnessInput in = f.input;
      in.customer_emission->value += delta;
      claims::ClaimBundle forged = honest;
      forged.customer_emission.value += delta;
      return prover_refuses(s, in) && rejected(s, forged, anchors);
    };
  };
  const std::vector<Case> cases = {
      {"CE+1/CE-1",
       [&] { return ce_case(+1)() && ce_case(-1)(); }},
      {"X altered after signing",
       witness_case([&](auto& in) { in.total_consumption->value += 1; recompute(in); })},
      {"I altered after signing",
       witness_case([&](auto& in) { in.carbon_intensity->value += 1; recompute(in); })},
      {"C altered", witness_case([&](auto& in) { in.customer_share->value += 1; })},
      {"meter pk swapped", witness_case([&](auto& in) {
         in.meter_cert->subject_pk = testing::fixture_key(Role::kMeter, 4999).public_key;
       })},
      {"manufacturer cert from wrong CA", witness_case([&](auto& in) {
         in.manufacturer_cert = issue_certificate(testing::fixture_key(Role::kCaM, 4998),
                                                  f.manufacturer.public_key, Role::kManufacturer);
       })},
      {"supplier signature over different period", witness_case([&](auto& in) {
         const quantities::ReportingPeriod other{in.period->start + 86400,
                                                 in.period->end + 86400};
         in.intensity_signature = sign_intensity(f.supplier, *in.region_id, other,
                                                 *in.carbon_intensity);
       })},
      {"proof bytes flipped",
       [&] {
         for (size_t k = 0; k < honest.proof.size(); k += 16) {
           claims::ClaimBundle flipped = honest;
           flipped.proof[k] ^= 0x01;
           if (!rejected(s, flipped, anchors)) return false;
         }
         return true;
       }},
  };
  int caught = 0;
  std::string missed;
  const bool honest_ok = !rejected(s, honest, anchors);
  for (const auto& c : cases) {
    if (c.is_rejected()) {
      ++caught;
    } else {
      missed += std::string(missed.empty() ? " missed: " : ", ") + c.name;
    }
  }
  return {honest_ok && caught == kTamperCases,
          std::to_string(caught) + "/" + std::to_string(kTamperCases) +
              " rejected, honest control " + (honest_ok ? "accepted" : "REJECTED") + missed};
}

// Invalid instance k derived from valid bundle k (with its anchors).
std::pair<claims::ClaimBundle, claims::TrustAnchors> invalidate(
    const claims::ClaimBundle& b, const claims::ClaimBundle& other, int k) {
  claims::ClaimBundle bad = b;
  switch (k % 8) {
    case 0: bad.customer_emission.value += 1; break;
    case 1: bad.customer_emission.value -= bad.customer_emission.value > 0 ? 1 : -1; break;
    case 2: bad.customer_id += Fr::one(); break;
    case 3: bad.datacentre_id += Fr::one(); break;
    case 4: bad.period.start += 1; break;
    case 5: bad.period.end += 1; break;
    case 6: bad.proof = other.proof; break;
    default: std::swap(bad.ca_m_pk, bad.ca_es_pk); break;
  }
  return {bad, claims::TrustAnchors{bad.ca_m_pk, bad.ca_es_pk}};
}

// 5. Oracle and Groth16 verdicts on random valid and invalid instances.
Outcome backend_equivalence(Shared& s) {
  std::mt19937_64 rng(20260305);
  std::vector<claims::ClaimBundle> oracle_bundles;
  for (int k = 0; k < kEquivalenceValid; ++k) {
    auto f = testing::make_claim_fixture(10'000 + 10 * k, &rng);
    const auto input = claims::assemble_prover_input(f.input);
    s.corpus.push_back(prove_groth16(s, input, "equivalence/" + std::to_string(k)));
    oracle_bundles.push_back(claims::build_and_prove(input, *s.oracle, s.oracle_setup));
    s.corpus_inputs.push_back(f.input);
    s.corpus_fixtures.push_back(std::move(f));
  }
  int agree = 0, valid_accepted = 0, invalid_rejected = 0, reasons_agree = 0;
  const int total = kEquivalenceValid + kEquivalenceInvalid;
  for (int k = 0; k < total; ++k) {
    const int idx = k % kEquivalenceValid;
    const bool valid = k < kEquivalenceValid;
    const int next = (idx + 1) % kEquivalenceValid;
    auto [g, ga] = valid ? std::pair{s.corpus[idx], claims::TrustAnchors{s.corpus[idx].ca_m_pk,
                                                                        s.corpus[idx].ca_es_pk}}
                         : invalidate(s.corpus[idx], s.corpus[next], k);
    auto [o, oa] = valid ? std::pair{oracle_bundles[idx],
                                     claims::TrustAnchors{oracle_bundles[idx].ca_m_pk,
                                                          oracle_bundles[idx].ca_es_pk}}
                         : invalidate(oracle_bundles[idx], oracle_bundles[next], k);
    const auto rg = claims::verify_claim(g, ga, s.groth16_setup.verifying_key);
    const auto ro = claims::verify_claim(o, oa, s.oracle_setup.verifying_key);
    agree += rg.accepted == ro.accepted;
    reasons_agree += rg.reason == ro.reason;
    if (valid) valid_accepted += rg.accepted && ro.accepted;
    if (!valid) invalid_rejected += !rg.accepted && !ro.accepted;
  }
  std::ostringstream d;
  d << agree << "/" << total << " verdicts identical (" << reasons_agree
    << " reasons identical); valid accepted " << valid_accepted << "/" << kEquivalenceValid
    << ", invalid rejected " << invalid_rejected << "/" << kEquivalenceInvalid;
  return {agree == total && reasons_agree == total && valid_accepted == kEquivalenceValid &&
              invalid_rejected == kEquivalenceInvalid,
          d.str()};
}

void collect_json_strings(const json& j, std::set<std::string>& out) {
  if (j.is_string()) out.insert(j.get<std::string>());
  if (j.is_number()) out.insert(j.dump());
  if (j.is_structured()) {
    for (const auto& v : j) collect_json_strings(v, out);
  }
}

// Decimal and big-endian hex renderings of every private value.
std::vector<std::string> private_renderings(const ClaimWitnessInput& in,
                                            const testing::ClaimFixture* f) {
  std::vector<std::string> out;
  auto fr = [&](const Fr& v) {
    out.push_back(v.to_decimal());
    out.push_back(to_hex(v.to_bytes_be()));
  };
  auto u = [&](uint64_t v, quantities::QuantityKind kind) {
    out.push_back(std::to_string(v));
    out.push_back(quantities::format_scaled(v, kind));
  };
  auto point = [&](const sigchain::EdwardsPoint& p) { fr(p.x); fr(p.y); };
  auto sig = [&](const sigchain::Signature& s) {
    point(s.r);
    out.push_back(s.s.to_decimal());
    out.push_back(to_hex(s.s.to_bytes_be()));
  };
  u(in.carbon_intensity->value, quantities::QuantityKind::kIntensity);
  u(in.total_consumption->value, quantities::QuantityKind::kEnergy);
  u(in.customer_share->value, quantities::QuantityKind::kShare);
  out.push_back(std::to_string(*in.remainder));
  fr(*in.region_id);
  fr(*in.meter_id);
  for (const auto* c : {&*in.manufacturer_cert, &*in.meter_cert, &*in.supplier_cert}) {
    point(c->subject_pk);
    sig(c->issuer_sig);
  }
  sig(*in.reading_signature);
  sig(*in.intensity_signature);
  if (f != nullptr) {
    for (const auto* k : {&f->ca_m, &f->ca_es, &f->manufacturer, &f->meter, &f->supplier}) {
      out.push_back(k->secret.to_decimal());
      out.push_back(to_hex(k->secret.to_bytes_be()));
    }
  }
  return out;
}

// Short tokens are compared against whole JSON values, long ones searched
// anywhere in the serialized text (including inside the proof hex).
constexpr size_t kSubstringMinLength = 12;

int leaks(const std::string& text, const std::vector<std::string>& secrets) {
  std::set<std::string> values;
  collect_json_strings(json::parse(text), values);
  int found = 0;
  for (const auto& s : secrets) {
    const bool hit = s.size() >= kSubstringMinLength ? text.find(s) != std::string::npos
                                                     : values.count(s) > 0;
    found += hit;
  }
  return found;
}

// 6. Privacy surface of serialized bundles.
Outcome privacy(const Shared& s) {
  const std::set<std::string> expected_public = {
      "customer_emission", "ca_m_pk_x",     "ca_m_pk_y",   "ca_es_pk_x",  "ca_es_pk_y",
      "period_start",      "period_end",    "datacentre_id", "customer_id"};
  const std::set<std::string> metadata = {"backend", "kind", "layout_version", "proof", "version"};
  int bundles = 0, leaked = 0, layout_errors = 0, control_hits = 0;
  auto scan = [&](const claims::ClaimBundle& b, const std::vector<std::string>& secrets) {
    const std::string text = claims::to_json(b);
    leaked += leaks(text, secrets);
    const json j = json::parse(text);
    std::set<std::string> public_keys;
    for (const auto& [key, _] : j.items()) {
      if (!metadata.count(key)) public_keys.insert(key);
    }
    layout_errors += public_keys != expected_public;
    ++bundles;
  };
  if (s.demo_bundle) {
    const auto u = claims::make_demo_universe(claims::default_demo_seed());
    auto secrets = private_renderings(u.prover_input.witness_input(), nullptr);
    for (const auto* k : {&u.ca_m, &u.ca_es, &u.manufacturer, &u.meter, &u.supplier}) {
      secrets.push_back(k->secret.to_decimal());
      secrets.push_back(to_hex(k->secret.to_bytes_be()));
    }
    for (const auto& e : u.shares.entries()) {
      secrets.push_back(e.blinding.to_decimal());
      secrets.push_back(to_hex(e.blinding.to_bytes_be()));
    }
    scan(*s.demo_bundle, secrets);
    // Positive control: the same scan must find the values in the prover input.
    control_hits = leaks(claims::to_json(u.prover_input), secrets);
  }
  for (size_t k = 0; k < s.corpus.size(); ++k) {
    scan(s.corpus[k], private_renderings(s.corpus_inputs[k], &s.corpus_fixtures[k]));
  }
  const auto& names = claims::bundle_public_fields();
  const std::set<std::string> declared(names.begin(), names.end());
  std::set<std::string> circuit_names;
  for (auto n : circuit::kClaimPublicInputs) circuit_names.insert(std::string(n));
  const bool declared_ok = declared == expected_public && circuit_names == expected_public &&
                           claims::claim_circuit().public_inputs.size() == expected_public.size();
  std::ostringstream d;
  d << bundles << " bundles scanned, " << leaked << " private values found, " << layout_errors
    << " field-set mismatches; circuit public layout "
    << (declared_ok ? "matches" : "DIFFERS from") << " the " << expected_public.size()
    << " verifier fields; control scan of the prover input finds " << control_hits;
  return {bundles == kEquivalenceValid + 1 && leaked == 0 && layout_errors == 0 && declared_ok &&
              control_hits > 0,
          d.str()};
}

claims::ShareTable table_of(const std::vector<uint64_t>& shares, uint64_t tag) {
  std::vector<claims::ShareTable::Entry> entries;
  for (size_t k = 0; k < shares.size(); ++k) {
    entries.push_back({sigchain::identity_id("acceptance-" + std::to_string(tag) + "-" +
                                             std::to_string(k)),
                       quantities::ShareFraction{shares[k]}, Fr::from_uint(7'000 + 31 * k)});
  }
  return claims::ShareTable(sigchain::identity_id("dc-acceptance"), {1000, 2000}, entries);
}

// 7. Completeness aggregate.
Outcome completeness(const Shared& s) {
  std::mt19937_64 rng(20260307);
  auto split = [&](size_t n, int64_t delta) {
    std::vector<uint64_t> shares(n, 0);
    uint64_t left = quantities::kShareFull;
    for (size_t k = 0; k + 1 < n; ++k) {
      shares[k] = rng() % (left / 4 + 1);
      left -= shares[k];
    }
    shares[n - 1] = static_cast<uint64_t>(static_cast<int64_t>(left) + delta);
    return shares;
  };
  std::map<size_t, proofsys::SetupArtifacts> setups;
  auto setup_for = [&](size_t n) -> const proofsys::SetupArtifacts& {
    auto it = setups.find(n);
    if (it == setups.end()) {
      it = setups.emplace(n, s.groth16->setup(claims::completeness_circuit(n),
                                              seed_bytes("completeness/" + std::to_string(n))))
               .first;
    }
    return it->second;
  };
  std::map<size_t, size_t> proof_bytes;
  int accepted = 0, exact_cases = 0;
  for (size_t n : {kSmallTable, size_t{3}, kLargeTable}) {
    const auto table = table_of(split(n, 0), n);
    const auto agg = claims::prove_completeness(table, *s.groth16, setup_for(n),
                                                seed_bytes("completeness/proof"));
    accepted += claims::verify_completeness(agg, setup_for(n).verifying_key).accepted;
    proof_bytes[n] = agg.proof.size();
    ++exact_cases;
  }

  // Sums of 10^6 +- 1: the library refuses the table, the circuit is
  // unsatisfied, the prover refuses, and an honest proof does not verify
  // against the off-by-one commitments.
  int off_by_one_rejected = 0, off_by_one_cases = 0;
  for (size_t n : {size_t{3}, kLargeTable}) {
    const auto honest_table = table_of(split(n, 0), 100 + n);
    const auto honest = claims::prove_completeness(honest_table, *s.groth16, setup_for(n),
                                                   seed_bytes("completeness/honest"));
    for (int64_t delta : {+1, -1}) {
      ++off_by_one_cases;
      auto shares = split(n, delta);
      bool library_refuses = false;
      try {
        (void)table_of(shares, 200 + n);
      } catch (const Error& e) {
        library_refuses = e.code() == ErrorCode::kSumMismatch;
      }
      circuit::CompletenessWitnessInput in{honest_table.datacentre_id(), honest_table.period(),
                                           {}};
      for (size_t k = 0; k < n; ++k) {
        in.entries.push_back({honest_table.entries()[k].customer_id,
                              quantities::ShareFraction{shares[k]},
                              honest_table.entries()[k].blinding});
      }
      const auto& cs = claims::completeness_circuit(n);
      const auto w = circuit::synthesize_completeness_witness(cs, in);
      const bool unsatisfied = !circuit::is_satisfied(cs, w);
      bool prover_refuses = false;
      try {
        (void)s.groth16->prove(setup_for(n).proving_key, cs, w, seed_bytes("completeness/bad"));
      } catch (const Error& e) {
        prover_refuses = e.code() == ErrorCode::kUnsatisfiedWitness;
      }
      auto forged = honest;
      for (size_t k = 0; k < n; ++k) forged.commitments[k] = w[cs.public_inputs[k]];
      const bool verifier_rejects =
          !claims::verify_completeness(forged, setup_for(n).verifying_key).accepted;
      off_by_one_rejected += library_refuses && unsatisfied && prover_refuses && verifier_rejects;
    }
  }
  const bool same_size = proof_bytes[kSmallTable] == proof_bytes[kLargeTable];
  std::ostringstream d;
  d << accepted << "/" << exact_cases << " exact tables (n=1,3,50) accepted; "
    << off_by_one_rejected << "/" << off_by_one_cases << " off-by-one sums rejected; proof "
    << proof_bytes[kSmallTable] << " B at n=" << kSmallTable << " vs " << proof_bytes[kLargeTable]
    << " B at n=" << kLargeTable;
  return {accepted == exact_cases && off_by_one_rejected == off_by_one_cases && same_size,
          d.str()};
}

// 8. Native signature verification against the in-circuit verifier.
Outcome signature_agreement() {
  using sigchain::DomainTag;
  using sigchain::EdwardsPoint;
  std::mt19937_64 rng(20260308);
  auto random_fr = [&] {
    std::array<uint8_t, 64> wide{};
    for (auto& b : wide) b = static_cast<uint8_t>(rng());
    return Fr::from_wide_bytes(wide);
  };
  const EdwardsPoint two_torsion{Fr::zero(), -Fr::one()};
  int valid = 0, invalid = 0, disagree = 0;
  for (int t = 0; t < kSignaturesValid + kSignaturesInvalid; ++t) {
    const auto kp = testing::fixture_key(Role::kSupplier, 50'000 + t);
    std::vector<Fr> msg{random_fr(), random_fr(), random_fr()};
    const DomainTag domain = t % 3 == 0 ? DomainTag::kMeterReading : DomainTag::kIntensity;
    auto sig = sigchain::sign(kp, msg, domain);
    EdwardsPoint pk = kp.public_key;
    if (t >= kSignaturesValid) {
      switch (t % 6) {
        case 0: msg[rng() % msg.size()] += Fr::one(); break;
        case 1: sig.s.limb[rng() % 4] ^= uint64_t{1} << (rng() % 60); break;
        case 2: sig.r = sig.r + EdwardsPoint::base_point(); break;
        case 3: pk = testing::fixture_key(Role::kSupplier, 90'000 + t).public_key; break;
        case 4: sig.r = sig.r + two_torsion; break;
        default: add_to(sig.s, sigchain::JubjubScalar::kModulus); break;  // s + l
      }
    }
    const bool native = sigchain::verify(pk, msg, sig, domain);
    circuit::CircuitBuilder b;
    std::vector<circuit::LC> mv;
    for (const Fr& m : msg) mv.push_back(b.alloc_private(m));
    circuit::verify_signature(b, circuit::alloc_point(b, pk), mv,
                              circuit::alloc_signature(b, sig.r, sig.s), domain);
    const bool gadget = bool(circuit::is_satisfied(b.system(), b.witness()));
    disagree += native != gadget;
    (native ? valid : invalid)++;
  }
  return {disagree == 0 && valid == kSignaturesValid && invalid == kSignaturesInvalid,
          std::to_string(valid) + " valid / " + std::to_string(invalid) + " invalid, " +
              std::to_string(disagree) + " disagreements"};
}

// 9. Constraint count and digest of two independent builds vs the golden.
Outcome golden_count() {
  std::map<std::string, std::string> golden;
  std::ifstream in(fs::path(CARBONZK_GOLDEN_DIR) / "claim_circuit.txt");
  std::string key, value;
  while (in >> key >> value) golden[key] = value;
  const auto first = circuit::build_claim_circuit();
  const auto second = circuit::build_claim_circuit();
  const bool ok = golden.count("constraints") &&
                  std::to_string(first.num_constraints()) == golden["constraints"] &&
                  first.num_constraints() == second.num_constraints() &&
                  first.digest() == second.digest() &&
                  to_hex(first.digest()) == golden["digest"];
  return {ok, std::to_string(first.num_constraints()) + " and " +
                  std::to_string(second.num_constraints()) + " constraints (golden " +
                  golden["constraints"] + "), digests " +
                  (first.digest() == second.digest() ? "equal" : "differ") +
                  (to_hex(first.digest()) == golden["digest"] ? " and match golden"
                                                               : " and differ from golden")};
}

}  // namespace

int run() {
  Shared s;
  s.work = fs::temp_directory_path() / ("carbonzk-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(s.work);
  fs::create_directories(s.work);
  s.groth16_setup = s.groth16->setup(claims::claim_circuit(), seed_bytes("acceptance/setup"));
  s.oracle_setup = s.oracle->setup(claims::claim_circuit(), {});

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "end-to-end demo, prove and verify", [&] { return end_to_end(s); }},
      {2, "succinct proof size", [&] { return proof_size(s); }},
      {3, "emissions arithmetic vs big-integer divmod", [] { return emissions_oracle(); }},
      {4, "tamper matrix", [&] { return tamper_matrix(s); }},
      {5, "oracle and succinct backend equivalence", [&] { return backend_equivalence(s); }},
      {6, "privacy surface of serialized bundles", [&] { return privacy(s); }},
      {7, "share completeness proofs", [&] { return completeness(s); }},
      {8, "native and in-circuit signature agreement", [] { return signature_agreement(); }},
      {9, "golden constraint count", [] { return golden_count(); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  fs::remove_all(s.work);
  return failures == 0 ? 0 : 1;
}

}  // namespace carbonzk::acceptance

int main() { return carbonzk::acceptance::run(); }
