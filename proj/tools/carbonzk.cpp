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

// Command-line front end for the claim lifecycle. Every command is a thin
// wrapper over the library; stdout carries JSON only, prose goes to stderr.
//
// Exit codes: 0 success, 1 verification reject, 2 usage error,
// 3 malformed input, 4 internal error.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "carbonzk/claims/claims.hpp"
#include "carbonzk/claims/codec.hpp"
#include "carbonzk/claims/demo.hpp"
#include "carbonzk/proofsys/backend.hpp"
#include "carbonzk/proofsys/groth16.hpp"
#include "carbonzk/sigchain/domain.hpp"
#include "carbonzk/util/error.hpp"

namespace fs = std::filesystem;

namespace carbonzk::cli {
namespace {

using claims::Json;
using sigchain::Role;

enum Exit { kOk = 0, kReject = 1, kUsage = 2, kMalformed = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kSetupEnv = "CARBONZK_SETUP_DIR";

// Tracks written files for the JSON outcome on stdout.
class Outputs {
 public:
  explicit Outputs(bool force) : force_(force) {}

  void write(const fs::path& path, std::string_view text, bool secret = false) {
    write_bytes(path, std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()),
                                               text.size()),
                secret);
  }
  void write_bytes(const fs::path& path, std::span<const uint8_t> data, bool secret = false) {
    check(path);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    proofsys::write_file(path, data);
    if (secret) {
      fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write,
                      fs::perm_options::replace);
    }
    paths_.push_back(path.string());
  }
  void save_setup(const fs::path& dir, const proofsys::SetupArtifacts& setup) {
    for (const char* name : {"proving.key", "verifying.key", "verifying_key.json"}) check(dir / name);
    proofsys::save_setup(dir, setup);
    paths_.push_back(dir.string());
  }
  void check(const fs::path& path) const {
    if (!force_ && fs::exists(path)) {
      throw UsageError(path.string() + " already exists (pass --force to overwrite)");
    }
  }
  int finish() const {
    std::cout << claims::dump_canonical({{"status", "ok"}, {"outputs", paths_}});
    return kOk;
  }

 private:
  bool force_;
  std::vector<std::string> paths_;
};

std::string read_text(const fs::path& path) {
  const Bytes b = proofsys::read_file(path);
  return std::string(b.begin(), b.end());
}

std::array<uint8_t, sigchain::kSeedBytes> read_seed(const fs::path& path) {
  const Bytes b = proofsys::read_file(path);
  if (b.size() != sigchain::kSeedBytes) {
    throw SchemaViolation(path.string(), "seed file must hold exactly 32 bytes, found " +
                                             std::to_string(b.size()));
  }
  std::array<uint8_t, sigchain::kSeedBytes> seed{};
  std::copy(b.begin(), b.end(), seed.begin());
  return seed;
}

Bytes optional_seed(const std::string& path) {
  if (path.empty()) return {};
  const auto s = read_seed(path);
  return Bytes(s.begin(), s.end());
}

Role role_arg(const std::string& name) {
  auto r = sigchain::parse_role(name);
  if (!r) throw UsageError("unknown role '" + name + "'");
  return *r;
}

fs::path setup_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kSetupEnv); env != nullptr && *env != '\0') return env;
  throw UsageError(std::string("no setup directory: pass --setup or set ") + kSetupEnv);
}

// Binary artifact, or the JSON export of a Groth16 verifying key.
Bytes load_verifying_key(const std::string& vk_flag, const std::string& setup_flag) {
  if (vk_flag.empty()) return proofsys::read_file(setup_dir(setup_flag) / "verifying.key");
  const Bytes raw = proofsys::read_file(vk_flag);
  if (!raw.empty() && raw.front() == '{') {
    return proofsys::verifying_key_from_json(std::string(raw.begin(), raw.end()));
  }
  return raw;
}

sigchain::EdwardsPoint anchor(const std::string& path, Role expected) {
  const auto doc = claims::public_key_from_json(read_text(path));
  if (doc.role != expected) {
    std::cerr << "warning: " << path << " holds a " << sigchain::role_name(doc.role)
              << " key, used as the " << sigchain::role_name(expected) << " anchor\n";
  }
  return doc.public_key;
}

int report(const claims::VerificationReport& r) {
  std::cout << claims::to_json(r);
  std::cerr << r.summary << "\n";
  return r.accepted ? kOk : kReject;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnallocatedVariable:
    case ErrorCode::kLengthMismatch:
      return kInternal;
    default:
      return kMalformed;
  }
}

void diagnose(int exit_code, std::string_view error, std::string_view message) {
  std::cerr << Json({{"error", error}, {"message", message}, {"exit_code", exit_code}}).dump()
            << "\n";
}

struct Options {
  bool force = false;
  std::string role, seed_file, out, key, subject, issuer, anchor, reading, intensity, input,
      setup, bundle, ca_m, ca_es, vk, table, aggregate, backend = "groth16-bn254";
  std::string manufacturer_cert, meter_cert, supplier_cert, datacentre, customer, share,
      customer_emission, meter_id, region, consumption, carbon_intensity;
  std::vector<std::string> certs, usage;
  uint64_t start = 0, end = 0;
  size_t customers = 0;
};

proofsys::BackendKind backend_arg(const std::string& name) {
  try {
    return proofsys::parse_backend(name);
  } catch (const Error&) {
    throw UsageError("unknown backend '" + name + "'");
  }
}

int cmd_keygen(const Options& o) {
  Outputs out(o.force);
  const auto key = sigchain::keygen(role_arg(o.role), read_seed(o.seed_file));
  out.write(o.out, claims::key_to_json(key), true);
  return out.finish();
}

int cmd_pubkey(const Options& o) {
  Outputs out(o.force);
  const auto key = claims::key_from_json(read_text(o.key));
  out.write(o.out, claims::public_key_to_json({key.role, key.public_key}));
  return out.finish();
}

int cmd_cert_issue(const Options& o) {
  Outputs out(o.force);
  const auto issuer = claims::key_from_json(read_text(o.issuer));
  const auto subject = claims::public_key_from_json(read_text(o.subject));
  const Role role = role_arg(o.role);
  if (subject.role != role) {
    throw Error(ErrorCode::kRoleViolation, "subject key belongs to role " +
                                               std::string(sigchain::role_name(subject.role)));
  }
  out.write(o.out, claims::certificate_to_json(
                       sigchain::issue_certificate(issuer, subject.public_key, role)));
  return out.finish();
}

int cmd_verify_chain(const Options& o) {
  if (o.reading.empty() == o.intensity.empty()) {
    throw UsageError("pass exactly one of --reading or --intensity");
  }
  const auto anchor_pk = claims::public_key_from_json(read_text(o.anchor)).public_key;
  std::vector<sigchain::Certificate> chain;
  for (const auto& c : o.certs) chain.push_back(claims::certificate_from_json(read_text(c)));
  sigchain::LeafStatement leaf;
  sigchain::Signature sig;
  if (!o.reading.empty()) {
    const auto r = claims::reading_from_json(read_text(o.reading));
    leaf = {sigchain::DomainTag::kMeterReading,
            sigchain::meter_reading_message(r.meter_id, r.period, r.total_consumption)};
    sig = r.signature;
  } else {
    const auto i = claims::intensity_from_json(read_text(o.intensity));
    leaf = {sigchain::DomainTag::kIntensity,
            sigchain::intensity_message(i.region_id, i.period, i.carbon_intensity)};
    sig = i.signature;
  }
  const auto verdict = sigchain::verify_chain(anchor_pk, chain, sig, leaf);
  Json doc = claims::new_document("carbonzk-chain-report");
  doc["verdict"] = verdict.accepted ? "accept" : "reject";
  if (!verdict.accepted) {
    doc["failing_link"] = verdict.failing_link;
    doc["reason"] = verdict.reason;
  }
  std::cout << claims::dump_canonical(doc);
  if (!verdict.accepted) {
    std::cerr << "chain rejected at link " << verdict.failing_link << ": " << verdict.reason
              << "\n";
  }
  return verdict.accepted ? kOk : kReject;
}

quantities::ReportingPeriod period_args(const Options& o) {
  const quantities::ReportingPeriod p{o.start, o.end};
  if (auto problem = quantities::check_bounds(p)) throw Error(ErrorCode::kOutOfRange, *problem);
  return p;
}

int cmd_sign_reading(const Options& o) {
  Outputs out(o.force);
  const auto meter = claims::key_from_json(read_text(o.key));
  if (meter.role != Role::kMeter) throw Error(ErrorCode::kRoleViolation, "not a meter key");
  const auto period = period_args(o);
  const auto x = quantities::parse_energy(o.consumption);
  if (auto problem = quantities::check_bounds(x)) throw Error(ErrorCode::kOutOfRange, *problem);
  const Fr meter_id = sigchain::identity_id(o.meter_id);
  const claims::SignedReading reading{meter_id, period, x,
                                      sigchain::sign_meter_reading(meter, meter_id, period, x)};
  out.write(o.out, claims::reading_to_json(reading));
  return out.finish();
}

int cmd_sign_intensity(const Options& o) {
  Outputs out(o.force);
  const auto supplier = claims::key_from_json(read_text(o.key));
  if (supplier.role != Role::kSupplier) {
    throw Error(ErrorCode::kRoleViolation, "not a supplier key");
  }
  const auto period = period_args(o);
  const auto i = quantities::parse_intensity(o.carbon_intensity);
  if (auto problem = quantities::check_bounds(i)) throw Error(ErrorCode::kOutOfRange, *problem);
  const Fr region_id = sigchain::identity_id(o.region);
  const claims::SignedIntensity intensity{region_id, period, i,
                                          sigchain::sign_intensity(supplier, region_id, period, i)};
  out.write(o.out, claims::intensity_to_json(intensity));
  return out.finish();
}

int cmd_claim_assemble(const Options& o) {
  Outputs out(o.force);
  const auto reading = claims::reading_from_json(read_text(o.reading));
  const auto intensity = claims::intensity_from_json(read_text(o.intensity));
  if (reading.period != intensity.period) {
    throw SchemaViolation(o.intensity, "intensity period differs from the meter reading period");
  }
  circuit::ClaimWitnessInput parts;
  parts.total_consumption = reading.total_consumption;
  parts.meter_id = reading.meter_id;
  parts.reading_signature = reading.signature;
  parts.carbon_intensity = intensity.carbon_intensity;
  parts.region_id = intensity.region_id;
  parts.intensity_signature = intensity.signature;
  parts.period = reading.period;
  parts.datacentre_id = sigchain::identity_id(o.datacentre);
  parts.customer_id = sigchain::identity_id(o.customer);
  parts.ca_m_pk = claims::public_key_from_json(read_text(o.ca_m)).public_key;
  parts.ca_es_pk = claims::public_key_from_json(read_text(o.ca_es)).public_key;
  parts.manufacturer_cert = claims::certificate_from_json(read_text(o.manufacturer_cert));
  parts.meter_cert = claims::certificate_from_json(read_text(o.meter_cert));
  parts.supplier_cert = claims::certificate_from_json(read_text(o.supplier_cert));
  if (o.share.empty() == o.table.empty()) throw UsageError("pass exactly one of --share or --shares");
  if (!o.share.empty()) {
    parts.customer_share = quantities::parse_share(o.share);
  } else {
    const auto table = claims::share_table_from_json(read_text(o.table));
    const auto entry = table.find(*parts.customer_id);
    if (!entry) throw IncompleteInput("customer share (customer not in the share table)");
    parts.customer_share = entry->share;
  }
  if (!o.customer_emission.empty()) {
    parts.customer_emission = quantities::EmissionsQuantity{
        quantities::parse_scaled(o.customer_emission, quantities::QuantityKind::kEmissions)};
  }
  const auto input = claims::assemble_prover_input(parts);
  out.write(o.out, claims::to_json(input), true);
  std::cerr << "customer emission " << quantities::format_quantity(input.customer_emission)
            << " kgCO2e\n";
  return out.finish();
}

int cmd_claim_setup(const Options& o) {
  Outputs out(o.force);
  const auto backend = proofsys::make_backend(backend_arg(o.backend));
  const Bytes seed = optional_seed(o.seed_file);
  std::cerr << "running single-party development setup (insecure_dev_setup)\n";
  out.save_setup(setup_dir(o.out), backend->setup(claims::claim_circuit(), seed));
  return out.finish();
}

int cmd_claim_prove(const Options& o) {
  Outputs out(o.force);
  out.check(o.out);
  const auto input = claims::prover_input_from_json(read_text(o.input));
  const auto setup = proofsys::load_setup(setup_dir(o.setup));
  const auto backend = proofsys::make_backend(setup.backend());
  const auto bundle = claims::build_and_prove(input, *backend, setup, optional_seed(o.seed_file));
  out.write(o.out, claims::to_json(bundle));
  return out.finish();
}

int cmd_claim_verify(const Options& o) {
  const auto bundle = claims::bundle_from_json(read_text(o.bundle));
  const claims::TrustAnchors anchors{anchor(o.ca_m, Role::kCaM), anchor(o.ca_es, Role::kCaEs)};
  return report(claims::verify_claim(bundle, anchors, load_verifying_key(o.vk, o.setup)));
}

int cmd_shares_table(const Options& o) {
  Outputs out(o.force);
  std::vector<claims::ShareTable::Usage> usage;
  for (const auto& u : o.usage) {
    const auto eq = u.find('=');
    if (eq == std::string::npos) throw UsageError("--usage expects customer=amount");
    uint64_t amount = 0;
    try {
      amount = std::stoull(u.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--usage amount must be a non-negative integer");
    }
    usage.push_back({sigchain::identity_id(u.substr(0, eq)), amount});
  }
  Bytes seed = optional_seed(o.seed_file);
  if (seed.empty()) seed = os_random_bytes(32);
  const auto table = claims::ShareTable::from_usage(sigchain::identity_id(o.datacentre),
                                                    period_args(o), usage, seed);
  out.write(o.out, claims::to_json(table), true);
  return out.finish();
}

int cmd_shares_setup(const Options& o) {
  Outputs out(o.force);
  if (o.customers == 0) throw UsageError("--customers must be at least 1");
  const auto backend = proofsys::make_backend(backend_arg(o.backend));
  out.save_setup(o.out, backend->setup(claims::completeness_circuit(o.customers),
                                       optional_seed(o.seed_file)));
  return out.finish();
}

int cmd_shares_prove(const Options& o) {
  Outputs out(o.force);
  out.check(o.out);
  const auto table = claims::share_table_from_json(read_text(o.table));
  const auto setup = proofsys::load_setup(o.setup);
  const auto backend = proofsys::make_backend(setup.backend());
  out.write(o.out, claims::to_json(claims::prove_completeness(table, *backend, setup,
                                                              optional_seed(o.seed_file))));
  return out.finish();
}

int cmd_shares_verify(const Options& o) {
  const auto aggregate = claims::aggregate_from_json(read_text(o.aggregate));
  Bytes vk = o.vk.empty() ? proofsys::read_file(fs::path(o.setup) / "verifying.key")
                          : load_verifying_key(o.vk, "");
  return report(claims::verify_completeness(aggregate, vk));
}

Bytes derived_seed(std::span<const uint8_t> seed, std::string_view label) {
  Bytes material(seed.begin(), seed.end());
  material.insert(material.end(), label.begin(), label.end());
  const Digest d = sha256(material);
  return Bytes(d.begin(), d.end());
}

int cmd_demo(const Options& o) {
  Outputs out(o.force);
  const fs::path dir = o.out;
  Bytes seed = optional_seed(o.seed_file);
  if (seed.empty()) seed = claims::default_demo_seed();
  const auto u = claims::make_demo_universe(seed);

  const std::pair<const sigchain::KeyPair*, const char*> keys[] = {
      {&u.ca_m, "ca-m"}, {&u.ca_es, "ca-es"}, {&u.manufacturer, "manufacturer"},
      {&u.meter, "meter"}, {&u.supplier, "supplier"}};
  for (const auto& [key, name] : keys) {
    out.write(dir / "keys" / (std::string(name) + ".key.json"), claims::key_to_json(*key), true);
    out.write(dir / "keys" / (std::string(name) + ".pub.json"),
              claims::public_key_to_json({key->role, key->public_key}));
  }
  out.write(dir / "certs" / "manufacturer.cert.json",
            claims::certificate_to_json(u.manufacturer_cert));
  out.write(dir / "certs" / "meter.cert.json", claims::certificate_to_json(u.meter_cert));
  out.write(dir / "certs" / "supplier.cert.json", claims::certificate_to_json(u.supplier_cert));
  out.write(dir / "reading.json", claims::reading_to_json(u.reading));
  out.write(dir / "intensity.json", claims::intensity_to_json(u.intensity));
  out.write(dir / (u.customer_name + ".prover.json"), claims::to_json(u.prover_input), true);
  out.write(dir / (u.datacentre_name + ".shares.json"), claims::to_json(u.shares), true);

  const auto backend = proofsys::make_backend(backend_arg(o.backend));
  std::cerr << "running claim setup (" << claims::claim_circuit().num_constraints()
            << " constraints)\n";
  const auto claim_setup =
      backend->setup(claims::claim_circuit(), derived_seed(seed, "/claim-setup"));
  out.save_setup(dir / "setup" / "claim", claim_setup);
  const auto bundle = claims::build_and_prove(u.prover_input, *backend, claim_setup,
                                              derived_seed(seed, "/claim-proof"));
  out.write(dir / (u.customer_name + ".claim.json"), claims::to_json(bundle));

  const size_t n = u.shares.entries().size();
  const auto shares_setup =
      backend->setup(claims::completeness_circuit(n), derived_seed(seed, "/shares-setup"));
  out.save_setup(dir / "setup" / "shares", shares_setup);
  const auto aggregate = claims::prove_completeness(u.shares, *backend, shares_setup,
                                                    derived_seed(seed, "/shares-proof"));
  out.write(dir / (u.datacentre_name + ".agg.json"), claims::to_json(aggregate));
  std::cerr << "demo universe written to " << dir.string() << "\n";
  return out.finish();
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"carbonzk: zero-knowledge proofs of data-centre carbon emission claims"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
    cmd->callback([&action, fn] { action = fn; });
  };
  auto force = [&](CLI::App* cmd) { cmd->add_flag("--force", o.force, "Overwrite outputs"); };
  auto period = [&](CLI::App* cmd) {
    cmd->add_option("--start", o.start, "Period start (Unix seconds)")->required();
    cmd->add_option("--end", o.end, "Period end (Unix seconds)")->required();
  };

  auto* keygen = app.add_subcommand("keygen", "Derive a key pair from a 32-byte seed file");
  keygen->add_option("--role", o.role, "ca-m|ca-es|manufacturer|supplier|meter")->required();
  keygen->add_option("--seed-file", o.seed_file, "32-byte seed")->required();
  keygen->add_option("--out", o.out, "Key file to write")->required();
  force(keygen);
  bind(keygen, cmd_keygen);

  auto* pubkey = app.add_subcommand("pubkey", "Extract the public key of a key file");
  pubkey->add_option("--key", o.key)->required();
  pubkey->add_option("--out", o.out)->required();
  force(pubkey);
  bind(pubkey, cmd_pubkey);

  auto* cert = app.add_subcommand("cert", "Certificates");
  cert->require_subcommand(1);
  auto* issue = cert->add_subcommand("issue", "Certify a subject public key");
  issue->add_option("--issuer", o.issuer, "Issuer key file")->required();
  issue->add_option("--subject", o.subject, "Subject public-key file")->required();
  issue->add_option("--role", o.role, "Subject role")->required();
  issue->add_option("--out", o.out)->required();
  force(issue);
  bind(issue, cmd_cert_issue);
  auto* chain = cert->add_subcommand("verify-chain", "Verify a chain down to a signed leaf");
  chain->add_option("--anchor", o.anchor, "Trust-anchor public-key file")->required();
  chain->add_option("--cert", o.certs, "Certificate files, anchor side first")->required();
  chain->add_option("--reading", o.reading, "Signed meter reading");
  chain->add_option("--intensity", o.intensity, "Signed carbon intensity");
  bind(chain, cmd_verify_chain);

  auto* meter = app.add_subcommand("meter", "Smart-meter operations");
  meter->require_subcommand(1);
  auto* sign_reading = meter->add_subcommand("sign-reading", "Sign a consumption reading");
  sign_reading->add_option("--key", o.key, "Meter key file")->required();
  sign_reading->add_option("--meter-id", o.meter_id, "Meter identifier")->required();
  sign_reading->add_option("--consumption", o.consumption, "Energy in kWh, e.g. 48213.250")
      ->required();
  period(sign_reading);
  sign_reading->add_option("--out", o.out)->required();
  force(sign_reading);
  bind(sign_reading, cmd_sign_reading);

  auto* supplier = app.add_subcommand("supplier", "Electricity-supplier operations");
  supplier->require_subcommand(1);
  auto* sign_intensity = supplier->add_subcommand("sign-intensity", "Sign a carbon intensity");
  sign_intensity->add_option("--key", o.key, "Supplier key file")->required();
  sign_intensity->add_option("--region", o.region, "Grid region identifier")->required();
  sign_intensity->add_option("--intensity", o.carbon_intensity, "kgCO2e/kWh, e.g. 0.233")
      ->required();
  period(sign_intensity);
  sign_intensity->add_option("--out", o.out)->required();
  force(sign_intensity);
  bind(sign_intensity, cmd_sign_intensity);

  auto* claim = app.add_subcommand("claim", "Emission claims");
  claim->require_subcommand(1);
  auto* assemble = claim->add_subcommand("assemble", "Collect and check the prover input");
  assemble->add_option("--manufacturer-cert", o.manufacturer_cert)->required();
  assemble->add_option("--meter-cert", o.meter_cert)->required();
  assemble->add_option("--supplier-cert", o.supplier_cert)->required();
  assemble->add_option("--reading", o.reading)->required();
  assemble->add_option("--intensity", o.intensity)->required();
  assemble->add_option("--ca-m", o.ca_m, "CA-M public-key file")->required();
  assemble->add_option("--ca-es", o.ca_es, "CA-ES public-key file")->required();
  assemble->add_option("--datacentre", o.datacentre, "Datacentre identifier")->required();
  assemble->add_option("--customer", o.customer, "Customer identifier")->required();
  assemble->add_option("--share", o.share, "Customer share as a fraction, e.g. 0.435");
  assemble->add_option("--shares", o.table, "Share table holding the customer's share");
  assemble->add_option("--customer-emission", o.customer_emission,
                       "Expected kgCO2e (cross-checked, never trusted)");
  assemble->add_option("--out", o.out)->required();
  force(assemble);
  bind(assemble, cmd_claim_assemble);
  auto* claim_setup = claim->add_subcommand("setup", "Development trusted setup");
  claim_setup->add_option("--out", o.out, std::string("Directory (default $") + kSetupEnv + ")");
  claim_setup->add_option("--seed-file", o.seed_file, "32-byte setup randomness");
  claim_setup->add_option("--backend", o.backend, "groth16-bn254 (default) or oracle");
  force(claim_setup);
  bind(claim_setup, cmd_claim_setup);
  auto* prove = claim->add_subcommand("prove", "Prove a claim bundle");
  prove->add_option("--input", o.input, "Prover input (.prover.json)")->required();
  prove->add_option("--setup", o.setup, std::string("Setup directory (default $") + kSetupEnv + ")");
  prove->add_option("--seed-file", o.seed_file, "Fixed proof randomness (reproducible runs)");
  prove->add_option("--out", o.out, "Bundle (.claim.json)")->required();
  force(prove);
  bind(prove, cmd_claim_prove);
  auto* verify = claim->add_subcommand("verify", "Verify a claim bundle");
  verify->add_option("--bundle", o.bundle)->required();
  verify->add_option("--ca-m", o.ca_m, "Trusted CA-M public-key file")->required();
  verify->add_option("--ca-es", o.ca_es, "Trusted CA-ES public-key file")->required();
  verify->add_option("--setup", o.setup, std::string("Setup directory (default $") + kSetupEnv + ")");
  verify->add_option("--verifying-key", o.vk, "Verifying key (binary or JSON)");
  bind(verify, cmd_claim_verify);

  auto* shares = app.add_subcommand("shares", "Customer-share completeness");
  shares->require_subcommand(1);
  auto* table = shares->add_subcommand("table", "Allocate shares from usage");
  table->add_option("--datacentre", o.datacentre)->required();
  table->add_option("--usage", o.usage, "customer=amount, repeatable")->required();
  period(table);
  table->add_option("--seed-file", o.seed_file, "32-byte blinding seed (default: fresh)");
  table->add_option("--out", o.out, "Share table (.shares.json)")->required();
  force(table);
  bind(table, cmd_shares_table);
  auto* shares_setup = shares->add_subcommand("setup", "Setup for an n-customer table");
  shares_setup->add_option("--customers", o.customers)->required();
  shares_setup->add_option("--out", o.out)->required();
  shares_setup->add_option("--seed-file", o.seed_file);
  shares_setup->add_option("--backend", o.backend);
  force(shares_setup);
  bind(shares_setup, cmd_shares_setup);
  auto* shares_prove = shares->add_subcommand("prove", "Prove the shares sum to 100%");
  shares_prove->add_option("--table", o.table)->required();
  shares_prove->add_option("--setup", o.setup)->required();
  shares_prove->add_option("--seed-file", o.seed_file);
  shares_prove->add_option("--out", o.out, "Aggregate (.agg.json)")->required();
  force(shares_prove);
  bind(shares_prove, cmd_shares_prove);
  auto* shares_verify = shares->add_subcommand("verify", "Verify a completeness aggregate");
  shares_verify->add_option("--aggregate", o.aggregate)->required();
  auto* sv_setup = shares_verify->add_option("--setup", o.setup);
  auto* sv_vk = shares_verify->add_option("--verifying-key", o.vk);
  sv_setup->excludes(sv_vk);
  bind(shares_verify, cmd_shares_verify);

  auto* demo = app.add_subcommand("demo", "Generate the full demo universe");
  demo->add_option("--out", o.out)->required();
  demo->add_option("--seed-file", o.seed_file, "32-byte universe seed");
  demo->add_option("--backend", o.backend);
  force(demo);
  bind(demo, cmd_demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose(kUsage, "UsageError", e.what());
    return kUsage;
  }
  try {
    if (shares_verify->parsed() && o.setup.empty() && o.vk.empty()) {
      throw UsageError("pass --setup or --verifying-key");
    }
    return action(o);
  } catch (const UsageError& e) {
    diagnose(kUsage, "UsageError", e.what());
    return kUsage;
  } catch (const Error& e) {
    const int code = exit_for(e.code());
    diagnose(code, error_code_name(e.code()), e.what());
    return code;
  } catch (const std::invalid_argument& e) {
    diagnose(kMalformed, "InvalidArgument", e.what());
    return kMalformed;
  } catch (const std::exception& e) {
    diagnose(kInternal, "InternalError", e.what());
    return kInternal;
  }
}

}  // namespace carbonzk::cli

int main(int argc, char** argv) { return carbonzk::cli::run(argc, argv); }
