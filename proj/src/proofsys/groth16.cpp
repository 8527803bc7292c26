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

#include "carbonzk/proofsys/groth16.hpp"

#include <algorithm>

#include "json.hpp"

#include "carbonzk/ec/msm.hpp"
#include "carbonzk/poly/domain.hpp"
#include "carbonzk/util/error.hpp"

namespace carbonzk::proofsys {
namespace {

using bn254::G1;
using bn254::G1Affine;
using bn254::G2;
using bn254::G2Affine;
using circuit::ConstraintSystem;
using circuit::LC;

Error malformed(const std::string& what) { return Error(ErrorCode::kMalformedProof, what); }

void put_g1(ByteWriter& w, const G1Affine& p) { w.raw(bn254::encode_g1(p)); }
void put_g2(ByteWriter& w, const G2Affine& p) { w.raw(bn254::encode_g2(p)); }

G1Affine get_g1(ByteReader& r) {
  auto raw = r.raw(bn254::kG1Bytes);
  auto p = bn254::decode_g1(std::span<const uint8_t, bn254::kG1Bytes>(raw.data(), raw.size()));
  if (!p) throw malformed("invalid G1 point");
  return *p;
}

G2Affine get_g2(ByteReader& r, bool check_subgroup) {
  auto raw = r.raw(bn254::kG2Bytes);
  auto p = bn254::decode_g2(std::span<const uint8_t, bn254::kG2Bytes>(raw.data(), raw.size()),
                            check_subgroup);
  if (!p) throw malformed("invalid G2 point");
  return *p;
}

template <typename Point>
void put_points(ByteWriter& w, const std::vector<Point>& points) {
  w.u64(points.size());
  for (const auto& p : points) {
    if constexpr (std::is_same_v<Point, G1Affine>) {
      put_g1(w, p);
    } else {
      put_g2(w, p);
    }
  }
}

std::vector<G1Affine> get_g1_points(ByteReader& r) {
  const uint64_t n = r.u64();
  if (n > r.remaining() / bn254::kG1Bytes) throw malformed("truncated point list");
  std::vector<G1Affine> out(n);
  for (auto& p : out) p = get_g1(r);
  return out;
}

std::vector<G2Affine> get_g2_points(ByteReader& r, bool check_subgroup) {
  const uint64_t n = r.u64();
  if (n > r.remaining() / bn254::kG2Bytes) throw malformed("truncated point list");
  std::vector<G2Affine> out(n);
  for (auto& p : out) p = get_g2(r, check_subgroup);
  return out;
}

// Groth16 needs the constant and the public inputs at indices 0..l.
std::vector<uint32_t> public_first_order(const ConstraintSystem& cs) {
  std::vector<uint32_t> perm(cs.num_variables, 0);
  std::vector<bool> is_pub(cs.num_variables, false);
  uint32_t next = 1;
  for (uint32_t idx : cs.public_inputs) {
    perm[idx] = next++;
    is_pub[idx] = true;
  }
  for (uint32_t i = 1; i < cs.num_variables; ++i) {
    if (!is_pub[i]) perm[i] = next++;
  }
  return perm;
}

// Rows of A, B, C plus one row x_i * 0 = 0 per public input (and the
// constant), which keeps the public polynomials linearly independent.
size_t qap_rows(const ConstraintSystem& cs) {
  return cs.num_constraints() + cs.public_inputs.size() + 1;
}

Fr nonzero_field(ByteStream& rs) {
  for (;;) {
    Fr v = rs.next_field<Fr>();
    if (!v.is_zero()) return v;
  }
}

const Fr& coset_shift() {
  static const Fr kShift = Fr::from_uint(7);
  return kShift;
}

std::vector<U256> canonical(std::span<const Fr> values) {
  std::vector<U256> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) out[i] = values[i].to_canonical();
  return out;
}

Bytes setup_seed(std::span<const uint8_t> randomness) {
  if (!randomness.empty()) return Bytes(randomness.begin(), randomness.end());
  return os_random_bytes(32);
}

}  // namespace

Bytes Groth16VerifyingKey::encode() const {
  ByteWriter w;
  put_g1(w, alpha_g1);
  put_g2(w, beta_g2);
  put_g2(w, gamma_g2);
  put_g2(w, delta_g2);
  put_points(w, ic);
  return w.take();
}

Groth16VerifyingKey Groth16VerifyingKey::decode(std::span<const uint8_t> payload) {
  ByteReader r(payload);
  Groth16VerifyingKey vk;
  vk.alpha_g1 = get_g1(r);
  vk.beta_g2 = get_g2(r, true);
  vk.gamma_g2 = get_g2(r, true);
  vk.delta_g2 = get_g2(r, true);
  vk.ic = get_g1_points(r);
  if (vk.ic.empty()) throw malformed("verifying key without inputs");
  if (!r.done()) throw malformed("trailing bytes in verifying key");
  return vk;
}

Bytes Groth16ProvingKey::encode() const {
  ByteWriter w;
  w.u64(num_variables);
  w.u64(num_public);
  w.u64(domain_size);
  put_g1(w, alpha_g1);
  put_g1(w, beta_g1);
  put_g1(w, delta_g1);
  put_g2(w, beta_g2);
  put_g2(w, delta_g2);
  put_points(w, a_query);
  put_points(w, b_g1_query);
  put_points(w, b_g2_query);
  put_points(w, l_query);
  put_points(w, h_query);
  return w.take();
}

Groth16ProvingKey Groth16ProvingKey::decode(std::span<const uint8_t> payload) {
  ByteReader r(payload);
  Groth16ProvingKey pk;
  pk.num_variables = r.u64();
  pk.num_public = r.u64();
  pk.domain_size = r.u64();
  pk.alpha_g1 = get_g1(r);
  pk.beta_g1 = get_g1(r);
  pk.delta_g1 = get_g1(r);
  // The proving key is bound to the circuit digest and only ever used by
  // the prover, so skip the (slow) G2 subgroup checks here.
  pk.beta_g2 = get_g2(r, false);
  pk.delta_g2 = get_g2(r, false);
  pk.a_query = get_g1_points(r);
  pk.b_g1_query = get_g1_points(r);
  pk.b_g2_query = get_g2_points(r, false);
  pk.l_query = get_g1_points(r);
  pk.h_query = get_g1_points(r);
  if (!r.done()) throw malformed("trailing bytes in proving key");
  const size_t nv = pk.num_variables;
  if (pk.a_query.size() != nv || pk.b_g1_query.size() != nv || pk.b_g2_query.size() != nv ||
      pk.num_public + 1 > nv || pk.l_query.size() != nv - pk.num_public - 1 ||
      pk.domain_size == 0 || pk.h_query.size() != pk.domain_size - 1) {
    throw malformed("inconsistent proving key sizes");
  }
  return pk;
}

SetupArtifacts Groth16Backend::setup(const ConstraintSystem& cs,
                                     std::span<const uint8_t> randomness) const {
  const Bytes seed = setup_seed(randomness);
  ByteStream rs(seed, "carbonzk/groth16/setup");
  const size_t nv = cs.num_variables;
  const size_t np = cs.public_inputs.size();
  const size_t m = cs.num_constraints();
  const EvaluationDomain domain(qap_rows(cs));
  const size_t n = domain.size();

  Fr tau;
  do {
    tau = nonzero_field(rs);
  } while (domain.vanishing_at(tau).is_zero());
  const Fr alpha = nonzero_field(rs), beta = nonzero_field(rs);
  const Fr gamma = nonzero_field(rs), delta = nonzero_field(rs);

  // u_i(tau), v_i(tau), w_i(tau) in public-first order.
  const std::vector<Fr> lagrange = domain.lagrange_at(tau);
  const auto perm = public_first_order(cs);
  std::vector<Fr> u(nv), v(nv), w(nv);
  for (size_t j = 0; j < m; ++j) {
    const auto& row = cs.constraints[j];
    for (const auto& t : row.a.terms()) u[perm[t.index]] += t.coeff * lagrange[j];
    for (const auto& t : row.b.terms()) v[perm[t.index]] += t.coeff * lagrange[j];
    for (const auto& t : row.c.terms()) w[perm[t.index]] += t.coeff * lagrange[j];
  }
  for (size_t i = 0; i <= np; ++i) u[i] += lagrange[m + i];

  const Fr gamma_inv = gamma.inverse(), delta_inv = delta.inverse();
  std::vector<Fr> ic(np + 1), l(nv - np - 1);
  for (size_t i = 0; i < nv; ++i) {
    const Fr k = beta * u[i] + alpha * v[i] + w[i];
    if (i <= np) {
      ic[i] = k * gamma_inv;
    } else {
      l[i - np - 1] = k * delta_inv;
    }
  }
  std::vector<Fr> h(n - 1);
  Fr power = domain.vanishing_at(tau) * delta_inv;
  for (auto& x : h) {
    x = power;
    power *= tau;
  }

  const FixedBaseTable<G1> g1(G1::generator(), 254);
  const FixedBaseTable<G2> g2(G2::generator(), 254);
  auto one_g1 = [&](const Fr& k) { return g1.mul(k.to_canonical()).to_affine(); };
  auto one_g2 = [&](const Fr& k) { return g2.mul(k.to_canonical()).to_affine(); };

  Groth16ProvingKey pk;
  pk.num_variables = nv;
  pk.num_public = np;
  pk.domain_size = n;
  pk.alpha_g1 = one_g1(alpha);
  pk.beta_g1 = one_g1(beta);
  pk.delta_g1 = one_g1(delta);
  pk.beta_g2 = one_g2(beta);
  pk.delta_g2 = one_g2(delta);
  pk.a_query = g1.batch_mul<Fr>(u);
  pk.b_g1_query = g1.batch_mul<Fr>(v);
  pk.b_g2_query = g2.batch_mul<Fr>(v);
  pk.l_query = g1.batch_mul<Fr>(l);
  pk.h_query = g1.batch_mul<Fr>(h);

  Groth16VerifyingKey vk;
  vk.alpha_g1 = pk.alpha_g1;
  vk.beta_g2 = pk.beta_g2;
  vk.gamma_g2 = one_g2(gamma);
  vk.delta_g2 = pk.delta_g2;
  vk.ic = g1.batch_mul<Fr>(ic);

  ArtifactHeader header;
  header.backend = BackendKind::kGroth16;
  header.circuit_digest = cs.digest();
  header.insecure_dev_setup = true;
  header.zero_knowledge = true;

  SetupArtifacts out;
  out.circuit_digest = header.circuit_digest;
  header.kind = ArtifactKind::kProvingKey;
  out.proving_key = encode_artifact(header, pk.encode());
  header.kind = ArtifactKind::kVerifyingKey;
  out.verifying_key = encode_artifact(header, vk.encode());
  return out;
}

Proof Groth16Backend::prove(std::span<const uint8_t> proving_key, const ConstraintSystem& cs,
                            std::span<const Fr> witness,
                            std::span<const uint8_t> randomness) const {
  const auto artifact = decode_artifact(proving_key);
  if (artifact.header.backend != BackendKind::kGroth16 ||
      artifact.header.kind != ArtifactKind::kProvingKey) {
    throw Error(ErrorCode::kKeyMismatch, "not a Groth16 proving key");
  }
  if (artifact.header.circuit_digest != cs.digest()) {
    throw Error(ErrorCode::kKeyMismatch, "proving key was generated for a different circuit");
  }
  const auto sat = circuit::is_satisfied(cs, witness);
  if (!sat) throw UnsatisfiedWitness(sat.failing_constraint);
  const Groth16ProvingKey pk = Groth16ProvingKey::decode(artifact.payload);
  const size_t nv = cs.num_variables;
  const size_t np = cs.public_inputs.size();
  const size_t m = cs.num_constraints();
  if (pk.num_variables != nv || pk.num_public != np) {
    throw Error(ErrorCode::kKeyMismatch, "proving key shape does not match the circuit");
  }

  const auto perm = public_first_order(cs);
  std::vector<Fr> z(nv);
  for (size_t i = 0; i < nv; ++i) z[perm[i]] = witness[i];

  // h(x) = (A(x) B(x) - C(x)) / Z(x), evaluated on a coset.
  const EvaluationDomain domain(qap_rows(cs));
  const size_t n = domain.size();
  if (n != pk.domain_size) throw Error(ErrorCode::kKeyMismatch, "domain size mismatch");
  std::vector<Fr> a(n), b(n), c(n);
  for (size_t j = 0; j < m; ++j) {
    const auto& row = cs.constraints[j];
    a[j] = row.a.evaluate(witness);
    b[j] = row.b.evaluate(witness);
    c[j] = row.c.evaluate(witness);
  }
  for (size_t i = 0; i <= np; ++i) a[m + i] = z[i];
  for (auto* poly : {&a, &b, &c}) {
    domain.ifft(*poly);
    domain.coset_fft(*poly, coset_shift());
  }
  const Fr z_inv = domain.vanishing_at(coset_shift()).inverse();
  for (size_t j = 0; j < n; ++j) a[j] = (a[j] * b[j] - c[j]) * z_inv;
  domain.coset_ifft(a, coset_shift());
  a.resize(n - 1);  // deg h <= n - 2

  const Bytes seed = setup_seed(randomness);
  ByteStream rs(seed, "carbonzk/groth16/prove");
  const Fr r = rs.next_field<Fr>(), s = rs.next_field<Fr>();

  const auto zs = canonical(z);
  const std::span<const U256> zs_span(zs);
  const G1 a_sum = msm<G1>(pk.a_query, zs_span);
  const G1 b1_sum = msm<G1>(pk.b_g1_query, zs_span);
  const G2 b2_sum = msm<G2>(pk.b_g2_query, zs_span);
  const G1 l_sum = msm<G1>(pk.l_query, zs_span.subspan(np + 1));
  const auto hs = canonical(a);
  const G1 h_sum = msm<G1>(pk.h_query, hs);

  const G1 delta1(pk.delta_g1);
  const G1 proof_a = G1(pk.alpha_g1) + a_sum + delta1.mul(r.to_canonical());
  const G1 b1 = G1(pk.beta_g1) + b1_sum + delta1.mul(s.to_canonical());
  const G2 proof_b = G2(pk.beta_g2) + b2_sum + G2(pk.delta_g2).mul(s.to_canonical());
  const G1 proof_c = l_sum + h_sum + proof_a.mul(s.to_canonical()) + b1.mul(r.to_canonical()) -
                     delta1.mul((r * s).to_canonical());

  ByteWriter w;
  put_g1(w, proof_a.to_affine());
  put_g2(w, proof_b.to_affine());
  put_g1(w, proof_c.to_affine());
  return Proof{BackendKind::kGroth16, w.take()};
}

bool Groth16Backend::verify(std::span<const uint8_t> verifying_key,
                            std::span<const Fr> public_inputs, const Proof& proof) const {
  const auto artifact = decode_artifact(verifying_key);
  if (artifact.header.backend != BackendKind::kGroth16 ||
      artifact.header.kind != ArtifactKind::kVerifyingKey) {
    throw malformed("not a Groth16 verifying key");
  }
  if (proof.backend != BackendKind::kGroth16) throw malformed("proof is not a Groth16 proof");
  if (proof.bytes.size() != kGroth16ProofBytes) throw malformed("Groth16 proof has wrong length");
  const Groth16VerifyingKey vk = Groth16VerifyingKey::decode(artifact.payload);
  if (public_inputs.size() + 1 != vk.ic.size()) {
    throw Error(ErrorCode::kLengthMismatch, "expected " + std::to_string(vk.ic.size() - 1) +
                                                " public inputs, got " +
                                                std::to_string(public_inputs.size()));
  }
  ByteReader r(proof.bytes);
  const G1Affine pa = get_g1(r);
  const G2Affine pb = get_g2(r, true);
  const G1Affine pc = get_g1(r);

  G1 acc(vk.ic[0]);
  for (size_t i = 0; i < public_inputs.size(); ++i) {
    acc += G1(vk.ic[i + 1]).mul(public_inputs[i].to_canonical());
  }
  const std::pair<G1Affine, G2Affine> pairs[] = {
      {-pa, pb}, {vk.alpha_g1, vk.beta_g2}, {acc.to_affine(), vk.gamma_g2}, {pc, vk.delta_g2}};
  return bn254::pairing_product_is_one(pairs);
}

namespace {

nlohmann::json g1_json(const G1Affine& p) {
  if (p.infinity) return nullptr;
  return nlohmann::json::array({p.x.to_decimal(), p.y.to_decimal()});
}

nlohmann::json g2_json(const G2Affine& p) {
  if (p.infinity) return nullptr;
  return nlohmann::json::array(
      {nlohmann::json::array({p.x.c0.to_decimal(), p.x.c1.to_decimal()}),
       nlohmann::json::array({p.y.c0.to_decimal(), p.y.c1.to_decimal()})});
}

Fq fq_json(const nlohmann::json& j) { return Fq::from_decimal(j.get<std::string>()); }

G1Affine g1_from_json(const nlohmann::json& j) {
  if (j.is_null()) return G1Affine::identity();
  G1Affine p = G1Affine::from_xy(fq_json(j.at(0)), fq_json(j.at(1)));
  if (!p.is_on_curve()) throw malformed("G1 point not on curve");
  return p;
}

G2Affine g2_from_json(const nlohmann::json& j) {
  if (j.is_null()) return G2Affine::identity();
  G2Affine p = G2Affine::from_xy(Fq2(fq_json(j.at(0).at(0)), fq_json(j.at(0).at(1))),
                                 Fq2(fq_json(j.at(1).at(0)), fq_json(j.at(1).at(1))));
  if (!p.is_on_curve() || !bn254::g2_in_subgroup(p)) throw malformed("invalid G2 point");
  return p;
}

}  // namespace

std::string verifying_key_to_json(std::span<const uint8_t> verifying_key) {
  const auto artifact = decode_artifact(verifying_key);
  if (artifact.header.backend != BackendKind::kGroth16 ||
      artifact.header.kind != ArtifactKind::kVerifyingKey) {
    throw malformed("not a Groth16 verifying key");
  }
  const auto vk = Groth16VerifyingKey::decode(artifact.payload);
  nlohmann::json doc;
  doc["version"] = kArtifactVersion;
  doc["backend"] = backend_name(BackendKind::kGroth16);
  doc["circuit_digest"] = to_hex(artifact.header.circuit_digest);
  doc["insecure_dev_setup"] = artifact.header.insecure_dev_setup;
  doc["alpha_g1"] = g1_json(vk.alpha_g1);
  doc["beta_g2"] = g2_json(vk.beta_g2);
  doc["gamma_g2"] = g2_json(vk.gamma_g2);
  doc["delta_g2"] = g2_json(vk.delta_g2);
  nlohmann::json ic = nlohmann::json::array();
  for (const auto& p : vk.ic) ic.push_back(g1_json(p));
  doc["ic"] = ic;
  return doc.dump(2) + "\n";
}

Bytes verifying_key_from_json(std::string_view json) {
  try {
    const auto doc = nlohmann::json::parse(json);
    if (doc.at("version").get<uint32_t>() != kArtifactVersion ||
        doc.at("backend").get<std::string>() != backend_name(BackendKind::kGroth16)) {
      throw malformed("unsupported verifying key JSON");
    }
    Groth16VerifyingKey vk;
    vk.alpha_g1 = g1_from_json(doc.at("alpha_g1"));
    vk.beta_g2 = g2_from_json(doc.at("beta_g2"));
    vk.gamma_g2 = g2_from_json(doc.at("gamma_g2"));
    vk.delta_g2 = g2_from_json(doc.at("delta_g2"));
    for (const auto& p : doc.at("ic")) vk.ic.push_back(g1_from_json(p));
    ArtifactHeader header;
    header.backend = BackendKind::kGroth16;
    header.kind = ArtifactKind::kVerifyingKey;
    const Bytes digest = from_hex(doc.at("circuit_digest").get<std::string>());
    if (digest.size() != header.circuit_digest.size()) throw malformed("bad circuit digest");
    std::copy(digest.begin(), digest.end(), header.circuit_digest.begin());
    header.insecure_dev_setup = doc.at("insecure_dev_setup").get<bool>();
    return encode_artifact(header, vk.encode());
  } catch (const nlohmann::json::exception& e) {
    throw malformed(std::string("verifying key JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw malformed(std::string("verifying key JSON: ") + e.what());
  }
}

}  // namespace carbonzk::proofsys
