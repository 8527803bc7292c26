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

#include "carbonzk/circuit/r1cs.hpp"

#include <algorithm>

#include "json.hpp"

#include "carbonzk/util/error.hpp"

namespace carbonzk::circuit {

LinearCombination LinearCombination::constant(const Fr& c) {
  LinearCombination lc;
  if (!c.is_zero()) lc.terms_.push_back({0, c});
  return lc;
}

LinearCombination LinearCombination::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.index < y.index; });
  LinearCombination lc;
  for (const Term& t : terms) {
    if (!lc.terms_.empty() && lc.terms_.back().index == t.index) {
      lc.terms_.back().coeff += t.coeff;
      if (lc.terms_.back().coeff.is_zero()) lc.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      lc.terms_.push_back(t);
    }
  }
  return lc;
}

Fr LinearCombination::constant_value() const {
  return terms_.empty() ? Fr::zero() : terms_[0].coeff;
}

Fr LinearCombination::evaluate(std::span<const Fr> assignment) const {
  Fr acc = Fr::zero();
  for (const Term& t : terms_) acc += t.coeff * assignment[t.index];
  return acc;
}

LinearCombination LinearCombination::operator+(const LinearCombination& o) const {
  LinearCombination out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].index < o.terms_[j].index)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].index < terms_[i].index) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Fr sum = terms_[i].coeff + o.terms_[j].coeff;
      if (!sum.is_zero()) out.terms_.push_back({terms_[i].index, sum});
      ++i;
      ++j;
    }
  }
  return out;
}

LinearCombination LinearCombination::operator*(const Fr& k) const {
  LinearCombination out;
  if (k.is_zero()) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff *= k;
  return out;
}

bool ConstraintSystem::is_public(uint32_t index) const {
  return std::find(public_inputs.begin(), public_inputs.end(), index) != public_inputs.end();
}

namespace {

void write_lc(ByteWriter& w, const LC& lc) {
  w.u32(static_cast<uint32_t>(lc.terms().size()));
  for (const Term& t : lc.terms()) {
    w.u32(t.index);
    w.raw(t.coeff.to_bytes_be());
  }
}

nlohmann::json lc_json(const LC& lc) {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : lc.terms()) out.push_back({t.index, t.coeff.to_decimal()});
  return out;
}

}  // namespace

Bytes ConstraintSystem::canonical_bytes() const {
  ByteWriter w;
  w.raw(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>("carbonzk-r1cs"), 13));
  w.blob(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(name.data()), name.size()));
  w.u32(layout_version);
  w.u64(num_variables);
  w.u32(static_cast<uint32_t>(public_inputs.size()));
  for (uint32_t idx : public_inputs) w.u32(idx);
  w.u64(constraints.size());
  for (const Constraint& c : constraints) {
    write_lc(w, c.a);
    write_lc(w, c.b);
    write_lc(w, c.c);
  }
  return w.take();
}

ConstraintSystem ConstraintSystem::from_canonical_bytes(std::span<const uint8_t> bytes) {
  auto malformed = [](const char* what) {
    return Error(ErrorCode::kMalformedProof, std::string("constraint system: ") + what);
  };
  ByteReader r(bytes);
  auto magic = r.raw(13);
  if (!std::equal(magic.begin(), magic.end(), "carbonzk-r1cs")) throw malformed("bad magic");
  ConstraintSystem cs;
  auto name = r.blob();
  cs.name.assign(name.begin(), name.end());
  cs.layout_version = r.u32();
  cs.num_variables = r.u64();
  if (cs.num_variables == 0 || cs.num_variables > bytes.size()) throw malformed("variable count");
  const uint32_t num_public = r.u32();
  if (num_public > r.remaining() / 4) throw malformed("public input count");
  for (uint32_t i = 0; i < num_public; ++i) {
    const uint32_t idx = r.u32();
    if (idx == 0 || idx >= cs.num_variables) throw malformed("public input index");
    cs.public_inputs.push_back(idx);
    cs.public_names.push_back("");
  }
  const uint64_t rows = r.u64();
  if (rows > r.remaining() / 12) throw malformed("constraint count");
  auto read_lc = [&] {
    const uint32_t n = r.u32();
    if (n > r.remaining() / 36) throw malformed("term count");
    std::vector<Term> terms;
    terms.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
      const uint32_t idx = r.u32();
      if (idx >= cs.num_variables) throw malformed("term index");
      std::array<uint8_t, 32> raw{};
      auto coeff = r.raw(32);
      std::copy(coeff.begin(), coeff.end(), raw.begin());
      auto value = Fr::try_from_canonical(U256::from_bytes_be(raw));
      if (!value) throw malformed("coefficient");
      terms.push_back({idx, *value});
    }
    return LC::from_terms(std::move(terms));
  };
  cs.constraints.reserve(rows);
  for (uint64_t i = 0; i < rows; ++i) {
    Constraint c;
    c.a = read_lc();
    c.b = read_lc();
    c.c = read_lc();
    cs.constraints.push_back(std::move(c));
  }
  if (!r.done()) throw malformed("trailing bytes");
  return cs;
}

Digest ConstraintSystem::digest() const { return sha256(canonical_bytes()); }

std::string ConstraintSystem::to_debug_json() const {
  nlohmann::json layout;
  layout["name"] = name;
  layout["version"] = layout_version;
  layout["num_variables"] = num_variables;
  layout["num_constraints"] = constraints.size();
  nlohmann::json pub = nlohmann::json::array();
  for (size_t i = 0; i < public_inputs.size(); ++i) {
    pub.push_back({{"index", public_inputs[i]}, {"name", public_names[i]}});
  }
  layout["public"] = pub;
  nlohmann::json rows = nlohmann::json::array();
  for (const Constraint& c : constraints) {
    rows.push_back({{"a", lc_json(c.a)}, {"b", lc_json(c.b)}, {"c", lc_json(c.c)}});
  }
  nlohmann::json doc;
  doc["layout"] = layout;
  doc["constraints"] = rows;
  return doc.dump(1) + "\n";
}

std::string ConstraintSystem::section_of(size_t constraint) const {
  std::string best;
  size_t best_width = SIZE_MAX;
  for (const Section& s : sections) {
    if (constraint >= s.begin && constraint < s.end && s.end - s.begin < best_width) {
      best = s.name;
      best_width = s.end - s.begin;
    }
  }
  return best;
}

SatisfactionResult is_satisfied(const ConstraintSystem& cs, std::span<const Fr> witness) {
  if (witness.size() != cs.num_variables) {
    throw Error(ErrorCode::kLengthMismatch, "witness has " + std::to_string(witness.size()) +
                                                " values for " + std::to_string(cs.num_variables) +
                                                " variables");
  }
  if (!witness[0].is_one()) throw Error(ErrorCode::kLengthMismatch, "constant slot is not one");
  for (size_t i = 0; i < cs.constraints.size(); ++i) {
    const Constraint& c = cs.constraints[i];
    if (c.a.evaluate(witness) * c.b.evaluate(witness) != c.c.evaluate(witness)) {
      return {false, i};
    }
  }
  return {true, 0};
}

std::vector<Fr> public_slice(const ConstraintSystem& cs, std::span<const Fr> witness) {
  std::vector<Fr> out;
  out.reserve(cs.public_inputs.size());
  for (uint32_t idx : cs.public_inputs) out.push_back(witness[idx]);
  return out;
}

CircuitBuilder::CircuitBuilder(std::string name, uint32_t layout_version) {
  cs_.name = std::move(name);
  cs_.layout_version = layout_version;
  values_.push_back(Fr::one());
}

Variable CircuitBuilder::alloc(Visibility visibility, const Fr& value, std::string public_name) {
  const Variable v{static_cast<uint32_t>(values_.size())};
  values_.push_back(value);
  cs_.num_variables = values_.size();
  if (visibility == Visibility::kPublic) {
    cs_.public_inputs.push_back(v.index);
    cs_.public_names.push_back(std::move(public_name));
  }
  return v;
}

void CircuitBuilder::enforce(const LC& a, const LC& b, const LC& c) {
  for (const LC* lc : {&a, &b, &c}) {
    if (lc->max_index() >= values_.size()) {
      throw Error(ErrorCode::kUnallocatedVariable,
                  "variable " + std::to_string(lc->max_index()) + " is not allocated");
    }
  }
  cs_.constraints.push_back({a, b, c});
}

void CircuitBuilder::begin_section(std::string name) {
  open_sections_.push_back(cs_.sections.size());
  cs_.sections.push_back({std::move(name), cs_.constraints.size(), cs_.constraints.size()});
}

void CircuitBuilder::end_section() {
  cs_.sections[open_sections_.back()].end = cs_.constraints.size();
  open_sections_.pop_back();
}

ConstraintSystem CircuitBuilder::take_system() { return std::move(cs_); }

}  // namespace carbonzk::circuit
