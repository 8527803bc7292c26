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

#include "carbonzk/quantities/quantities.hpp"

#include <stdexcept>

#include "carbonzk/util/error.hpp"

namespace carbonzk::quantities {
namespace {

u128 pow10(unsigned k) {
  u128 v = 1;
  for (unsigned i = 0; i < k; ++i) v *= 10;
  return v;
}

std::optional<u128> kind_bound_exclusive(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::kEnergy: return kEnergyBound;
    case QuantityKind::kIntensity: return kIntensityBound;
    case QuantityKind::kShare: return kShareFull + 1;
    case QuantityKind::kEmissions: return u128{1} << kEmissionsBits;
  }
  return std::nullopt;
}

}  // namespace

unsigned fractional_digits(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::kEnergy: return 3;
    case QuantityKind::kIntensity: return 6;
    case QuantityKind::kShare: return 6;
    case QuantityKind::kEmissions: return 6;
  }
  return 0;
}

const char* kind_name(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::kEnergy: return "energy";
    case QuantityKind::kIntensity: return "intensity";
    case QuantityKind::kShare: return "share";
    case QuantityKind::kEmissions: return "emissions";
  }
  return "quantity";
}

std::string u128_to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

u128 u128_from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  if (text.size() > 1 && text[0] == '0') throw std::invalid_argument("leading zero");
  u128 v = 0;
  const u128 max = ~u128{0};
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("non-decimal character");
    unsigned d = static_cast<unsigned>(ch - '0');
    if (v > (max - d) / 10) throw std::invalid_argument("integer overflow");
    v = v * 10 + d;
  }
  return v;
}

u128 parse_scaled(std::string_view text, QuantityKind kind) {
  const unsigned digits = fractional_digits(kind);
  const size_t point = text.find('.');
  std::string_view whole = text.substr(0, point);
  std::string_view frac = point == std::string_view::npos ? std::string_view() : text.substr(point + 1);
  if (whole.empty()) throw std::invalid_argument("missing integer part");
  if (point != std::string_view::npos && frac.empty()) {
    throw std::invalid_argument("missing fractional digits");
  }
  for (char ch : frac) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("non-decimal character");
  }
  // Strip trailing zeros only for the precision check; "1.500" is exact.
  size_t significant = frac.size();
  while (significant > 0 && frac[significant - 1] == '0') --significant;
  if (significant > digits) {
    throw Error(ErrorCode::kPrecisionLoss,
                std::string(text) + " has more than " + std::to_string(digits) +
                    " fractional digits for " + kind_name(kind));
  }
  if (whole.size() > 30) throw Error(ErrorCode::kOutOfRange, std::string(text) + " is too large");
  u128 w = u128_from_decimal(whole);
  u128 f = 0;
  for (size_t i = 0; i < digits; ++i) {
    f = f * 10 + (i < significant ? static_cast<unsigned>(frac[i] - '0') : 0);
  }
  const u128 scale = pow10(digits);
  if (w > (~u128{0} - f) / scale) throw Error(ErrorCode::kOutOfRange, std::string(text) + " is too large");
  u128 v = w * scale + f;
  if (auto bound = kind_bound_exclusive(kind); bound && v >= *bound) {
    throw Error(ErrorCode::kOutOfRange,
                std::string(text) + " exceeds the " + kind_name(kind) + " bound");
  }
  return v;
}

EnergyQuantity parse_energy(std::string_view text) {
  return {static_cast<uint64_t>(parse_scaled(text, QuantityKind::kEnergy))};
}
IntensityQuantity parse_intensity(std::string_view text) {
  return {static_cast<uint64_t>(parse_scaled(text, QuantityKind::kIntensity))};
}
ShareFraction parse_share(std::string_view text) {
  return {static_cast<uint64_t>(parse_scaled(text, QuantityKind::kShare))};
}

std::string format_scaled(u128 value, QuantityKind kind) {
  const unsigned digits = fractional_digits(kind);
  const u128 scale = pow10(digits);
  std::string out = u128_to_decimal(value / scale);
  std::string frac = u128_to_decimal(value % scale);
  frac.insert(frac.begin(), digits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::optional<std::string> check_bounds(EnergyQuantity q) {
  if (q.value >= kEnergyBound) return "energy " + std::to_string(q.value) + " is not below 2^50";
  return std::nullopt;
}

std::optional<std::string> check_bounds(IntensityQuantity q) {
  if (q.value >= kIntensityBound) {
    return "intensity " + std::to_string(q.value) + " is not below 2^40";
  }
  return std::nullopt;
}

std::optional<std::string> check_bounds(ShareFraction q) {
  if (q.value > kShareFull) return "share " + std::to_string(q.value) + " exceeds 1000000 ppm";
  return std::nullopt;
}

std::optional<std::string> check_bounds(EmissionsQuantity q) {
  if (q.value >= (u128{1} << kEmissionsBits)) {
    return "emissions " + u128_to_decimal(q.value) + " is not below 2^81";
  }
  return std::nullopt;
}

std::optional<std::string> check_bounds(ReportingPeriod p) {
  if (!p.valid()) {
    return "period start " + std::to_string(p.start) + " is not before end " + std::to_string(p.end);
  }
  return std::nullopt;
}

EmissionsResult compute_emissions(IntensityQuantity i, EnergyQuantity x, ShareFraction c) {
  for (const auto& violation : {check_bounds(i), check_bounds(x), check_bounds(c)}) {
    if (violation) throw Error(ErrorCode::kOutOfRange, *violation);
  }
  // i * x < 2^90 and c <= 10^6 < 2^20, so the product fits in 110 bits.
  const u128 product = static_cast<u128>(i.value) * x.value * c.value;
  EmissionsResult out;
  out.ce.value = product / kEmissionsDivisor;
  out.remainder = static_cast<uint64_t>(product % kEmissionsDivisor);
  return out;
}

}  // namespace carbonzk::quantities
