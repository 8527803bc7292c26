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

// Exact fixed-point quantities and the emissions product CE = I * X * C.
//
// Scales: energy in milli-kWh, intensity in micro-kgCO2e/kWh, share in
// parts-per-million, emissions in micro-kgCO2e. The divisor from the raw
// product to emissions is therefore exactly 10^9.

#ifndef CARBONZK_QUANTITIES_QUANTITIES_HPP_
#define CARBONZK_QUANTITIES_QUANTITIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "carbonzk/ff/uint256.hpp"

namespace carbonzk::quantities {

enum class QuantityKind { kEnergy, kIntensity, kShare, kEmissions };

inline constexpr uint64_t kEnergyBound = uint64_t{1} << 50;     // exclusive
inline constexpr uint64_t kIntensityBound = uint64_t{1} << 40;  // exclusive
inline constexpr uint64_t kShareFull = 1'000'000;               // inclusive
inline constexpr uint64_t kEmissionsDivisor = 1'000'000'000;
inline constexpr unsigned kEmissionsBits = 81;  // CE < 2^81 for in-bound inputs

struct EnergyQuantity {
  uint64_t value = 0;
  constexpr bool operator==(const EnergyQuantity&) const = default;
};
struct IntensityQuantity {
  uint64_t value = 0;
  constexpr bool operator==(const IntensityQuantity&) const = default;
};
struct ShareFraction {
  uint64_t value = 0;
  constexpr bool operator==(const ShareFraction&) const = default;
};
struct EmissionsQuantity {
  u128 value = 0;
  constexpr bool operator==(const EmissionsQuantity&) const = default;
};

struct ReportingPeriod {
  uint64_t start = 0;
  uint64_t end = 0;
  constexpr bool operator==(const ReportingPeriod&) const = default;
  constexpr bool valid() const { return start < end; }
};

struct EmissionsResult {
  EmissionsQuantity ce;
  uint64_t remainder = 0;  // 0 <= remainder < 10^9
};

// Number of fractional decimal digits carried by each kind.
unsigned fractional_digits(QuantityKind kind);
const char* kind_name(QuantityKind kind);

// Parses a non-negative decimal ("12", "0.25", "1000.125") into the scaled
// integer. Throws Error(kPrecisionLoss) if the text carries more fractional
// digits than the scale, Error(kOutOfRange) beyond the type bound, and
// std::invalid_argument for non-decimal text.
u128 parse_scaled(std::string_view text, QuantityKind kind);
EnergyQuantity parse_energy(std::string_view text);
IntensityQuantity parse_intensity(std::string_view text);
ShareFraction parse_share(std::string_view text);

// Canonical decimal rendering: no trailing fractional zeros, no lone point.
std::string format_scaled(u128 value, QuantityKind kind);
inline std::string format_quantity(EnergyQuantity q) {
  return format_scaled(q.value, QuantityKind::kEnergy);
}
inline std::string format_quantity(IntensityQuantity q) {
  return format_scaled(q.value, QuantityKind::kIntensity);
}
inline std::string format_quantity(ShareFraction q) {
  return format_scaled(q.value, QuantityKind::kShare);
}
inline std::string format_quantity(EmissionsQuantity q) {
  return format_scaled(q.value, QuantityKind::kEmissions);
}

// Plain integer decimal helpers for 128-bit values.
std::string u128_to_decimal(u128 v);
// Throws std::invalid_argument on non-canonical or overflowing text.
u128 u128_from_decimal(std::string_view text);

// nullopt when the invariant holds, otherwise a description.
std::optional<std::string> check_bounds(EnergyQuantity q);
std::optional<std::string> check_bounds(IntensityQuantity q);
std::optional<std::string> check_bounds(ShareFraction q);
std::optional<std::string> check_bounds(EmissionsQuantity q);
std::optional<std::string> check_bounds(ReportingPeriod p);

// floor(i * x * c / 10^9) with remainder. Throws Error(kOutOfRange) if an
// operand violates its bound.
EmissionsResult compute_emissions(IntensityQuantity i, EnergyQuantity x, ShareFraction c);

}  // namespace carbonzk::quantities

#endif  // CARBONZK_QUANTITIES_QUANTITIES_HPP_
