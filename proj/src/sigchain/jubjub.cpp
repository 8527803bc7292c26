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

#include "carbonzk/sigchain/jubjub.hpp"

namespace carbonzk::sigchain {
namespace {

// Extended coordinates (X : Y : T : Z) with x = X/Z, y = Y/Z, T = XY/Z.
struct Extended {
  Fr x, y, t, z;

  static Extended from(const EdwardsPoint& p) { return {p.x, p.y, p.x * p.y, Fr::one()}; }

  // Unified addition (add-2008-hwcd); complete because a is a square and d
  // is not.
  Extended operator+(const Extended& o) const {
    static const Fr kA = edwards_a();
    static const Fr kD = edwards_d();
    Fr a = x * o.x;
    Fr b = y * o.y;
    Fr c = kD * t * o.t;
    Fr d = z * o.z;
    Fr e = (x + y) * (o.x + o.y) - a - b;
    Fr f = d - c;
    Fr g = d + c;
    Fr h = b - kA * a;
    return {e * f, g * h, e * h, f * g};
  }

  EdwardsPoint to_affine() const {
    Fr zinv = z.inverse();
    return {x * zinv, y * zinv};
  }
};

}  // namespace

Fr edwards_a() { return Fr::from_uint(168700); }
Fr edwards_d() { return Fr::from_uint(168696); }

EdwardsPoint EdwardsPoint::base_point() {
  static const EdwardsPoint kBase{
      Fr::from_decimal(
          "5299619240641551281634865583518297030282874472190772894086521144482721001553"),
      Fr::from_decimal(
          "16950150798460657717958625567821834550301663161624707787222815936182638968203")};
  return kBase;
}

bool EdwardsPoint::is_on_curve() const {
  Fr xx = x.square();
  Fr yy = y.square();
  return edwards_a() * xx + yy == Fr::one() + edwards_d() * xx * yy;
}

bool EdwardsPoint::in_prime_subgroup() const { return mul(kSubgroupOrder).is_identity(); }

EdwardsPoint EdwardsPoint::operator+(const EdwardsPoint& o) const {
  return (Extended::from(*this) + Extended::from(o)).to_affine();
}

EdwardsPoint EdwardsPoint::mul(const U256& k) const {
  Extended acc = Extended::from(identity());
  const Extended base = Extended::from(*this);
  for (size_t i = k.bit_length(); i-- > 0;) {
    acc = acc + acc;
    if (k.bit(i)) acc = acc + base;
  }
  return acc.to_affine();
}

JubjubScalar scalar_from_field(const Fr& v) { return JubjubScalar::reduce(v.to_canonical()); }

Fr field_from_scalar(const JubjubScalar& s) { return Fr::from_canonical(s.to_canonical()); }

}  // namespace carbonzk::sigchain
