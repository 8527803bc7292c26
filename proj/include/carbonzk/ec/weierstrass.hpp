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

// Short Weierstrass curves y^2 = x^3 + b (a = 0) over a generic field.

#ifndef CARBONZK_EC_WEIERSTRASS_HPP_
#define CARBONZK_EC_WEIERSTRASS_HPP_

#include <span>
#include <vector>

#include "carbonzk/ff/uint256.hpp"

namespace carbonzk {

template <typename F, typename Curve>
struct AffinePoint {
  using CurveType = Curve;
  F x{}, y{};
  bool infinity = true;

  static AffinePoint identity() { return AffinePoint(); }
  static AffinePoint from_xy(const F& x, const F& y) { return {x, y, false}; }

  bool operator==(const AffinePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool is_on_curve() const {
    return infinity || y.square() == x.square() * x + Curve::b();
  }
  AffinePoint operator-() const {
    if (infinity) return *this;
    return {x, -y, false};
  }
};

template <typename F, typename Curve>
class JacobianPoint {
 public:
  using Affine = AffinePoint<F, Curve>;
  using Field = F;

  F x = F::one(), y = F::one(), z{};

  JacobianPoint() = default;
  JacobianPoint(const F& x_, const F& y_, const F& z_) : x(x_), y(y_), z(z_) {}
  explicit JacobianPoint(const Affine& p) {
    if (!p.infinity) {
      x = p.x;
      y = p.y;
      z = F::one();
    }
  }

  static JacobianPoint identity() { return JacobianPoint(); }
  static JacobianPoint generator() { return JacobianPoint(Curve::generator()); }

  bool is_identity() const { return z.is_zero(); }

  bool operator==(const JacobianPoint& o) const {
    if (is_identity() || o.is_identity()) return is_identity() && o.is_identity();
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    return x * z2z2 == o.x * z1z1 && y * z2z2 * o.z == o.y * z1z1 * z;
  }

  JacobianPoint operator-() const { return JacobianPoint(x, -y, z); }

  JacobianPoint dbl() const {
    if (is_identity()) return *this;
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F d = ((x + b).square() - a - c).dbl();
    F e = a.dbl() + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  JacobianPoint operator+(const JacobianPoint& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    F u1 = x * z2z2;
    F u2 = o.x * z1z1;
    F s1 = y * o.z * z2z2;
    F s2 = o.y * z * z1z1;
    F h = u2 - u1;
    F r = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return identity();
    }
    F i = h.dbl().square();
    F j = h * i;
    F v = u1 * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((z + o.z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  JacobianPoint add_mixed(const Affine& o) const {
    if (o.infinity) return *this;
    if (is_identity()) return JacobianPoint(o);
    F z1z1 = z.square();
    F u2 = o.x * z1z1;
    F s2 = o.y * z * z1z1;
    F h = u2 - x;
    F r = (s2 - y).dbl();
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return identity();
    }
    F hh = h.square();
    F i = hh.dbl().dbl();
    F j = h * i;
    F v = x * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (y * j).dbl();
    F z3 = (z + h).square() - z1z1 - hh;
    return {x3, y3, z3};
  }

  JacobianPoint& operator+=(const JacobianPoint& o) { return *this = *this + o; }
  JacobianPoint operator-(const JacobianPoint& o) const { return *this + (-o); }

  JacobianPoint mul(const U256& scalar) const {
    JacobianPoint acc;
    for (size_t i = scalar.bit_length(); i-- > 0;) {
      acc = acc.dbl();
      if (scalar.bit(i)) acc += *this;
    }
    return acc;
  }

  Affine to_affine() const {
    if (is_identity()) return Affine();
    F zinv = z.inverse();
    F zinv2 = zinv.square();
    return Affine::from_xy(x * zinv2, y * zinv2 * zinv);
  }

  bool is_on_curve() const {
    if (is_identity()) return true;
    F z2 = z.square();
    F z6 = z2.square() * z2;
    return y.square() == x.square() * x + Curve::b() * z6;
  }
};

template <typename F, typename Curve>
std::vector<AffinePoint<F, Curve>> batch_to_affine(
    std::span<const JacobianPoint<F, Curve>> points) {
  std::vector<F> zs(points.size());
  for (size_t i = 0; i < points.size(); ++i) zs[i] = points[i].z;
  std::vector<F> prefix(points.size());
  F acc = F::one();
  for (size_t i = 0; i < zs.size(); ++i) {
    prefix[i] = acc;
    if (!zs[i].is_zero()) acc *= zs[i];
  }
  F inv = acc.inverse();
  for (size_t i = zs.size(); i-- > 0;) {
    if (zs[i].is_zero()) continue;
    F next = inv * zs[i];
    zs[i] = inv * prefix[i];
    inv = next;
  }
  std::vector<AffinePoint<F, Curve>> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_identity()) continue;
    F zinv2 = zs[i].square();
    out[i] = AffinePoint<F, Curve>::from_xy(points[i].x * zinv2,
                                            points[i].y * zinv2 * zs[i]);
  }
  return out;
}

}  // namespace carbonzk

#endif  // CARBONZK_EC_WEIERSTRASS_HPP_
