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

#ifndef CARBONZK_FF_BIGINT_HPP_
#define CARBONZK_FF_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "carbonzk/ff/uint256.hpp"

namespace carbonzk {

using BigInt = boost::multiprecision::cpp_int;

BigInt to_bigint(const U256& v);

// Requires 0 <= v < 2^256.
U256 to_u256(const BigInt& v);

}  // namespace carbonzk

#endif  // CARBONZK_FF_BIGINT_HPP_
