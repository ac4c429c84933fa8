// Copyright 2026 The m20lattice Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace m20lattice {

/// Arbitrary-precision integer used by every non-templated API.
using Integer = boost::multiprecision::cpp_int;

/// 64-bit integer that throws std::overflow_error instead of wrapping.
/// Range scans use it: fast, and never silently wrong.
using CheckedInt64 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    64, 64, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Int>
concept IntegerLike = std::integral<Int> || boost::multiprecision::is_number<Int>::value;

template <IntegerLike Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

template <IntegerLike Int>
Int gcd(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Floor of a/b for b > 0 (built-in and cpp_int division truncate toward zero).
template <IntegerLike Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative residue of a modulo m > 0.
template <IntegerLike Int>
Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// floor(sqrt(n)) for n >= 0.
template <IntegerLike Int>
Int isqrt(const Int& n) {
  if (n < 0) throw Error("isqrt of a negative number");
  // Below 2^52 a double square root is exact up to a unit correction.
  if (n < Int(std::int64_t{1} << 52)) {
    Int r(static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  }
  if constexpr (std::integral<Int>) {
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
      x = y;
      y = (x + n / x) / 2;
    }
    return x;
  } else {
    return boost::multiprecision::sqrt(n);
  }
}

template <IntegerLike Int>
bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

template <IntegerLike Int>
std::int64_t to_int64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw Error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

template <IntegerLike Int>
std::string to_string(const Int& x) {
  if constexpr (std::integral<Int>) {
    return std::to_string(x);
  } else {
    return x.str();
  }
}

}  // namespace m20lattice
