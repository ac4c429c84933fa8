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

// Which degrees 4n are squares of vectors of L20, i.e. when
//   4n = (2 lambda - delta)^2 + (2 mu - delta)^2 + 10 delta^2
// has an integer solution, decided both in closed form and by exhaustive
// enumeration, plus two-square witnesses for primes p = 1 mod 4.

#include <algorithm>
#include <utility>
#include <vector>

#include "m20lattice/lattice.hpp"

namespace m20lattice {

/// Writes n = 4^i * m with m not divisible by 4.
template <IntegerLike Int>
std::pair<int, Int> strip_powers_of_four(Int n) {
  int i = 0;
  while (n % 4 == 0) {
    n /= 4;
    ++i;
  }
  return {i, n};
}

/// True iff n is not of the form 4^i (16 j + 6).
template <IntegerLike Int>
bool is_representable(const Int& n) {
  if (n <= 0) throw Error("n must be positive");
  return strip_powers_of_four(n).second % 16 != 6;
}

/// Every (lambda, mu, delta) with norm 4n, in lexicographic order.
///
/// Iterates |delta| <= sqrt(4n/10), then x = 2 lambda - delta over the
/// values with x = delta (mod 2) and x^2 <= 4n - 10 delta^2, and solves for
/// y = 2 mu - delta exactly.
template <IntegerLike Int>
std::vector<BasicLatticeVector<Int>> enumerate_solutions(const Int& n) {
  if (n <= 0) throw Error("n must be positive");
  std::vector<BasicLatticeVector<Int>> out;
  const Int target = 4 * n;
  const Int delta_max = isqrt(Int(target / 10));
  for (Int delta = -delta_max; delta <= delta_max; ++delta) {
    const Int rest = target - 10 * delta * delta;
    const Int x_max = isqrt(rest);
    Int x = -x_max;
    if (mod_floor(Int(x - delta), Int(2)) != 0) ++x;
    for (; x <= x_max; x += 2) {
      const Int y_sq = rest - x * x;
      const Int y = isqrt(y_sq);
      if (y * y != y_sq) continue;
      // y = x = delta (mod 2) follows from the sum being 0 mod 4.
      const Int lambda = (x + delta) / 2;
      out.push_back({lambda, (y + delta) / 2, delta});
      if (y != 0) out.push_back({lambda, (delta - y) / 2, delta});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Turns x^2 + y^2 + 10 z^2 = 4n into (lambda, mu, delta) =
/// ((x + z)/2, (y + z)/2, z), which has the same norm.
template <IntegerLike Int>
BasicLatticeVector<Int> parity_lift(const Int& x, const Int& y, const Int& z) {
  const Int total = x * x + y * y + 10 * z * z;
  if (total <= 0 || total % 4 != 0 || mod_floor(Int(x - z), Int(2)) != 0 ||
      mod_floor(Int(y - z), Int(2)) != 0)
    throw Error("not a valid 4n-representation");
  return {(x + z) / 2, (y + z) / 2, z};
}

/// Deterministic trial division.
template <IntegerLike Int>
bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

template <IntegerLike Int>
struct TwoSquares {
  Int small;  // 0 < small <= large
  Int large;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

/// p = small^2 + large^2 for a prime p = 1 (mod 4), by search over
/// small <= sqrt(p/2).
template <IntegerLike Int>
TwoSquares<Int> two_squares(const Int& p) {
  if (!is_prime(p)) throw Error("two_squares requires a prime");
  if (p % 4 != 1) throw Error("two_squares requires p = 1 (mod 4)");
  const Int bound = isqrt(Int(p / 2));
  for (Int a = 1; a <= bound; ++a) {
    const Int rest = p - a * a;
    const Int b = isqrt(rest);
    if (b * b == rest) return {a, b};
  }
  throw Error("no two-square decomposition found");  // unreachable for valid p
}

template <IntegerLike Int>
struct PrimeWitness {
  Int p;
  BasicLatticeVector<Int> vector;  // (lambda, mu, 0) with norm 4p
};

/// The first `count` primes p = 1 (mod 4) with their delta = 0 witnesses.
template <IntegerLike Int = Integer>
std::vector<PrimeWitness<Int>> infinitude_scan(std::size_t count) {
  std::vector<PrimeWitness<Int>> out;
  for (Int p = 5; out.size() < count; p += 4) {
    if (!is_prime(p)) continue;
    auto sq = two_squares(p);
    out.push_back({p, {sq.small, sq.large, 0}});
  }
  return out;
}

}  // namespace m20lattice
