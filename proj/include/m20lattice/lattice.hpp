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

// Exact arithmetic in the rank-3 invariant lattice L20 with ordered basis
// (e, f, h) and Gram matrix
//
//     [  4   0  -2 ]
//     [  0   4  -2 ]
//     [ -2  -2  12 ]
//
// Every square in L20 is a multiple of 4 and every pairing is even.

#include <array>
#include <cassert>
#include <ostream>
#include <tuple>
#include <utility>

#include "m20lattice/integer.hpp"

namespace m20lattice {

/// Coordinates (lambda, mu, delta) of lambda*e + mu*f + delta*h.
template <IntegerLike Int>
struct BasicLatticeVector {
  Int lambda{0};
  Int mu{0};
  Int delta{0};

  bool is_zero() const { return lambda == 0 && mu == 0 && delta == 0; }

  friend bool operator==(const BasicLatticeVector& x, const BasicLatticeVector& y) {
    return x.lambda == y.lambda && x.mu == y.mu && x.delta == y.delta;
  }
  /// Lexicographic on (lambda, mu, delta).
  friend bool operator<(const BasicLatticeVector& x, const BasicLatticeVector& y) {
    return std::tie(x.lambda, x.mu, x.delta) < std::tie(y.lambda, y.mu, y.delta);
  }
  friend BasicLatticeVector operator+(const BasicLatticeVector& x, const BasicLatticeVector& y) {
    return {x.lambda + y.lambda, x.mu + y.mu, x.delta + y.delta};
  }
  friend BasicLatticeVector operator-(const BasicLatticeVector& x) {
    return {-x.lambda, -x.mu, -x.delta};
  }
  friend BasicLatticeVector operator-(const BasicLatticeVector& x, const BasicLatticeVector& y) {
    return {x.lambda - y.lambda, x.mu - y.mu, x.delta - y.delta};
  }
  friend BasicLatticeVector operator*(const Int& r, const BasicLatticeVector& x) {
    return {r * x.lambda, r * x.mu, r * x.delta};
  }
  friend std::ostream& operator<<(std::ostream& os, const BasicLatticeVector& v) {
    return os << '(' << v.lambda << ',' << v.mu << ',' << v.delta << ')';
  }

  template <IntegerLike Other>
  BasicLatticeVector<Other> cast() const {
    return {Other(lambda), Other(mu), Other(delta)};
  }
};

using LatticeVector = BasicLatticeVector<Integer>;

/// The fixed Gram matrix of L20. Its determinant and positive definiteness
/// are checked at compile time.
struct GramMatrix3 {
  static constexpr std::array<std::array<int, 3>, 3> entries{{{4, 0, -2}, {0, 4, -2}, {-2, -2, 12}}};

  static constexpr int determinant() {
    const auto& g = entries;
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  }
  static constexpr bool is_symmetric() {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (entries[i][j] != entries[j][i]) return false;
    return true;
  }
  static constexpr bool is_positive_definite() {
    const auto& g = entries;
    return g[0][0] > 0 && g[0][0] * g[1][1] - g[0][1] * g[1][0] > 0 && determinant() > 0;
  }
};

static_assert(GramMatrix3::is_symmetric());
static_assert(GramMatrix3::determinant() == 160);
static_assert(GramMatrix3::is_positive_definite());

inline constexpr int kLatticeDeterminant = GramMatrix3::determinant();

/// Symmetric 2x2 Gram matrix [[g11, g12], [g12, g22]] of a rank-2 sublattice.
template <IntegerLike Int>
struct BasicGram2 {
  Int g11{0};
  Int g12{0};
  Int g22{0};

  Int determinant() const { return g11 * g22 - g12 * g12; }
  bool is_positive_definite() const { return g11 > 0 && determinant() > 0; }
  /// Diagonal divisible by 4 and off-diagonal even: the parity of any
  /// sublattice of L20.
  bool has_even_parity() const { return g11 % 4 == 0 && g22 % 4 == 0 && g12 % 2 == 0; }

  friend bool operator==(const BasicGram2&, const BasicGram2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BasicGram2& g) {
    return os << "[[" << g.g11 << ',' << g.g12 << "],[" << g.g12 << ',' << g.g22 << "]]";
  }
};

using Gram2 = BasicGram2<Integer>;

template <IntegerLike Int>
Int inner(const BasicLatticeVector<Int>& v, const BasicLatticeVector<Int>& w) {
  return 4 * v.lambda * w.lambda + 4 * v.mu * w.mu + 12 * v.delta * w.delta -
         2 * (v.lambda * w.delta + v.delta * w.lambda) - 2 * (v.mu * w.delta + v.delta * w.mu);
}

/// (2 lambda - delta)^2 + (2 mu - delta)^2 + 10 delta^2.
template <IntegerLike Int>
Int norm_closed_form(const BasicLatticeVector<Int>& v) {
  const Int x = 2 * v.lambda - v.delta;
  const Int y = 2 * v.mu - v.delta;
  return x * x + y * y + 10 * v.delta * v.delta;
}

template <IntegerLike Int>
Int norm(const BasicLatticeVector<Int>& v) {
  Int n = inner(v, v);
  assert(n == norm_closed_form(v));
  return n;
}

template <IntegerLike Int>
Int content(const BasicLatticeVector<Int>& v) {
  return gcd(gcd(v.lambda, v.mu), v.delta);
}

template <IntegerLike Int>
bool is_primitive(const BasicLatticeVector<Int>& v) {
  if (v.is_zero()) throw Error("zero vector has no primitivity");
  return content(v) == 1;
}

template <IntegerLike Int>
struct Divisibility {
  Int r;
  BasicLatticeVector<Int> primitive;
};

/// v = r * v0 with r > 0 and v0 primitive.
template <IntegerLike Int>
Divisibility<Int> divisibility(const BasicLatticeVector<Int>& v) {
  if (v.is_zero()) throw Error("zero vector has no primitivity");
  Int r = content(v);
  return {r, {v.lambda / r, v.mu / r, v.delta / r}};
}

/// The integer row G*v divided by its content; x is orthogonal to v iff
/// the row annihilates x.
template <IntegerLike Int>
std::array<Int, 3> pairing_row(const BasicLatticeVector<Int>& v) {
  const auto& g = GramMatrix3::entries;
  std::array<Int, 3> row{
      g[0][0] * v.lambda + g[0][1] * v.mu + g[0][2] * v.delta,
      g[1][0] * v.lambda + g[1][1] * v.mu + g[1][2] * v.delta,
      g[2][0] * v.lambda + g[2][1] * v.mu + g[2][2] * v.delta,
  };
  Int c = gcd(gcd(row[0], row[1]), row[2]);
  if (c == 0) throw Error("zero vector has no orthogonal complement");
  for (auto& x : row) x /= c;
  return row;
}

template <IntegerLike Int>
BasicLatticeVector<Int> cross(const BasicLatticeVector<Int>& a, const BasicLatticeVector<Int>& b) {
  return {a.mu * b.delta - a.delta * b.mu, a.delta * b.lambda - a.lambda * b.delta,
          a.lambda * b.mu - a.mu * b.lambda};
}

/// det[a | b | c] of the coordinate columns.
template <IntegerLike Int>
Int coordinate_det(const BasicLatticeVector<Int>& a, const BasicLatticeVector<Int>& b,
                   const BasicLatticeVector<Int>& c) {
  auto n = cross(b, c);
  return a.lambda * n.lambda + a.mu * n.mu + a.delta * n.delta;
}

template <IntegerLike Int>
struct OrthogonalComplement {
  BasicLatticeVector<Int> u1;
  BasicLatticeVector<Int> u2;
  BasicGram2<Int> gram;
};

template <IntegerLike Int>
BasicGram2<Int> gram_of(const BasicLatticeVector<Int>& u1, const BasicLatticeVector<Int>& u2) {
  return {inner(u1, u1), inner(u1, u2), inner(u2, u2)};
}

/// Z-basis (u1, u2) of the saturated kernel {x : <x, v> = 0}, oriented so
/// that det[v | u1 | u2] > 0.
///
/// With (g1, g2, g3) the primitive pairing row and t = gcd(g1, g2):
///   u1 = (g2/t, -g1/t, 0)
///   u2 = (-g3 p, -g3 q, t)    where p g1 + q g2 = t.
/// Then u1 x u2 = -(g1, g2, g3), which is primitive, so (u1, u2) spans the
/// whole kernel and not a finite-index sublattice.
template <IntegerLike Int>
OrthogonalComplement<Int> orthogonal_complement(const BasicLatticeVector<Int>& v) {
  if (v.is_zero()) throw Error("zero vector has no orthogonal complement");
  const auto [g1, g2, g3] = pairing_row(v);

  BasicLatticeVector<Int> u1, u2;
  if (g1 == 0 && g2 == 0) {
    // Row is (0, 0, +-1): the kernel is spanned by e and f.
    u1 = {1, 0, 0};
    u2 = {0, 1, 0};
  } else {
    // Extended Euclid on (g1, g2).
    Int r0 = g1, r1 = g2, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int tmp = r0 - q * r1;
      r0 = std::move(r1);
      r1 = std::move(tmp);
      tmp = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(tmp);
      tmp = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(tmp);
    }
    if (r0 < 0) {
      r0 = -r0;
      s0 = -s0;
      t0 = -t0;
    }
    const Int& t = r0;
    u1 = {g2 / t, -g1 / t, 0};
    u2 = {-g3 * s0, -g3 * t0, t};
  }
  if (coordinate_det(v, u1, u2) < 0) u2 = -u2;

  assert(inner(u1, v) == 0 && inner(u2, v) == 0);
  return {u1, u2, gram_of(u1, u2)};
}

}  // namespace m20lattice
