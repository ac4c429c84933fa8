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

// Positive-definite even binary lattices with Gram matrix
// [[4a, 2b], [2b, 4c]], stored as the triple (a, b, c), and their
// classification up to SL2(Z) (proper) and GL2(Z) (improper) equivalence.

#include <array>
#include <ostream>
#include <tuple>

#include "m20lattice/lattice.hpp"

namespace m20lattice {

template <IntegerLike Int>
struct BasicEvenBinaryForm {
  Int a{1};
  Int b{0};
  Int c{1};

  BasicEvenBinaryForm() = default;
  /// Throws unless a > 0, c > 0 and 4ac - b^2 > 0.
  BasicEvenBinaryForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a <= 0 || c <= 0) throw Error("binary form needs a > 0 and c > 0");
    if (discriminant() <= 0) throw Error("binary form is not positive definite (4ac - b^2 <= 0)");
  }

  /// d = 4ac - b^2; the Gram determinant is 4d.
  Int discriminant() const { return 4 * a * c - b * b; }
  BasicGram2<Int> gram() const { return {4 * a, 2 * b, 4 * c}; }

  friend bool operator==(const BasicEvenBinaryForm&, const BasicEvenBinaryForm&) = default;
  friend bool operator<(const BasicEvenBinaryForm& x, const BasicEvenBinaryForm& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
  friend std::ostream& operator<<(std::ostream& os, const BasicEvenBinaryForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
  }
};

/// A form with -a <= b <= a <= c. Only obtainable through reduce() and
/// canonical(), or by a checked constructor.
template <IntegerLike Int>
class BasicReducedForm {
 public:
  explicit BasicReducedForm(const BasicEvenBinaryForm<Int>& f) : f_(f) {
    if (!is_reduced(f)) throw Error("form is not reduced (-a <= b <= a <= c fails)");
  }

  static bool is_reduced(const BasicEvenBinaryForm<Int>& f) {
    return -f.a <= f.b && f.b <= f.a && f.a <= f.c;
  }

  const Int& a() const { return f_.a; }
  const Int& b() const { return f_.b; }
  const Int& c() const { return f_.c; }
  Int discriminant() const { return f_.discriminant(); }
  const BasicEvenBinaryForm<Int>& form() const { return f_; }
  BasicGram2<Int> gram() const { return f_.gram(); }

  friend bool operator==(const BasicReducedForm&, const BasicReducedForm&) = default;
  friend bool operator<(const BasicReducedForm& x, const BasicReducedForm& y) { return x.f_ < y.f_; }
  friend std::ostream& operator<<(std::ostream& os, const BasicReducedForm& r) { return os << r.f_; }

 private:
  BasicEvenBinaryForm<Int> f_;
};

using EvenBinaryForm = BasicEvenBinaryForm<Integer>;
using ReducedForm = BasicReducedForm<Integer>;

/// 2x2 integer matrix, row-major: {{t11, t12}, {t21, t22}}. Its columns are
/// the new basis vectors written in the old basis.
template <IntegerLike Int>
using Matrix2 = std::array<std::array<Int, 2>, 2>;

template <IntegerLike Int>
Matrix2<Int> multiply(const Matrix2<Int>& x, const Matrix2<Int>& y) {
  return {{{x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]},
           {x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]}}};
}

/// t^T g t.
template <IntegerLike Int>
BasicGram2<Int> congruent(const BasicGram2<Int>& g, const Matrix2<Int>& t) {
  const Int& p = t[0][0];
  const Int& q = t[0][1];
  const Int& r = t[1][0];
  const Int& s = t[1][1];
  return {g.g11 * p * p + 2 * g.g12 * p * r + g.g22 * r * r,
          g.g11 * p * q + g.g12 * (p * s + q * r) + g.g22 * r * s,
          g.g11 * q * q + 2 * g.g12 * q * s + g.g22 * s * s};
}

/// (a, b, c) = (g11/4, g12/2, g22/4); throws naming the invariant that fails.
template <IntegerLike Int>
BasicEvenBinaryForm<Int> from_gram(const BasicGram2<Int>& g) {
  if (g.g11 % 4 != 0 || g.g22 % 4 != 0) throw Error("Gram diagonal entries must be divisible by 4");
  if (g.g12 % 2 != 0) throw Error("Gram off-diagonal entry must be even");
  if (!g.is_positive_definite()) throw Error("Gram matrix must be positive definite");
  return {g.g11 / 4, g.g12 / 2, g.g22 / 4};
}

template <IntegerLike Int>
Int discriminant(const BasicEvenBinaryForm<Int>& f) {
  return f.discriminant();
}

template <IntegerLike Int>
struct Reduction {
  BasicReducedForm<Int> form;
  Matrix2<Int> transform;  // det +1, transform^T Gram(f) transform = Gram(form)
};

/// Gauss reduction using only determinant +1 moves:
///   translate: b <- b + 2ka, c <- c + kb + k^2 a    (t = [[1, k], [0, 1]])
///   swap:      (a, b, c) <- (c, -b, a)              (t = [[0, -1], [1, 0]])
/// b is always brought into (-a, a].
template <IntegerLike Int>
Reduction<Int> reduce(const BasicEvenBinaryForm<Int>& f) {
  Int a = f.a, b = f.b, c = f.c;
  Matrix2<Int> t{{{1, 0}, {0, 1}}};
  for (;;) {
    if (b <= -a || b > a) {
      const Int k = floor_div(Int(a - b), Int(2 * a));
      c += k * b + k * k * a;
      b += 2 * k * a;
      t = multiply(t, Matrix2<Int>{{{1, k}, {0, 1}}});
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      t = multiply(t, Matrix2<Int>{{{0, -1}, {1, 0}}});
      continue;
    }
    break;
  }
  return {BasicReducedForm<Int>(BasicEvenBinaryForm<Int>(a, b, c)), t};
}

/// The reduced form with b >= 0 whenever b = +-a or a = c, which are the two
/// families where distinct reduced forms are properly equivalent. Unique per
/// SL2(Z) class.
template <IntegerLike Int>
BasicReducedForm<Int> canonical(const BasicEvenBinaryForm<Int>& f) {
  auto r = reduce(f).form.form();
  if (r.b < 0 && (r.b == -r.a || r.a == r.c)) r.b = -r.b;
  return BasicReducedForm<Int>(r);
}

/// Proper (SL2(Z)) equivalence.
template <IntegerLike Int>
bool equivalent(const BasicEvenBinaryForm<Int>& f1, const BasicEvenBinaryForm<Int>& f2) {
  return canonical(f1) == canonical(f2);
}

/// The reduced form with b >= 0: unique per GL2(Z) class, since (a, b, c)
/// and (a, -b, c) are related by the determinant -1 change y -> -y.
///
/// This is the invariant of a rank-2 sublattice given by an unoriented
/// basis, e.g. an orthogonal complement in L20.
template <IntegerLike Int>
BasicReducedForm<Int> canonical_gl2(const BasicEvenBinaryForm<Int>& f) {
  auto r = reduce(f).form.form();
  if (r.b < 0) r.b = -r.b;
  return BasicReducedForm<Int>(r);
}

/// Improper (GL2(Z)) equivalence.
template <IntegerLike Int>
bool equivalent_gl2(const BasicEvenBinaryForm<Int>& f1, const BasicEvenBinaryForm<Int>& f2) {
  return canonical_gl2(f1) == canonical_gl2(f2);
}

}  // namespace m20lattice
