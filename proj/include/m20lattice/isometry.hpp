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

// The finite isometry group O(L20), generated by -id, rho1 and rho2, and
// orbits of lattice vectors under it. Matrices act on coordinate columns:
// v -> M v.

#include <algorithm>
#include <array>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "m20lattice/lattice.hpp"

namespace m20lattice {

using Matrix3 = std::array<std::array<int, 3>, 3>;

constexpr Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

constexpr Matrix3 transpose(const Matrix3& a) {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

constexpr int determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// M^T G M == G.
constexpr bool preserves_gram(const Matrix3& m) {
  return multiply(multiply(transpose(m), GramMatrix3::entries), m) == GramMatrix3::entries;
}

/// A 3x3 integer matrix preserving the Gram matrix of L20.
class Isometry {
 public:
  /// Throws if the matrix is not an isometry under the column action. When
  /// only the transpose passes, the message says so: that is a convention
  /// mismatch in the input and is reported as such.
  explicit Isometry(const Matrix3& m) : m_(m) {
    if (!preserves_gram(m)) {
      if (preserves_gram(transpose(m)))
        throw Error("matrix is not an isometry under v -> M v, but its transpose is; "
                    "check the action convention");
      throw Error("matrix does not preserve the Gram matrix of L20");
    }
    if (determinant(m) != 1 && determinant(m) != -1)
      throw Error("isometry must have determinant +1 or -1");
  }

  static Isometry identity() { return Isometry(Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

  const Matrix3& matrix() const { return m_; }
  int det() const { return determinant(m_); }

  template <IntegerLike Int>
  BasicLatticeVector<Int> operator()(const BasicLatticeVector<Int>& v) const {
    return {m_[0][0] * v.lambda + m_[0][1] * v.mu + m_[0][2] * v.delta,
            m_[1][0] * v.lambda + m_[1][1] * v.mu + m_[1][2] * v.delta,
            m_[2][0] * v.lambda + m_[2][1] * v.mu + m_[2][2] * v.delta};
  }

  /// (a * b)(v) = a(b(v)).
  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    return Isometry(multiply(a.m_, b.m_));
  }
  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend bool operator<(const Isometry& a, const Isometry& b) { return a.m_ < b.m_; }
  friend std::ostream& operator<<(std::ostream& os, const Isometry& g) {
    os << '[';
    for (int i = 0; i < 3; ++i) {
      os << (i ? ";" : "");
      for (int j = 0; j < 3; ++j) os << (j ? " " : "") << g.m_[i][j];
    }
    return os << ']';
  }

 private:
  Matrix3 m_;
};

inline Isometry minus_identity() { return Isometry(Matrix3{{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}); }
/// Swaps e and f.
inline Isometry rho1() { return Isometry(Matrix3{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}); }
inline Isometry rho2() { return Isometry(Matrix3{{{1, 0, -1}, {0, -1, 0}, {0, 0, -1}}}); }

inline std::vector<Isometry> generators() { return {minus_identity(), rho1(), rho2()}; }

/// Closure of a generating set under composition. Immutable once built.
class IsometryGroup {
 public:
  static constexpr std::size_t kSafetyBound = 64;

  /// Throws if the closure grows past kSafetyBound elements, which can only
  /// happen if a generator is wrong.
  static IsometryGroup generate(const std::vector<Isometry>& gens = generators()) {
    std::set<Isometry> seen{Isometry::identity()};
    std::vector<Isometry> frontier{Isometry::identity()};
    while (!frontier.empty()) {
      std::vector<Isometry> next;
      for (const auto& g : frontier) {
        for (const auto& s : gens) {
          Isometry h = s * g;
          if (seen.insert(h).second) {
            if (seen.size() > kSafetyBound)
              throw Error("isometry group closure exceeded " + std::to_string(kSafetyBound) +
                          " elements");
            next.push_back(h);
          }
        }
      }
      frontier = std::move(next);
    }
    return IsometryGroup(std::vector<Isometry>(seen.begin(), seen.end()));
  }

  const std::vector<Isometry>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Isometry& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  /// {M v : M in the group}, sorted and without repeats.
  template <IntegerLike Int>
  std::vector<BasicLatticeVector<Int>> orbit(const BasicLatticeVector<Int>& v) const {
    std::vector<BasicLatticeVector<Int>> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  template <IntegerLike Int>
  bool same_orbit(const BasicLatticeVector<Int>& v, const BasicLatticeVector<Int>& w) const {
    return std::any_of(elements_.begin(), elements_.end(), [&](const Isometry& g) { return g(v) == w; });
  }

  /// Lexicographically smallest member of the orbit.
  template <IntegerLike Int>
  BasicLatticeVector<Int> canonical_rep(const BasicLatticeVector<Int>& v) const {
    BasicLatticeVector<Int> best = v;
    for (const auto& g : elements_) {
      auto w = g(v);
      if (w < best) best = std::move(w);
    }
    return best;
  }

 private:
  explicit IsometryGroup(std::vector<Isometry> elements) : elements_(std::move(elements)) {}
  std::vector<Isometry> elements_;
};

/// O(L20), built on first use.
inline const IsometryGroup& isometry_group() {
  static const IsometryGroup group = IsometryGroup::generate();
  return group;
}

template <IntegerLike Int>
std::vector<BasicLatticeVector<Int>> orbit(const BasicLatticeVector<Int>& v) {
  return isometry_group().orbit(v);
}

template <IntegerLike Int>
bool same_orbit(const BasicLatticeVector<Int>& v, const BasicLatticeVector<Int>& w) {
  return isometry_group().same_orbit(v, w);
}

template <IntegerLike Int>
BasicLatticeVector<Int> canonical_rep(const BasicLatticeVector<Int>& v) {
  return isometry_group().canonical_rep(v);
}

}  // namespace m20lattice
