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

// Dimension bookkeeping for models of non-primitive polarizations built
// from Veronese embeddings.

#include <string>

#include "m20lattice/polarization.hpp"

namespace m20lattice {

/// C(n + d, d) - 1: the target of the degree-d Veronese map of P^n.
inline Integer veronese_target_dim(const Integer& n, unsigned d) {
  if (n < 1 || d < 1) throw Error("veronese_target_dim needs n >= 1 and d >= 1");
  return binomial(n + d, d) - 1;
}

/// Independent quadrics vanishing on nu_2(P^n):
/// C(C(n+2, 2) + 1, 2) - C(n+4, 4).
inline Integer quadrics_on_veronese2(const Integer& n) {
  if (n < 1) throw Error("quadrics_on_veronese2 needs n >= 1");
  return binomial(binomial(n + 2, 2) + 1, 2) - binomial(n + 4, 4);
}

/// Model of X_{16n} from the model of X_{4n} in P^{2n+1}: the Q_{4n}
/// quadrics become hyperplanes of the degree-2 Veronese target.
struct DoubledModelDims {
  Integer ambient_before;    // 2n + 1
  Integer veronese_ambient;  // 2n^2 + 5n + 2
  Integer hyperplanes;       // Q_{4n}
  Integer ambient_after;     // 8n + 1
};

inline DoubledModelDims doubled_model_dims(const Integer& n) {
  if (n < 1) throw Error("n must be positive");
  const Integer q = quadric_count(n);
  if (q == 0) throw Error("no quadrics to restrict");
  DoubledModelDims d{2 * n + 1, veronese_target_dim(2 * n + 1, 2), q, 0};
  d.ambient_after = d.veronese_ambient - d.hyperplanes;
  if (d.ambient_after != 8 * n + 1 || d.ambient_after != (16 * n) / 2 + 1)
    throw Error("doubled model dimension mismatch");
  return d;
}

/// Model of X_{4r^2} as the degree-r Veronese image of the quartic in P^3:
/// the C(r-1, 3) products q f_4 with deg q = r - 4 become hyperplanes.
struct ScaledQuarticDims {
  Integer veronese_ambient;  // C(r+3, 3) - 1
  Integer hyperplanes;       // C(r-1, 3)
  Integer ambient_after;     // 2r^2 + 1
};

inline ScaledQuarticDims scaled_quartic_dims(const Integer& r) {
  if (r < 3) throw Error("scaled_quartic_dims needs r >= 3");
  // C(r+3, r) = C(r+3, 3), the target of nu_r on P^3.
  ScaledQuarticDims d{binomial(r + 3, 3) - 1, binomial(r - 1, 3), 0};
  d.ambient_after = d.veronese_ambient - d.hyperplanes;
  if (d.ambient_after != 2 * r * r + 1) throw Error("scaled quartic dimension mismatch");
  return d;
}

/// r = 3 has no hyperplanes: the ten sextics q_i f_4 (q_i running over the
/// degree-2 monomials) become ten quadrics on nu_3(P^3) in P^19.
inline std::string scaled_quartic_note(const Integer& r) {
  if (r == 3)
    return "no hyperplanes; the ten sextics q*f4 (q a quadratic monomial) map to ten quadrics in P^19";
  return "";
}

}  // namespace m20lattice
