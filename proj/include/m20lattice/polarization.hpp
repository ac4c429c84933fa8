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

// Per-degree classification of invariant polarizations L with L^2 = 4n:
// solution vectors grouped into isometry orbits, the transcendental lattice
// T_X = L^perp of each orbit, the index I of ZL + T_X in NS(X), the number
// of quadrics cutting out the model in P^{2n+1}, and the Diophantine
// obstructions behind ampleness, base-point-freeness, non-hyperellipticity
// and generation by quadrics.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "m20lattice/binary_forms.hpp"
#include "m20lattice/isometry.hpp"
#include "m20lattice/lattice.hpp"
#include "m20lattice/representability.hpp"

namespace m20lattice {

/// Raised when 160n/d is not the square of an integer.
class IndexAnomaly : public Error {
 public:
  IndexAnomaly(Integer n, Integer d)
      : Error("index anomaly: 160*" + n.str() + "/" + d.str() + " is not a perfect square"),
        n_(std::move(n)),
        d_(std::move(d)) {}
  const Integer& n() const { return n_; }
  const Integer& d() const { return d_; }

 private:
  Integer n_;
  Integer d_;
};

struct QuadricCount {
  Integer total_quadrics;  // dim S^2 H^0(L) = C(2n+3, 2)
  Integer sections_2l;     // dim H^0(2L) = 2 + 8n
  Integer count;           // total_quadrics - sections_2l = 2n^2 - 3n + 1
};

inline Integer binomial(const Integer& n, unsigned k) {
  if (n < 0 || n < Integer(k)) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline QuadricCount quadric_count_detail(const Integer& n) {
  if (n <= 0) throw Error("n must be positive");
  QuadricCount q{binomial(2 * n + 3, 2), 2 + 8 * n, 0};
  q.count = q.total_quadrics - q.sections_2l;
  return q;
}

inline Integer quadric_count(const Integer& n) { return quadric_count_detail(n).count; }

/// I = sqrt(160n/d); throws IndexAnomaly unless that is an integer square.
inline Integer index_from(const Integer& n, const Integer& d) {
  if (d <= 0) throw Error("discriminant must be positive");
  const Integer num = 160 * n;
  if (num % d != 0 || !is_perfect_square(Integer(num / d))) throw IndexAnomaly(n, d);
  return isqrt(Integer(num / d));
}

/// Whether target = n * alpha^2 * d * m has a solution with alpha, m >= 1.
inline bool div_feasible(const Integer& target, const Integer& n, const Integer& d) {
  if (target <= 0 || n <= 0 || d <= 0) throw Error("div_feasible needs positive arguments");
  for (Integer alpha = 1; n * alpha * alpha * d <= target; ++alpha)
    if (target % (n * alpha * alpha * d) == 0) return true;
  return false;
}

inline LatticeVector scale_embedding(const LatticeVector& v, const Integer& r) {
  if (r < 1) throw Error("scale factor must be positive");
  return r * v;
}

/// GL2(Z)-canonical reduced Gram form of v^perp.
///
/// The sign of b in the reduced form depends on the orientation of the
/// chosen complement basis, and orientation-reversing isometries of L20 flip
/// it, so only the improper class is an invariant of the orbit of v.
inline ReducedForm transcendental_lattice(const LatticeVector& v) {
  return canonical_gl2(from_gram(orthogonal_complement(v).gram));
}

struct OrbitClass {
  LatticeVector canonical;
  std::size_t orbit_size = 0;
  Integer divisibility;
  LatticeVector primitive_root;
  ReducedForm tx{EvenBinaryForm(1, 0, 1)};
  Integer discriminant;
  Integer index_squared_numerator;  // 160n; index^2 = this / discriminant
  std::optional<Integer> index;     // empty on an index anomaly
};

struct FeasibilityEntry {
  ReducedForm tx{EvenBinaryForm(1, 0, 1)};
  Integer discriminant;
  bool div1_solvable = false;         // 10 = n alpha^2 d m
  bool div2_solvable = false;         // 40 = n alpha^2 d m
  bool quadrics_eq_solvable = false;  // 90 = n alpha^2 d m
  bool n_divides_10 = false;
  bool n_divides_40 = false;
  bool n_divides_90 = false;
};

struct FeasibilityChecklist {
  std::vector<FeasibilityEntry> classes;

  bool any_div1() const {
    return std::any_of(classes.begin(), classes.end(), [](auto& c) { return c.div1_solvable; });
  }
  bool any_div2() const {
    return std::any_of(classes.begin(), classes.end(), [](auto& c) { return c.div2_solvable; });
  }
  bool any_eq90() const {
    return std::any_of(classes.begin(), classes.end(), [](auto& c) { return c.quadrics_eq_solvable; });
  }
};

inline FeasibilityEntry feasibility_for(const Integer& n, const ReducedForm& tx) {
  FeasibilityEntry e{tx, tx.discriminant()};
  e.div1_solvable = div_feasible(10, n, e.discriminant);
  e.div2_solvable = div_feasible(40, n, e.discriminant);
  e.quadrics_eq_solvable = div_feasible(90, n, e.discriminant);
  e.n_divides_10 = 10 % n == 0;
  e.n_divides_40 = 40 % n == 0;
  e.n_divides_90 = 90 % n == 0;
  return e;
}

struct PolarizationReport {
  Integer n;
  Integer l_squared;
  bool representable = false;
  std::size_t solution_count = 0;
  std::vector<OrbitClass> orbits;      // sorted by canonical representative
  std::vector<ReducedForm> tx_classes; // sorted, distinct
  QuadricCount quadrics;
  Integer ambient_dim;  // p_a(L) = L^2/2 + 1
  FeasibilityChecklist feasibility;
  std::vector<std::string> anomalies;

  /// n = 1: the model is a quartic in P^3 and no quadric contains it.
  bool quartic_footnote() const { return n == 1; }
};

inline PolarizationReport classify(const Integer& n) {
  if (n <= 0) throw Error("n must be positive");
  PolarizationReport rep;
  rep.n = n;
  rep.l_squared = 4 * n;
  rep.quadrics = quadric_count_detail(n);
  rep.ambient_dim = 2 * n + 1;

  const auto solutions = enumerate_solutions(n);
  rep.solution_count = solutions.size();
  rep.representable = !solutions.empty();
  if (rep.representable != is_representable(n))
    rep.anomalies.push_back("closed-form criterion disagrees with enumeration");

  std::vector<bool> assigned(solutions.size(), false);
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (assigned[i]) continue;
    const auto members = orbit(solutions[i]);
    for (const auto& w : members) {
      auto it = std::lower_bound(solutions.begin(), solutions.end(), w);
      if (it == solutions.end() || !(*it == w)) {
        rep.anomalies.push_back("solution set is not closed under isometries");
        continue;
      }
      assigned[static_cast<std::size_t>(it - solutions.begin())] = true;
    }

    OrbitClass oc;
    oc.canonical = members.front();
    oc.orbit_size = members.size();
    auto dv = divisibility(oc.canonical);
    oc.divisibility = dv.r;
    oc.primitive_root = dv.primitive;
    oc.tx = transcendental_lattice(oc.canonical);
    oc.discriminant = oc.tx.discriminant();
    oc.index_squared_numerator = 160 * n;
    try {
      oc.index = index_from(n, oc.discriminant);
    } catch (const IndexAnomaly& e) {
      rep.anomalies.push_back(e.what());
    }
    // 16 n d = det(ZL + L^perp) = 160 [L20 : ZL + L^perp]^2
    const Integer nd = n * oc.discriminant;
    if (nd % 10 != 0 || !is_perfect_square(Integer(nd / 10)))
      rep.anomalies.push_back("n*d/10 is not a perfect square for orbit " +
                              to_string(oc.canonical.lambda) + "," + to_string(oc.canonical.mu) +
                              "," + to_string(oc.canonical.delta));
    rep.orbits.push_back(std::move(oc));
  }
  std::sort(rep.orbits.begin(), rep.orbits.end(),
            [](const OrbitClass& x, const OrbitClass& y) { return x.canonical < y.canonical; });

  for (const auto& oc : rep.orbits) rep.tx_classes.push_back(oc.tx);
  std::sort(rep.tx_classes.begin(), rep.tx_classes.end());
  rep.tx_classes.erase(std::unique(rep.tx_classes.begin(), rep.tx_classes.end()), rep.tx_classes.end());
  for (const auto& tx : rep.tx_classes) rep.feasibility.classes.push_back(feasibility_for(n, tx));
  return rep;
}

// ---------------------------------------------------------------------------
// Model verdict

enum class Resolution {
  kNotApplicable,  // n does not divide the target, so the equation is void
  kInfeasible,     // n divides the target but the equation has no solution
  kPriorWork,      // surface already treated in the literature (L^2 = 4, 8, or T_X = diag(4,4))
  kHalved,         // L = 2M, so E.L = 2 would force E.M = 1
  kFeasible,       // obstruction not ruled out: contradicts the classification
};

inline const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::kNotApplicable: return "not applicable";
    case Resolution::kInfeasible: return "infeasible";
    case Resolution::kPriorWork: return "known from prior work";
    case Resolution::kHalved: return "excluded: L = 2M";
    case Resolution::kFeasible: return "FEASIBLE";
  }
  return "?";
}

struct ClassVerdict {
  ReducedForm tx{EvenBinaryForm(1, 0, 1)};
  Resolution fixed_part = Resolution::kNotApplicable;     // target 10
  Resolution hyperelliptic = Resolution::kNotApplicable;  // target 40
  Resolution quadrics = Resolution::kNotApplicable;       // target 90
  bool genus_two_branch_excluded = true;                  // (2B + F)^2 = 10 != 4n

  bool consistent() const {
    return fixed_part != Resolution::kFeasible && hyperelliptic != Resolution::kFeasible &&
           quadrics != Resolution::kFeasible && genus_two_branch_excluded;
  }
};

struct ModelVerdict {
  Integer n;
  std::vector<ClassVerdict> classes;

  bool consistent() const {
    return std::all_of(classes.begin(), classes.end(), [](auto& c) { return c.consistent(); });
  }
  std::string summary() const {
    if (!consistent()) return "DISCREPANCY: an obstruction equation is solvable";
    return n == 1 ? "embedding; quartic surface, no quadrics" : "embedding; quadrics only";
  }
};

/// L^2 = 4 and 8, and the L^2 = 40 surface with T_X = diag(4, 4).
inline bool is_prior_work_surface(const Integer& n, const ReducedForm& tx) {
  return n == 1 || n == 2 || (n == 10 && tx == ReducedForm(EvenBinaryForm(1, 0, 1)));
}

inline ModelVerdict model_verdict(const PolarizationReport& report) {
  if (!report.representable) throw Error("model verdict needs a representable n");
  const Integer& n = report.n;
  ModelVerdict v{n, {}};
  for (const auto& f : report.feasibility.classes) {
    const bool prior = is_prior_work_surface(n, f.tx);
    auto resolve = [&](bool divides, bool solvable, bool excluded, Resolution why) {
      if (!divides) return Resolution::kNotApplicable;
      if (excluded) return why;
      return solvable ? Resolution::kFeasible : Resolution::kInfeasible;
    };
    ClassVerdict cv;
    cv.tx = f.tx;
    cv.fixed_part = resolve(f.n_divides_10, f.div1_solvable, prior, Resolution::kPriorWork);
    if (f.n_divides_40 && !prior && n % 4 == 0)
      cv.hyperelliptic = Resolution::kHalved;
    else
      cv.hyperelliptic = resolve(f.n_divides_40, f.div2_solvable, prior, Resolution::kPriorWork);
    cv.quadrics = resolve(f.n_divides_90, f.quadrics_eq_solvable, false, Resolution::kInfeasible);
    cv.genus_two_branch_excluded = 4 * n != 10;
    v.classes.push_back(cv);
  }
  return v;
}

}  // namespace m20lattice
