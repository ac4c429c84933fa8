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

// The published table of transcendental lattices, transcribed by hand and
// kept verbatim, and a regression check of the pipeline against it.
//
// Some printed cells contradict the rest of their own row (a Q that is not
// 2n^2 - 3n + 1, an I with I^2 (4ac - b^2) != 160n, a c that is not the
// printed Gram entry divided by 4). Those cells carry a footnote. A footnote
// only excuses a mismatch when
//   (1) the printed cell really is inconsistent with its own row, and
//   (2) the value the row itself implies equals what the pipeline computes.
// A footnote on a consistent cell, or an inconsistent cell without one, is
// a failure.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "m20lattice/binary_forms.hpp"
#include "m20lattice/isometry.hpp"
#include "m20lattice/polarization.hpp"

namespace m20lattice {

enum class GoldenField { kRepresentable, kEmbedding, kTx, kIndex, kQuadrics };

inline const char* to_string(GoldenField f) {
  switch (f) {
    case GoldenField::kRepresentable: return "representable";
    case GoldenField::kEmbedding: return "embedding";
    case GoldenField::kTx: return "tx";
    case GoldenField::kIndex: return "index";
    case GoldenField::kQuadrics: return "quadrics";
  }
  return "?";
}

struct Footnote {
  GoldenField field;
  std::string reason;
};

struct GoldenRow {
  long n = 0;
  long l_squared = 0;
  bool representable = true;
  long q = 0;
  std::array<long, 3> tx_gram{};  // printed [[g11, g12], [g12, g22]] as (g11, g12, g22)
  std::array<long, 3> tx{};       // printed (a, b, c)
  std::array<long, 3> embedding{};
  long index_i = 0;
  std::vector<Footnote> footnotes;

  bool has_footnote(GoldenField f) const {
    for (const auto& fn : footnotes)
      if (fn.field == f) return true;
    return false;
  }
};

// clang-format off
inline const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows{
    // n = 1, L -> e. Q printed as 1: the degree-4 model is a quartic in P^3.
    {1, 4, true, 1, {4, 0, 40}, {1, 0, 10}, {1, 0, 0}, 2,
     {{GoldenField::kQuadrics, "model is a quartic surface in P^3; no quadrics contain it"}}},
    // n = 2, L -> e + f.
    {2, 8, true, 3, {8, 4, 12}, {2, 2, 3}, {1, 1, 0}, 4, {}},
    // n = 3, L -> h.
    {3, 12, true, 10, {8, 0, 60}, {2, 0, 15}, {0, 0, 1}, 2, {}},
    // n = 4, L -> 2e.
    {4, 16, true, 21, {4, 0, 40}, {1, 0, 10}, {2, 0, 0}, 4, {}},
    // n = 5, L -> e + 2f and L -> f - h, one class.
    {5, 20, true, 36, {20, 0, 40}, {5, 0, 10}, {1, 2, 0}, 2, {}},
    {5, 20, true, 36, {20, 0, 40}, {5, 0, 10}, {0, 1, -1}, 2, {}},
    // n = 6: no embedding.
    {6, 24, false, 0, {}, {}, {}, 0, {}},
    // n = 7, L -> e + f - h. Q printed as 80, I printed as 4.
    {7, 28, true, 80, {8, 0, 140}, {2, 0, 35}, {1, 1, -1}, 4,
     {{GoldenField::kQuadrics, "printed Q = 80, but 2n^2 - 3n + 1 = 78"},
      {GoldenField::kIndex, "printed I = 4, but 160*7/(4*2*35) = 4 = 2^2"}}},
    // n = 8, L -> 2e + 2f.
    {8, 32, true, 105, {8, 4, 12}, {2, 2, 3}, {2, 2, 0}, 8, {}},
    // n = 9, L -> 3e and L -> 3e + h.
    {9, 36, true, 136, {4, 0, 40}, {1, 0, 10}, {3, 0, 0}, 6, {}},
    {9, 36, true, 136, {36, 12, 44}, {9, 6, 11}, {3, 0, 1}, 2, {}},
    // n = 10, L -> e + f + 2h and L -> e + 3f.
    {10, 40, true, 171, {4, 0, 4}, {1, 0, 1}, {1, 1, 2}, 20, {}},
    {10, 40, true, 171, {20, 0, 20}, {5, 0, 5}, {1, 3, 0}, 4, {}},
    // n = 15, L -> 2e + 2f - h. I printed as 5.
    {15, 60, true, 406, {8, 0, 12}, {2, 0, 3}, {2, 2, -1}, 5,
     {{GoldenField::kIndex, "printed I = 5, but 160*15/(4*2*3) = 100 = 10^2"}}},
    // n = 15, L -> e - 2h. c printed as 25 beside the Gram entry 120 = 4*30;
    // I printed as 1.
    {15, 60, true, 406, {20, 0, 120}, {5, 0, 25}, {1, 0, -2}, 1,
     {{GoldenField::kTx, "printed c = 25, but the printed Gram entry is 120 = 4*30"},
      {GoldenField::kIndex, "printed I = 1, but 160*15/(4*5*30) = 4 = 2^2"}}},
    // n = 18, L -> 3e + 3f and L -> 3e + 3f + 2h.
    {18, 72, true, 595, {8, 4, 12}, {2, 2, 3}, {3, 3, 0}, 12, {}},
    {18, 72, true, 595, {8, 4, 92}, {2, 2, 23}, {3, 3, 2}, 4, {}},
    // n = 30, L -> 3e + f - 2h.
    {30, 120, true, 1711, {20, 10, 20}, {5, 5, 5}, {3, 1, -2}, 8, {}},
    // n = 45, two vectors listed for each of two classes.
    {45, 180, true, 3916, {20, 0, 40}, {5, 0, 10}, {0, 3, -3}, 6, {}},
    {45, 180, true, 3916, {20, 0, 40}, {5, 0, 10}, {3, 6, 0}, 6, {}},
    {45, 180, true, 3916, {20, 0, 360}, {5, 0, 90}, {4, 6, 1}, 2, {}},
    {45, 180, true, 3916, {20, 0, 360}, {5, 0, 90}, {3, 4, 4}, 2, {}},
    // n = 90, four classes.
    {90, 360, true, 15931, {20, 0, 20}, {5, 0, 5}, {3, 9, 0}, 12, {}},
    {90, 360, true, 15931, {4, 0, 4}, {1, 0, 1}, {3, 3, 6}, 60, {}},
    {90, 360, true, 15931, {20, 0, 180}, {5, 0, 45}, {3, 7, -2}, 4, {}},
    {90, 360, true, 15931, {8, 4, 20}, {2, 2, 5}, {3, 3, -4}, 20, {}},
  };
  return rows;
}
// clang-format on

struct GoldenDiff {
  std::size_t row = 0;
  long n = 0;
  GoldenField field{};
  std::string printed;
  std::string computed;
  std::string note;
};

struct GoldenCheckResult {
  std::size_t rows_checked = 0;
  std::vector<GoldenDiff> mismatches;  // failures
  std::vector<GoldenDiff> errata;      // excused by a verified footnote

  bool passed() const { return mismatches.empty(); }
};

namespace detail {

inline std::string triple(long a, long b, long c) {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// The (a, b, c) implied by the printed Gram matrix.
inline std::array<long, 3> tx_from_printed_gram(const GoldenRow& row) {
  return {row.tx_gram[0] / 4, row.tx_gram[1] / 2, row.tx_gram[2] / 4};
}

/// Value a cell should hold according to the rest of its row, or nullopt if
/// the row does not determine one.
inline std::optional<Integer> implied_quadrics(const GoldenRow& row) {
  return Integer(2 * row.n * row.n - 3 * row.n + 1);
}

inline std::optional<Integer> implied_index(const GoldenRow& row) {
  auto t = tx_from_printed_gram(row);
  Integer d = 4 * Integer(t[0]) * t[2] - Integer(t[1]) * t[1];
  Integer num = 160 * Integer(row.n);
  if (d <= 0 || num % d != 0 || !is_perfect_square(Integer(num / d))) return std::nullopt;
  return isqrt(Integer(num / d));
}

}  // namespace detail

/// Checks each row against classify(n). Reports are computed once per n.
inline GoldenCheckResult golden_check(const std::vector<GoldenRow>& rows = golden_rows()) {
  GoldenCheckResult result;
  std::map<long, PolarizationReport> reports;

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const GoldenRow& row = rows[k];
    ++result.rows_checked;
    auto it = reports.find(row.n);
    if (it == reports.end()) it = reports.emplace(row.n, classify(Integer(row.n))).first;
    const PolarizationReport& rep = it->second;

    // A cell that disagrees with the pipeline is excused only by a footnote
    // whose claim checks out against the row's own data.
    auto record = [&](GoldenField field, const std::string& printed, const std::string& computed,
                      bool printed_inconsistent, bool implied_matches) {
      GoldenDiff d{k, row.n, field, printed, computed, ""};
      const Footnote* fn = nullptr;
      for (const auto& f : row.footnotes)
        if (f.field == field) fn = &f;
      if (fn && printed_inconsistent && implied_matches) {
        d.note = fn->reason;
        result.errata.push_back(d);
      } else {
        d.note = fn ? "footnote present but not borne out by the row" : "no footnote";
        result.mismatches.push_back(d);
      }
    };
    auto footnote_unused = [&](GoldenField field) {
      if (row.has_footnote(field))
        result.mismatches.push_back(
            {k, row.n, field, "", "", "footnote on a cell that matches the computation"});
    };

    if (rep.representable != row.representable) {
      result.mismatches.push_back({k, row.n, GoldenField::kRepresentable, row.representable ? "yes" : "no",
                                   rep.representable ? "yes" : "no", ""});
      continue;
    }
    if (!row.representable) continue;

    const LatticeVector v{row.embedding[0], row.embedding[1], row.embedding[2]};
    const OrbitClass* match = nullptr;
    for (const auto& oc : rep.orbits)
      if (same_orbit(v, oc.canonical)) match = &oc;
    if (!match) {
      result.mismatches.push_back({k, row.n, GoldenField::kEmbedding, detail::str(v), "no orbit", ""});
      continue;
    }

    // tx: compare up to GL2 normalisation.
    {
      const auto printed = canonical_gl2(EvenBinaryForm(row.tx[0], row.tx[1], row.tx[2]));
      const auto implied_t = detail::tx_from_printed_gram(row);
      const auto implied = canonical_gl2(EvenBinaryForm(implied_t[0], implied_t[1], implied_t[2]));
      if (!(printed == match->tx))
        record(GoldenField::kTx, detail::str(printed), detail::str(match->tx), !(printed == implied),
               implied == match->tx);
      else
        footnote_unused(GoldenField::kTx);
    }

    // index
    {
      const std::string computed = match->index ? match->index->str() : "anomaly";
      if (!match->index || *match->index != row.index_i) {
        const auto implied = detail::implied_index(row);
        record(GoldenField::kIndex, std::to_string(row.index_i), computed, implied != Integer(row.index_i),
               implied.has_value() && match->index && *implied == *match->index);
      } else {
        footnote_unused(GoldenField::kIndex);
      }
    }

    // quadric count
    {
      const Integer& q = rep.quadrics.count;
      if (q != row.q) {
        const auto implied = detail::implied_quadrics(row);
        record(GoldenField::kQuadrics, std::to_string(row.q), q.str(), implied != Integer(row.q),
               implied.has_value() && *implied == q);
      } else {
        footnote_unused(GoldenField::kQuadrics);
      }
    }
  }
  return result;
}

inline std::string render_golden_result(const GoldenCheckResult& r) {
  std::ostringstream os;
  os << "golden rows checked: " << r.rows_checked << "\n";
  for (const auto& d : r.errata)
    os << "footnote n=" << d.n << " row " << d.row << " " << to_string(d.field) << ": printed "
       << d.printed << ", computed " << d.computed << " (" << d.note << ")\n";
  for (const auto& d : r.mismatches)
    os << "MISMATCH n=" << d.n << " row " << d.row << " " << to_string(d.field) << ": printed "
       << d.printed << ", computed " << d.computed << " (" << d.note << ")\n";
  os << (r.passed() ? "golden check: PASS" : "golden check: FAIL") << "\n";
  return os.str();
}

}  // namespace m20lattice
