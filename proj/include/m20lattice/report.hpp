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

// Rendering of classification reports and tables as text, JSON and CSV.
//
// Data formats (JSON, CSV) are byte-for-byte deterministic and carry no
// banner. Text output starts with a one-line version banner.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "m20lattice/parallel.hpp"
#include "m20lattice/polarization.hpp"

namespace m20lattice {

inline constexpr const char* kVersion = "0.1.0";

inline std::string version_banner() { return std::string("m20lattice ") + kVersion; }

enum class Format { kText, kJson, kCsv };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw Error("unknown format: " + s);
}

namespace detail {

/// JSON numbers for anything that fits in 64 bits, decimal strings beyond.
inline nlohmann::ordered_json json_int(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return to_int64(x);
  return x.str();
}

inline nlohmann::ordered_json json_vector(const LatticeVector& v) {
  return nlohmann::ordered_json::array({json_int(v.lambda), json_int(v.mu), json_int(v.delta)});
}

inline nlohmann::ordered_json json_form(const ReducedForm& f) {
  const auto g = f.gram();
  nlohmann::ordered_json j;
  j["a"] = json_int(f.a());
  j["b"] = json_int(f.b());
  j["c"] = json_int(f.c());
  j["gram"] = nlohmann::ordered_json::array({nlohmann::ordered_json::array({json_int(g.g11), json_int(g.g12)}),
                                             nlohmann::ordered_json::array({json_int(g.g12), json_int(g.g22)})});
  return j;
}

inline std::string vec_str(const LatticeVector& v) {
  std::ostringstream os;
  os << '(' << v.lambda << ',' << v.mu << ',' << v.delta << ')';
  return os.str();
}

inline std::string form_str(const ReducedForm& f) {
  std::ostringstream os;
  os << '(' << f.a() << ',' << f.b() << ',' << f.c() << ')';
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-n reports

/// Exit status for `classify`: 0 representable, 2 not, 1 on any anomaly.
inline int classify_exit_code(const PolarizationReport& r) {
  if (!r.anomalies.empty()) return 1;
  return r.representable ? 0 : 2;
}

inline nlohmann::ordered_json report_json(const PolarizationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = detail::json_int(r.n);
  j["l_squared"] = detail::json_int(r.l_squared);
  j["representable"] = r.representable;
  auto orbits = nlohmann::ordered_json::array();
  for (const auto& oc : r.orbits) {
    nlohmann::ordered_json o;
    o["canonical"] = detail::json_vector(oc.canonical);
    o["orbit_size"] = oc.orbit_size;
    o["divisibility"] = detail::json_int(oc.divisibility);
    o["tx"] = detail::json_form(oc.tx);
    o["discriminant"] = detail::json_int(oc.discriminant);
    o["index"] = oc.index ? detail::json_int(*oc.index) : nlohmann::ordered_json(nullptr);
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  j["quadric_count"] = detail::json_int(r.quadrics.count);
  j["ambient_dim"] = detail::json_int(r.ambient_dim);
  j["feasibility"] = {{"div1", r.feasibility.any_div1()},
                      {"div2", r.feasibility.any_div2()},
                      {"eq90", r.feasibility.any_eq90()}};
  if (r.representable) j["verdict"] = model_verdict(r).summary();
  j["anomalies"] = r.anomalies;
  return j;
}

inline std::string render_report_text(const PolarizationReport& r) {
  std::ostringstream os;
  os << version_banner() << "\n";
  os << "n = " << r.n << ", L^2 = " << r.l_squared << "\n";
  if (!r.representable) {
    auto [i, m] = strip_powers_of_four(r.n);
    os << "no embedding (n = 16j+6 family)";
    if (i > 0) os << ", n = 4^" << i << " * " << m;
    os << "\n";
  } else {
    os << "model in P^" << r.ambient_dim << ", " << r.solution_count << " solution vectors, "
       << r.orbits.size() << (r.orbits.size() == 1 ? " orbit" : " orbits") << "\n";
    for (const auto& oc : r.orbits) {
      os << "  orbit " << detail::vec_str(oc.canonical) << "  size " << oc.orbit_size << "  divisibility "
         << oc.divisibility << "\n";
      os << "    T_X = " << detail::form_str(oc.tx) << "  gram " << oc.tx.gram() << "  d = " << oc.discriminant
         << "  I = " << (oc.index ? oc.index->str() : std::string("?")) << "\n";
    }
    os << "quadrics: " << r.quadrics.count << " = " << r.quadrics.total_quadrics << " - "
       << r.quadrics.sections_2l;
    if (r.quartic_footnote()) os << "  (quartic surface in P^3)";
    os << "\n";
    for (const auto& cv : model_verdict(r).classes) {
      os << "  " << detail::form_str(cv.tx) << ": fixed part " << to_string(cv.fixed_part) << "; hyperelliptic "
         << to_string(cv.hyperelliptic) << "; quadrics " << to_string(cv.quadrics) << "\n";
    }
    os << "verdict: " << model_verdict(r).summary() << "\n";
  }
  for (const auto& a : r.anomalies) os << "ANOMALY: " << a << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Tables

/// One row per (n, T_X class), with the smallest canonical embedding of
/// that class.
struct TableRow {
  Integer n, l2, q, a, b, c, lambda, mu, delta, index;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr const char* kCsvHeader = "n,l2,q,a,b,c,lambda,mu,delta,index";

inline std::vector<TableRow> table_rows_for(const PolarizationReport& r) {
  std::vector<TableRow> rows;
  if (!r.representable) return rows;
  for (const auto& tx : r.tx_classes) {
    for (const auto& oc : r.orbits) {
      if (!(oc.tx == tx)) continue;
      if (!oc.index) throw IndexAnomaly(r.n, oc.discriminant);
      rows.push_back({r.n, r.l_squared, r.quadrics.count, tx.a(), tx.b(), tx.c(), oc.canonical.lambda,
                      oc.canonical.mu, oc.canonical.delta, *oc.index});
      break;  // orbits are sorted, so this is the smallest
    }
  }
  return rows;
}

inline std::vector<TableRow> table_rows(long max_n, unsigned threads = 1) {
  if (max_n < 1) throw Error("max_n must be positive");
  auto per_n = parallel_map(1, max_n, threads, [](long n) { return table_rows_for(classify(Integer(n))); });
  std::vector<TableRow> rows;
  for (auto& v : per_n) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

inline std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.l2 << ',' << r.q << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.lambda << ','
       << r.mu << ',' << r.delta << ',' << r.index << "\n";
  return os.str();
}

namespace detail {

inline Integer parse_csv_int(const std::string& s, std::size_t line) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw Error("csv line " + std::to_string(line) + ": not an integer: '" + s + "'");
  return Integer(s);
}

}  // namespace detail

/// Inverse of render_csv. Rejects a wrong header, CR characters, and rows
/// without exactly ten integer fields.
inline std::vector<TableRow> parse_csv(const std::string& text) {
  if (text.find('\r') != std::string::npos) throw Error("csv must use LF line endings");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error("csv header mismatch");
  std::vector<TableRow> rows;
  for (std::size_t no = 2; std::getline(in, line); ++no) {
    std::vector<Integer> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(detail::parse_csv_int(cell, no));
    if (f.size() != 10 || line.back() == ',')
      throw Error("csv line " + std::to_string(no) + ": expected 10 fields");
    rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9]});
  }
  return rows;
}

inline nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = detail::json_int(r.n);
    j["l2"] = detail::json_int(r.l2);
    j["q"] = detail::json_int(r.q);
    j["a"] = detail::json_int(r.a);
    j["b"] = detail::json_int(r.b);
    j["c"] = detail::json_int(r.c);
    j["lambda"] = detail::json_int(r.lambda);
    j["mu"] = detail::json_int(r.mu);
    j["delta"] = detail::json_int(r.delta);
    j["index"] = detail::json_int(r.index);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string render_table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << version_banner() << "\n";
  auto cell = [&](const auto& x, int w) { os << std::setw(w) << x; };
  const char* names[] = {"n", "L^2", "Q", "a", "b", "c", "lambda", "mu", "delta", "I"};
  const int widths[] = {5, 6, 8, 4, 4, 6, 7, 5, 6, 5};
  for (int k = 0; k < 10; ++k) cell(names[k], widths[k]);
  os << "\n";
  for (const auto& r : rows) {
    cell(r.n, 5), cell(r.l2, 6), cell(r.q, 8), cell(r.a, 4), cell(r.b, 4), cell(r.c, 6);
    cell(r.lambda, 7), cell(r.mu, 5), cell(r.delta, 6), cell(r.index, 5);
    os << "\n";
  }
  return os.str();
}

}  // namespace m20lattice
