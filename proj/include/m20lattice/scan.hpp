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

// Range scans: classify every n up to a bound and summarise.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "m20lattice/parallel.hpp"
#include "m20lattice/polarization.hpp"
#include "m20lattice/report.hpp"
#include "m20lattice/representability.hpp"

namespace m20lattice {

struct ScanSummary {
  long max_n = 0;
  std::size_t representable = 0;
  std::vector<long> non_representable;
  std::size_t orbit_count = 0;
  std::set<ReducedForm> tx_classes;
  std::vector<std::string> anomalies;  // prefixed with the n they came from
  std::vector<PrimeWitness<Integer>> prime_witnesses;
};

/// Delta = 0 witnesses for every prime p = 1 (mod 4) with p <= max_p.
inline std::vector<PrimeWitness<Integer>> prime_witnesses_up_to(long max_p) {
  std::vector<PrimeWitness<Integer>> out;
  for (long p = 5; p <= max_p; p += 4) {
    if (!is_prime(p)) continue;
    const auto sq = two_squares(Integer(p));
    out.push_back({p, {sq.small, sq.large, 0}});
  }
  return out;
}

inline ScanSummary scan(long max_n, unsigned threads = 1) {
  if (max_n < 1) throw Error("max_n must be positive");
  auto reports = parallel_map(1, max_n, threads, [](long n) { return classify(Integer(n)); });
  ScanSummary s;
  s.max_n = max_n;
  for (const auto& r : reports) {
    if (r.representable) {
      ++s.representable;
    } else {
      s.non_representable.push_back(to_int64(r.n));
    }
    s.orbit_count += r.orbits.size();
    s.tx_classes.insert(r.tx_classes.begin(), r.tx_classes.end());
    for (const auto& a : r.anomalies) s.anomalies.push_back("n=" + r.n.str() + ": " + a);
  }
  s.prime_witnesses = prime_witnesses_up_to(max_n);
  return s;
}

inline nlohmann::ordered_json scan_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["max_n"] = s.max_n;
  j["representable"] = s.representable;
  j["non_representable"] = s.non_representable;
  j["orbit_count"] = s.orbit_count;
  j["distinct_tx"] = s.tx_classes.size();
  j["anomaly_count"] = s.anomalies.size();
  j["anomalies"] = s.anomalies;
  auto w = nlohmann::ordered_json::array();
  for (const auto& pw : s.prime_witnesses)
    w.push_back({{"p", detail::json_int(pw.p)}, {"vector", detail::json_vector(pw.vector)}});
  j["prime_witnesses"] = std::move(w);
  return j;
}

inline std::string render_scan_text(const ScanSummary& s) {
  std::ostringstream os;
  os << version_banner() << "\n";
  os << "scanned n = 1.." << s.max_n << "\n";
  os << "representable: " << s.representable << "\n";
  os << "non-representable: " << s.non_representable.size() << " {";
  for (std::size_t k = 0; k < s.non_representable.size(); ++k) os << (k ? ", " : "") << s.non_representable[k];
  os << "}\n";
  os << "orbits: " << s.orbit_count << "\n";
  os << "distinct T_X classes: " << s.tx_classes.size() << "\n";
  os << "anomalies: " << s.anomalies.size() << "\n";
  for (const auto& a : s.anomalies) os << "  " << a << "\n";
  os << "prime witnesses (p = 1 mod 4, p <= " << s.max_n << "): " << s.prime_witnesses.size() << "\n";
  for (const auto& pw : s.prime_witnesses) os << "  " << pw.p << " " << detail::vec_str(pw.vector) << "\n";
  return os.str();
}

/// key,value lines, so the summary is still integer-only CSV.
inline std::string render_scan_csv(const ScanSummary& s) {
  std::ostringstream os;
  os << "key,value\n";
  os << "max_n," << s.max_n << "\n";
  os << "representable," << s.representable << "\n";
  os << "non_representable," << s.non_representable.size() << "\n";
  os << "orbits," << s.orbit_count << "\n";
  os << "distinct_tx," << s.tx_classes.size() << "\n";
  os << "anomalies," << s.anomalies.size() << "\n";
  os << "prime_witnesses," << s.prime_witnesses.size() << "\n";
  return os.str();
}

}  // namespace m20lattice
