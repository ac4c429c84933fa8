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


// m20lattice command-line tool.
//
//   classify     --n N [--format text|json|csv]
//   table        --max-n N [--format ...] [--parallel K]
//   golden-check [--format text|json]
//   scan         --max-n N [--format ...] [--parallel K]
//   veronese     [--n N] [--r R] [--format text|json|csv]
//   quadrics     [--file PATH]
//
// Exit codes: 0 ok, 1 anomaly or failed check, 2 not representable
// (classify only), 64 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "m20lattice/quadric_data.hpp"
#include "m20lattice/golden.hpp"
#include "m20lattice/polarization.hpp"
#include "m20lattice/report.hpp"
#include "m20lattice/scan.hpp"
#include "m20lattice/veronese.hpp"

namespace {

using namespace m20lattice;

constexpr int kExitUsage = 64;
constexpr long kMaxN = 1L << 40;

int run_classify(long n, Format fmt) {
  const auto r = classify(Integer(n));
  switch (fmt) {
    case Format::kText: std::cout << render_report_text(r); break;
    case Format::kJson: std::cout << report_json(r).dump(2) << "\n"; break;
    case Format::kCsv: std::cout << render_csv(table_rows_for(r)); break;
  }
  return classify_exit_code(r);
}

int run_table(long max_n, Format fmt, unsigned threads) {
  const auto rows = table_rows(max_n, threads);
  switch (fmt) {
    case Format::kText: std::cout << render_table_text(rows); break;
    case Format::kJson: std::cout << table_json(rows).dump(2) << "\n"; break;
    case Format::kCsv: std::cout << render_csv(rows); break;
  }
  return 0;
}

int run_golden(Format fmt) {
  const auto result = golden_check();
  if (fmt == Format::kJson) {
    auto diffs = [](const std::vector<GoldenDiff>& v) {
      auto a = nlohmann::ordered_json::array();
      for (const auto& d : v)
        a.push_back({{"n", d.n}, {"row", d.row}, {"field", to_string(d.field)}, {"printed", d.printed},
                     {"computed", d.computed}, {"note", d.note}});
      return a;
    };
    nlohmann::ordered_json j;
    j["rows_checked"] = result.rows_checked;
    j["passed"] = result.passed();
    j["mismatches"] = diffs(result.mismatches);
    j["errata"] = diffs(result.errata);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << version_banner() << "\n" << render_golden_result(result);
  }
  return result.passed() ? 0 : 1;
}

int run_scan(long max_n, Format fmt, unsigned threads) {
  const auto s = scan(max_n, threads);
  switch (fmt) {
    case Format::kText: std::cout << render_scan_text(s); break;
    case Format::kJson: std::cout << scan_json(s).dump(2) << "\n"; break;
    case Format::kCsv: std::cout << render_scan_csv(s); break;
  }
  return s.anomalies.empty() ? 0 : 1;
}

int run_veronese(long n, long r, Format fmt) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  std::ostringstream text, csv;
  csv << "kind,param,veronese_ambient,hyperplanes,ambient_after\n";
  if (n > 0) {
    const auto d = doubled_model_dims(Integer(n));
    const auto q = quadrics_on_veronese2(d.ambient_before);
    j["doubled"] = {{"n", n},
                    {"ambient_before", detail::json_int(d.ambient_before)},
                    {"veronese_ambient", detail::json_int(d.veronese_ambient)},
                    {"veronese_quadrics", detail::json_int(q)},
                    {"hyperplanes", detail::json_int(d.hyperplanes)},
                    {"ambient_after", detail::json_int(d.ambient_after)}};
    text << "L^2 = " << 16 * n << " from L^2 = " << 4 * n << ": P^" << d.ambient_before << " -> P^"
         << d.veronese_ambient << " (" << q << " quadrics on the Veronese image), " << d.hyperplanes
         << " hyperplanes, model in P^" << d.ambient_after << "\n";
    csv << "doubled," << n << ',' << d.veronese_ambient << ',' << d.hyperplanes << ',' << d.ambient_after << "\n";
  }
  if (r > 0) {
    const auto d = scaled_quartic_dims(Integer(r));
    const auto note = scaled_quartic_note(Integer(r));
    j["scaled_quartic"] = {{"r", r},
                           {"veronese_ambient", detail::json_int(d.veronese_ambient)},
                           {"hyperplanes", detail::json_int(d.hyperplanes)},
                           {"ambient_after", detail::json_int(d.ambient_after)}};
    if (!note.empty()) j["scaled_quartic"]["note"] = note;
    text << "L^2 = " << 4 * r * r << " as nu_" << r << " of the quartic: P^3 -> P^" << d.veronese_ambient << ", "
         << d.hyperplanes << " hyperplanes, model in P^" << d.ambient_after << "\n";
    if (!note.empty()) text << "  note: " << note << "\n";
    csv << "scaled_quartic," << r << ',' << d.veronese_ambient << ',' << d.hyperplanes << ',' << d.ambient_after
        << "\n";
  }
  switch (fmt) {
    case Format::kText: std::cout << version_banner() << "\n" << text.str(); break;
    case Format::kJson: std::cout << j.dump(2) << "\n"; break;
    case Format::kCsv: std::cout << csv.str(); break;
  }
  return 0;
}

int run_quadrics(const std::string& path) {
  const auto qs = load_quadrics(path);
  std::cout << version_banner() << "\n";
  for (const auto& q : qs) std::cout << q.name << ": " << q.terms.size() << " terms\n";
  std::cout << qs.size() << " quadrics parsed\n";
  return qs.size() == 10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant polarizations of K3 surfaces with an M20 action"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_banner());

  long n = 0, max_n = 0, r = 0;
  unsigned threads = 1;
  std::string format = "text";
  std::string file;
#ifdef M20LATTICE_DATA_DIR
  file = default_quadrics_path();
#endif
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* classify_cmd = app.add_subcommand("classify", "classify L^2 = 4n");
  classify_cmd->add_option("--n", n, "degree parameter, L^2 = 4n")->required()->check(CLI::Range(1L, kMaxN));
  classify_cmd->add_option("--format", format)->check(formats);

  auto* table_cmd = app.add_subcommand("table", "one row per (n, T_X class)");
  table_cmd->add_option("--max-n", max_n)->required()->check(CLI::Range(1L, kMaxN));
  table_cmd->add_option("--format", format)->check(formats);
  table_cmd->add_option("--parallel", threads, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* golden_cmd = app.add_subcommand("golden-check", "compare against the published table");
  golden_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* scan_cmd = app.add_subcommand("scan", "summary over n = 1..max-n");
  scan_cmd->add_option("--max-n", max_n)->required()->check(CLI::Range(1L, kMaxN));
  scan_cmd->add_option("--format", format)->check(formats);
  scan_cmd->add_option("--parallel", threads, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* veronese_cmd = app.add_subcommand("veronese", "Veronese model dimensions");
  veronese_cmd->add_option("--n", n, "doubled model of L^2 = 16n")->check(CLI::Range(1L, kMaxN));
  veronese_cmd->add_option("--r", r, "nu_r of the quartic, L^2 = 4r^2")->check(CLI::Range(3L, 1000000L));
  veronese_cmd->add_option("--format", format)->check(formats);

  auto* quadrics_cmd = app.add_subcommand("quadrics", "validate the degree-12 quadric data file");
  quadrics_cmd->add_option("--file", file)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (veronese_cmd->parsed() && n == 0 && r == 0) {
    std::cerr << "veronese: give --n and/or --r\n";
    return kExitUsage;
  }

  try {
    const Format fmt = parse_format(format);
    if (classify_cmd->parsed()) return run_classify(n, fmt);
    if (table_cmd->parsed()) return run_table(max_n, fmt, threads);
    if (golden_cmd->parsed()) return run_golden(fmt);
    if (scan_cmd->parsed()) return run_scan(max_n, fmt, threads);
    if (veronese_cmd->parsed()) return run_veronese(n, r, fmt);
    if (quadrics_cmd->parsed()) return run_quadrics(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
