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


#include <gtest/gtest.h>

#include "m20lattice/quadric_data.hpp"
#include "m20lattice/golden.hpp"
#include "m20lattice/report.hpp"
#include "m20lattice/scan.hpp"
#include "test_util.hpp"

namespace {

using namespace m20lattice;

// --- golden table ----------------------------------------------------------

GoldenRow row_for(long n, std::size_t which = 0) {
  for (const auto& r : golden_rows())
    if (r.n == n && which-- == 0) return r;
  throw std::logic_error("no such golden row");
}

TEST(Golden, TableCoversEveryPublishedDegree) {
  std::set<long> ns;
  for (const auto& r : golden_rows()) ns.insert(r.n);
  EXPECT_EQ(ns, (std::set<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 18, 30, 45, 90}));
  EXPECT_EQ(golden_rows().size(), 26u);
}

TEST(Golden, FullRunPassesWithExactlyTheDeclaredFootnotes) {
  auto r = golden_check();
  EXPECT_TRUE(r.passed()) << render_golden_result(r);
  EXPECT_EQ(r.rows_checked, golden_rows().size());
  std::vector<std::pair<long, GoldenField>> got;
  for (const auto& d : r.errata) got.emplace_back(d.n, d.field);
  EXPECT_EQ(got, (std::vector<std::pair<long, GoldenField>>{{1, GoldenField::kQuadrics},
                                                             {7, GoldenField::kIndex},
                                                             {7, GoldenField::kQuadrics},
                                                             {15, GoldenField::kIndex},
                                                             {15, GoldenField::kTx},
                                                             {15, GoldenField::kIndex}}));
}

TEST(Golden, MutatedIndexFailsNamingIndex) {
  auto row = row_for(3);
  row.index_i = 3;
  auto r = golden_check({row});
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches[0].field, GoldenField::kIndex);
  EXPECT_NE(render_golden_result(r).find("index"), std::string::npos);
}

TEST(Golden, MutatedFormFailsNamingTx) {
  auto row = row_for(3);
  row.tx = {2, 0, 16};
  row.tx_gram = {8, 0, 64};
  auto r = golden_check({row});
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.mismatches[0].field, GoldenField::kTx);
}

TEST(Golden, EmbeddingOutsideEveryOrbitFails) {
  auto row = row_for(3);
  row.embedding = {1, 0, 0};
  auto r = golden_check({row});
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches[0].field, GoldenField::kEmbedding);
}

TEST(Golden, UndeclaredInconsistencyFails) {
  auto row = row_for(7);
  row.footnotes.clear();
  auto r = golden_check({row});
  EXPECT_EQ(r.mismatches.size(), 2u);  // index and quadrics
  EXPECT_TRUE(r.errata.empty());
}

TEST(Golden, FootnoteOnAConsistentCellFails) {
  auto row = row_for(3);
  row.footnotes.push_back({GoldenField::kIndex, "spurious"});
  EXPECT_FALSE(golden_check({row}).passed());
}

TEST(Golden, FootnoteNotBorneOutByTheRowFails) {
  // The printed Gram matrix is changed so that it no longer implies the
  // computed value; the footnote must then stop excusing the cell.
  auto row = row_for(15, 1);
  row.tx_gram = {20, 0, 100};
  auto r = golden_check({row});
  EXPECT_FALSE(r.passed());
  bool tx = false;
  for (const auto& d : r.mismatches) tx |= d.field == GoldenField::kTx;
  EXPECT_TRUE(tx);
}

TEST(Golden, NotRepresentableRow) {
  auto row = row_for(6);
  EXPECT_TRUE(golden_check({row}).passed());
  row.representable = true;
  auto r = golden_check({row});
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches[0].field, GoldenField::kRepresentable);
}

TEST(Golden, FortyFiveThirdForm) {
  auto row = row_for(45, 2);
  EXPECT_EQ(row.embedding, (std::array<long, 3>{4, 6, 1}));
  EXPECT_EQ(row.tx, (std::array<long, 3>{5, 0, 90}));
  EXPECT_TRUE(golden_check({row}).passed());
}

// --- reports ---------------------------------------------------------------

TEST(Report, JsonSchema) {
  auto j = report_json(classify(3));
  for (const char* key : {"n", "l_squared", "representable", "orbits", "quadric_count", "ambient_dim", "feasibility"})
    EXPECT_TRUE(j.contains(key)) << key;
  const auto& o = j["orbits"][0];
  for (const char* key : {"canonical", "orbit_size", "divisibility", "tx", "discriminant", "index"})
    EXPECT_TRUE(o.contains(key)) << key;
  EXPECT_EQ(o["tx"]["gram"].dump(), "[[8,0],[0,60]]");
  EXPECT_EQ(o["tx"]["a"], 2);
  EXPECT_EQ(o["canonical"].dump(), "[-1,-1,-1]");
  EXPECT_EQ(j["feasibility"].dump(), R"({"div1":false,"div2":false,"eq90":false})");
}

TEST(Report, TextForNonRepresentable) {
  auto r = classify(6);
  EXPECT_NE(render_report_text(r).find("no embedding (n = 16j+6 family)"), std::string::npos);
  EXPECT_EQ(classify_exit_code(r), 2);
  EXPECT_EQ(classify_exit_code(classify(3)), 0);
  EXPECT_EQ(render_report_text(r).rfind(version_banner(), 0), 0u);
}

TEST(Table, FirstRow) {
  auto rows = table_rows(1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (TableRow{1, 4, 0, 1, 0, 10, -1, 0, 0, 2}));
}

TEST(Table, ReproducesPublishedClassesUpToTen) {
  std::set<std::tuple<long, Integer, Integer, Integer>> mine, published;
  for (const auto& r : table_rows(10)) mine.emplace(to_int64(r.n), r.a, r.b, r.c);
  for (const auto& g : golden_rows())
    if (g.n <= 10 && g.representable) published.emplace(g.n, g.tx[0], g.tx[1], g.tx[2]);
  EXPECT_EQ(mine, published);
}

TEST(Table, ParallelMatchesSerialByteForByte) {
  EXPECT_EQ(render_csv(table_rows(200, 1)), render_csv(table_rows(200, 4)));
  EXPECT_EQ(table_json(table_rows(50, 1)).dump(), table_json(table_rows(50, 3)).dump());
}

TEST(Csv, RoundTripTable) {
  auto rows = table_rows(120);
  auto text = render_csv(rows);
  EXPECT_EQ(text.rfind(std::string(kCsvHeader) + "\n", 0), 0u);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(parse_csv(text), rows);
}

TEST(CsvProperty, RoundTripRandomRows) {
  auto g = testutil::rng(40);
  for (int k = 0; k < 200; ++k) {
    std::vector<TableRow> rows;
    for (int i = testutil::uniform(g, 0, 5); i > 0; --i) {
      auto f = [&] {
        Integer x = testutil::uniform(g, -1000000, 1000000);
        return testutil::uniform(g, 0, 3) == 0 ? x * x * x * x * x : x;
      };
      rows.push_back({f(), f(), f(), f(), f(), f(), f(), f(), f(), f()});
    }
    EXPECT_EQ(parse_csv(render_csv(rows)), rows);
  }
}

TEST(Csv, RejectsMalformedInput) {
  const std::string h = std::string(kCsvHeader) + "\n";
  EXPECT_THROW(parse_csv("n,l2\n"), Error);
  EXPECT_THROW(parse_csv(h + "1,4,0,1,0,10,-1,0,0\n"), Error);
  EXPECT_THROW(parse_csv(h + "1,4,0,1,0,10,-1,0,0,2,\n"), Error);
  EXPECT_THROW(parse_csv(h + "1,4,0,1,0,10,-1,0,0,x\n"), Error);
  EXPECT_THROW(parse_csv(h + "1,4,0,1,0,10,-1,0,0,2.5\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\r\n"), Error);
}

TEST(Formats, JsonAndCsvCarryTheSameRows) {
  auto rows = table_rows(100);
  auto j = table_json(rows);
  auto back = parse_csv(render_csv(rows));
  ASSERT_EQ(j.size(), back.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    const auto& r = back[k];
    const Integer fields[] = {r.n, r.l2, r.q, r.a, r.b, r.c, r.lambda, r.mu, r.delta, r.index};
    const char* names[] = {"n", "l2", "q", "a", "b", "c", "lambda", "mu", "delta", "index"};
    for (int f = 0; f < 10; ++f) EXPECT_EQ(Integer(j[k][names[f]].get<long long>()), fields[f]);
  }
}

TEST(Json, LargeIntegersBecomeStrings) {
  Integer big = Integer(1) << 80;
  EXPECT_TRUE(detail::json_int(big).is_string());
  EXPECT_EQ(detail::json_int(big).get<std::string>(), big.str());
  EXPECT_TRUE(detail::json_int(Integer(-5)).is_number_integer());
}

// --- scans -----------------------------------------------------------------

TEST(Scan, Summary) {
  auto s = scan(100);
  ASSERT_GE(s.non_representable.size(), 4u);
  EXPECT_EQ(std::vector<long>(s.non_representable.begin(), s.non_representable.begin() + 4),
            (std::vector<long>{6, 22, 24, 38}));
  EXPECT_EQ(s.representable + s.non_representable.size(), 100u);
  EXPECT_TRUE(s.anomalies.empty());
  ASSERT_FALSE(s.prime_witnesses.empty());
  EXPECT_EQ(s.prime_witnesses[0].p, 5);
  EXPECT_EQ(s.prime_witnesses[0].vector, (LatticeVector{1, 2, 0}));
  EXPECT_EQ(s.prime_witnesses.back().p, 97);
}

TEST(Scan, NoAnomaliesToFiveHundredAndDeterministic) {
  auto a = scan(500, 1);
  auto b = scan(500, 3);
  EXPECT_TRUE(a.anomalies.empty());
  EXPECT_EQ(render_scan_text(a), render_scan_text(b));
  EXPECT_EQ(scan_json(a).dump(), scan_json(b).dump());
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_map(1, 50, 4,
                            [](long n) {
                              if (n == 17) throw Error("boom");
                              return n;
                            }),
               Error);
  EXPECT_TRUE(parallel_map(5, 4, 2, [](long n) { return n; }).empty());
}

// --- degree-12 quadric data ------------------------------------------------

TEST(QuadricData, ShippedFileParses) {
  auto qs = load_quadrics(default_quadrics_path());
  ASSERT_EQ(qs.size(), 10u);
  for (std::size_t k = 0; k < qs.size(); ++k) {
    EXPECT_EQ(qs[k].name, "F" + std::to_string(k + 1));
    EXPECT_GE(qs[k].terms.size(), 8u);
    for (const auto& t : qs[k].terms) {
      EXPECT_GE(t.i, 1);
      EXPECT_LE(t.i, t.j);
      EXPECT_LE(t.j, 8);
    }
  }
  // Spot checks against the source listing.
  EXPECT_EQ(qs[4].terms[1].coefficient, "+32");
  EXPECT_EQ(qs[4].terms[1].i, 2);
  EXPECT_EQ(qs[4].terms[1].j, 3);
  EXPECT_EQ(qs[9].terms[5].coefficient, "-32");
  EXPECT_EQ(qs[9].terms[5].i, 5);
  EXPECT_EQ(qs[9].terms[5].j, 7);
  EXPECT_EQ(qs[4].terms[3].i, 5);
  EXPECT_EQ(qs[4].terms[3].j, 5);
}

TEST(QuadricData, RejectsMalformedRecords) {
  EXPECT_THROW(parse_quadrics("F1 = (a + 1*x1*x2"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = 3*x9*x1"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = 3*x1*x2*x3"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = 3*x1"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = (a^8 + 1)*x1*x2"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = 3*x1*x2 4*x3*x4"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = 1/3*x1*x2"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = x1^3"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("x1*x2"), QuadricParseError);
  EXPECT_THROW(parse_quadrics("F1 = x1*x2\n---\n"), QuadricParseError);
  EXPECT_NO_THROW(parse_quadrics("# c\nF1 = 1/15*(-736*a^7 + 2*a - 304)*x1*x7 - x2^2\n---\nF2 = x1*x8"));
}

}  // namespace
