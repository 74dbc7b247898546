/*
 * Copyright 2026 The catwalk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "catwalk/dataset.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "toy.hpp"

namespace catwalk {
namespace {

CategoricalDataset Parse(const std::string& text, CsvOptions opts = {}) {
  std::istringstream in(text);
  return read_csv(in, opts);
}

std::string ErrorOf(const std::string& text, CsvOptions opts = {}) {
  try {
    Parse(text, opts);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Csv, ToyShape) {
  auto d = toy::Load();
  EXPECT_EQ(d.n_objects(), 12u);
  EXPECT_EQ(d.n_features(), 4u);
  EXPECT_EQ(d.n_values(), 11u);
  EXPECT_EQ(d.labels(), toy::kLabels);
  EXPECT_EQ(d.feature_name(3), "Income");
}

TEST(Csv, DomainsAreContiguousAndDisjoint) {
  auto d = toy::Load();
  ValueId next = 0;
  for (std::size_t j = 0; j < d.n_features(); ++j) {
    EXPECT_EQ(d.domain(j).begin, next);
    next = d.domain(j).end;
    for (std::size_t i = 0; i < d.n_objects(); ++i) EXPECT_TRUE(d.domain(j).contains(d.cell(i, j)));
  }
  EXPECT_EQ(next, d.n_values());
}

TEST(Csv, HeaderOnlyHasNoDataRows) {
  EXPECT_EQ(ErrorOf("a,b\n"), "no data rows");
  EXPECT_EQ(ErrorOf(""), "empty file");
}

TEST(Csv, RaggedRowReportsRowNumber) {
  const auto msg = ErrorOf("a,b\nx,y\nx\n");
  EXPECT_NE(msg.find("row 3"), std::string::npos) << msg;
}

TEST(Csv, UnknownLabelFails) {
  CsvOptions o;
  o.label_column = std::string("y");
  const auto msg = ErrorOf("a,y\nx,1\nz,maybe\n", o);
  EXPECT_NE(msg.find("maybe"), std::string::npos) << msg;
}

TEST(Csv, LabelSpellings) {
  CsvOptions o;
  o.label_column = std::size_t{0};
  auto d = Parse("y,a\nYes,p\n no ,q\nTRUE,p\nfalse,q\noutlier,p\nNormal,q\n1,p\n0,q\n", o);
  EXPECT_EQ(d.labels(), (std::vector<std::uint8_t>{1, 0, 1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(d.n_features(), 1u);
}

TEST(Csv, QuotedFieldsAndCrLf) {
  auto d = Parse("name,city\r\n\"Smith, J\",\"He said \"\"hi\"\"\"\r\nx,\"multi\nline\"\r\n");
  ASSERT_EQ(d.n_objects(), 2u);
  EXPECT_EQ(d.value_name(d.cell(0, 0)), "Smith, J");
  EXPECT_EQ(d.value_name(d.cell(0, 1)), "He said \"hi\"");
  EXPECT_EQ(d.value_name(d.cell(1, 1)), "multi\nline");
}

TEST(Csv, HeaderlessAndCustomDelimiter) {
  CsvOptions o;
  o.has_header = false;
  o.delimiter = ';';
  auto d = Parse("a;b\nc;b\n", o);
  EXPECT_EQ(d.n_objects(), 2u);
  EXPECT_EQ(d.feature_name(1), "f1");
}

TEST(Csv, LabelByNameNeedsHeader) {
  CsvOptions o;
  o.has_header = false;
  o.label_column = std::string("y");
  EXPECT_THROW(Parse("a,1\n", o), Error);
}

TEST(Csv, RoundTrip) {
  gen::Rng rng(3);
  auto t = gen::RandomTable(rng, 40, 5, 5);
  t.rows[3][2] = "needs \"quoting\", here";
  auto d = t.Dataset();
  std::ostringstream out;
  write_csv(d, out);
  auto back = Parse(out.str());
  EXPECT_EQ(back.cells(), d.cells());
  EXPECT_EQ(back.value_names(), d.value_names());
  EXPECT_EQ(back.feature_names(), d.feature_names());
}

TEST(Preprocess, DropsConstantColumn) {
  auto pre = preprocess(Parse("a,k,b\nx,c,p\ny,c,q\nx,c,q\n"));
  EXPECT_EQ(pre.removed_features, std::vector<std::string>{"k"});
  EXPECT_EQ(pre.kept_features, (std::vector<FeatureId>{0, 2}));
  ASSERT_EQ(pre.data.n_features(), 2u);
  EXPECT_EQ(pre.data.feature_name(1), "b");
  EXPECT_EQ(pre.data.n_values(), 4u);
}

TEST(Preprocess, ToyUnchanged) {
  auto d = toy::Load();
  auto pre = preprocess(d);
  EXPECT_TRUE(pre.removed_features.empty());
  EXPECT_EQ(pre.data.cells(), d.cells());
}

TEST(Preprocess, AllConstantFails) {
  try {
    preprocess(Parse("k\nc\nc\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "no informative features");
  }
}

TEST(Stats, ToyFrequencies) {
  auto d = toy::Load();
  auto s = compute_stats(d);
  auto ids = toy::Ids(d);
  EXPECT_DOUBLE_EQ(s.freq(ids[2]), 1.0 / 6.0);  // bachelor
  EXPECT_DOUBLE_EQ(s.freq(ids[7]), 1.0 / 6.0);  // divorced
  EXPECT_DOUBLE_EQ(s.freq(ids[3]), 1.0 / 2.0);
  EXPECT_DOUBLE_EQ(s.freq(ids[4]), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.freq(ids[5]), 5.0 / 12.0);
  EXPECT_DOUBLE_EQ(s.freq(ids[6]), 5.0 / 12.0);
  EXPECT_EQ(s.joint_supp(ids[7], ids[8]), 1u);
  EXPECT_EQ(s.joint_supp(ids[5], ids[6]), 0u);
  EXPECT_EQ(s.mode(0), ids[0]);
  // married and single tie; the lower id wins.
  EXPECT_EQ(s.mode(2), std::min(ids[5], ids[6]));
}

TEST(Stats, MatchesDenseCounts) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = gen::RandomTable(rng, 30 + rng.Below(50), 2 + rng.Below(5), 6);
    auto d = t.Dataset();
    auto s = compute_stats(d);
    auto m = oracle::Build(t.rows);
    for (ValueId u = 0; u < d.n_values(); ++u) {
      const auto ou = m.id(static_cast<int>(d.feature_of(u)), d.value_name(u));
      EXPECT_EQ(s.supp(u), m.supp[ou]);
      for (ValueId v = 0; v < d.n_values(); ++v) {
        const auto ov = m.id(static_cast<int>(d.feature_of(v)), d.value_name(v));
        EXPECT_EQ(s.joint_supp(u, v), m.joint[ou][ov]);
      }
    }
  }
}

TEST(StatsProperty, FrequenciesSumToOneAndJointIsBounded) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = gen::RandomTable(rng, 20 + rng.Below(200), 2 + rng.Below(6), 8).Dataset();
    auto s = compute_stats(d);
    for (std::size_t j = 0; j < d.n_features(); ++j) {
      double sum = 0.0;
      for (ValueId v = d.domain(j).begin; v < d.domain(j).end; ++v) {
        sum += s.freq(v);
        EXPECT_LE(s.freq(v), s.freq(s.mode(j)));
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
    const auto& j = s.joint();
    for (std::size_t u = 0; u < j.rows(); ++u) {
      auto cols = j.row_cols(u);
      auto vals = j.row_values(u);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        EXPECT_EQ(vals[k], j.at(cols[k], u));
        EXPECT_LE(vals[k], std::min(s.supp(static_cast<ValueId>(u)), s.supp(cols[k])));
        EXPECT_NE(d.feature_of(static_cast<ValueId>(u)), d.feature_of(cols[k]));
      }
    }
  }
}

TEST(StatsProperty, RowPermutationInvariant) {
  gen::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = gen::RandomTable(rng, 60, 4, 6);
    auto base = compute_stats(t.Dataset());
    auto shuffled = t;
    // Keep the first-seen order of values so ids line up.
    for (std::size_t i = shuffled.rows.size() - 1; i > 1; --i) {
      std::swap(shuffled.rows[i], shuffled.rows[1 + rng.Below(i)]);
    }
    auto d2 = shuffled.Dataset();
    auto s2 = compute_stats(d2);
    auto d1 = t.Dataset();
    for (ValueId u = 0; u < d1.n_values(); ++u) {
      const auto u2 = *d2.find_value(d1.feature_of(u), d1.value_name(u));
      EXPECT_EQ(base.supp(u), s2.supp(u2));
      for (ValueId v = 0; v < d1.n_values(); ++v) {
        const auto v2 = *d2.find_value(d1.feature_of(v), d1.value_name(v));
        EXPECT_EQ(base.joint_supp(u, v), s2.joint_supp(u2, v2));
      }
    }
  }
}

TEST(Stats, ThreadCountDoesNotMatter) {
  gen::Rng rng(21);
  auto d = gen::RandomTable(rng, 500, 9, 7).Dataset();
  auto a = compute_stats(d, 1);
  auto b = compute_stats(d, 4);
  EXPECT_EQ(a.joint().values(), b.joint().values());
  EXPECT_EQ(a.joint().col_index(), b.joint().col_index());
  EXPECT_EQ(a.supports(), b.supports());
}

TEST(Stats, WideDomainsUseSortedCounting) {
  // 3000 x 3000 distinct values exceeds the dense block limit.
  std::ostringstream csv;
  csv << "a,b\n";
  for (int i = 0; i < 3000; ++i) csv << "a" << i << ",b" << (i * 7) % 3000 << '\n';
  csv << "a0,b0\n";
  auto d = Parse(csv.str());
  auto s = compute_stats(d);
  const auto a0 = *d.find_value(0, "a0");
  const auto b0 = *d.find_value(1, "b0");
  EXPECT_EQ(s.joint_supp(a0, b0), 2u);
  EXPECT_EQ(s.joint().nnz(), 2u * 3000u);
}

TEST(Subset, KeepsOrderAndDropsUnusedValues) {
  auto d = toy::Load();
  std::vector<FeatureId> keep = {3, 1};
  auto sub = subset_features(d, keep);
  EXPECT_EQ(sub.feature_names(), (std::vector<std::string>{"Income", "Education"}));
  EXPECT_EQ(sub.n_values(), 6u);
  EXPECT_EQ(sub.value_name(sub.cell(0, 0)), "low");
  EXPECT_EQ(sub.labels(), d.labels());
}

}  // namespace
}  // namespace catwalk
