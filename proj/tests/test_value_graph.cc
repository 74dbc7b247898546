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

#include <sstream>

#include "catwalk/value_graph.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "toy.hpp"

namespace catwalk {
namespace {

ValueGraph CbrwGraph(const CategoricalDataset& d) {
  auto s = compute_stats(d);
  return build_cbrw_graph(intra_outlierness(s), conditional_influence(s), s.value_features());
}

ValueGraph SdrwGraph(const CategoricalDataset& d) {
  auto s = compute_stats(d);
  return build_sdrw_graph(intra_outlierness(s), lift_influence(s), s.value_features());
}

// Floyd-Warshall hop distances over the symmetrised skeleton.
std::size_t OracleDiameter(const ValueGraph& g) {
  const std::size_t n = g.n_nodes;
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && (g.adjacency.at(u, v) > 0 || g.adjacency.at(v, u) > 0)) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t best = 0;
  for (auto& row : d)
    for (auto x : row) best = std::max(best, x);
  return best;
}

TEST(ValueGraph, ToyCbrwGraph) {
  auto d = toy::Load();
  auto g = CbrwGraph(d);
  auto id = toy::Ids(d);
  EXPECT_EQ(g.n_nodes, 11u);
  EXPECT_TRUE(g.directed);
  g.validate();
  EXPECT_DOUBLE_EQ(g.adjacency.at(id[0], id[2]), 1.0);
  EXPECT_DOUBLE_EQ(g.adjacency.at(id[2], id[0]), 0.25);
  EXPECT_DOUBLE_EQ(g.adjacency.at(id[1], id[2]), 0.0);
  EXPECT_DOUBLE_EQ(g.adjacency.at(id[2], id[1]), 0.0);
  auto st = graph_stats(g);
  ASSERT_TRUE(st.diameter.has_value());
  EXPECT_EQ(*st.diameter, 2u);
  EXPECT_EQ(*st.diameter, OracleDiameter(g));
}

TEST(ValueGraph, ToySdrwGraph) {
  auto d = toy::Load();
  auto g = SdrwGraph(d);
  auto id = toy::Ids(d);
  EXPECT_FALSE(g.directed);
  g.validate();
  EXPECT_NEAR(g.adjacency.at(id[0], id[2]), 0.0122, 5e-4);
  EXPECT_NEAR(g.adjacency.at(id[1], id[7]), 0.0308, 5e-4);
  for (std::size_t u = 0; u < 11; ++u) EXPECT_EQ(g.adjacency.at(u, u), 0.0);
}

TEST(ValueGraph, DimensionMismatchFails) {
  auto s = compute_stats(toy::Load());
  auto f = intra_outlierness(s);
  f.delta_hat.pop_back();
  EXPECT_THROW(build_cbrw_graph(f, conditional_influence(s)), Error);
  EXPECT_THROW(build_sdrw_graph(f, lift_influence(s)), Error);
}

TEST(ValueGraphProperty, SdrwSymmetricAndCrossFeature) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = gen::RandomTable(rng, 30 + rng.Below(150), 2 + rng.Below(5), 7).Dataset();
    auto g = SdrwGraph(d);
    for (std::size_t u = 0; u < g.n_nodes; ++u) {
      auto cols = g.adjacency.row_cols(u);
      auto vals = g.adjacency.row_values(u);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        EXPECT_NEAR(vals[k], g.adjacency.at(cols[k], u), 1e-15);
        EXPECT_NE(g.node_feature[u], g.node_feature[cols[k]]);
      }
    }
    EXPECT_NO_THROW(g.validate());
    EXPECT_NO_THROW(CbrwGraph(d).validate());
  }
}

TEST(ValueGraphProperty, RelabelingGivesIsomorphicGraph) {
  gen::Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = gen::RandomTable(rng, 80, 4, 6);
    auto reversed = t;
    std::reverse(reversed.rows.begin(), reversed.rows.end());
    auto d1 = t.Dataset();
    auto d2 = reversed.Dataset();
    auto g1 = SdrwGraph(d1);
    auto g2 = SdrwGraph(d2);
    auto h1 = CbrwGraph(d1);
    auto h2 = CbrwGraph(d2);
    std::vector<ValueId> perm(d1.n_values());
    for (ValueId v = 0; v < d1.n_values(); ++v) perm[v] = *d2.find_value(d1.feature_of(v), d1.value_name(v));
    for (ValueId u = 0; u < d1.n_values(); ++u) {
      for (ValueId v = 0; v < d1.n_values(); ++v) {
        EXPECT_NEAR(g1.adjacency.at(u, v), g2.adjacency.at(perm[u], perm[v]), 1e-15);
        EXPECT_NEAR(h1.adjacency.at(u, v), h2.adjacency.at(perm[u], perm[v]), 1e-15);
      }
    }
  }
}

ValueGraph FromDense(const oracle::Mat& m, bool directed) {
  ValueGraph g;
  g.n_nodes = m.size();
  g.adjacency = gen::ToSparse(m);
  g.directed = directed;
  return g;
}

TEST(GraphStats, DisconnectedGraph) {
  oracle::Mat m = oracle::Zeros(4);
  m[0][1] = m[1][0] = 1.0;
  m[2][3] = m[3][2] = 1.0;
  auto st = graph_stats(FromDense(m, false));
  EXPECT_FALSE(st.diameter.has_value());
  EXPECT_DOUBLE_EQ(st.clustering_coefficient, 0.0);
}

TEST(GraphStats, CompleteGraphClustersFully) {
  oracle::Mat m = oracle::Zeros(6);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v)
      if (u != v) m[u][v] = 0.5;
  auto st = graph_stats(FromDense(m, false));
  EXPECT_EQ(st.diameter, std::optional<std::size_t>(1));
  EXPECT_DOUBLE_EQ(st.clustering_coefficient, 1.0);
}

TEST(GraphStats, MultipartiteValueGraphIsNearlyComplete) {
  // Ten binary features whose values all co-occur give a complete 10-partite
  // graph: each node sees 18 neighbours with 9 missing pairs among them.
  gen::Rng rng(41);
  gen::Table t;
  for (int j = 0; j < 10; ++j) t.header.push_back("f" + std::to_string(j));
  for (int i = 0; i < 400; ++i) {
    std::vector<std::string> r;
    for (int j = 0; j < 10; ++j) r.push_back(rng.Chance(0.5) ? "a" : "b");
    t.rows.push_back(r);
  }
  auto st = graph_stats(CbrwGraph(t.Dataset()));
  EXPECT_EQ(st.diameter, std::optional<std::size_t>(2));
  EXPECT_NEAR(st.clustering_coefficient, 144.0 / 153.0, 1e-12);
}

TEST(GraphStats, StarHasZeroClustering) {
  oracle::Mat m = oracle::Zeros(5);
  for (std::size_t v = 1; v < 5; ++v) m[0][v] = m[v][0] = 1.0;
  auto st = graph_stats(FromDense(m, false), 20000, 2);
  EXPECT_EQ(st.diameter, std::optional<std::size_t>(2));
  EXPECT_DOUBLE_EQ(st.clustering_coefficient, 0.0);
}

TEST(GraphStats, Limits) {
  EXPECT_THROW(graph_stats(ValueGraph{}), Error);
  EXPECT_THROW(graph_stats(CbrwGraph(toy::Load()), 5), Error);
}

TEST(EdgeList, UndirectedEdgesWrittenOnce) {
  auto d = toy::Load();
  auto g = SdrwGraph(d);
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  std::size_t lines = 0;
  std::size_t u, v;
  double w;
  while (in >> u >> v >> w) {
    ++lines;
    EXPECT_LT(u, v);
    EXPECT_EQ(w, g.adjacency.at(u, v));
  }
  EXPECT_EQ(lines, g.adjacency.nnz() / 2);

  std::ostringstream dir;
  auto h = CbrwGraph(d);
  write_edge_list(h, dir);
  const std::string text = dir.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), h.adjacency.nnz());
}

}  // namespace
}  // namespace catwalk
