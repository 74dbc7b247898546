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

#include "catwalk/value_graph.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string>

namespace catwalk {
namespace {

void CheckSizes(const IntraFactor& delta, const InfluenceMatrix& infl,
                const std::vector<FeatureId>& node_feature) {
  const std::size_t n = infl.entries.rows();
  if (infl.entries.cols() != n || delta.delta_hat.size() != n ||
      (!node_feature.empty() && node_feature.size() != n)) {
    Fail(ErrorCode::kInvalidArgument, "value universe size mismatch");
  }
}

std::string FormatDouble(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Symmetrised neighbour lists without self loops, sorted.
std::vector<std::vector<std::uint32_t>> Skeleton(const ValueGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n_nodes);
  for (std::size_t u = 0; u < g.n_nodes; ++u) {
    auto cols = g.adjacency.row_cols(u);
    auto vals = g.adjacency.row_values(u);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (vals[k] == 0.0 || cols[k] == u) continue;
      adj[u].push_back(cols[k]);
      adj[cols[k]].push_back(static_cast<std::uint32_t>(u));
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

}  // namespace

void ValueGraph::validate() const {
  if (adjacency.rows() != n_nodes || adjacency.cols() != n_nodes) {
    Fail(ErrorCode::kInvalidArgument, "adjacency shape does not match node count");
  }
  for (std::size_t u = 0; u < n_nodes; ++u) {
    auto cols = adjacency.row_cols(u);
    auto vals = adjacency.row_values(u);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto v = cols[k];
      if (vals[k] < 0.0) Fail(ErrorCode::kInvalidArgument, "negative edge weight");
      if (v == u) Fail(ErrorCode::kInvalidArgument, "self loop");
      if (!node_feature.empty() && node_feature[u] == node_feature[v]) {
        Fail(ErrorCode::kInvalidArgument, "edge inside one feature");
      }
      if (!directed && adjacency.at(v, u) != vals[k]) {
        Fail(ErrorCode::kInvalidArgument, "undirected adjacency is not symmetric");
      }
    }
  }
}

ValueGraph build_cbrw_graph(const IntraFactor& delta, const InfluenceMatrix& infl,
                            std::vector<FeatureId> node_feature) {
  CheckSizes(delta, infl, node_feature);
  ValueGraph g;
  g.n_nodes = infl.entries.rows();
  g.adjacency = infl.entries;
  g.directed = true;
  g.node_delta = delta.delta_hat;
  g.node_feature = std::move(node_feature);
  return g;
}

ValueGraph build_sdrw_graph(const IntraFactor& delta, const InfluenceMatrix& infl,
                            std::vector<FeatureId> node_feature) {
  CheckSizes(delta, infl, node_feature);
  const auto& d = delta.delta_hat;
  ValueGraph g;
  g.n_nodes = infl.entries.rows();
  // The two products are grouped identically for (u,v) and (v,u) so the
  // result is bitwise symmetric whenever the lift is.
  g.adjacency = infl.entries.Map<double>([&](std::uint32_t u, std::uint32_t v, double w) {
    const double du = std::min(d[u], d[v]);
    const double dv = std::max(d[u], d[v]);
    return (du * dv) * w;
  });
  g.directed = false;
  g.node_delta = d;
  g.node_feature = std::move(node_feature);
  return g;
}

GraphStats graph_stats(const ValueGraph& graph, std::size_t max_nodes, unsigned threads) {
  const std::size_t n = graph.n_nodes;
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "empty graph");
  if (n > max_nodes) {
    Fail(ErrorCode::kInvalidArgument, "graph has " + std::to_string(n) +
                                          " nodes, above the limit of " +
                                          std::to_string(max_nodes));
  }
  const auto adj = Skeleton(graph);

  std::vector<std::size_t> ecc(n, 0);
  std::vector<char> reaches_all(n, 1);
  ParallelFor(n, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int64_t> dist(n);
    std::vector<std::uint32_t> queue(n);
    for (std::size_t s = lo; s < hi; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      std::size_t head = 0, tail = 0, seen = 1;
      queue[tail++] = static_cast<std::uint32_t>(s);
      dist[s] = 0;
      while (head < tail) {
        const auto u = queue[head++];
        for (auto v : adj[u]) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue[tail++] = v;
            ++seen;
          }
        }
      }
      ecc[s] = static_cast<std::size_t>(dist[queue[tail - 1]]);
      reaches_all[s] = seen == n;
    }
  });

  GraphStats out;
  if (std::all_of(reaches_all.begin(), reaches_all.end(), [](char c) { return c != 0; })) {
    out.diameter = *std::max_element(ecc.begin(), ecc.end());
  }

  std::vector<double> local(n, 0.0);
  ParallelFor(n, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<char> mark(n, 0);
    for (std::size_t u = lo; u < hi; ++u) {
      const auto& nb = adj[u];
      const std::size_t k = nb.size();
      if (k < 2) continue;
      for (auto v : nb) mark[v] = 1;
      std::size_t links = 0;
      for (auto v : nb) {
        for (auto w : adj[v]) links += mark[w];
      }
      for (auto v : nb) mark[v] = 0;
      // Each link between two neighbours was seen from both ends.
      local[u] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
  });
  double sum = 0.0;
  for (double c : local) sum += c;
  out.clustering_coefficient = sum / static_cast<double>(n);
  return out;
}

void write_edge_list(const ValueGraph& graph, std::ostream& out) {
  for (std::size_t u = 0; u < graph.n_nodes; ++u) {
    auto cols = graph.adjacency.row_cols(u);
    auto vals = graph.adjacency.row_values(u);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (!graph.directed && cols[k] < u) continue;
      out << u << ' ' << cols[k] << ' ' << FormatDouble(vals[k]) << '\n';
    }
  }
}

}  // namespace catwalk
