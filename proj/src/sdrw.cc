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

#include "catwalk/sdrw.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace catwalk {

PeelingResult peel_subgraphs(const ValueGraph& graph) {
  const std::size_t n = graph.n_nodes;
  if (graph.directed) Fail(ErrorCode::kInvalidArgument, "peeling needs an undirected graph");
  if (n < 2) Fail(ErrorCode::kInvalidArgument, "peeling needs at least two nodes");
  const auto& c = graph.adjacency;

  // Neighbour counts let a node down to one edge carry that edge's exact weight
  // (and an isolated node exactly zero) instead of accumulated rounding, so
  // ties such as the final pair resolve by id. Each node is rescanned at most
  // once.
  std::vector<double> degree(n, 0.0);
  std::vector<std::size_t> neighbours(n, 0);
  double total = 0.0;
  std::size_t edges = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (double w : c.row_values(u)) degree[u] += w;
    neighbours[u] = c.row_cols(u).size();
    edges += neighbours[u];
    total += degree[u];
  }
  total /= 2.0;
  edges /= 2;

  std::set<std::pair<double, std::uint32_t>> queue;
  for (std::size_t u = 0; u < n; ++u) queue.emplace(degree[u], static_cast<std::uint32_t>(u));
  std::vector<char> removed(n, 0);

  PeelingResult out;
  out.n = n;
  out.density_by_size.assign(n + 1, 0.0);
  out.smallest_containing.assign(n, 1);
  out.density_by_size[n] = total / static_cast<double>(n);
  out.removal_order.reserve(n - 1);

  for (std::size_t size = n; size > 1; --size) {
    const auto [deg, m] = *queue.begin();
    queue.erase(queue.begin());
    removed[m] = 1;
    out.removal_order.push_back(m);
    out.smallest_containing[m] = size;
    total -= deg;
    auto cols = c.row_cols(m);
    auto vals = c.row_values(m);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto u = cols[k];
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      switch (--neighbours[u]) {
        case 0:
          degree[u] = 0.0;
          break;
        case 1: {
          auto ucols = c.row_cols(u);
          auto uvals = c.row_values(u);
          for (std::size_t t = 0; t < ucols.size(); ++t) {
            if (!removed[ucols[t]]) degree[u] = uvals[t];
          }
          break;
        }
        default:
          degree[u] -= vals[k];
      }
      queue.emplace(degree[u], u);
      --edges;
    }
    if (edges == 0) total = 0.0;
    const std::size_t left = size - 1;
    out.density_by_size[left] = left > 1 ? std::max(0.0, total) / static_cast<double>(left) : 0.0;
  }
  out.last = queue.begin()->second;
  return out;
}

double subgraph_density(const ValueGraph& graph, std::span<const std::uint32_t> nodes) {
  if (nodes.empty()) Fail(ErrorCode::kInvalidArgument, "empty node subset");
  std::vector<std::uint32_t> h(nodes.begin(), nodes.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.back() >= graph.n_nodes) Fail(ErrorCode::kInvalidArgument, "node id out of range");
  double sum = 0.0;
  for (auto u : h) {
    auto cols = graph.adjacency.row_cols(u);
    auto vals = graph.adjacency.row_values(u);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] != u && std::binary_search(h.begin(), h.end(), cols[k])) sum += vals[k];
    }
  }
  return sum / (2.0 * static_cast<double>(h.size()));
}

GammaFactor gamma_factor(const PeelingResult& peel) {
  const std::size_t n = peel.n;
  // suffix[k] = sum of densities of sizes k..n.
  std::vector<double> suffix(n + 2, 0.0);
  for (std::size_t k = n; k >= 1; --k) suffix[k] = suffix[k + 1] + peel.density_by_size[k];

  GammaFactor g;
  g.gamma.assign(n, 0.0);
  g.accumulated.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t s = peel.smallest_containing[v];
    g.accumulated[v] = suffix[s];
    const std::size_t lo = std::max<std::size_t>(s, 2);
    if (n >= 1 && lo <= n - 1) {
      const double sum = suffix[lo] - suffix[n];
      g.gamma[v] = sum / static_cast<double>(n - lo);
    }
  }
  return g;
}

OutliernessVector sdrw_outlierness(const SparseMatrix& lift, std::span<const double> gamma) {
  const std::size_t n = lift.rows();
  if (gamma.size() != n) Fail(ErrorCode::kInvalidArgument, "gamma size does not match the graph");
  std::vector<double> d(n, 0.0);
  // Lift is symmetric, so column sums equal row sums.
  for (std::size_t v = 0; v < n; ++v) {
    auto cols = lift.row_cols(v);
    auto vals = lift.row_values(v);
    double acc = 0.0;
    for (std::size_t k = 0; k < cols.size(); ++k) acc += gamma[cols[k]] * vals[k];
    d[v] = acc * gamma[v];
  }
  double vol = 0.0;
  for (double x : d) vol += x;
  if (!(vol > 0.0)) Fail(ErrorCode::kDegenerate, "degenerate graph");
  OutliernessVector out;
  out.phi.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.phi[v] = d[v] / vol;
  out.converged = true;
  return out;
}

OutliernessVector density_mass_outlierness(const GammaFactor& gamma) {
  double total = 0.0;
  for (double x : gamma.accumulated) total += x;
  if (!(total > 0.0)) Fail(ErrorCode::kDegenerate, "degenerate graph");
  OutliernessVector out;
  out.phi.resize(gamma.accumulated.size());
  for (std::size_t v = 0; v < out.phi.size(); ++v) out.phi[v] = gamma.accumulated[v] / total;
  out.converged = true;
  return out;
}

}  // namespace catwalk
