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

#ifndef CATWALK_SDRW_HPP_
#define CATWALK_SDRW_HPP_

#include <span>
#include <vector>

#include "catwalk/cbrw.hpp"
#include "catwalk/common.hpp"
#include "catwalk/value_graph.hpp"

namespace catwalk {

// Greedy peeling record. The surviving subgraph of size k is every node
// except removal_order[0 .. n-k-1].
struct PeelingResult {
  std::size_t n = 0;
  std::vector<std::uint32_t> removal_order;  // n - 1 nodes
  std::uint32_t last = 0;                    // the node never removed
  // density_by_size[k] for k in [1, n]; index 0 is unused. Entry n is the
  // full graph, entry 1 is always 0.
  std::vector<double> density_by_size;
  // Smallest surviving subgraph size that still contains each node.
  std::vector<std::size_t> smallest_containing;

  bool contains(std::uint32_t node, std::size_t size) const {
    return size >= smallest_containing[node];
  }
};

// Repeatedly removes the node of least weighted degree (lowest id on ties).
PeelingResult peel_subgraphs(const ValueGraph& graph);

// sum_{u,v in H} C(u, v) / (2 |H|). Duplicate ids are ignored.
double subgraph_density(const ValueGraph& graph, std::span<const std::uint32_t> nodes);

struct GammaFactor {
  // Mean density of the retained subgraphs (sizes 2 .. n-1) containing v.
  std::vector<double> gamma;
  // Total density of every peeled subgraph containing v, full graph included.
  std::vector<double> accumulated;
};

GammaFactor gamma_factor(const PeelingResult& peel);

// phi'(v) = d'(v) / vol with d'(v) = sum_u gamma(u) lift(u, v) gamma(v).
OutliernessVector sdrw_outlierness(const SparseMatrix& lift, std::span<const double> gamma);

// phi'(v) = accumulated(v) / sum accumulated.
OutliernessVector density_mass_outlierness(const GammaFactor& gamma);

}  // namespace catwalk

#endif  // CATWALK_SDRW_HPP_
