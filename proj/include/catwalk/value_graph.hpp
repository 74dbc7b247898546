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

#ifndef CATWALK_VALUE_GRAPH_HPP_
#define CATWALK_VALUE_GRAPH_HPP_

#include <iosfwd>
#include <optional>
#include <vector>

#include "catwalk/common.hpp"
#include "catwalk/factors.hpp"

namespace catwalk {

// Value-value graph. Directed graphs store A(u, v) in row u; undirected
// graphs store both triangles with identical weights.
struct ValueGraph {
  std::size_t n_nodes = 0;
  SparseMatrix adjacency;
  bool directed = true;
  std::vector<double> node_delta;       // empty when not attributed
  std::vector<FeatureId> node_feature;  // empty when unknown

  // Throws if the graph has self loops, an asymmetric undirected adjacency,
  // or edges inside one feature.
  void validate() const;
};

// Directed graph with A(u, v) = eta(u, v).
ValueGraph build_cbrw_graph(const IntraFactor& delta, const InfluenceMatrix& infl,
                            std::vector<FeatureId> node_feature = {});

// Undirected graph with C(u, v) = delta_hat(u) lift(u, v) delta_hat(v).
ValueGraph build_sdrw_graph(const IntraFactor& delta, const InfluenceMatrix& infl,
                            std::vector<FeatureId> node_feature = {});

struct GraphStats {
  std::optional<std::size_t> diameter;  // nullopt when disconnected
  double clustering_coefficient = 0.0;
};

// Both measures use the unweighted, symmetrised edge skeleton.
GraphStats graph_stats(const ValueGraph& graph, std::size_t max_nodes = 20000,
                       unsigned threads = 1);

// "u v weight" per line. Undirected edges are written once with u < v.
void write_edge_list(const ValueGraph& graph, std::ostream& out);

}  // namespace catwalk

#endif  // CATWALK_VALUE_GRAPH_HPP_
