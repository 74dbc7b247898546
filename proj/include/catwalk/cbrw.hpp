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

#ifndef CATWALK_CBRW_HPP_
#define CATWALK_CBRW_HPP_

#include <optional>
#include <span>
#include <vector>

#include "catwalk/common.hpp"
#include "catwalk/value_graph.hpp"

namespace catwalk {

// Row-stochastic walk matrix. Dangling rows are stored empty and flagged;
// they act as uniform rows. Teleport is not materialised.
struct TransitionMatrix {
  std::size_t n = 0;
  SparseMatrix entries;
  std::vector<char> dangling;

  // Entry of the damped matrix (1 - alpha)/n + alpha W(u, v).
  double augmented_entry(std::size_t u, std::size_t v, double alpha) const;
};

// W(u, v) = bias(v) A(u, v) / sum_w bias(w) A(u, w). An empty bias means 1.
TransitionMatrix biased_transition(const SparseMatrix& adjacency,
                                   std::span<const double> bias = {});

// Uses graph.node_delta as the bias.
TransitionMatrix transition_matrix(const ValueGraph& graph);

struct StationaryOptions {
  double alpha = 0.95;
  double tol = 1e-3;
  std::size_t max_iter = 100;
  unsigned threads = 1;
};

struct OutliernessVector {
  std::vector<double> phi;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // L1 change after each update
};

// pi'(v) = (1 - alpha)/n + alpha sum_u pi(u) W(u, v). Starts from `initial`
// or the uniform vector and stops once the L1 change is <= tol.
OutliernessVector stationary_distribution(const TransitionMatrix& w,
                                          const StationaryOptions& options = {},
                                          std::span<const double> initial = {});

std::vector<double> convergence_trace(const TransitionMatrix& w,
                                      const StationaryOptions& options = {});

// One damped update. Exposed for residual checks.
std::vector<double> walk_step(const TransitionMatrix& w, double alpha,
                              std::span<const double> pi, unsigned threads = 1);

}  // namespace catwalk

#endif  // CATWALK_CBRW_HPP_
