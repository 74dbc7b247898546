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

#include "catwalk/cbrw.hpp"

#include <cmath>
#include <string>

namespace catwalk {
namespace {

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
}

// Gather form of the update over W transposed.
void Step(const SparseMatrix& wt, const std::vector<char>& dangling, double alpha,
          std::span<const double> pi, std::vector<double>& next, unsigned threads) {
  const std::size_t n = wt.rows();
  double dangling_mass = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    if (dangling[u]) dangling_mass += pi[u];
  }
  const double base =
      (1.0 - alpha) / static_cast<double>(n) + alpha * dangling_mass / static_cast<double>(n);
  ParallelFor(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      auto cols = wt.row_cols(v);
      auto vals = wt.row_values(v);
      double acc = 0.0;
      for (std::size_t k = 0; k < cols.size(); ++k) acc += pi[cols[k]] * vals[k];
      next[v] = base + alpha * acc;
    }
  });
}

}  // namespace

double TransitionMatrix::augmented_entry(std::size_t u, std::size_t v, double alpha) const {
  const double w = dangling[u] ? 1.0 / static_cast<double>(n) : entries.at(u, v);
  return (1.0 - alpha) / static_cast<double>(n) + alpha * w;
}

TransitionMatrix biased_transition(const SparseMatrix& adjacency, std::span<const double> bias) {
  const std::size_t n = adjacency.rows();
  if (adjacency.cols() != n) Fail(ErrorCode::kInvalidArgument, "adjacency must be square");
  if (!bias.empty() && bias.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "bias vector size does not match the graph");
  }
  auto b = [&](std::size_t v) { return bias.empty() ? 1.0 : bias[v]; };
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    auto cols = adjacency.row_cols(u);
    auto vals = adjacency.row_values(u);
    for (std::size_t k = 0; k < cols.size(); ++k) row_sum[u] += b(cols[k]) * vals[k];
  }
  TransitionMatrix w;
  w.n = n;
  w.dangling.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) w.dangling[u] = !(row_sum[u] > 0.0);
  w.entries = adjacency.Map<double>([&](std::uint32_t u, std::uint32_t v, double a) {
    return w.dangling[u] ? 0.0 : b(v) * a / row_sum[u];
  });
  return w;
}

TransitionMatrix transition_matrix(const ValueGraph& graph) {
  if (graph.node_delta.size() != graph.n_nodes) {
    Fail(ErrorCode::kInvalidArgument, "graph has no delta attribute for every node");
  }
  return biased_transition(graph.adjacency, graph.node_delta);
}

std::vector<double> walk_step(const TransitionMatrix& w, double alpha,
                              std::span<const double> pi, unsigned threads) {
  CheckAlpha(alpha);
  if (pi.size() != w.n) Fail(ErrorCode::kInvalidArgument, "distribution size mismatch");
  std::vector<double> next(w.n);
  Step(w.entries.Transposed(), w.dangling, alpha, pi, next, threads);
  return next;
}

OutliernessVector stationary_distribution(const TransitionMatrix& w,
                                          const StationaryOptions& options,
                                          std::span<const double> initial) {
  CheckAlpha(options.alpha);
  if (w.n == 0) Fail(ErrorCode::kInvalidArgument, "empty transition matrix");
  if (!(options.tol >= 0.0)) Fail(ErrorCode::kInvalidArgument, "tol must be non-negative");
  const std::size_t n = w.n;

  std::vector<double> pi;
  if (initial.empty()) {
    pi.assign(n, 1.0 / static_cast<double>(n));
  } else {
    if (initial.size() != n) Fail(ErrorCode::kInvalidArgument, "initial distribution size mismatch");
    double s = 0.0;
    for (double x : initial) {
      if (!(x >= 0.0)) Fail(ErrorCode::kInvalidArgument, "initial distribution has a negative entry");
      s += x;
    }
    if (std::abs(s - 1.0) > 1e-9) {
      Fail(ErrorCode::kInvalidArgument, "initial distribution does not sum to 1");
    }
    pi.assign(initial.begin(), initial.end());
  }

  const SparseMatrix wt = w.entries.Transposed();
  std::vector<double> next(n);
  OutliernessVector out;
  while (out.iterations < options.max_iter) {
    Step(wt, w.dangling, options.alpha, pi, next, options.threads);
    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) delta += std::abs(next[v] - pi[v]);
    pi.swap(next);
    ++out.iterations;
    out.trace.push_back(delta);
    if (delta <= options.tol) {
      out.converged = true;
      break;
    }
  }
  out.phi = std::move(pi);
  return out;
}

std::vector<double> convergence_trace(const TransitionMatrix& w,
                                      const StationaryOptions& options) {
  return stationary_distribution(w, options).trace;
}

}  // namespace catwalk
