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

#include "catwalk/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace catwalk {

ObjectScores rank_scores(std::vector<double> score) {
  ObjectScores out;
  out.ranking.resize(score.size());
  std::iota(out.ranking.begin(), out.ranking.end(), std::size_t{0});
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  out.score = std::move(score);
  return out;
}

FeatureRelevance feature_relevance(std::span<const double> phi, const CategoricalDataset& data) {
  if (phi.size() != data.n_values()) {
    Fail(ErrorCode::kInvalidArgument, "outlierness vector does not cover every value");
  }
  for (double p : phi) {
    if (!(p >= 0.0 && p < 1.0)) {
      Fail(ErrorCode::kInvalidArgument, "value outlierness must lie in [0, 1)");
    }
  }
  FeatureRelevance r;
  r.rel.resize(data.n_features());
  double total = 0.0;
  for (std::size_t j = 0; j < data.n_features(); ++j) {
    const auto& dom = data.domain(j);
    double log_keep = 0.0;
    for (ValueId v = dom.begin; v < dom.end; ++v) log_keep += std::log1p(-phi[v]);
    r.rel[j] = -std::expm1(log_keep);
    total += r.rel[j];
  }
  r.tau.resize(r.rel.size());
  for (std::size_t j = 0; j < r.rel.size(); ++j) {
    r.tau[j] = total > 0.0 ? r.rel[j] / total : 1.0 / static_cast<double>(r.rel.size());
  }
  return r;
}

std::vector<FeatureId> select_features(const FeatureRelevance& rel, const SelectionRule& rule) {
  const std::size_t d = rel.rel.size();
  if (d == 0) Fail(ErrorCode::kInvalidArgument, "no features to select from");
  std::vector<FeatureId> order(d);
  std::iota(order.begin(), order.end(), FeatureId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](FeatureId a, FeatureId b) { return rel.rel[a] > rel.rel[b]; });
  if (rule.min_rel) {
    std::vector<FeatureId> kept;
    for (auto f : order) {
      if (rel.rel[f] >= *rule.min_rel) kept.push_back(f);
    }
    return kept;
  }
  if (!(rule.top_ratio > 0.0 && rule.top_ratio <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "top_ratio must lie in (0, 1]");
  }
  // Guard against 0.5 * 10 landing a hair above 5.
  const double want = rule.top_ratio * static_cast<double>(d);
  std::size_t k = static_cast<std::size_t>(std::ceil(want - 1e-9));
  k = std::clamp<std::size_t>(k, 1, d);
  order.resize(k);
  return order;
}

ObjectScores object_scores(std::span<const double> phi, const FeatureRelevance& rel,
                           const CategoricalDataset& data, FeatureWeighting weighting,
                           unsigned threads) {
  if (phi.size() != data.n_values()) {
    Fail(ErrorCode::kInvalidArgument, "outlierness vector does not cover every value");
  }
  if (rel.rel.size() != data.n_features()) {
    Fail(ErrorCode::kInvalidArgument, "relevance vector does not cover every feature");
  }
  const auto& w = weighting == FeatureWeighting::kRelevance ? rel.rel : rel.tau;
  std::vector<double> log_keep(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) log_keep[v] = std::log1p(-phi[v]);

  const std::size_t n = data.n_objects();
  const std::size_t d = data.n_features();
  std::vector<double> score(n);
  ParallelFor(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto row = data.row(i);
      double acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc += w[j] * log_keep[row[j]];
      score[i] = -std::expm1(acc);
    }
  });
  return rank_scores(std::move(score));
}

ObjectScores marp_scores(const CategoricalDataset& data) {
  std::vector<std::uint32_t> supp(data.n_values(), 0);
  for (ValueId v : data.cells()) ++supp[v];
  const double n = static_cast<double>(data.n_objects());
  std::vector<double> surprise(data.n_values());
  for (std::size_t v = 0; v < supp.size(); ++v) {
    surprise[v] = supp[v] ? std::log(n / static_cast<double>(supp[v])) : 0.0;
  }
  std::vector<double> score(data.n_objects());
  for (std::size_t i = 0; i < data.n_objects(); ++i) {
    double s = 0.0;
    for (ValueId v : data.row(i)) s += surprise[v];
    score[i] = s;
  }
  return rank_scores(std::move(score));
}

}  // namespace catwalk
