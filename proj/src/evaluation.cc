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

#include "catwalk/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace catwalk {
namespace {

void CheckLabels(std::size_t n, std::span<const std::uint8_t> labels) {
  if (labels.size() != n) Fail(ErrorCode::kInvalidArgument, "label count does not match object count");
  std::size_t pos = 0;
  for (auto l : labels) pos += l != 0;
  if (pos == 0 || pos == n) {
    Fail(ErrorCode::kInvalidArgument, "labels must contain both outliers and normal objects");
  }
}

}  // namespace

double auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  CheckLabels(scores.size(), labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  double n_pos = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[idx[j]] == scores[idx[i]]) ++j;
    // Ranks i+1 .. j share their mean.
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[idx[k]]) {
        rank_sum += avg;
        n_pos += 1.0;
      }
    }
    i = j;
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  return (rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

double kappa_het(const FrequencyStats& stats) {
  const std::size_t d = stats.n_features();
  if (d < 2) Fail(ErrorCode::kInvalidArgument, "heterogeneity needs at least two features");
  std::vector<double> f(d);
  for (std::size_t j = 0; j < d; ++j) f[j] = stats.freq(stats.mode(j));
  std::sort(f.begin(), f.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) sum += f[i] / f[j];
  }
  return 2.0 * sum / static_cast<double>(d * (d - 1));
}

double kappa_vcc(const CategoricalDataset& data, std::span<const std::uint8_t> labels,
                 double theta, double epsilon) {
  CheckLabels(data.n_objects(), labels);
  std::vector<std::uint32_t> supp(data.n_values(), 0);
  for (ValueId v : data.cells()) ++supp[v];
  const double n = static_cast<double>(data.n_objects());
  std::vector<char> rare(data.n_values());
  for (std::size_t v = 0; v < supp.size(); ++v) rare[v] = static_cast<double>(supp[v]) / n <= theta;

  double hit[2] = {0.0, 0.0};
  double count[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < data.n_objects(); ++i) {
    std::size_t k = 0;
    for (ValueId v : data.row(i)) k += rare[v];
    const int c = labels[i] ? 1 : 0;
    count[c] += 1.0;
    if (k >= 2) hit[c] += 1.0;
  }
  const double nvv = hit[0] / count[0];
  const double pvv = hit[1] / count[1];
  return nvv / (pvv + nvv + epsilon);
}

FeatureEfficiency feature_efficiency(const CategoricalDataset& data,
                                     std::span<const std::uint8_t> labels, unsigned threads) {
  CheckLabels(data.n_objects(), labels);
  std::vector<std::uint32_t> supp(data.n_values(), 0);
  for (ValueId v : data.cells()) ++supp[v];
  const std::size_t d = data.n_features();
  FeatureEfficiency out;
  out.per_feature.resize(d);
  ParallelFor(d, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> score(data.n_objects());
    for (std::size_t j = lo; j < hi; ++j) {
      for (std::size_t i = 0; i < data.n_objects(); ++i) {
        score[i] = 1.0 / static_cast<double>(supp[data.cell(i, j)]);
      }
      out.per_feature[j] = auc(score, labels);
    }
  });
  out.kappa_sep = *std::max_element(out.per_feature.begin(), out.per_feature.end());
  out.kappa_ins = 1.0 - out.kappa_sep;
  std::size_t noisy = 0;
  for (double a : out.per_feature) noisy += a < 0.5;
  out.kappa_fnl = static_cast<double>(noisy) / static_cast<double>(d);
  return out;
}

ComplexityReport complexity_report(const CategoricalDataset& data,
                                   std::span<const std::uint8_t> labels, double theta,
                                   double epsilon, unsigned threads) {
  ComplexityReport r;
  r.theta = theta;
  r.epsilon = epsilon;
  r.kappa_vcc = kappa_vcc(data, labels, theta, epsilon);
  r.kappa_het = kappa_het(compute_stats(data, threads));
  auto fe = feature_efficiency(data, labels, threads);
  r.kappa_ins = fe.kappa_ins;
  r.kappa_fnl = fe.kappa_fnl;
  r.per_feature_efficiency = std::move(fe.per_feature);
  return r;
}

}  // namespace catwalk
