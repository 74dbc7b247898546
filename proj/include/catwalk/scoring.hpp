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

#ifndef CATWALK_SCORING_HPP_
#define CATWALK_SCORING_HPP_

#include <optional>
#include <span>
#include <vector>

#include "catwalk/common.hpp"
#include "catwalk/dataset.hpp"

namespace catwalk {

struct FeatureRelevance {
  std::vector<double> rel;  // 1 - prod_v (1 - phi(v)) over the feature's values
  std::vector<double> tau;  // rel / sum rel
};

FeatureRelevance feature_relevance(std::span<const double> phi, const CategoricalDataset& data);

struct SelectionRule {
  // Exactly one is used; min_rel wins when set.
  double top_ratio = 0.5;
  std::optional<double> min_rel;
};

// Feature ids ordered by descending relevance (lower id first on ties).
std::vector<FeatureId> select_features(const FeatureRelevance& rel, const SelectionRule& rule = {});

// Exponent applied to each feature's term in the object score.
enum class FeatureWeighting {
  kRelevance,   // raw rel(F)
  kNormalized,  // tau(F) = rel(F) / sum rel
};

struct ObjectScores {
  std::vector<double> score;
  std::vector<std::size_t> ranking;  // descending score, stable by index
};

// score(x) = 1 - prod_j (1 - phi(x_j))^{w_j}.
ObjectScores object_scores(std::span<const double> phi, const FeatureRelevance& rel,
                           const CategoricalDataset& data,
                           FeatureWeighting weighting = FeatureWeighting::kRelevance,
                           unsigned threads = 1);

// Scores from sum_j -log freq(x_j).
ObjectScores marp_scores(const CategoricalDataset& data);

ObjectScores rank_scores(std::vector<double> score);

}  // namespace catwalk

#endif  // CATWALK_SCORING_HPP_
