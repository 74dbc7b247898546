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

#ifndef CATWALK_EVALUATION_HPP_
#define CATWALK_EVALUATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "catwalk/dataset.hpp"

namespace catwalk {

// Mann-Whitney AUC with average ranks on ties. Labels: 1 = outlier.
double auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Mean pairwise ratio of mode frequencies sorted high to low.
double kappa_het(const FrequencyStats& stats);

double kappa_vcc(const CategoricalDataset& data, std::span<const std::uint8_t> labels,
                 double theta = 0.05, double epsilon = 0.001);

struct FeatureEfficiency {
  std::vector<double> per_feature;  // AUC of 1/freq of the object's value
  double kappa_sep = 0.0;
  double kappa_ins = 0.0;
  double kappa_fnl = 0.0;
};

FeatureEfficiency feature_efficiency(const CategoricalDataset& data,
                                     std::span<const std::uint8_t> labels,
                                     unsigned threads = 1);

struct ComplexityReport {
  double kappa_vcc = 0.0;
  double kappa_het = 0.0;
  double kappa_ins = 0.0;
  double kappa_fnl = 0.0;
  std::vector<double> per_feature_efficiency;
  double theta = 0.05;
  double epsilon = 0.001;
};

ComplexityReport complexity_report(const CategoricalDataset& data,
                                   std::span<const std::uint8_t> labels,
                                   double theta = 0.05, double epsilon = 0.001,
                                   unsigned threads = 1);

struct SyntheticConfig {
  std::size_t n_objects = 2000;
  std::size_t n_relevant = 6;
  std::size_t n_noisy = 6;
  std::size_t n_outliers = 40;
  double coupling_strength = 1.0;
  std::uint64_t seed = 1;
  // Chance, relative to the outlier rate, that a normal object carries an
  // outlying value in a relevant feature.
  double outlying_leak = 0.5;
  std::size_t n_outlying_values = 2;
  std::size_t n_noisy_values = 2;
};

// Relevant features come first ("r0", "r1", ...), then noisy ones ("n0", ...).
// Outliers share rare values across relevant features. In noisy features
// outliers hold the most common value while normal objects carry equally rare
// values scattered at random.
CategoricalDataset generate_synthetic(const SyntheticConfig& config);

}  // namespace catwalk

#endif  // CATWALK_EVALUATION_HPP_
