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

#ifndef CATWALK_PIPELINE_HPP_
#define CATWALK_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "catwalk/cbrw.hpp"
#include "catwalk/dataset.hpp"
#include "catwalk/factors.hpp"
#include "catwalk/scoring.hpp"
#include "catwalk/sdrw.hpp"
#include "catwalk/value_graph.hpp"

namespace catwalk {

enum class Method { kCbrw, kSdrw, kMarp, kBase, kCbrwIa, kCbrwIe, kSdrwIa, kSdrwIe };

enum class SdrwReadout {
  kDensityMass,  // accumulated peeled-subgraph density per value
  kClosedForm,   // degree share of gamma(u) lift(u,v) gamma(v)
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct DetectorConfig {
  Method method = Method::kCbrw;
  double alpha = 0.95;
  double tol = 1e-3;
  std::size_t max_iter = 100;
  LiftScaling lift_scaling = LiftScaling::kSupport;
  SdrwReadout sdrw_readout = SdrwReadout::kDensityMass;
  FeatureWeighting weighting = FeatureWeighting::kRelevance;
  SelectionRule selection;
  unsigned threads = 1;

  void validate() const;
};

struct Detection {
  CategoricalDataset data;  // after preprocessing; ids below refer to it
  std::vector<std::string> removed_features;
  ObjectScores scores;
  // Empty for MarP.
  std::vector<double> phi;
  FeatureRelevance relevance;
  // Walk diagnostics (CBRW family).
  std::size_t iterations = 0;
  bool converged = true;
  std::vector<double> trace;
  // SDRW family.
  std::optional<PeelingResult> peeling;
  std::optional<GammaFactor> gamma;
  std::optional<ValueGraph> graph;
};

Detection detect(const CategoricalDataset& data, const DetectorConfig& config = {});

struct Selection {
  std::vector<FeatureId> features;  // ids in the input dataset, by descending rel
  std::vector<std::string> names;
  std::vector<double> rel;          // relevance of each selected feature
  FeatureRelevance relevance;       // over the preprocessed features
  std::vector<FeatureId> preprocessed_to_input;
  CategoricalDataset reduced;       // input restricted to `features`, input order
};

// Only the CBRW and SDRW methods rank features.
Selection select(const CategoricalDataset& data, const DetectorConfig& config = {});

enum class Engine { kCbrw, kSdrw };
enum class Variant { kFull, kBase, kIa, kIe };

Method variant_method(Engine engine, Variant variant);

ObjectScores variant_scores(const CategoricalDataset& data, Engine engine, Variant variant,
                            DetectorConfig config = {});

}  // namespace catwalk

#endif  // CATWALK_PIPELINE_HPP_
