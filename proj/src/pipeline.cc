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

#include "catwalk/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace catwalk {
namespace {

struct MethodInfo {
  Method method;
  const char* name;
};

constexpr MethodInfo kMethods[] = {
    {Method::kCbrw, "cbrw"},       {Method::kSdrw, "sdrw"},       {Method::kMarp, "marp"},
    {Method::kBase, "base"},       {Method::kCbrwIa, "cbrw-ia"}, {Method::kCbrwIe, "cbrw-ie"},
    {Method::kSdrwIa, "sdrw-ia"}, {Method::kSdrwIe, "sdrw-ie"},
};

bool IsCbrw(Method m) { return m == Method::kCbrw || m == Method::kCbrwIa || m == Method::kCbrwIe; }
bool IsSdrw(Method m) { return m == Method::kSdrw || m == Method::kSdrwIa || m == Method::kSdrwIe; }
bool IsIa(Method m) { return m == Method::kCbrwIa || m == Method::kSdrwIa; }
bool IsIe(Method m) { return m == Method::kCbrwIe || m == Method::kSdrwIe; }

// Fills phi and the engine artifacts of `out`.
void ValueOutlierness(const FrequencyStats& stats, const DetectorConfig& cfg, Detection& out) {
  const IntraFactor delta = IsIe(cfg.method) ? unit_intra(stats.n_values())
                                             : intra_outlierness(stats);
  if (cfg.method == Method::kBase) {
    double total = 0.0;
    for (double d : delta.delta_hat) total += d;
    out.phi.resize(delta.delta_hat.size());
    for (std::size_t v = 0; v < out.phi.size(); ++v) out.phi[v] = delta.delta_hat[v] / total;
    return;
  }

  if (IsCbrw(cfg.method)) {
    InfluenceMatrix infl = conditional_influence(stats);
    if (IsIa(cfg.method)) infl = binarize(infl);
    ValueGraph g = build_cbrw_graph(delta, infl, stats.value_features());
    const TransitionMatrix w = transition_matrix(g);
    OutliernessVector ov = stationary_distribution(
        w, StationaryOptions{cfg.alpha, cfg.tol, cfg.max_iter, cfg.threads});
    out.phi = std::move(ov.phi);
    out.iterations = ov.iterations;
    out.converged = ov.converged;
    out.trace = std::move(ov.trace);
    out.graph = std::move(g);
    return;
  }

  InfluenceMatrix lift = lift_influence(stats, cfg.lift_scaling);
  if (IsIa(cfg.method)) lift = binarize(lift);
  ValueGraph g = build_sdrw_graph(delta, lift, stats.value_features());
  PeelingResult peel = peel_subgraphs(g);
  GammaFactor gamma = gamma_factor(peel);
  OutliernessVector ov = cfg.sdrw_readout == SdrwReadout::kDensityMass
                             ? density_mass_outlierness(gamma)
                             : sdrw_outlierness(lift.entries, gamma.gamma);
  out.phi = std::move(ov.phi);
  out.peeling = std::move(peel);
  out.gamma = std::move(gamma);
  out.graph = std::move(g);
}

}  // namespace

Method parse_method(const std::string& name) {
  for (const auto& m : kMethods) {
    if (name == m.name) return m.method;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown method '" + name + "'");
}

std::string method_name(Method m) {
  for (const auto& info : kMethods) {
    if (info.method == m) return info.name;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown method");
}

void DetectorConfig::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) Fail(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1)");
  if (!(tol >= 0.0)) Fail(ErrorCode::kInvalidArgument, "tol must be non-negative");
  if (max_iter == 0) Fail(ErrorCode::kInvalidArgument, "max_iter must be positive");
  if (!selection.min_rel && !(selection.top_ratio > 0.0 && selection.top_ratio <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "top_ratio must lie in (0, 1]");
  }
}

Detection detect(const CategoricalDataset& data, const DetectorConfig& config) {
  config.validate();
  Preprocessed pre = preprocess(data);
  Detection out;
  out.data = std::move(pre.data);
  out.removed_features = std::move(pre.removed_features);
  if (config.method == Method::kMarp) {
    out.scores = marp_scores(out.data);
    return out;
  }
  const FrequencyStats stats = compute_stats(out.data, config.threads);
  ValueOutlierness(stats, config, out);
  out.relevance = feature_relevance(out.phi, out.data);
  out.scores = object_scores(out.phi, out.relevance, out.data, config.weighting, config.threads);
  return out;
}

Selection select(const CategoricalDataset& data, const DetectorConfig& config) {
  config.validate();
  if (!IsCbrw(config.method) && !IsSdrw(config.method)) {
    Fail(ErrorCode::kInvalidArgument, "feature selection needs a cbrw or sdrw method");
  }
  Preprocessed pre = preprocess(data);
  const FrequencyStats stats = compute_stats(pre.data, config.threads);
  Detection det;
  ValueOutlierness(stats, config, det);

  Selection out;
  out.relevance = feature_relevance(det.phi, pre.data);
  out.preprocessed_to_input = pre.kept_features;
  const auto picked = select_features(out.relevance, config.selection);
  if (picked.empty()) Fail(ErrorCode::kInvalidArgument, "no features selected");
  for (auto f : picked) {
    out.features.push_back(pre.kept_features[f]);
    out.names.push_back(pre.data.feature_name(f));
    out.rel.push_back(out.relevance.rel[f]);
  }
  std::vector<FeatureId> sorted = out.features;
  std::sort(sorted.begin(), sorted.end());
  out.reduced = subset_features(data, sorted);
  return out;
}

Method variant_method(Engine engine, Variant variant) {
  switch (variant) {
    case Variant::kFull:
      return engine == Engine::kCbrw ? Method::kCbrw : Method::kSdrw;
    case Variant::kBase:
      return Method::kBase;
    case Variant::kIa:
      return engine == Engine::kCbrw ? Method::kCbrwIa : Method::kSdrwIa;
    case Variant::kIe:
      return engine == Engine::kCbrw ? Method::kCbrwIe : Method::kSdrwIe;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown variant");
}

ObjectScores variant_scores(const CategoricalDataset& data, Engine engine, Variant variant,
                            DetectorConfig config) {
  config.method = variant_method(engine, variant);
  return detect(data, config).scores;
}

}  // namespace catwalk
