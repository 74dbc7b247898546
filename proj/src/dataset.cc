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

#include "catwalk/dataset.hpp"

#include <string>
#include <utility>

namespace catwalk {

CategoricalDataset::CategoricalDataset(std::vector<std::string> feature_names,
                                       std::vector<std::vector<std::string>> values,
                                       std::vector<ValueId> cells,
                                       std::vector<std::uint8_t> labels)
    : cells_(std::move(cells)),
      feature_names_(std::move(feature_names)),
      labels_(std::move(labels)) {
  const std::size_t d = feature_names_.size();
  if (d == 0) Fail(ErrorCode::kInvalidArgument, "dataset has no features");
  if (values.size() != d) {
    Fail(ErrorCode::kInvalidArgument, "feature/value table size mismatch");
  }
  if (cells_.size() % d != 0) {
    Fail(ErrorCode::kInvalidArgument, "cell count is not a multiple of the feature count");
  }
  n_objects_ = cells_.size() / d;
  if (n_objects_ == 0) Fail(ErrorCode::kInvalidArgument, "no data rows");
  if (!labels_.empty() && labels_.size() != n_objects_) {
    Fail(ErrorCode::kInvalidArgument, "label count does not match object count");
  }
  for (auto l : labels_) {
    if (l > 1) Fail(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }

  domains_.reserve(d);
  ValueId next = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (values[j].empty()) {
      Fail(ErrorCode::kInvalidArgument, "feature '" + feature_names_[j] + "' has no values");
    }
    FeatureDomain dom{next, static_cast<ValueId>(next + values[j].size())};
    domains_.push_back(dom);
    for (auto& name : values[j]) {
      value_names_.push_back(std::move(name));
      value_feature_.push_back(static_cast<FeatureId>(j));
    }
    next = dom.end;
  }

  for (std::size_t i = 0; i < n_objects_; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!domains_[j].contains(cells_[i * d + j])) {
        Fail(ErrorCode::kInvalidArgument,
             "cell (" + std::to_string(i) + ", " + std::to_string(j) +
                 ") is outside its feature domain");
      }
    }
  }
}

std::optional<ValueId> CategoricalDataset::find_value(std::size_t feature,
                                                      const std::string& name) const {
  const auto& dom = domains_.at(feature);
  for (ValueId v = dom.begin; v < dom.end; ++v) {
    if (value_names_[v] == name) return v;
  }
  return std::nullopt;
}

CategoricalDataset subset_features(const CategoricalDataset& data,
                                   std::span<const FeatureId> features) {
  if (features.empty()) Fail(ErrorCode::kInvalidArgument, "no features selected");
  const std::size_t n = data.n_objects();
  std::vector<std::uint32_t> supp(data.n_values(), 0);
  for (ValueId v : data.cells()) ++supp[v];

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> values;
  std::vector<ValueId> remap(data.n_values(), 0);
  std::vector<ValueId> offsets;
  ValueId next = 0;
  for (FeatureId f : features) {
    if (f >= data.n_features()) Fail(ErrorCode::kInvalidArgument, "feature index out of range");
    names.push_back(data.feature_name(f));
    offsets.push_back(next);
    std::vector<std::string> kept;
    const auto& dom = data.domain(f);
    for (ValueId v = dom.begin; v < dom.end; ++v) {
      if (supp[v] == 0) continue;
      remap[v] = static_cast<ValueId>(kept.size());
      kept.push_back(data.value_name(v));
    }
    next += static_cast<ValueId>(kept.size());
    values.push_back(std::move(kept));
  }

  std::vector<ValueId> cells;
  cells.reserve(n * features.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < features.size(); ++k) {
      cells.push_back(offsets[k] + remap[data.cell(i, features[k])]);
    }
  }
  return CategoricalDataset(std::move(names), std::move(values), std::move(cells),
                            data.labels());
}

Preprocessed preprocess(const CategoricalDataset& data) {
  std::vector<std::uint32_t> supp(data.n_values(), 0);
  for (ValueId v : data.cells()) ++supp[v];

  Preprocessed out;
  std::vector<FeatureId> keep;
  for (std::size_t j = 0; j < data.n_features(); ++j) {
    const auto& dom = data.domain(j);
    bool constant = false;
    for (ValueId v = dom.begin; v < dom.end; ++v) {
      if (supp[v] == data.n_objects()) constant = true;
    }
    if (constant) {
      out.removed_features.push_back(data.feature_name(j));
    } else {
      keep.push_back(static_cast<FeatureId>(j));
    }
  }
  if (keep.empty()) Fail(ErrorCode::kDegenerate, "no informative features");
  out.data = subset_features(data, keep);
  out.kept_features = std::move(keep);
  return out;
}

}  // namespace catwalk
