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

#ifndef CATWALK_DATASET_HPP_
#define CATWALK_DATASET_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "catwalk/common.hpp"

namespace catwalk {

// Half-open range of global value ids owned by one feature.
struct FeatureDomain {
  ValueId begin = 0;
  ValueId end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(ValueId v) const { return v >= begin && v < end; }
};

// N objects by D categorical features. Every feature owns a contiguous block
// of value ids; blocks are laid out in feature order and never overlap.
class CategoricalDataset {
 public:
  CategoricalDataset() = default;

  // `values[j]` lists the display names of feature j's values in id order.
  // `cells` is row-major with global ids. `labels` is empty or has one
  // entry per object (1 = outlier).
  CategoricalDataset(std::vector<std::string> feature_names,
                     std::vector<std::vector<std::string>> values,
                     std::vector<ValueId> cells,
                     std::vector<std::uint8_t> labels = {});

  std::size_t n_objects() const { return n_objects_; }
  std::size_t n_features() const { return domains_.size(); }
  std::size_t n_values() const { return value_names_.size(); }

  ValueId cell(std::size_t object, std::size_t feature) const {
    return cells_[object * n_features() + feature];
  }
  std::span<const ValueId> row(std::size_t object) const {
    return {cells_.data() + object * n_features(), n_features()};
  }
  const std::vector<ValueId>& cells() const { return cells_; }

  const FeatureDomain& domain(std::size_t feature) const { return domains_[feature]; }
  const std::vector<FeatureDomain>& domains() const { return domains_; }
  FeatureId feature_of(ValueId v) const { return value_feature_[v]; }
  const std::vector<FeatureId>& value_features() const { return value_feature_; }

  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::string& feature_name(std::size_t j) const { return feature_names_[j]; }
  const std::string& value_name(ValueId v) const { return value_names_[v]; }
  const std::vector<std::string>& value_names() const { return value_names_; }

  // Global id of `name` within `feature`, if present.
  std::optional<ValueId> find_value(std::size_t feature, const std::string& name) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

 private:
  std::size_t n_objects_ = 0;
  std::vector<ValueId> cells_;
  std::vector<FeatureDomain> domains_;
  std::vector<FeatureId> value_feature_;
  std::vector<std::string> feature_names_;
  std::vector<std::string> value_names_;
  std::vector<std::uint8_t> labels_;
};

struct CsvOptions {
  bool has_header = true;
  // Column name or 0-based index; monostate means no label column.
  std::variant<std::monostate, std::string, std::size_t> label_column;
  char delimiter = ',';
};

CategoricalDataset load_csv(const std::string& path, const CsvOptions& options = {});
CategoricalDataset read_csv(std::istream& in, const CsvOptions& options = {});

// Writes features in order and, when present, a trailing "label" column (0/1).
void write_csv(const CategoricalDataset& data, std::ostream& out, char delimiter = ',');
void write_csv(const CategoricalDataset& data, const std::string& path, char delimiter = ',');

struct Preprocessed {
  CategoricalDataset data;
  std::vector<FeatureId> kept_features;  // input feature ids, in order
  std::vector<std::string> removed_features;
};

// Drops single-valued features and renumbers value ids.
Preprocessed preprocess(const CategoricalDataset& data);

// Keeps the listed features, in the given order, renumbering value ids.
// Values that no object uses after the cut are dropped.
CategoricalDataset subset_features(const CategoricalDataset& data,
                                   std::span<const FeatureId> features);

// Counts over a dataset. Frequencies are exact count/N ratios; doubles are
// only produced on request.
class FrequencyStats {
 public:
  std::size_t n_objects() const { return n_objects_; }
  std::size_t n_values() const { return supp_.size(); }
  std::size_t n_features() const { return mode_.size(); }

  std::uint32_t supp(ValueId v) const { return supp_[v]; }
  double freq(ValueId v) const {
    return static_cast<double>(supp_[v]) / static_cast<double>(n_objects_);
  }
  const std::vector<std::uint32_t>& supports() const { return supp_; }

  ValueId mode(std::size_t feature) const { return mode_[feature]; }
  const std::vector<ValueId>& modes() const { return mode_; }

  // Co-occurrence count of two values of different features; 0 if absent.
  std::uint32_t joint_supp(ValueId u, ValueId v) const { return joint_.at(u, v); }
  // Symmetric, both triangles stored, empty diagonal.
  const CountMatrix& joint() const { return joint_; }

  const std::vector<FeatureId>& value_features() const { return value_feature_; }
  const std::vector<FeatureDomain>& domains() const { return domains_; }

 private:
  friend FrequencyStats compute_stats(const CategoricalDataset&, unsigned);

  std::size_t n_objects_ = 0;
  std::vector<std::uint32_t> supp_;
  std::vector<ValueId> mode_;
  CountMatrix joint_;
  std::vector<FeatureId> value_feature_;
  std::vector<FeatureDomain> domains_;
};

// threads = 0 picks the hardware concurrency. The result does not depend on it.
FrequencyStats compute_stats(const CategoricalDataset& data, unsigned threads = 1);

}  // namespace catwalk

#endif  // CATWALK_DATASET_HPP_
