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

#ifndef CATWALK_FACTORS_HPP_
#define CATWALK_FACTORS_HPP_

#include <vector>

#include "catwalk/common.hpp"
#include "catwalk/dataset.hpp"

namespace catwalk {

// Per-value intra-feature outlier factor. delta_raw lies in (0, 2);
// delta_hat = delta_raw / 2 is what the engines consume.
struct IntraFactor {
  std::vector<double> delta_raw;
  std::vector<double> delta_hat;
};

enum class InfluenceKind { kConditional, kLift };

struct InfluenceMatrix {
  SparseMatrix entries;
  InfluenceKind kind = InfluenceKind::kConditional;
};

enum class LiftScaling {
  kSupport,    // supp(u,v) / (supp(u) supp(v))
  kFrequency,  // freq(u,v) / (freq(u) freq(v)), i.e. N times the above
};

IntraFactor intra_outlierness(const FrequencyStats& stats);

// entry(u, v) = freq(u, v) / freq(v) across features.
InfluenceMatrix conditional_influence(const FrequencyStats& stats);

InfluenceMatrix lift_influence(const FrequencyStats& stats,
                               LiftScaling scaling = LiftScaling::kSupport);

// Replaces every stored entry with 1 (co-occurrence indicator).
InfluenceMatrix binarize(const InfluenceMatrix& m);

// An IntraFactor whose delta_hat is 1 everywhere.
IntraFactor unit_intra(std::size_t n_values);

}  // namespace catwalk

#endif  // CATWALK_FACTORS_HPP_
