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

#include "catwalk/factors.hpp"

#include <string>

namespace catwalk {

IntraFactor intra_outlierness(const FrequencyStats& stats) {
  const double n = static_cast<double>(stats.n_objects());
  IntraFactor f;
  f.delta_raw.resize(stats.n_values());
  f.delta_hat.resize(stats.n_values());
  for (std::size_t j = 0; j < stats.n_features(); ++j) {
    const auto& dom = stats.domains()[j];
    const std::uint32_t sm = stats.supp(stats.mode(j));
    if (sm == stats.n_objects()) {
      Fail(ErrorCode::kInternal,
           "feature " + std::to_string(j) + " is constant; run preprocess first");
    }
    for (ValueId v = dom.begin; v < dom.end; ++v) {
      // base + dev, written over integer supports to keep rounding small.
      const double base = static_cast<double>(stats.n_objects() - sm) / n;
      const double dev = static_cast<double>(sm - stats.supp(v)) / static_cast<double>(sm);
      f.delta_raw[v] = base + dev;
      f.delta_hat[v] = f.delta_raw[v] / 2.0;
    }
  }
  return f;
}

InfluenceMatrix conditional_influence(const FrequencyStats& stats) {
  InfluenceMatrix m;
  m.kind = InfluenceKind::kConditional;
  m.entries = stats.joint().Map<double>([&](std::uint32_t, std::uint32_t v, std::uint32_t c) {
    return static_cast<double>(c) / static_cast<double>(stats.supp(v));
  });
  return m;
}

InfluenceMatrix lift_influence(const FrequencyStats& stats, LiftScaling scaling) {
  const double scale =
      scaling == LiftScaling::kFrequency ? static_cast<double>(stats.n_objects()) : 1.0;
  InfluenceMatrix m;
  m.kind = InfluenceKind::kLift;
  m.entries = stats.joint().Map<double>([&](std::uint32_t u, std::uint32_t v, std::uint32_t c) {
    return scale * static_cast<double>(c) /
           (static_cast<double>(stats.supp(u)) * static_cast<double>(stats.supp(v)));
  });
  return m;
}

InfluenceMatrix binarize(const InfluenceMatrix& m) {
  InfluenceMatrix out;
  out.kind = m.kind;
  out.entries = m.entries.Map<double>([](std::uint32_t, std::uint32_t, double) { return 1.0; });
  return out;
}

IntraFactor unit_intra(std::size_t n_values) {
  IntraFactor f;
  f.delta_raw.assign(n_values, 2.0);
  f.delta_hat.assign(n_values, 1.0);
  return f;
}

}  // namespace catwalk
