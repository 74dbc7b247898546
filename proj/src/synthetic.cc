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

#include <cmath>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "catwalk/evaluation.hpp"

namespace catwalk {
namespace {

// Uniform draws built directly from the engine's bits so output does not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t Below(std::size_t k) {
    auto r = static_cast<std::size_t>(Uniform() * static_cast<double>(k));
    return r < k ? r : k - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

CategoricalDataset generate_synthetic(const SyntheticConfig& c) {
  if (c.n_objects == 0) Fail(ErrorCode::kInvalidArgument, "n_objects must be positive");
  if (c.n_outliers == 0) Fail(ErrorCode::kInvalidArgument, "n_outliers must be positive");
  if (c.n_outliers >= c.n_objects) {
    Fail(ErrorCode::kInvalidArgument, "n_outliers must be smaller than n_objects");
  }
  if (c.n_relevant + c.n_noisy == 0) Fail(ErrorCode::kInvalidArgument, "no features requested");
  if (!(c.coupling_strength >= 0.0 && c.coupling_strength <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "coupling_strength must lie in [0, 1]");
  }
  if (!(c.outlying_leak >= 0.0)) Fail(ErrorCode::kInvalidArgument, "outlying_leak must be non-negative");
  if (c.n_outlying_values == 0 || c.n_noisy_values == 0) {
    Fail(ErrorCode::kInvalidArgument, "rare value pools must be non-empty");
  }

  const std::size_t n = c.n_objects;
  const std::size_t d = c.n_relevant + c.n_noisy;
  Rng rng(c.seed);

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = 0; i < c.n_outliers; ++i) std::swap(perm[i], perm[i + rng.Below(n - i)]);
  std::vector<std::size_t> outliers(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(c.n_outliers));
  std::vector<std::uint8_t> labels(n, 0);
  for (auto i : outliers) labels[i] = 1;
  std::vector<std::size_t> normals;
  normals.reserve(n - c.n_outliers);
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i]) normals.push_back(i);
  }
  std::vector<std::size_t> group(n);
  for (auto& g : group) g = rng.Below(c.n_outlying_values);

  const double rate = static_cast<double>(c.n_outliers) / static_cast<double>(n);
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> values(d);
  std::vector<ValueId> cells(n * d);
  std::vector<std::uint32_t> code(n);

  for (std::size_t j = 0; j < d; ++j) {
    const bool relevant = j < c.n_relevant;
    names.push_back(relevant ? "r" + std::to_string(j) : "n" + std::to_string(j - c.n_relevant));
    const std::size_t k = 3 + j % 3;
    std::vector<double> cum(k);
    double total = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      total += std::pow(static_cast<double>(k - t), 1.5);
      cum[t] = total;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double u = rng.Uniform() * total;
      std::size_t t = 0;
      while (t + 1 < k && u >= cum[t]) ++t;
      code[i] = static_cast<std::uint32_t>(t);
    }
    // Codes: [0, k) normal, then outlying values, then noisy values.
    const auto outlying = static_cast<std::uint32_t>(k);
    const auto noisy = static_cast<std::uint32_t>(k + c.n_outlying_values);
    if (relevant) {
      for (auto i : outliers) {
        if (rng.Uniform() < c.coupling_strength) code[i] = outlying + static_cast<std::uint32_t>(group[i]);
      }
      for (auto i : normals) {
        if (rng.Uniform() < rate * c.outlying_leak) {
          code[i] = outlying + static_cast<std::uint32_t>(rng.Below(c.n_outlying_values));
        }
      }
    } else {
      // Noisy features make outliers look typical and normals look rare.
      for (auto i : outliers) code[i] = 0;
      for (auto i : normals) {
        if (rng.Uniform() < rate) code[i] = noisy + static_cast<std::uint32_t>(rng.Below(c.n_noisy_values));
      }
    }

    // Intern in row order so a CSV round trip reproduces the same ids.
    std::unordered_map<std::uint32_t, ValueId> local;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = local.try_emplace(code[i], static_cast<ValueId>(values[j].size()));
      if (inserted) {
        const std::uint32_t x = code[i];
        values[j].push_back(x < outlying ? "v" + std::to_string(x)
                            : x < noisy  ? "o" + std::to_string(x - outlying)
                                         : "z" + std::to_string(x - noisy));
      }
      cells[i * d + j] = it->second;
    }
  }

  ValueId offset = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) cells[i * d + j] += offset;
    offset += static_cast<ValueId>(values[j].size());
  }
  return CategoricalDataset(std::move(names), std::move(values), std::move(cells), std::move(labels));
}

}  // namespace catwalk
