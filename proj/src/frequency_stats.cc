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

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "catwalk/dataset.hpp"

namespace catwalk {
namespace {

// Above this many cells a feature-pair block is counted by sorting codes.
constexpr std::size_t kDenseBlockLimit = std::size_t{1} << 22;
// Dense blocks alive at once, in cells.
constexpr std::size_t kDenseBudget = std::size_t{1} << 24;
// Rows per pass; every column slice of a pass stays cache resident while all
// pairs of the group are counted over it.
constexpr std::size_t kRowChunk = 2048;

using Triplet = CountMatrix::Triplet;
using Columns = std::vector<std::vector<ValueId>>;
using Pair = std::pair<std::size_t, std::size_t>;

void EmitBlock(const std::vector<std::uint32_t>& block, const FeatureDomain& da,
               const FeatureDomain& db, std::vector<Triplet>& out) {
  const std::size_t wa = da.size();
  const std::size_t wb = db.size();
  for (std::size_t x = 0; x < wa; ++x) {
    for (std::size_t y = 0; y < wb; ++y) {
      if (auto c = block[x * wb + y]) {
        out.push_back({static_cast<std::uint32_t>(da.begin + x),
                       static_cast<std::uint32_t>(db.begin + y), c});
      }
    }
  }
}

// Counts pairs[lo, hi) with one dense block each, sweeping rows in chunks.
void CountDense(const Columns& columns, const CategoricalDataset& data,
                std::span<const Pair> pairs, std::span<std::vector<Triplet>> out) {
  const std::size_t n = data.n_objects();
  std::vector<std::vector<std::uint32_t>> blocks(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    blocks[p].assign(data.domain(pairs[p].first).size() * data.domain(pairs[p].second).size(), 0);
  }
  for (std::size_t lo = 0; lo < n; lo += kRowChunk) {
    const std::size_t hi = std::min(n, lo + kRowChunk);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [j, k] = pairs[p];
      const ValueId* a = columns[j].data();
      const ValueId* b = columns[k].data();
      const ValueId ba = data.domain(j).begin;
      const ValueId bb = data.domain(k).begin;
      const std::size_t wb = data.domain(k).size();
      std::uint32_t* block = blocks[p].data();
      for (std::size_t i = lo; i < hi; ++i) ++block[(a[i] - ba) * wb + (b[i] - bb)];
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    EmitBlock(blocks[p], data.domain(pairs[p].first), data.domain(pairs[p].second), out[p]);
  }
}

void CountSorted(const std::vector<ValueId>& col_a, const std::vector<ValueId>& col_b,
                 std::vector<Triplet>& out) {
  const std::size_t n = col_a.size();
  std::vector<std::uint64_t> codes(n);
  for (std::size_t i = 0; i < n; ++i) {
    codes[i] = (static_cast<std::uint64_t>(col_a[i]) << 32) | col_b[i];
  }
  std::sort(codes.begin(), codes.end());
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && codes[j] == codes[i]) ++j;
    out.push_back({static_cast<std::uint32_t>(codes[i] >> 32),
                   static_cast<std::uint32_t>(codes[i] & 0xffffffffu),
                   static_cast<std::uint32_t>(j - i)});
    i = j;
  }
}

}  // namespace

FrequencyStats compute_stats(const CategoricalDataset& data, unsigned threads) {
  const std::size_t n = data.n_objects();
  const std::size_t d = data.n_features();
  FrequencyStats s;
  s.n_objects_ = n;
  s.domains_ = data.domains();
  s.value_feature_ = data.value_features();
  s.supp_.assign(data.n_values(), 0);
  for (ValueId v : data.cells()) ++s.supp_[v];

  s.mode_.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& dom = data.domain(j);
    ValueId best = dom.begin;
    for (ValueId v = dom.begin + 1; v < dom.end; ++v) {
      if (s.supp_[v] > s.supp_[best]) best = v;
    }
    s.mode_[j] = best;
  }

  // Column-major copy so each feature pair streams two contiguous arrays.
  std::vector<std::vector<ValueId>> columns(d, std::vector<ValueId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) columns[j][i] = data.cell(i, j);
  }

  // Dense pairs first, cut into groups that fit the block budget; wide pairs
  // after them are counted one at a time by sorting.
  std::vector<Pair> pairs, wide;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      const std::size_t cells = data.domain(j).size() * data.domain(k).size();
      (cells <= kDenseBlockLimit ? pairs : wide).emplace_back(j, k);
    }
  }
  const std::size_t n_dense = pairs.size();
  pairs.insert(pairs.end(), wide.begin(), wide.end());
  std::vector<std::vector<Triplet>> per_pair(pairs.size());

  std::size_t start = 0;
  while (start < n_dense) {
    std::size_t stop = start, cells = 0;
    while (stop < n_dense) {
      const auto [j, k] = pairs[stop];
      const std::size_t c = data.domain(j).size() * data.domain(k).size();
      if (stop > start && cells + c > kDenseBudget) break;
      cells += c;
      ++stop;
    }
    ParallelFor(stop - start, threads, [&](std::size_t lo, std::size_t hi) {
      CountDense(columns, data, std::span<const Pair>(pairs).subspan(start + lo, hi - lo),
                 std::span<std::vector<Triplet>>(per_pair).subspan(start + lo, hi - lo));
    });
    start = stop;
  }
  ParallelFor(pairs.size() - n_dense, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = n_dense + lo; p < n_dense + hi; ++p) {
      CountSorted(columns[pairs[p].first], columns[pairs[p].second], per_pair[p]);
    }
  });

  // Mirror into both triangles.
  const std::size_t nv = data.n_values();
  std::size_t total = 0;
  for (const auto& block : per_pair) total += 2 * block.size();
  std::vector<Triplet> all;
  all.reserve(total);
  for (const auto& block : per_pair) {
    for (const auto& t : block) {
      all.push_back(t);
      all.push_back({t.col, t.row, t.value});
    }
  }
  per_pair.clear();
  s.joint_ = CountMatrix::FromTriplets(nv, nv, std::move(all));
  return s;
}

}  // namespace catwalk
