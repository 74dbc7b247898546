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

#include "catwalk/common.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace catwalk {

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

template <typename T>
Csr<T> Csr<T>::FromTriplets(std::size_t n_rows, std::size_t n_cols,
                            std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  Csr out(n_rows, n_cols);
  std::size_t i = 0;
  while (i < triplets.size()) {
    const auto row = triplets[i].row;
    const auto col = triplets[i].col;
    if (row >= n_rows || col >= out.n_cols_) {
      Fail(ErrorCode::kInvalidArgument, "sparse entry out of range");
    }
    T sum{};
    for (; i < triplets.size() && triplets[i].row == row &&
           triplets[i].col == col;
         ++i) {
      sum += triplets[i].value;
    }
    if (sum != T{}) {
      out.cols_.push_back(col);
      out.values_.push_back(sum);
      ++out.row_ptr_[row + 1];
    }
  }
  for (std::size_t r = 0; r < n_rows; ++r) out.row_ptr_[r + 1] += out.row_ptr_[r];
  return out;
}

template <typename T>
T Csr<T>::at(std::size_t r, std::size_t c) const {
  auto cols = row_cols(r);
  auto it = std::lower_bound(cols.begin(), cols.end(), c);
  if (it == cols.end() || *it != c) return T{};
  return values_[row_ptr_[r] + static_cast<std::size_t>(it - cols.begin())];
}

template <typename T>
Csr<T> Csr<T>::Transposed() const {
  Csr out(n_cols_, n_rows_);
  out.row_ptr_.assign(n_cols_ + 1, 0);
  for (auto c : cols_) ++out.row_ptr_[c + 1];
  for (std::size_t c = 0; c < n_cols_; ++c) out.row_ptr_[c + 1] += out.row_ptr_[c];
  out.cols_.resize(cols_.size());
  out.values_.resize(values_.size());
  std::vector<std::size_t> next(out.row_ptr_.begin(), out.row_ptr_.end() - 1);
  // Rows are visited in order, so every transposed row comes out sorted.
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t dst = next[cols_[k]]++;
      out.cols_[dst] = static_cast<std::uint32_t>(r);
      out.values_[dst] = values_[k];
    }
  }
  return out;
}

template class Csr<double>;
template class Csr<std::uint32_t>;

void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t blocks = std::min<std::size_t>(threads, n);
  if (blocks <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(blocks - 1);
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&](std::size_t b) {
    const std::size_t lo = n * b / blocks;
    const std::size_t hi = n * (b + 1) / blocks;
    try {
      body(lo, hi);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  for (std::size_t b = 1; b < blocks; ++b) pool.emplace_back(run, b);
  run(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace catwalk
