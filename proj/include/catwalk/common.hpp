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

// Shared building blocks: the error type thrown by the core, a compressed
// sparse row matrix, and a deterministic row-block parallel loop.

#ifndef CATWALK_COMMON_HPP_
#define CATWALK_COMMON_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace catwalk {

using ValueId = std::uint32_t;
using FeatureId = std::uint32_t;

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kIo = 3,
  kDegenerate = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

// Row-major CSR matrix with sorted column indices in every row.
template <typename T>
class Csr {
 public:
  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    T value;
  };

  Csr() = default;
  explicit Csr(std::size_t n_rows, std::size_t n_cols = 0)
      : n_rows_(n_rows), n_cols_(n_cols == 0 ? n_rows : n_cols),
        row_ptr_(n_rows + 1, 0) {}

  // Duplicate (row, col) pairs are summed. Zero values are dropped.
  static Csr FromTriplets(std::size_t n_rows, std::size_t n_cols,
                          std::vector<Triplet> triplets);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::uint32_t> row_cols(std::size_t r) const {
    return {cols_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const T> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<T> mutable_row_values(std::size_t r) {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  // Zero when absent.
  T at(std::size_t r, std::size_t c) const;

  Csr Transposed() const;

  // Same sparsity pattern, values replaced by f(row, col, value).
  template <typename U, typename F>
  Csr<U> Map(F&& f) const {
    Csr<U> out(n_rows_, n_cols_);
    out.row_ptr_ = row_ptr_;
    out.cols_ = cols_;
    out.values_.resize(values_.size());
    for (std::size_t r = 0; r < n_rows_; ++r) {
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        out.values_[k] = f(static_cast<std::uint32_t>(r), cols_[k], values_[k]);
      }
    }
    return out;
  }

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& col_index() const { return cols_; }
  const std::vector<T>& values() const { return values_; }

 private:
  template <typename>
  friend class Csr;

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<T> values_;
};

using SparseMatrix = Csr<double>;
using CountMatrix = Csr<std::uint32_t>;

// Splits [0, n) into at most `threads` contiguous blocks and runs
// body(begin, end) on each. Blocks never overlap, so writes to disjoint
// outputs are race-free and the result does not depend on the thread count.
void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace catwalk

#endif  // CATWALK_COMMON_HPP_
