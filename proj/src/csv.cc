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

// RFC-4180 reader and writer for categorical tables.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "catwalk/dataset.hpp"

namespace catwalk {
namespace {

class RecordReader {
 public:
  RecordReader(std::istream& in, char delim) : in_(in), delim_(delim) {}

  // Returns false at end of input. Blank lines are skipped.
  bool Next(std::vector<std::string>& fields) {
    while (true) {
      fields.clear();
      if (in_.peek() == std::char_traits<char>::eof()) return false;
      ++record_;
      std::string field;
      bool quoted = false;
      bool any = false;
      bool was_quoted = false;
      int c;
      while ((c = in_.get()) != std::char_traits<char>::eof()) {
        any = true;
        if (quoted) {
          if (c == '"') {
            if (in_.peek() == '"') {
              in_.get();
              field.push_back('"');
            } else {
              quoted = false;
            }
          } else {
            field.push_back(static_cast<char>(c));
          }
          continue;
        }
        if (c == '"' && field.empty() && !was_quoted) {
          quoted = true;
          was_quoted = true;
        } else if (c == delim_) {
          fields.push_back(std::move(field));
          field.clear();
          was_quoted = false;
        } else if (c == '\n') {
          break;
        } else if (c == '\r') {
          if (in_.peek() == '\n') in_.get();
          break;
        } else {
          field.push_back(static_cast<char>(c));
        }
      }
      if (quoted) {
        Fail(ErrorCode::kParse, "unterminated quoted field in row " + std::to_string(record_));
      }
      if (!any) return false;
      if (fields.empty() && field.empty() && !was_quoted) continue;
      fields.push_back(std::move(field));
      return true;
    }
  }

  std::size_t record() const { return record_; }

 private:
  std::istream& in_;
  char delim_;
  std::size_t record_ = 0;
};

std::string Lower(std::string s) {
  auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  std::string out = b < e ? std::string(b, e) : std::string();
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::uint8_t ParseLabel(const std::string& raw, std::size_t row) {
  const std::string s = Lower(raw);
  if (s == "1" || s == "yes" || s == "true" || s == "outlier") return 1;
  if (s == "0" || s == "no" || s == "false" || s == "normal") return 0;
  Fail(ErrorCode::kParse, "unknown label value '" + raw + "' in row " + std::to_string(row));
}

void WriteField(std::ostream& out, const std::string& s, char delim) {
  const bool quote = s.find_first_of(std::string{delim, '"', '\n', '\r'}) != std::string::npos;
  if (!quote) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

CategoricalDataset read_csv(std::istream& in, const CsvOptions& options) {
  RecordReader reader(in, options.delimiter);
  std::vector<std::string> fields;
  std::vector<std::string> header;
  if (options.has_header) {
    if (!reader.Next(header)) Fail(ErrorCode::kParse, "empty file");
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_numbers;
  std::size_t width = header.size();
  while (reader.Next(fields)) {
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      Fail(ErrorCode::kParse, "row " + std::to_string(reader.record()) + " has " +
                                  std::to_string(fields.size()) + " columns, expected " +
                                  std::to_string(width));
    }
    rows.push_back(fields);
    row_numbers.push_back(reader.record());
  }
  if (rows.empty()) {
    Fail(ErrorCode::kParse, options.has_header ? "no data rows" : "empty file");
  }

  std::optional<std::size_t> label_col;
  if (const auto* name = std::get_if<std::string>(&options.label_column)) {
    if (!options.has_header) {
      Fail(ErrorCode::kInvalidArgument, "label column by name needs a header row");
    }
    auto it = std::find(header.begin(), header.end(), *name);
    if (it == header.end()) Fail(ErrorCode::kInvalidArgument, "no column named '" + *name + "'");
    label_col = static_cast<std::size_t>(it - header.begin());
  } else if (const auto* idx = std::get_if<std::size_t>(&options.label_column)) {
    if (*idx >= width) Fail(ErrorCode::kInvalidArgument, "label column index out of range");
    label_col = *idx;
  }

  std::vector<std::size_t> feature_cols;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < width; ++c) {
    if (label_col && *label_col == c) continue;
    feature_cols.push_back(c);
    names.push_back(options.has_header ? header[c] : "f" + std::to_string(c));
  }
  if (feature_cols.empty()) Fail(ErrorCode::kInvalidArgument, "no feature columns");

  const std::size_t d = feature_cols.size();
  std::vector<std::vector<std::string>> values(d);
  std::vector<std::unordered_map<std::string, ValueId>> dict(d);
  std::vector<ValueId> local(rows.size() * d);
  std::vector<std::uint8_t> labels;
  if (label_col) labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      auto& cell = rows[i][feature_cols[k]];
      auto [it, inserted] = dict[k].try_emplace(cell, static_cast<ValueId>(values[k].size()));
      if (inserted) values[k].push_back(cell);
      local[i * d + k] = it->second;
    }
    if (label_col) labels.push_back(ParseLabel(rows[i][*label_col], row_numbers[i]));
  }

  std::vector<ValueId> offset(d, 0);
  for (std::size_t k = 1; k < d; ++k) {
    offset[k] = offset[k - 1] + static_cast<ValueId>(values[k - 1].size());
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) local[i * d + k] += offset[k];
  }
  return CategoricalDataset(std::move(names), std::move(values), std::move(local),
                            std::move(labels));
}

CategoricalDataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_csv(in, options);
}

void write_csv(const CategoricalDataset& data, std::ostream& out, char delimiter) {
  const std::size_t d = data.n_features();
  for (std::size_t j = 0; j < d; ++j) {
    if (j) out << delimiter;
    WriteField(out, data.feature_name(j), delimiter);
  }
  if (data.has_labels()) out << delimiter << "label";
  out << '\n';
  for (std::size_t i = 0; i < data.n_objects(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out << delimiter;
      WriteField(out, data.value_name(data.cell(i, j)), delimiter);
    }
    if (data.has_labels()) out << delimiter << static_cast<int>(data.labels()[i]);
    out << '\n';
  }
}

void write_csv(const CategoricalDataset& data, const std::string& path, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  write_csv(data, out, delimiter);
  if (!out) Fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace catwalk
