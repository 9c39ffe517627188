// Copyright 2026 The sccodes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCCODES_BITMATRIX_HPP_
#define SCCODES_BITMATRIX_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sccodes {

// Dense matrix over F_2 with at most 64 columns. Row r is a bitmask whose
// bit c holds entry (r, c), both 0-indexed.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  BitMatrix(int cols, std::vector<std::uint64_t> rows);
  // Rows given as strings of '0'/'1', column 0 first: {"100", "001", "010"}.
  static BitMatrix from_strings(std::initializer_list<const char*> rows);
  static BitMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return (rows_[r] >> c) & 1U; }
  void set(int r, int c, bool v);
  std::uint64_t row(int r) const { return rows_[r]; }
  const std::vector<std::uint64_t>& row_masks() const { return rows_; }

  int rank() const;
  bool is_full_rank() const;

  BitMatrix& operator+=(const BitMatrix& o);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  // Rows joined by '/', e.g. "100/001/010".
  std::string to_string() const;

 private:
  int cols_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Rank over F_2 of a set of bit vectors.
int rank_of(std::vector<std::uint64_t> vectors);

}  // namespace sccodes

#endif  // SCCODES_BITMATRIX_HPP_
