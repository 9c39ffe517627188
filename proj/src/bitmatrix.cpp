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

#include "sccodes/bitmatrix.hpp"

#include <bit>
#include <cstring>

#include "sccodes/error.hpp"

namespace sccodes {

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols), rows_(rows, 0) {
  if (cols < 0 || cols > 64 || rows < 0) {
    throw InvalidInput("BitMatrix supports 0..64 columns");
  }
}

BitMatrix::BitMatrix(int cols, std::vector<std::uint64_t> rows)
    : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0 || cols > 64) throw InvalidInput("BitMatrix supports 0..64 columns");
  const std::uint64_t extra = cols == 64 ? 0 : ~((std::uint64_t{1} << cols) - 1);
  for (auto r : rows_) {
    if (r & extra) throw InvalidInput("row has bits beyond the column count");
  }
}

BitMatrix BitMatrix::from_strings(std::initializer_list<const char*> rows) {
  std::vector<std::uint64_t> masks;
  int cols = -1;
  for (const char* s : rows) {
    const int len = static_cast<int>(std::strlen(s));
    if (cols >= 0 && len != cols) throw InvalidInput("ragged BitMatrix rows");
    cols = len;
    std::uint64_t m = 0;
    for (int c = 0; c < len; ++c) {
      if (s[c] == '1') {
        m |= std::uint64_t{1} << c;
      } else if (s[c] != '0') {
        throw InvalidInput("BitMatrix rows must be 0/1 strings");
      }
    }
    masks.push_back(m);
  }
  return BitMatrix(cols < 0 ? 0 : cols, std::move(masks));
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set(int r, int c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << c;
  rows_[r] = v ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

int rank_of(std::vector<std::uint64_t> vectors) {
  int rank = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::uint64_t v = vectors[i];
    if (v == 0) continue;
    ++rank;
    const std::uint64_t pivot = v & (~v + 1);  // lowest set bit
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (vectors[j] & pivot) vectors[j] ^= v;
    }
  }
  return rank;
}

int BitMatrix::rank() const { return rank_of(rows_); }

bool BitMatrix::is_full_rank() const {
  const int r = rank();
  return r == rows() && r == cols();
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& o) {
  if (o.rows() != rows() || o.cols() != cols()) {
    throw InvalidInput("BitMatrix shape mismatch");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] ^= o.rows_[i];
  return *this;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (int r = 0; r < rows(); ++r) {
    if (r) out += '/';
    for (int c = 0; c < cols_; ++c) out += at(r, c) ? '1' : '0';
  }
  return out;
}

}  // namespace sccodes
