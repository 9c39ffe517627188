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

#ifndef SCCODES_SIMPLICIAL_HPP_
#define SCCODES_SIMPLICIAL_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sccodes {

// Ambient dimension cap for F_2^m vectors.
inline constexpr int kMaxAmbient = 24;

// Index sets L of [m] are 1-indexed in the API; in masks, index i lives in
// bit i-1. The same convention holds for Vec2m coordinates.
using IndexMask = std::uint32_t;

inline std::uint32_t full_mask(int m) {
  return m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
}

// Vector of F_2^m as a bitmask.
struct Vec2m {
  std::uint32_t bits = 0;
  int m = 0;

  // Throws InvalidInput if bits exceed m or m is out of range.
  static Vec2m from_bits(std::uint32_t bits, int m);
  // From a 1-indexed support.
  static Vec2m from_support(std::span<const int> support, int m);
  // e_i, 1-indexed.
  static Vec2m unit(int i, int m);

  int weight() const { return std::popcount(bits); }
  std::vector<int> support() const;
  bool is_zero() const { return bits == 0; }
  friend bool operator==(const Vec2m&, const Vec2m&) = default;
};

// Supp(y) is contained in Supp(x). InvalidInput on differing m.
bool covers(const Vec2m& x, const Vec2m& y);
// Standard inner product over F_2.
bool inner(const Vec2m& x, const Vec2m& y);

// Simplicial complex given by its maximal elements. Construction drops
// duplicates and any element covered by another.
class Complex {
 public:
  Complex(int m, std::vector<Vec2m> generators);

  int m() const { return m_; }
  const std::vector<Vec2m>& maximal_elements() const { return maximal_; }
  bool contains(const Vec2m& v) const;

 private:
  int m_;
  std::vector<Vec2m> maximal_;
};

// Downward closure of the maximal elements, ascending by bitmask.
std::vector<Vec2m> complex_members(const Complex& c);

// Complex with the single maximal element whose support is L; equal to the
// coordinate subspace spanned by {e_i : i in L}.
class GenComplex {
 public:
  GenComplex(int m, IndexMask L);

  int m() const { return m_; }
  IndexMask generators() const { return L_; }
  int rank() const { return std::popcount(L_); }
  std::uint64_t size() const { return std::uint64_t{1} << rank(); }
  bool contains(const Vec2m& v) const;
  // Complex on [m] \ L; also the orthogonal complement of this subspace.
  GenComplex dual() const;
  Complex as_complex() const;

 private:
  int m_;
  IndexMask L_;
};

std::vector<Vec2m> complex_members(const GenComplex& g);
// Members as raw masks, ascending.
std::vector<std::uint32_t> member_masks(const GenComplex& g);

// chi_x(P) = sum over y in P of (-1)^{x.y}.
long long chi(const Vec2m& x, std::span<const Vec2m> P);
long long chi(std::uint32_t x, std::span<const std::uint32_t> P);
// chi_x(Delta_L) in closed form: 2^{|L|} if Supp(x) misses L, else 0.
long long chi_gen(const Vec2m& x, const GenComplex& g);
// phi(x | Y) = 1 iff Supp(x) and Y are disjoint.
bool phi(const Vec2m& x, IndexMask Y);
inline bool phi(std::uint32_t x, IndexMask Y) { return (x & Y) == 0; }

// "1,2,4" -> mask; empty string -> empty set. Indices must lie in [1, m].
IndexMask parse_index_set(const std::string& text, int m);
// "1;2,3;3,4" -> one mask per layer. An empty layer is written "-" or "".
std::vector<IndexMask> parse_layers(const std::string& text, int m);
std::string format_index_set(IndexMask L);
std::string format_layers(std::span<const IndexMask> layers);

// JSON array of bitmask integers, e.g. "[0,1,2,3]".
std::string members_json(std::span<const Vec2m> members);

}  // namespace sccodes

#endif  // SCCODES_SIMPLICIAL_HPP_
