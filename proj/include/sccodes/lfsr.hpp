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

#ifndef SCCODES_LFSR_HPP_
#define SCCODES_LFSR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sccodes/binpoly.hpp"
#include "sccodes/bitmatrix.hpp"
#include "sccodes/field.hpp"

namespace sccodes {

// Linear recurring sequence over F_2, held as characteristic polynomial plus
// initial state. With charpoly x^n + c_{n-1}x^{n-1} + ... + c_0, the terms
// satisfy a_{n+k} = sum_i c_i a_{i+k}. Bit j of a state mask is term k+j.
class LfsrSeq {
 public:
  // Degree of charpoly must lie in [1, 32]; init_state must fit in n bits.
  LfsrSeq(BinPoly charpoly, std::uint64_t init_state);

  BinPoly charpoly() const { return charpoly_; }
  int order() const { return charpoly_.degree(); }
  std::uint64_t init_state() const { return init_; }
  bool is_zero() const { return init_ == 0; }

  bool term(std::uint64_t k) const;
  // (a_k, ..., a_{k+n-1}) as a bitmask, term a_k in bit 0.
  std::uint64_t state(std::uint64_t k) const;
  // First `len` terms, in order.
  std::vector<std::uint8_t> prefix(std::size_t len) const;
  // Prefix rendered as "1001011".
  std::string prefix_string(std::size_t len) const;

  friend bool operator==(const LfsrSeq&, const LfsrSeq&) = default;

 private:
  std::uint64_t step(std::uint64_t state) const;

  BinPoly charpoly_;
  std::uint64_t init_;
};

// Left shift L: drops the first term.
LfsrSeq shift(const LfsrSeq& seq);
// Termwise sum. Both sequences must share a characteristic polynomial;
// otherwise InvalidInput (no lcm lifting).
LfsrSeq operator+(const LfsrSeq& a, const LfsrSeq& b);

// True iff g(L) annihilates the sequence, checked on a window of
// deg(charpoly) + deg(g) + 2n terms. Throws InvalidInput for g = 0.
bool in_Gf(const LfsrSeq& seq, BinPoly g);

// Lowest-degree monic annihilator, found among the monic divisors of the
// characteristic polynomial. Returns 1 exactly for the zero sequence.
BinPoly minimal_polynomial(const LfsrSeq& seq);

// Rows s_0..s_{n-1}: the first n successive states.
using StateMat = BitMatrix;
StateMat states_matrix(const LfsrSeq& seq);
inline bool is_full_rank(const StateMat& m) { return m.is_full_rank(); }

// a_i = (l_{0,i}, l_{1,i}, ...): the coordinate sequences of the powers of w.
// Each has charpoly = ctx.modulus() and initial state e_{i+1}.
std::vector<LfsrSeq> basis_sequences(const FieldCtx& ctx);

// Parses a 0/1 string "100" as an initial state, first character = a_0.
std::uint64_t parse_state(const std::string& bits);

}  // namespace sccodes

#endif  // SCCODES_LFSR_HPP_
