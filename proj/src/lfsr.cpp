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

#include "sccodes/lfsr.hpp"

#include <bit>

#include "sccodes/error.hpp"

namespace sccodes {

LfsrSeq::LfsrSeq(BinPoly charpoly, std::uint64_t init_state)
    : charpoly_(charpoly), init_(init_state) {
  const int n = charpoly.degree();
  if (n < 1 || n > 32) {
    throw InvalidInput("characteristic polynomial degree must lie in [1, 32]");
  }
  if (init_state >> n) {
    throw InvalidInput("initial state has more than " + std::to_string(n) +
                       " bits");
  }
}

std::uint64_t LfsrSeq::step(std::uint64_t s) const {
  const int n = order();
  // Feedback taps are the low n coefficients of the charpoly.
  const std::uint64_t taps = charpoly_.coeffs & ((std::uint64_t{1} << n) - 1);
  const std::uint64_t next = std::popcount(s & taps) & 1U;
  return (s >> 1) | (next << (n - 1));
}

std::uint64_t LfsrSeq::state(std::uint64_t k) const {
  std::uint64_t s = init_;
  for (std::uint64_t i = 0; i < k; ++i) s = step(s);
  return s;
}

bool LfsrSeq::term(std::uint64_t k) const { return state(k) & 1U; }

std::vector<std::uint8_t> LfsrSeq::prefix(std::size_t len) const {
  std::vector<std::uint8_t> out(len);
  std::uint64_t s = init_;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint8_t>(s & 1U);
    s = step(s);
  }
  return out;
}

std::string LfsrSeq::prefix_string(std::size_t len) const {
  std::string out;
  for (auto b : prefix(len)) out += b ? '1' : '0';
  return out;
}

LfsrSeq shift(const LfsrSeq& seq) {
  return LfsrSeq(seq.charpoly(), seq.state(1));
}

LfsrSeq operator+(const LfsrSeq& a, const LfsrSeq& b) {
  if (a.charpoly() != b.charpoly()) {
    throw InvalidInput("sequence sum needs a common characteristic polynomial");
  }
  return LfsrSeq(a.charpoly(), a.init_state() ^ b.init_state());
}

bool in_Gf(const LfsrSeq& seq, BinPoly g) {
  if (g.is_zero()) throw InvalidInput("zero polynomial annihilates everything");
  const int n = seq.order();
  const int dg = g.degree();
  const std::size_t window = static_cast<std::size_t>(n + dg + 2 * n);
  const auto terms = seq.prefix(window + dg);
  for (std::size_t k = 0; k < window; ++k) {
    unsigned acc = 0;
    for (int j = 0; j <= dg; ++j) {
      if (g.coeff(j)) acc ^= terms[k + j];
    }
    if (acc) return false;
  }
  return true;
}

BinPoly minimal_polynomial(const LfsrSeq& seq) {
  for (BinPoly d : monic_divisors(seq.charpoly())) {
    if (in_Gf(seq, d)) return d;
  }
  return seq.charpoly();  // unreachable: charpoly always annihilates
}

StateMat states_matrix(const LfsrSeq& seq) {
  const int n = seq.order();
  std::vector<std::uint64_t> rows(n);
  std::uint64_t s = seq.init_state();
  for (int r = 0; r < n; ++r) {
    rows[r] = s;
    s = shift(LfsrSeq(seq.charpoly(), s)).init_state();
  }
  return StateMat(n, std::move(rows));
}

std::vector<LfsrSeq> basis_sequences(const FieldCtx& ctx) {
  std::vector<LfsrSeq> out;
  for (int i = 0; i < ctx.degree(); ++i) {
    out.emplace_back(ctx.modulus(), std::uint64_t{1} << i);
  }
  return out;
}

std::uint64_t parse_state(const std::string& bits) {
  if (bits.empty() || bits.size() > 32) {
    throw InvalidInput("state must have 1..32 bits");
  }
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw InvalidInput("state must be a 0/1 string");
    }
  }
  return s;
}

}  // namespace sccodes
