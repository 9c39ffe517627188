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

#ifndef SCCODES_WEIGHT_THEORY_HPP_
#define SCCODES_WEIGHT_THEORY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sccodes/bitmatrix.hpp"
#include "sccodes/field.hpp"
#include "sccodes/simplicial.hpp"

namespace sccodes {

// A subset of F_2^m given by distinct member bitmasks.
using Layer = std::vector<std::uint32_t>;

// Bookkeeping for the F_2-components of v.d.
//
// Write v = a_0 + w a_1 + ... + w^{n-1} a_{n-1} and d = d_0 + w d_1 + ...
// with a_i, d_j in F_2^m. Then v.d = sum_k mu_k w^k with
// mu_k = sum_{i+j=k} a_i.d_j, and collecting coordinates gives
// v.d = eta_0 + w eta_1 + ... with eta_i = sum_j beta_{i,j}.d_j. Each
// beta_{i,j} is an F_2-combination of the a_t; row j of M_i holds its
// coefficients (column t <-> a_t).
//
// antidiagonal(k) is A_k: entry (r, c) set iff r + c = k (0-indexed; the
// 1-indexed form is i + j = k + 2). M_i = A_i + sum_{j=n}^{2n-2} l_{j,i} A_j,
// which is the Hankel matrix of the first 2n-1 terms of the i-th coordinate
// sequence of w^k.
class EtaSystem {
 public:
  explicit EtaSystem(const FieldCtx& ctx);

  int degree() const { return n_; }
  BinPoly modulus() const { return modulus_; }
  // A_0..A_{2n-2}.
  const std::vector<BitMatrix>& antidiagonals() const { return A_; }
  // M_0..M_{n-1}.
  const std::vector<BitMatrix>& coordinate_matrices() const { return M_; }
  // sum of M_i over the bits i of `subset`.
  BitMatrix combination(std::uint32_t subset) const;

 private:
  int n_;
  BinPoly modulus_;
  std::vector<BitMatrix> A_;
  std::vector<BitMatrix> M_;
};

EtaSystem build_eta_system(const FieldCtx& ctx);

// Row r of M_i equals state s_r of the i-th basis sequence, for all i, r.
bool rows_match_states(const EtaSystem& es);
// Every nonzero F_2-combination of M_0..M_{n-1} is invertible.
bool check_all_combinations_invertible(const EtaSystem& es);

// W: the F_2-span of gamma_0..gamma_{n-1}, where gamma_i = (rows of M_i).
// element(s) is sum_{i in s} gamma_i, so elements are indexed by subsets of
// {0..n-1}; element(0) is the zero tuple. A component is a coordinate vector
// over the formal basis {a_0..a_{n-1}}: bit t <-> a_t.
class WSpace {
 public:
  explicit WSpace(const EtaSystem& es);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::uint32_t>& element(std::size_t s) const {
    return elements_[s];
  }
  const std::vector<std::vector<std::uint32_t>>& elements() const {
    return elements_;
  }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> elements_;
};

WSpace build_wspace(const EtaSystem& es);

// Closed under componentwise XOR and every nonzero element's components are
// linearly independent.
bool is_closed(const WSpace& ws);
bool nonzero_elements_are_bases(const WSpace& ws);

// v = a_0 + w a_1 + ... + w^{n-1} a_{n-1}, a_i in F_2^m.
struct MsgDecomp {
  int m = 0;
  std::vector<std::uint32_t> alphas;

  int degree() const { return static_cast<int>(alphas.size()); }
  // Packed form: a_i in bits [i*m, (i+1)*m).
  std::uint32_t key() const;
  static MsgDecomp from_key(std::uint32_t key, int n, int m);
  bool is_zero() const;
};

MsgDecomp decompose(std::span<const Fq> v, const FieldCtx& ctx);
std::vector<Fq> assemble(const MsgDecomp& msg, const FieldCtx& ctx);

// The F_2^m vector obtained by substituting the concrete a_t into a formal
// combination.
std::uint32_t realize(std::uint32_t formal, const MsgDecomp& msg);

// |D| - 2^{-n} sum_{w in W} prod_j chi_{w~_j}(D_j). Layers are arbitrary
// subsets; |D| = prod |D_j|.
long long weight_cD_star_formula(const EtaSystem& es, const WSpace& ws,
                                 const MsgDecomp& msg,
                                 std::span<const Layer> layers);

// Weight on D^c = F_{2^n}^m \ D, summed over the disjoint pieces
// D_0 + ... + w^{t-1}D_{t-1} + w^t D_t^c + w^{t+1}F_2^m + ... + w^{n-1}F_2^m.
long long weight_cDc_formula(const EtaSystem& es, const WSpace& ws,
                             const MsgDecomp& msg,
                             std::span<const Layer> layers);

// wt(c_{D^c}(v)) + wt(c_{D*}(v)) == (2^n - 1) 2^{n(m-1)} (1 - [v = 0]).
bool complementarity_check(const EtaSystem& es, const WSpace& ws,
                           const MsgDecomp& msg, std::span<const Layer> layers);

// Number of w in W with prod_j phi(w~_j | L_j) = 1, for layers Delta_{L_j}.
std::uint32_t theta(const WSpace& ws, const MsgDecomp& msg,
                    std::span<const IndexMask> L_list);
// 2^{sum|L_i| - n} (2^n - theta).
long long weight_from_theta(std::uint32_t theta, int sum_L, int n);

// Binary subfield code weights for z = (a_0, ..., a_{n-1}):
// D*: |D|/2 - prod_i chi_{a_i}(D_i) / 2;
// D^c: 2^{nm-1}(1 - [z = 0]) - |D|/2 + prod_i chi_{a_i}(D_i) / 2.
long long subfield_dstar_weight_formula(const MsgDecomp& z,
                                        std::span<const Layer> layers);
long long subfield_dc_weight_formula(const MsgDecomp& z,
                                     std::span<const Layer> layers);

}  // namespace sccodes

#endif  // SCCODES_WEIGHT_THEORY_HPP_
