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

#ifndef SCCODES_FIELD_HPP_
#define SCCODES_FIELD_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sccodes/binpoly.hpp"

namespace sccodes {

// Extension degree cap for FieldCtx.
inline constexpr int kMaxFieldDegree = 8;

// Element of F_{2^n} in the polynomial basis {1, w, ..., w^{n-1}}.
// Bit i of `coords` is the coefficient of w^i (bit 0 is the constant term).
struct Fq {
  std::uint32_t coords = 0;
  int n = 0;

  bool is_zero() const { return coords == 0; }
  bool coord(int i) const { return (coords >> i) & 1U; }
  friend bool operator==(const Fq&, const Fq&) = default;
};

// F_{2^n} = F_2[x]/(f) together with the coordinate table of w^k for
// k = 0..K. Immutable after construction.
class FieldCtx {
 public:
  // Throws InvalidInput if `modulus` is reducible, has degree outside
  // [1, kMaxFieldDegree], or if max_power < 2n-2. A negative max_power
  // selects the default K = 2n-2.
  explicit FieldCtx(BinPoly modulus, int max_power = -1);

  int degree() const { return n_; }
  BinPoly modulus() const { return modulus_; }
  std::uint32_t order() const { return 1U << n_; }
  std::uint32_t mask() const { return order() - 1; }

  // Largest k stored in the power table.
  int max_power() const { return static_cast<int>(powers_.size()) - 1; }
  // Coordinates of w^k for 0 <= k <= max_power().
  std::uint32_t power_bits(int k) const;
  Fq power(int k) const { return Fq{power_bits(k), n_}; }
  // l_{k,i}: coefficient of w^i in w^k.
  bool power_coord(int k, int i) const { return (power_bits(k) >> i) & 1U; }

  // Validated element constructor.
  Fq element(std::uint32_t coords) const;
  Fq zero() const { return Fq{0, n_}; }
  Fq one() const { return Fq{1, n_}; }
  Fq generator() const {
    return Fq{n_ == 1 ? static_cast<std::uint32_t>(modulus_.coeffs & 1U) : 2U, n_};
  }

  // Raw arithmetic on coordinate masks; callers guarantee range.
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const {
    return mul_table_[(a << n_) | b];
  }
  std::uint32_t inv_bits(std::uint32_t a) const;

  // "k,l0,...,l{n-1}" header followed by one row per stored power.
  std::string power_table_csv() const;

 private:
  int n_;
  BinPoly modulus_;
  std::vector<std::uint32_t> powers_;
  std::vector<std::uint8_t> mul_table_;
  std::vector<std::uint8_t> inv_table_;
};

FieldCtx make_ctx(BinPoly modulus, int max_power = -1);

// Coordinatewise XOR. Throws InvalidInput on mismatched n.
Fq add(const Fq& a, const Fq& b);
// Polynomial product reduced by the modulus. Throws InvalidInput unless
// a.n == b.n == ctx.degree().
Fq mul(const Fq& a, const Fq& b, const FieldCtx& ctx);
Fq inverse(const Fq& a, const FieldCtx& ctx);
// Sum of x_i * y_i. Throws InvalidInput on length mismatch.
Fq dot(std::span<const Fq> x, std::span<const Fq> y, const FieldCtx& ctx);

// Evaluates p at a field element by Horner's rule.
Fq evaluate(BinPoly p, const Fq& x, const FieldCtx& ctx);
// Multiplicative order of a nonzero element.
std::uint32_t multiplicative_order(const Fq& a, const FieldCtx& ctx);
bool is_primitive(const FieldCtx& ctx);

std::string to_string(const Fq& a);

}  // namespace sccodes

#endif  // SCCODES_FIELD_HPP_
