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

#ifndef SCCODES_BINPOLY_HPP_
#define SCCODES_BINPOLY_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sccodes {

// Polynomial over F_2, coefficient of x^i in bit i. Degree is capped at 63.
struct BinPoly {
  std::uint64_t coeffs = 0;

  constexpr BinPoly() = default;
  constexpr explicit BinPoly(std::uint64_t bits) : coeffs(bits) {}

  constexpr bool is_zero() const { return coeffs == 0; }
  // -1 for the zero polynomial.
  constexpr int degree() const {
    return coeffs == 0 ? -1 : 63 - std::countl_zero(coeffs);
  }
  constexpr bool coeff(int i) const { return (coeffs >> i) & 1U; }

  static constexpr BinPoly one() { return BinPoly(1); }
  static constexpr BinPoly x() { return BinPoly(2); }

  friend constexpr auto operator<=>(BinPoly, BinPoly) = default;
};

// Accepts "x^3+x+1" style sums (any term order, spaces allowed, "1" and "0"
// constants) and hex bitmasks such as "0xB".
BinPoly parse_poly(std::string_view text);
// Descending-degree "x^3+x+1"; the zero polynomial prints as "0".
std::string to_string(BinPoly p);
std::string to_hex(BinPoly p);

BinPoly operator+(BinPoly a, BinPoly b);
// Carry-less product; throws InvalidInput if the degree would exceed 63.
BinPoly operator*(BinPoly a, BinPoly b);
// Quotient and remainder; throws InvalidInput on a zero divisor.
std::pair<BinPoly, BinPoly> divmod(BinPoly a, BinPoly b);
BinPoly operator%(BinPoly a, BinPoly b);
bool divides(BinPoly d, BinPoly p);

// Trial division by every monic polynomial of degree 1..deg(p)/2.
// Constants are not irreducible. Throws InvalidInput for the zero polynomial.
bool is_irreducible(BinPoly p);

// Irreducible factors with multiplicity, ascending by value.
std::vector<std::pair<BinPoly, int>> factor(BinPoly p);
// All monic divisors of p (including 1 and p), ordered by degree then value.
std::vector<BinPoly> monic_divisors(BinPoly p);

// Smallest irreducible polynomial of degree n with nonzero constant term
// (x+1 for n = 1).
BinPoly default_modulus(int n);

}  // namespace sccodes

#endif  // SCCODES_BINPOLY_HPP_
