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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sccodes/error.hpp"
#include "sccodes/simplicial.hpp"

using namespace sccodes;

namespace {

Vec2m v(std::initializer_list<int> support, int m) {
  const std::vector<int> s(support);
  return Vec2m::from_support(s, m);
}

}  // namespace

TEST_CASE("covering") {
  CHECK(covers(v({1, 2}, 3), v({2}, 3)));
  CHECK(covers(v({1, 3}, 3), Vec2m::from_bits(0, 3)));
  CHECK_FALSE(covers(v({1, 3}, 3), v({2}, 3)));
  CHECK(covers(v({2}, 3), v({2}, 3)));
  CHECK_THROWS_AS(covers(v({1}, 3), v({1}, 4)), InvalidInput);
  CHECK_THROWS_AS(Vec2m::from_bits(8, 3), InvalidInput);
  CHECK(v({1, 3}, 3).bits == 0b101);
  CHECK(v({1, 3}, 3).support() == std::vector<int>{1, 3});
  CHECK(Vec2m::unit(2, 3).bits == 0b010);
  CHECK(inner(v({1, 2}, 3), v({2, 3}, 3)));
  CHECK_FALSE(inner(v({1, 2}, 3), v({1, 2}, 3)));
}

TEST_CASE("complex with two maximal elements") {
  const Complex c(3, {v({1, 2}, 3), v({2, 3}, 3), v({2}, 3), v({1, 2}, 3)});
  CHECK(c.maximal_elements().size() == 2);
  const auto members = complex_members(c);
  CHECK(members_json(members) == "[0,1,2,3,4,6]");
  CHECK(c.contains(v({1}, 3)));
  CHECK_FALSE(c.contains(v({1, 3}, 3)));
}

TEST_CASE("single maximal element gives a subspace") {
  const Complex c(3, {v({1, 3}, 3)});
  const auto members = complex_members(c);
  CHECK(members.size() == 4);
  for (const auto& a : members) {
    for (const auto& b : members) {
      CHECK(c.contains(Vec2m::from_bits(a.bits ^ b.bits, 3)));
    }
  }
  CHECK(complex_members(Complex(3, {Vec2m::from_bits(0, 3)})).size() == 1);
}

TEST_CASE("complexes are downward closed") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + trial % 5;
    std::vector<Vec2m> gens;
    for (int g = 0; g < 3; ++g) {
      gens.push_back(Vec2m::from_bits(rng() & full_mask(m), m));
    }
    const Complex c(m, gens);
    const auto members = complex_members(c);
    for (const auto& x : members) {
      for (std::uint32_t y = 0; y <= full_mask(m); ++y) {
        if ((y & ~x.bits) == 0) CHECK(c.contains(Vec2m::from_bits(y, m)));
      }
    }
    for (const auto& a : c.maximal_elements()) {
      for (const auto& b : c.maximal_elements()) {
        if (!(a == b)) CHECK_FALSE(covers(a, b));
      }
    }
  }
}

TEST_CASE("generated complexes") {
  const GenComplex g(4, 0b0011);
  CHECK(g.size() == 4);
  CHECK(g.rank() == 2);
  CHECK(member_masks(g) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(g.dual().generators() == 0b1100);
  CHECK(member_masks(GenComplex(3, 0)) == std::vector<std::uint32_t>{0});
  CHECK_THROWS_AS(GenComplex(3, 0b1000), InvalidInput);
  CHECK(complex_members(g.as_complex()).size() == 4);
}

TEST_CASE("dual of a generated complex is its orthogonal complement") {
  for (int m = 1; m <= 5; ++m) {
    for (IndexMask L = 0; L <= full_mask(m); ++L) {
      const GenComplex g(m, L);
      const auto members = member_masks(g);
      CHECK(members.size() == g.size());
      std::vector<std::uint32_t> perp;
      for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
        bool orth = true;
        for (auto y : members) orth = orth && (__builtin_popcount(x & y) % 2 == 0);
        if (orth) perp.push_back(x);
      }
      CHECK(perp == member_masks(g.dual()));
    }
  }
}

TEST_CASE("character sums") {
  const auto d12 = member_masks(GenComplex(3, 0b011));
  CHECK(chi(0U, d12) == 4);
  CHECK(chi(0b001U, d12) == 0);
  CHECK(chi(0b100U, d12) == 4);
  CHECK(chi_gen(Vec2m::from_bits(0b0010, 4), GenComplex(4, 0b0011)) == 0);
  CHECK(chi_gen(Vec2m::from_bits(0b1100, 4), GenComplex(4, 0b0011)) == 4);
  CHECK(chi_gen(Vec2m::from_bits(0, 4), GenComplex(4, 0b0111)) == 8);
  for (int m = 1; m <= 4; ++m) {
    for (IndexMask L = 0; L <= full_mask(m); ++L) {
      const GenComplex g(m, L);
      const auto members = member_masks(g);
      for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
        const auto xv = Vec2m::from_bits(x, m);
        CHECK(chi_gen(xv, g) == oracle::chi(x, members));
        CHECK(chi_gen(xv, g) == (phi(xv, L) ? (1LL << g.rank()) : 0));
      }
    }
  }
}

TEST_CASE("character sum of a set and its complement") {
  std::mt19937 rng(11);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto P = oracle::random_subset(m, rng);
      std::vector<std::uint32_t> Pc;
      for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
        if (std::find(P.begin(), P.end(), x) == P.end()) Pc.push_back(x);
      }
      for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
        const long long sum = chi(x, P) + chi(x, Pc);
        CHECK(sum == (x == 0 ? (1LL << m) : 0));
        CHECK(std::llabs(chi(x, P)) <= static_cast<long long>(P.size()));
      }
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(Vec2m::from_bits(0, 3), 0b111));
  CHECK(phi(Vec2m::from_bits(0b101, 3), 0));
  CHECK(phi(Vec2m::from_bits(0b101, 3), 0b010));
  CHECK_FALSE(phi(Vec2m::from_bits(0b101, 3), 0b011));
}

TEST_CASE("index set parsing") {
  CHECK(parse_index_set("1,2,4", 4) == 0b1011);
  CHECK(parse_index_set("", 4) == 0);
  CHECK(parse_index_set("-", 4) == 0);
  CHECK_THROWS_AS(parse_index_set("5", 4), InvalidInput);
  CHECK_THROWS_AS(parse_index_set("0", 4), InvalidInput);
  CHECK_THROWS_AS(parse_index_set("x", 4), InvalidInput);
  const auto layers = parse_layers("1,2;2,3;3,4", 4);
  CHECK(layers == std::vector<IndexMask>{0b0011, 0b0110, 0b1100});
  CHECK(format_layers(layers) == "1,2;2,3;3,4");
  CHECK(format_index_set(0) == "-");
}
