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

#include "sccodes/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

void check_m(int m) {
  if (m < 0 || m > kMaxAmbient) {
    throw InvalidInput("ambient dimension must lie in [0, " +
                       std::to_string(kMaxAmbient) + "]");
  }
}

void require_same_m(const Vec2m& a, const Vec2m& b) {
  if (a.m != b.m) {
    throw InvalidInput("vectors of F_2^" + std::to_string(a.m) + " and F_2^" +
                       std::to_string(b.m));
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Vec2m Vec2m::from_bits(std::uint32_t bits, int m) {
  check_m(m);
  if (bits & ~full_mask(m)) {
    throw InvalidInput("bitmask does not fit in F_2^" + std::to_string(m));
  }
  return Vec2m{bits, m};
}

Vec2m Vec2m::from_support(std::span<const int> support, int m) {
  check_m(m);
  std::uint32_t bits = 0;
  for (int i : support) {
    if (i < 1 || i > m) {
      throw InvalidInput("support index " + std::to_string(i) +
                         " outside [1, " + std::to_string(m) + "]");
    }
    bits |= std::uint32_t{1} << (i - 1);
  }
  return Vec2m{bits, m};
}

Vec2m Vec2m::unit(int i, int m) {
  const int idx[] = {i};
  return from_support(idx, m);
}

std::vector<int> Vec2m::support() const {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    if ((bits >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

bool covers(const Vec2m& x, const Vec2m& y) {
  require_same_m(x, y);
  return (y.bits & ~x.bits) == 0;
}

bool inner(const Vec2m& x, const Vec2m& y) {
  require_same_m(x, y);
  return std::popcount(x.bits & y.bits) & 1;
}

Complex::Complex(int m, std::vector<Vec2m> generators) : m_(m) {
  check_m(m);
  for (const auto& g : generators) require_same_m(Vec2m{0, m}, g);
  std::sort(generators.begin(), generators.end(),
            [](const Vec2m& a, const Vec2m& b) { return a.bits < b.bits; });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (const auto& g : generators) {
    const bool dominated = std::any_of(
        generators.begin(), generators.end(), [&](const Vec2m& h) {
          return h.bits != g.bits && covers(h, g);
        });
    if (!dominated) maximal_.push_back(g);
  }
}

bool Complex::contains(const Vec2m& v) const {
  require_same_m(Vec2m{0, m_}, v);
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](const Vec2m& g) { return covers(g, v); });
}

std::vector<Vec2m> complex_members(const Complex& c) {
  std::set<std::uint32_t> seen;
  for (const auto& g : c.maximal_elements()) {
    // Enumerate every submask of g.
    std::uint32_t s = g.bits;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & g.bits;
    }
  }
  std::vector<Vec2m> out;
  out.reserve(seen.size());
  for (auto b : seen) out.push_back(Vec2m{b, c.m()});
  return out;
}

GenComplex::GenComplex(int m, IndexMask L) : m_(m), L_(L) {
  check_m(m);
  if (L & ~full_mask(m)) {
    throw InvalidInput("index set " + format_index_set(L) + " is not inside [" +
                       std::to_string(m) + "]");
  }
}

bool GenComplex::contains(const Vec2m& v) const {
  require_same_m(Vec2m{0, m_}, v);
  return (v.bits & ~L_) == 0;
}

GenComplex GenComplex::dual() const {
  return GenComplex(m_, ~L_ & full_mask(m_));
}

Complex GenComplex::as_complex() const {
  return Complex(m_, {Vec2m{L_, m_}});
}

std::vector<std::uint32_t> member_masks(const GenComplex& g) {
  std::vector<std::uint32_t> out;
  out.reserve(g.size());
  // Ascending enumeration of submasks of L.
  std::uint32_t s = 0;
  while (true) {
    out.push_back(s);
    if (s == g.generators()) break;
    s = (s - g.generators()) & g.generators();
  }
  return out;
}

std::vector<Vec2m> complex_members(const GenComplex& g) {
  std::vector<Vec2m> out;
  for (auto b : member_masks(g)) out.push_back(Vec2m{b, g.m()});
  return out;
}

long long chi(const Vec2m& x, std::span<const Vec2m> P) {
  long long acc = 0;
  for (const auto& y : P) acc += inner(x, y) ? -1 : 1;
  return acc;
}

long long chi(std::uint32_t x, std::span<const std::uint32_t> P) {
  long long acc = 0;
  for (auto y : P) acc += (std::popcount(x & y) & 1) ? -1 : 1;
  return acc;
}

long long chi_gen(const Vec2m& x, const GenComplex& g) {
  require_same_m(x, Vec2m{0, g.m()});
  return g.dual().contains(x) ? static_cast<long long>(g.size()) : 0;
}

bool phi(const Vec2m& x, IndexMask Y) { return (x.bits & Y) == 0; }

IndexMask parse_index_set(const std::string& text, int m) {
  check_m(m);
  const std::string t = trim(text);
  IndexMask mask = 0;
  if (t.empty() || t == "-") return mask;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos) comma = t.size();
    const std::string item = trim(std::string_view(t).substr(pos, comma - pos));
    int i = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), i);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("bad index '" + item + "' in '" + text + "'");
    }
    if (i < 1 || i > m) {
      throw InvalidInput("index " + std::to_string(i) + " outside [1, " +
                         std::to_string(m) + "]");
    }
    mask |= IndexMask{1} << (i - 1);
    if (comma == t.size()) break;
    pos = comma + 1;
  }
  return mask;
}

std::vector<IndexMask> parse_layers(const std::string& text, int m) {
  std::vector<IndexMask> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    out.push_back(parse_index_set(text.substr(pos, semi - pos), m));
    if (semi == text.size()) break;
    pos = semi + 1;
  }
  return out;
}

std::string format_index_set(IndexMask L) {
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if ((L >> i) & 1U) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
  }
  return out.empty() ? "-" : out;
}

std::string format_layers(std::span<const IndexMask> layers) {
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) out += ';';
    out += format_index_set(layers[i]);
  }
  return out;
}

std::string members_json(std::span<const Vec2m> members) {
  std::string out = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members[i].bits);
  }
  return out + "]";
}

}  // namespace sccodes
