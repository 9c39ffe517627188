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

// Naive reference implementations used only by the tests. Nothing here
// touches the library's tables, key packing or enumeration engine.
#ifndef SCCODES_TESTS_ORACLES_HPP_
#define SCCODES_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline int deg(std::uint64_t p) {
  int d = -1;
  for (int i = 0; i < 64; ++i) {
    if ((p >> i) & 1U) d = i;
  }
  return d;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = deg(b);
  while (deg(a) >= db) a ^= b << (deg(a) - db);
  return a;
}

inline bool irreducible(std::uint64_t p) {
  const int d = deg(p);
  if (d < 1) return false;
  for (std::uint64_t g = 2; deg(g) <= d / 2; ++g) {
    if (poly_mod(p, g) == 0) return false;
  }
  return true;
}

// a*b mod f, schoolbook then long division.
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint64_t f) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1U) prod ^= std::uint64_t{a} << i;
  }
  return static_cast<std::uint32_t>(poly_mod(prod, f));
}

inline std::uint32_t power(std::uint32_t x, int k, std::uint64_t f) {
  std::uint32_t r = 1;
  for (int i = 0; i < k; ++i) r = mul(r, x, f);
  return static_cast<std::uint32_t>(poly_mod(r, f));
}

// Plain integer power.
inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// chi_x(P) by direct summation.
inline long long chi(std::uint32_t x, const std::vector<std::uint32_t>& P) {
  long long s = 0;
  for (auto y : P) s += (__builtin_popcount(x & y) & 1) ? -1 : 1;
  return s;
}

// Points of F_q^m (each a vector of m symbols) whose coordinate-i slice lies
// in layers[i] for every i. kind: 0 = D, 1 = D*, 2 = D^c.
inline std::vector<std::vector<std::uint32_t>> points(
    int n, int m, const std::vector<std::vector<std::uint32_t>>& layers,
    int kind) {
  const std::uint32_t q = 1U << n;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> p(m, 0);
  const std::uint64_t total = ipow(q, m);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    bool zero = true;
    for (int c = 0; c < m; ++c) {
      p[c] = static_cast<std::uint32_t>(t % q);
      t /= q;
      zero = zero && p[c] == 0;
    }
    bool in_d = true;
    for (int i = 0; i < n && in_d; ++i) {
      std::uint32_t slice = 0;
      for (int c = 0; c < m; ++c) slice |= ((p[c] >> i) & 1U) << c;
      in_d = std::find(layers[i].begin(), layers[i].end(), slice) !=
             layers[i].end();
    }
    if ((kind == 0 && in_d) || (kind == 1 && in_d && !zero) ||
        (kind == 2 && !in_d)) {
      out.push_back(p);
    }
  }
  return out;
}

inline std::vector<std::uint32_t> codeword(
    const std::vector<std::vector<std::uint32_t>>& pts,
    const std::vector<std::uint32_t>& v, std::uint64_t f) {
  std::vector<std::uint32_t> c;
  for (const auto& d : pts) {
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s ^= mul(v[j], d[j], f);
    c.push_back(s);
  }
  return c;
}

inline std::size_t weight(const std::vector<std::uint32_t>& c) {
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](auto s) { return s != 0; }));
}

// Every message of F_q^m, message index t has v_c = digit c of t in base q.
inline std::vector<std::uint32_t> message(std::uint64_t t, int n, int m) {
  std::vector<std::uint32_t> v(m);
  for (int c = 0; c < m; ++c) {
    v[c] = static_cast<std::uint32_t>(t % (1U << n));
    t /= (1U << n);
  }
  return v;
}

struct Summary {
  std::size_t length = 0;
  int k = 0;
  std::map<std::size_t, std::uint64_t> dist;  // includes weight 0
  std::set<std::vector<std::uint32_t>> words;
};

inline Summary summarize(const std::vector<std::vector<std::uint32_t>>& pts,
                         int n, int m, std::uint64_t f) {
  Summary s;
  s.length = pts.size();
  const std::uint64_t total = ipow(1U << n, m);
  for (std::uint64_t t = 0; t < total; ++t) {
    s.words.insert(codeword(pts, message(t, n, m), f));
  }
  for (const auto& w : s.words) s.dist[weight(w)]++;
  std::uint64_t size = s.words.size();
  while (size > 1) {
    size >>= n;
    ++s.k;
  }
  return s;
}

// Binary code from nm-bit points: all z in F_2^{nm}.
inline Summary summarize_binary(const std::vector<std::uint32_t>& pts,
                                int bits) {
  Summary s;
  s.length = pts.size();
  for (std::uint32_t z = 0; z < (1U << bits); ++z) {
    std::vector<std::uint32_t> c;
    for (auto d : pts) c.push_back(__builtin_popcount(z & d) & 1);
    s.words.insert(c);
  }
  for (const auto& w : s.words) s.dist[weight(w)]++;
  std::uint64_t size = s.words.size();
  while (size > 1) {
    size >>= 1;
    ++s.k;
  }
  return s;
}

// Definition: c is minimal iff every nonzero codeword whose support lies in
// supp(c) is a scalar multiple of c.
inline bool minimal(const std::set<std::vector<std::uint32_t>>& words, int n,
                    std::uint64_t f) {
  std::vector<std::vector<std::uint32_t>> nz;
  for (const auto& w : words) {
    if (weight(w) > 0) nz.push_back(w);
  }
  for (const auto& a : nz) {
    for (const auto& b : nz) {
      bool covered = true;
      for (std::size_t i = 0; i < a.size() && covered; ++i) {
        covered = a[i] == 0 || b[i] != 0;
      }
      if (!covered) continue;
      bool multiple = false;
      for (std::uint32_t lam = 1; lam < (1U << n) && !multiple; ++lam) {
        bool eq = true;
        for (std::size_t i = 0; i < a.size() && eq; ++i) {
          eq = mul(lam, b[i], f) == a[i];
        }
        multiple = eq;
      }
      if (!multiple) return false;
    }
  }
  return true;
}

inline std::uint64_t griesmer(std::uint64_t d, std::uint64_t q, int k) {
  std::uint64_t s = 0;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t p = ipow(q, i);
    s += (d + p - 1) / p;
  }
  return s;
}

// Subset of [m] as layer members: all submasks of L.
inline std::vector<std::uint32_t> delta(std::uint32_t L, int m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1U << m); ++x) {
    if ((x & ~L) == 0) out.push_back(x);
  }
  return out;
}

inline std::vector<std::uint32_t> random_subset(int m, std::mt19937& rng) {
  std::vector<std::uint32_t> out;
  std::bernoulli_distribution coin(0.5);
  for (std::uint32_t x = 0; x < (1U << m); ++x) {
    if (coin(rng)) out.push_back(x);
  }
  return out;
}

}  // namespace oracle

#endif  // SCCODES_TESTS_ORACLES_HPP_
