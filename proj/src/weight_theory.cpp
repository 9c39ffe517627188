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

#include "sccodes/weight_theory.hpp"

#include <bit>
#include <stdexcept>

#include "sccodes/error.hpp"
#include "sccodes/lfsr.hpp"

namespace sccodes {
namespace {

void require_layers(std::span<const Layer> layers, const MsgDecomp& msg,
                    int n) {
  if (static_cast<int>(layers.size()) != n || msg.degree() != n) {
    throw InvalidInput("expected " + std::to_string(n) +
                       " layers and message components");
  }
}

// chi_x(F_2^m \ P) for a set P of distinct members.
long long chi_complement(std::uint32_t x, const Layer& P, int m) {
  const long long full = x == 0 ? (1LL << m) : 0;
  return full - chi(x, P);
}

long long chi_full(std::uint32_t x, int m) { return x == 0 ? (1LL << m) : 0; }

long long layer_product_size(std::span<const Layer> layers) {
  long long size = 1;
  for (const auto& l : layers) size *= static_cast<long long>(l.size());
  return size;
}

long long exact_div(long long num, long long den) {
  if (num % den != 0) {
    throw std::logic_error("character sum not divisible by " +
                           std::to_string(den));
  }
  return num / den;
}

}  // namespace

EtaSystem::EtaSystem(const FieldCtx& ctx)
    : n_(ctx.degree()), modulus_(ctx.modulus()) {
  for (int k = 0; k <= 2 * n_ - 2; ++k) {
    BitMatrix a(n_, n_);
    for (int r = 0; r < n_; ++r) {
      const int c = k - r;
      if (c >= 0 && c < n_) a.set(r, c, true);
    }
    A_.push_back(std::move(a));
  }
  for (int i = 0; i < n_; ++i) {
    BitMatrix m = A_[i];
    for (int j = n_; j <= 2 * n_ - 2; ++j) {
      if (ctx.power_coord(j, i)) m += A_[j];
    }
    M_.push_back(std::move(m));
  }
}

BitMatrix EtaSystem::combination(std::uint32_t subset) const {
  BitMatrix acc(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if ((subset >> i) & 1U) acc += M_[i];
  }
  return acc;
}

EtaSystem build_eta_system(const FieldCtx& ctx) { return EtaSystem(ctx); }

bool rows_match_states(const EtaSystem& es) {
  const int n = es.degree();
  for (int i = 0; i < n; ++i) {
    const LfsrSeq seq(es.modulus(), std::uint64_t{1} << i);
    const StateMat states = states_matrix(seq);
    if (states != es.coordinate_matrices()[i]) return false;
  }
  return true;
}

bool check_all_combinations_invertible(const EtaSystem& es) {
  const std::uint32_t count = 1U << es.degree();
  for (std::uint32_t s = 1; s < count; ++s) {
    if (!es.combination(s).is_full_rank()) return false;
  }
  return true;
}

WSpace::WSpace(const EtaSystem& es) : n_(es.degree()) {
  const std::uint32_t count = 1U << n_;
  elements_.reserve(count);
  for (std::uint32_t s = 0; s < count; ++s) {
    const BitMatrix m = es.combination(s);
    std::vector<std::uint32_t> comps(n_);
    for (int j = 0; j < n_; ++j) comps[j] = static_cast<std::uint32_t>(m.row(j));
    elements_.push_back(std::move(comps));
  }
}

WSpace build_wspace(const EtaSystem& es) { return WSpace(es); }

bool is_closed(const WSpace& ws) {
  for (std::size_t a = 0; a < ws.size(); ++a) {
    for (std::size_t b = 0; b < ws.size(); ++b) {
      std::vector<std::uint32_t> sum(ws.degree());
      for (int j = 0; j < ws.degree(); ++j) {
        sum[j] = ws.element(a)[j] ^ ws.element(b)[j];
      }
      bool found = false;
      for (const auto& e : ws.elements()) found = found || e == sum;
      if (!found) return false;
    }
  }
  return true;
}

bool nonzero_elements_are_bases(const WSpace& ws) {
  for (std::size_t s = 1; s < ws.size(); ++s) {
    std::vector<std::uint64_t> rows(ws.element(s).begin(), ws.element(s).end());
    if (rank_of(rows) != ws.degree()) return false;
  }
  return true;
}

std::uint32_t MsgDecomp::key() const {
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) k |= alphas[i] << (i * m);
  return k;
}

MsgDecomp MsgDecomp::from_key(std::uint32_t key, int n, int m) {
  MsgDecomp d{m, std::vector<std::uint32_t>(n)};
  for (int i = 0; i < n; ++i) d.alphas[i] = (key >> (i * m)) & full_mask(m);
  return d;
}

bool MsgDecomp::is_zero() const {
  for (auto a : alphas) {
    if (a) return false;
  }
  return true;
}

MsgDecomp decompose(std::span<const Fq> v, const FieldCtx& ctx) {
  const int n = ctx.degree();
  const int m = static_cast<int>(v.size());
  MsgDecomp d{m, std::vector<std::uint32_t>(n, 0)};
  for (int c = 0; c < m; ++c) {
    if (v[c].n != n) throw InvalidInput("message symbol from another field");
    for (int i = 0; i < n; ++i) {
      if (v[c].coord(i)) d.alphas[i] |= std::uint32_t{1} << c;
    }
  }
  return d;
}

std::vector<Fq> assemble(const MsgDecomp& msg, const FieldCtx& ctx) {
  if (msg.degree() != ctx.degree()) {
    throw InvalidInput("decomposition degree does not match the field");
  }
  std::vector<Fq> v(msg.m, ctx.zero());
  for (int c = 0; c < msg.m; ++c) {
    for (int i = 0; i < msg.degree(); ++i) {
      if ((msg.alphas[i] >> c) & 1U) v[c].coords |= 1U << i;
    }
  }
  return v;
}

std::uint32_t realize(std::uint32_t formal, const MsgDecomp& msg) {
  std::uint32_t out = 0;
  for (int t = 0; t < msg.degree(); ++t) {
    if ((formal >> t) & 1U) out ^= msg.alphas[t];
  }
  return out;
}

long long weight_cD_star_formula(const EtaSystem& es, const WSpace& ws,
                                 const MsgDecomp& msg,
                                 std::span<const Layer> layers) {
  const int n = es.degree();
  require_layers(layers, msg, n);
  long long sum = 0;
  for (const auto& w : ws.elements()) {
    long long prod = 1;
    for (int j = 0; j < n && prod != 0; ++j) {
      prod *= chi(realize(w[j], msg), layers[j]);
    }
    sum += prod;
  }
  return layer_product_size(layers) - exact_div(sum, 1LL << n);
}

long long weight_cDc_formula(const EtaSystem& es, const WSpace& ws,
                             const MsgDecomp& msg,
                             std::span<const Layer> layers) {
  const int n = es.degree();
  const int m = msg.m;
  require_layers(layers, msg, n);
  const long long total = 1LL << (n * m);
  const long long dc_size = total - layer_product_size(layers);
  long long sum = 0;
  std::vector<std::uint32_t> real(n);
  for (const auto& w : ws.elements()) {
    for (int j = 0; j < n; ++j) real[j] = realize(w[j], msg);
    for (int t = 0; t < n; ++t) {
      long long prod = 1;
      for (int j = 0; j < t && prod != 0; ++j) prod *= chi(real[j], layers[j]);
      if (prod != 0) prod *= chi_complement(real[t], layers[t], m);
      for (int j = t + 1; j < n && prod != 0; ++j) prod *= chi_full(real[j], m);
      sum += prod;
    }
  }
  return dc_size - exact_div(sum, 1LL << n);
}

bool complementarity_check(const EtaSystem& es, const WSpace& ws,
                           const MsgDecomp& msg, std::span<const Layer> layers) {
  const int n = es.degree();
  const long long expected =
      msg.is_zero() ? 0 : ((1LL << n) - 1) * (1LL << (n * (msg.m - 1)));
  return weight_cD_star_formula(es, ws, msg, layers) +
             weight_cDc_formula(es, ws, msg, layers) ==
         expected;
}

std::uint32_t theta(const WSpace& ws, const MsgDecomp& msg,
                    std::span<const IndexMask> L_list) {
  const int n = ws.degree();
  if (static_cast<int>(L_list.size()) != n || msg.degree() != n) {
    throw InvalidInput("theta needs one index set per layer");
  }
  std::uint32_t count = 0;
  for (const auto& w : ws.elements()) {
    bool g = true;
    for (int j = 0; j < n && g; ++j) g = phi(realize(w[j], msg), L_list[j]);
    if (g) ++count;
  }
  return count;
}

long long weight_from_theta(std::uint32_t theta, int sum_L, int n) {
  return exact_div(((1LL << n) - static_cast<long long>(theta)) << sum_L,
                   1LL << n);
}

long long subfield_dstar_weight_formula(const MsgDecomp& z,
                                        std::span<const Layer> layers) {
  require_layers(layers, z, z.degree());
  long long prod = 1;
  for (int i = 0; i < z.degree() && prod != 0; ++i) {
    prod *= chi(z.alphas[i], layers[i]);
  }
  return exact_div(layer_product_size(layers) - prod, 2);
}

long long subfield_dc_weight_formula(const MsgDecomp& z,
                                     std::span<const Layer> layers) {
  const int n = z.degree();
  const int m = z.m;
  require_layers(layers, z, n);
  const long long dc_size = (1LL << (n * m)) - layer_product_size(layers);
  long long sum = 0;
  for (int t = 0; t < n; ++t) {
    long long prod = 1;
    for (int j = 0; j < t && prod != 0; ++j) prod *= chi(z.alphas[j], layers[j]);
    if (prod != 0) prod *= chi_complement(z.alphas[t], layers[t], m);
    for (int j = t + 1; j < n && prod != 0; ++j) prod *= chi_full(z.alphas[j], m);
    sum += prod;
  }
  return exact_div(dc_size - sum, 2);
}

}  // namespace sccodes
