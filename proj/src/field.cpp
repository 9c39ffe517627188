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

#include "sccodes/field.hpp"

#include <sstream>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

std::uint32_t reduce_mul(std::uint32_t a, std::uint32_t b, BinPoly modulus) {
  const int n = modulus.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    if ((b >> i) & 1U) r ^= std::uint64_t{a} << i;
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    if ((r >> i) & 1U) r ^= modulus.coeffs << (i - n);
  }
  return static_cast<std::uint32_t>(r);
}

void require_same(const Fq& a, const Fq& b) {
  if (a.n != b.n) {
    throw InvalidInput("field elements of different degrees (" +
                       std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
  }
}

void require_ctx(const Fq& a, const FieldCtx& ctx) {
  if (a.n != ctx.degree() || a.coords > ctx.mask()) {
    throw InvalidInput("field element does not belong to F_2^" +
                       std::to_string(ctx.degree()));
  }
}

}  // namespace

FieldCtx::FieldCtx(BinPoly modulus, int max_power)
    : n_(modulus.degree()), modulus_(modulus) {
  if (modulus.is_zero()) throw InvalidInput("zero modulus");
  if (n_ < 1 || n_ > kMaxFieldDegree) {
    throw InvalidInput("modulus degree must lie in [1, " +
                       std::to_string(kMaxFieldDegree) + "], got " +
                       std::to_string(n_));
  }
  if (!is_irreducible(modulus)) {
    throw InvalidInput("modulus " + to_string(modulus) + " is reducible");
  }
  const int k_min = 2 * n_ - 2;
  if (max_power < 0) max_power = k_min;
  if (max_power < k_min) {
    throw InvalidInput("power table needs at least 2n-2 = " +
                       std::to_string(k_min) + " rows past w^0");
  }

  // w^{k+1} = w * w^k: shift left, feed the overflow bit back through f.
  powers_.resize(max_power + 1);
  powers_[0] = 1;
  const std::uint32_t low = static_cast<std::uint32_t>(modulus.coeffs) & mask();
  for (int k = 0; k < max_power; ++k) {
    std::uint32_t next = powers_[k] << 1;
    if ((next >> n_) & 1U) next = (next & mask()) ^ low;
    powers_[k + 1] = next;
  }

  const std::uint32_t q = order();
  mul_table_.resize(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      mul_table_[(a << n_) | b] =
          static_cast<std::uint8_t>(reduce_mul(a, b, modulus));
    }
  }
  inv_table_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_bits(a, b) == 1) {
        inv_table_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

std::uint32_t FieldCtx::power_bits(int k) const {
  if (k < 0 || k > max_power()) {
    throw InvalidInput("power w^" + std::to_string(k) +
                       " outside the stored table");
  }
  return powers_[k];
}

Fq FieldCtx::element(std::uint32_t coords) const {
  if (coords > mask()) {
    throw InvalidInput("coordinate mask has more than " + std::to_string(n_) +
                       " bits");
  }
  return Fq{coords, n_};
}

std::uint32_t FieldCtx::inv_bits(std::uint32_t a) const {
  if (a == 0 || a > mask()) throw InvalidInput("zero has no inverse");
  return inv_table_[a];
}

std::string FieldCtx::power_table_csv() const {
  std::ostringstream os;
  os << "k";
  for (int i = 0; i < n_; ++i) os << ",l" << i;
  os << "\n";
  for (int k = 0; k <= max_power(); ++k) {
    os << k;
    for (int i = 0; i < n_; ++i) os << "," << (power_coord(k, i) ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

FieldCtx make_ctx(BinPoly modulus, int max_power) {
  return FieldCtx(modulus, max_power);
}

Fq add(const Fq& a, const Fq& b) {
  require_same(a, b);
  return Fq{a.coords ^ b.coords, a.n};
}

Fq mul(const Fq& a, const Fq& b, const FieldCtx& ctx) {
  require_same(a, b);
  require_ctx(a, ctx);
  require_ctx(b, ctx);
  return Fq{ctx.mul_bits(a.coords, b.coords), a.n};
}

Fq inverse(const Fq& a, const FieldCtx& ctx) {
  require_ctx(a, ctx);
  return Fq{ctx.inv_bits(a.coords), a.n};
}

Fq dot(std::span<const Fq> x, std::span<const Fq> y, const FieldCtx& ctx) {
  if (x.size() != y.size()) {
    throw InvalidInput("dot product of vectors with lengths " +
                       std::to_string(x.size()) + " and " +
                       std::to_string(y.size()));
  }
  Fq acc = ctx.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i], ctx));
  return acc;
}

Fq evaluate(BinPoly p, const Fq& x, const FieldCtx& ctx) {
  require_ctx(x, ctx);
  Fq acc = ctx.zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul(acc, x, ctx);
    if (p.coeff(i)) acc = add(acc, ctx.one());
  }
  return acc;
}

std::uint32_t multiplicative_order(const Fq& a, const FieldCtx& ctx) {
  require_ctx(a, ctx);
  if (a.is_zero()) throw InvalidInput("zero has no multiplicative order");
  Fq acc = a;
  std::uint32_t ord = 1;
  while (acc != ctx.one()) {
    acc = mul(acc, a, ctx);
    ++ord;
  }
  return ord;
}

bool is_primitive(const FieldCtx& ctx) {
  const Fq w = ctx.generator();
  if (w.is_zero()) return false;
  return multiplicative_order(w, ctx) == ctx.order() - 1;
}

std::string to_string(const Fq& a) {
  std::string out = "(";
  for (int i = 0; i < a.n; ++i) {
    if (i) out += ",";
    out += a.coord(i) ? "1" : "0";
  }
  return out + ")";
}

}  // namespace sccodes
