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

#include "sccodes/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

bool parity(std::uint64_t x) { return std::popcount(x) & 1; }

void require_ctx(const std::shared_ptr<const FieldCtx>& ctx) {
  if (!ctx) throw InvalidInput("defining set needs a field context");
}

void require_shape(int n, int m) {
  if (m < 1 || m > kMaxAmbient) {
    throw InvalidInput("m must lie in [1, " + std::to_string(kMaxAmbient) +
                       "]");
  }
  if (n * m > kMaxPackedBits) {
    throw InvalidInput("n*m = " + std::to_string(n * m) + " exceeds " +
                       std::to_string(kMaxPackedBits));
  }
}

std::vector<std::uint32_t> product_keys(std::span<const Layer> layers, int m) {
  std::vector<std::uint32_t> keys{0};
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::vector<std::uint32_t> next;
    next.reserve(keys.size() * layers[i].size());
    for (auto k : keys) {
      for (auto d : layers[i]) next.push_back(k | (d << (i * m)));
    }
    keys = std::move(next);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::uint32_t> variant_keys(std::span<const Layer> layers, int m,
                                        int bits, Variant variant) {
  std::vector<std::uint32_t> prod = product_keys(layers, m);
  switch (variant) {
    case Variant::kFull:
      return prod;
    case Variant::kDStar:
      if (!prod.empty() && prod.front() == 0) prod.erase(prod.begin());
      return prod;
    case Variant::kComplement: {
      std::vector<std::uint32_t> out;
      const std::uint32_t total = std::uint32_t{1} << bits;
      out.reserve(total - prod.size());
      std::size_t j = 0;
      for (std::uint32_t key = 0; key < total; ++key) {
        if (j < prod.size() && prod[j] == key) {
          ++j;
        } else {
          out.push_back(key);
        }
      }
      return out;
    }
  }
  return prod;
}

std::vector<Layer> layers_of(std::span<const IndexMask> L_list, int m) {
  std::vector<Layer> layers;
  for (auto L : L_list) {
    if ((L & ~full_mask(m)) != 0) {
      throw InvalidInput("index set " + format_index_set(L) + " is not in [" +
                         std::to_string(m) + "]");
    }
    layers.push_back(member_masks(GenComplex(m, L)));
  }
  return layers;
}

// Echelon basis over F_{2^n} for vectors of m symbols. Each basis vector is
// 1 at its pivot and 0 at the pivots inserted before it.
class FqEchelon {
 public:
  FqEchelon(const FieldCtx& ctx, int m) : ctx_(ctx), m_(m) {}

  bool insert(std::vector<std::uint32_t> x) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const std::uint32_t c = x[pivots_[j]];
      if (c == 0) continue;
      for (int t = 0; t < m_; ++t) x[t] ^= ctx_.mul_bits(c, basis_[j][t]);
    }
    int p = 0;
    while (p < m_ && x[p] == 0) ++p;
    if (p == m_) return false;
    const std::uint32_t inv = ctx_.inv_bits(x[p]);
    for (int t = 0; t < m_; ++t) x[t] = ctx_.mul_bits(inv, x[t]);
    pivots_.push_back(p);
    basis_.push_back(std::move(x));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::vector<int> pivots() const {
    std::vector<int> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  const FieldCtx& ctx_;
  int m_;
  std::vector<int> pivots_;
  std::vector<std::vector<std::uint32_t>> basis_;
};

std::vector<int> field_pivots(const DefiningSet& ds) {
  FqEchelon ech(*ds.ctx, ds.m);
  std::vector<std::uint32_t> col(ds.m);
  for (auto key : ds.keys) {
    for (int c = 0; c < ds.m; ++c) col[c] = ds.symbol(key, c);
    ech.insert(col);
    if (ech.rank() == ds.m) break;
  }
  return ech.pivots();
}

// Pivot bit positions of the F_2-span of the keys.
std::vector<int> binary_pivots(std::span<const std::uint32_t> keys) {
  std::vector<std::uint32_t> basis;
  std::vector<int> pivots;
  for (auto key : keys) {
    std::uint32_t x = key;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((x >> pivots[j]) & 1U) x ^= basis[j];
    }
    if (x == 0) continue;
    const int p = std::countr_zero(x);
    basis.push_back(x);
    pivots.push_back(p);
  }
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

// Evaluates "is any of r linear functionals nonzero at the point" over a
// list of packed points, 64 points per word.
//
// Ambient mode indexes words by all 2^N points and masks to the list; the
// truth table of x -> parity(f & x) on word w is a fixed 64-bit pattern for
// the low 6 bits of f, complemented when parity(f>>6 & w) is odd. Compact
// mode indexes by list position.
class SupportEngine {
 public:
  SupportEngine(int bits, std::span<const std::uint32_t> keys) : keys_(keys) {
    const std::uint64_t ambient_words =
        std::max<std::uint64_t>(1, (std::uint64_t{1} << bits) / 64);
    ambient_ = ambient_words <= std::max<std::uint64_t>(1, keys.size());
    if (ambient_) {
      words_ = ambient_words;
      mask_.assign(words_, 0);
      for (auto k : keys) mask_[k >> 6] |= std::uint64_t{1} << (k & 63);
      for (std::uint32_t g = 0; g < 64; ++g) {
        std::uint64_t pat = 0;
        for (std::uint32_t b = 0; b < 64; ++b) {
          if (parity(g & b)) pat |= std::uint64_t{1} << b;
        }
        low_[g] = pat;
      }
    } else {
      words_ = (keys.size() + 63) / 64;
      mask_.assign(words_, ~std::uint64_t{0});
      if (keys.size() % 64) {
        mask_.back() = (std::uint64_t{1} << (keys.size() % 64)) - 1;
      }
    }
  }

  std::size_t words() const { return words_; }
  const std::vector<std::uint64_t>& mask() const { return mask_; }

  // Writes the support into `out` (words() entries, may be null) and
  // returns its weight.
  std::uint64_t evaluate(std::span<const std::uint32_t> funcs,
                         std::uint64_t* out) const {
    std::uint64_t weight = 0;
    if (ambient_) {
      for (std::size_t w = 0; w < words_; ++w) {
        if (mask_[w] == 0) {
          if (out) out[w] = 0;
          continue;
        }
        std::uint64_t acc = 0;
        for (auto f : funcs) {
          std::uint64_t t = low_[f & 63];
          if (parity((f >> 6) & w)) t = ~t;
          acc |= t;
        }
        acc &= mask_[w];
        weight += std::popcount(acc);
        if (out) out[w] = acc;
      }
    } else {
      for (std::size_t w = 0; w < words_; ++w) {
        const std::size_t base = w * 64;
        const std::size_t end = std::min(keys_.size(), base + 64);
        std::uint64_t acc = 0;
        for (std::size_t p = base; p < end; ++p) {
          bool nz = false;
          for (auto f : funcs) nz = nz || parity(f & keys_[p]);
          if (nz) acc |= std::uint64_t{1} << (p - base);
        }
        weight += std::popcount(acc);
        if (out) out[w] = acc;
      }
    }
    return weight;
  }

 private:
  std::span<const std::uint32_t> keys_;
  bool ambient_ = false;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> mask_;
  std::array<std::uint64_t, 64> low_{};
};

// Per-position functional contributions for the field code: entry
// [c][x][i] holds the bits (j*m + c) with coordinate i of x*w^j set.
using Contrib = std::vector<std::vector<std::vector<std::uint32_t>>>;

Contrib field_contrib(const FieldCtx& ctx, int m) {
  const int n = ctx.degree();
  Contrib out(m, std::vector<std::vector<std::uint32_t>>(
                     ctx.order(), std::vector<std::uint32_t>(n, 0)));
  for (int c = 0; c < m; ++c) {
    for (std::uint32_t x = 0; x < ctx.order(); ++x) {
      for (int j = 0; j < n; ++j) {
        const std::uint32_t prod = ctx.mul_bits(x, ctx.power_bits(j));
        for (int i = 0; i < n; ++i) {
          if ((prod >> i) & 1U) out[c][x][i] |= std::uint32_t{1} << (j * m + c);
        }
      }
    }
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

// One message class per entry: its functionals (r per class).
struct Classes {
  int r = 1;
  std::vector<std::uint32_t> funcs;
  std::size_t size() const { return funcs.size() / r; }
};

Classes field_classes(const DefiningSet& ds, std::span<const int> pivots) {
  const FieldCtx& ctx = *ds.ctx;
  const int n = ctx.degree();
  const std::uint32_t q = ctx.order();
  const int k = static_cast<int>(pivots.size());
  const Contrib contrib = field_contrib(ctx, ds.m);
  Classes cls;
  cls.r = n;
  std::vector<std::uint32_t> digits(k);
  for (int lead = 0; lead < k; ++lead) {
    const std::uint64_t tail_count = checked_pow(q, k - 1 - lead);
    for (std::uint64_t tail = 0; tail < tail_count; ++tail) {
      std::fill(digits.begin(), digits.end(), 0);
      digits[lead] = 1;
      std::uint64_t t = tail;
      for (int p = lead + 1; p < k; ++p) {
        digits[p] = static_cast<std::uint32_t>(t % q);
        t /= q;
      }
      for (int i = 0; i < n; ++i) {
        std::uint32_t f = 0;
        for (int p = lead; p < k; ++p) f ^= contrib[pivots[p]][digits[p]][i];
        cls.funcs.push_back(f);
      }
    }
  }
  return cls;
}

Classes binary_classes(std::span<const int> pivots) {
  Classes cls;
  const int k = static_cast<int>(pivots.size());
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t s = 1; s < count; ++s) {
    std::uint32_t z = 0;
    for (int p = 0; p < k; ++p) {
      if ((s >> p) & 1U) z |= std::uint32_t{1} << pivots[p];
    }
    cls.funcs.push_back(z);
  }
  return cls;
}

struct Enumerated {
  std::vector<std::uint64_t> weights;
  // size() * words supports, or empty when not kept.
  std::vector<std::uint64_t> supports;
  std::size_t words = 0;
  std::vector<std::uint64_t> mask;

  const std::uint64_t* support(std::size_t c) const {
    return supports.data() + c * words;
  }
};

Enumerated enumerate_classes(const SupportEngine& engine, const Classes& cls,
                             bool keep, unsigned workers) {
  Enumerated e;
  const std::size_t count = cls.size();
  e.words = engine.words();
  e.mask = engine.mask();
  e.weights.assign(count, 0);
  if (keep) e.supports.assign(count * e.words, 0);
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      std::span<const std::uint32_t> f(cls.funcs.data() + c * cls.r, cls.r);
      e.weights[c] =
          engine.evaluate(f, keep ? e.supports.data() + c * e.words : nullptr);
    }
  };
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2 * workers) {
    run(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(count, w * chunk);
      const std::size_t hi = std::min(count, lo + chunk);
      pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return e;
}

bool subset_of(const std::uint64_t* a, const std::uint64_t* b,
               std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

bool disjoint(const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & b[w]) return false;
  }
  return true;
}

std::vector<std::size_t> by_weight(const std::vector<std::uint64_t>& weights) {
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return weights[a] < weights[b];
  });
  return order;
}

// Classes are pairwise non-proportional codewords. The code is minimal iff
// no class support is contained in another's.
bool minimal_field(const Enumerated& e) {
  const auto order = by_weight(e.weights);
  for (std::size_t x = 0; x < order.size(); ++x) {
    const std::uint64_t* a = e.supports.data() + order[x] * e.words;
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const std::uint64_t* b = e.supports.data() + order[y] * e.words;
      if (subset_of(a, b, e.words)) return false;
    }
  }
  return true;
}

std::uint64_t hash_words(const std::uint64_t* a, std::size_t words) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t w = 0; w < words; ++w) {
    h ^= a[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Binary: supp(a) inside supp(b) for a != b iff a and a+b are disjoint, so
// look for two nonzero codewords with disjoint supports. A disjoint pair
// whose weights add up to the length is a complementary pair and is found
// by hashing.
bool minimal_binary(const Enumerated& e, std::uint64_t length) {
  const auto order = by_weight(e.weights);
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash;
  for (std::size_t c = 0; c < e.weights.size(); ++c) {
    by_hash.emplace(hash_words(e.support(c), e.words), c);
  }
  std::vector<std::uint64_t> comp(e.words);
  for (std::size_t x = 0; x < order.size(); ++x) {
    const std::uint64_t wa = e.weights[order[x]];
    if (2 * wa > length) break;
    const std::uint64_t* a = e.support(order[x]);
    for (std::size_t w = 0; w < e.words; ++w) comp[w] = e.mask[w] & ~a[w];
    const auto range = by_hash.equal_range(hash_words(comp.data(), e.words));
    for (auto it = range.first; it != range.second; ++it) {
      if (std::equal(comp.begin(), comp.end(), e.support(it->second))) {
        return false;
      }
    }
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      if (wa + e.weights[order[y]] >= length) break;
      if (disjoint(a, e.support(order[y]), e.words)) return false;
    }
  }
  return true;
}

constexpr std::uint64_t kMaxKeptWords = std::uint64_t{1} << 24;

CodeReport assemble_report(std::uint64_t q, std::uint64_t length, int k,
                           const Enumerated& e, std::optional<bool> minimal,
                           const ReportOptions& opts) {
  CodeReport r;
  r.q = q;
  r.length = length;
  r.k = k;
  std::map<std::uint64_t, std::uint64_t> hist;
  hist[0] = 1;
  for (auto w : e.weights) hist[w] += q - 1;
  r.weights.assign(hist.begin(), hist.end());
  const auto nz = r.nonzero_weights();
  r.d = nz.empty() ? 0 : nz.front();
  r.griesmer_sum = griesmer_sum(r.d, q, k);
  r.is_griesmer = k > 0 && r.griesmer_sum == length;
  if (r.is_griesmer) {
    r.distance_optimal = true;
  } else if (opts.bounds) {
    if (auto best = opts.bounds->lookup(q, length, k)) {
      r.distance_optimal = r.d >= *best;
    }
  }
  if (!nz.empty()) {
    r.ab_ratio = static_cast<double>(nz.front()) / static_cast<double>(nz.back());
    r.ab_minimal = nz.front() * q > (q - 1) * nz.back();
  }
  r.exhaustive_minimal = minimal;
  return r;
}

bool keep_supports(std::uint64_t code_size, std::size_t classes,
                   std::size_t words, const ReportOptions& opts) {
  return code_size <= opts.minimality_limit &&
         static_cast<std::uint64_t>(classes) * words <= kMaxKeptWords;
}

}  // namespace

Variant parse_variant(const std::string& text) {
  if (text == "d") return Variant::kFull;
  if (text == "dstar") return Variant::kDStar;
  if (text == "dc") return Variant::kComplement;
  throw InvalidInput("unknown variant '" + text + "' (expected d, dstar, dc)");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kFull:
      return "d";
    case Variant::kDStar:
      return "dstar";
    case Variant::kComplement:
      return "dc";
  }
  return "?";
}

std::uint64_t DefiningSet::product_size() const {
  std::uint64_t s = 1;
  for (const auto& l : layers) s *= l.size();
  return s;
}

std::uint32_t DefiningSet::symbol(std::uint32_t key, int c) const {
  std::uint32_t x = 0;
  for (int i = 0; i < n(); ++i) x |= ((key >> (i * m + c)) & 1U) << i;
  return x;
}

DefiningSet build_defining_set(std::shared_ptr<const FieldCtx> ctx, int m,
                               std::span<const IndexMask> L_list,
                               Variant variant) {
  require_ctx(ctx);
  if (static_cast<int>(L_list.size()) != ctx->degree()) {
    throw InvalidInput("expected " + std::to_string(ctx->degree()) +
                       " index sets, got " + std::to_string(L_list.size()));
  }
  require_shape(ctx->degree(), m);
  DefiningSet ds;
  ds.ctx = std::move(ctx);
  ds.m = m;
  ds.variant = variant;
  ds.layers = layers_of(L_list, m);
  ds.generators = std::vector<IndexMask>(L_list.begin(), L_list.end());
  ds.keys = variant_keys(ds.layers, m, ds.packed_bits(), variant);
  return ds;
}

DefiningSet build_defining_set_from_layers(std::shared_ptr<const FieldCtx> ctx,
                                           int m, std::vector<Layer> layers,
                                           Variant variant) {
  require_ctx(ctx);
  if (static_cast<int>(layers.size()) != ctx->degree()) {
    throw InvalidInput("expected " + std::to_string(ctx->degree()) +
                       " layers, got " + std::to_string(layers.size()));
  }
  require_shape(ctx->degree(), m);
  for (auto& l : layers) {
    for (auto d : l) {
      if (d & ~full_mask(m)) throw InvalidInput("layer member outside F_2^m");
    }
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  DefiningSet ds;
  ds.ctx = std::move(ctx);
  ds.m = m;
  ds.variant = variant;
  ds.layers = std::move(layers);
  ds.keys = variant_keys(ds.layers, m, ds.packed_bits(), variant);
  return ds;
}

std::uint32_t message_key(std::span<const Fq> v, int m) {
  if (static_cast<int>(v.size()) != m) {
    throw InvalidInput("message length " + std::to_string(v.size()) +
                       " != m = " + std::to_string(m));
  }
  std::uint32_t key = 0;
  for (int c = 0; c < m; ++c) {
    for (int i = 0; i < v[c].n; ++i) {
      if (v[c].coord(i)) key |= std::uint32_t{1} << (i * m + c);
    }
  }
  return key;
}

std::vector<Fq> message_from_key(std::uint32_t key, const FieldCtx& ctx,
                                 int m) {
  std::vector<Fq> v(m, ctx.zero());
  for (int c = 0; c < m; ++c) {
    for (int i = 0; i < ctx.degree(); ++i) {
      if ((key >> (i * m + c)) & 1U) v[c].coords |= 1U << i;
    }
  }
  return v;
}

std::size_t Codeword::weight() const {
  return static_cast<std::size_t>(
      std::count_if(symbols.begin(), symbols.end(), [](auto s) { return s; }));
}

Codeword encode(const DefiningSet& ds, std::span<const Fq> v) {
  if (static_cast<int>(v.size()) != ds.m) {
    throw InvalidInput("message length " + std::to_string(v.size()) +
                       " != m = " + std::to_string(ds.m));
  }
  for (const auto& x : v) {
    if (x.n != ds.n()) throw InvalidInput("message symbol from another field");
  }
  Codeword cw;
  cw.q = ds.ctx->order();
  cw.symbols.reserve(ds.keys.size());
  for (auto key : ds.keys) {
    std::uint32_t s = 0;
    for (int c = 0; c < ds.m; ++c) {
      s ^= ds.ctx->mul_bits(v[c].coords, ds.symbol(key, c));
    }
    cw.symbols.push_back(s);
  }
  return cw;
}

SubfieldSpec subfield_expand(const DefiningSet& ds) {
  return subfield_expand(ds, ds.variant);
}

SubfieldSpec subfield_expand(const DefiningSet& ds, Variant variant) {
  SubfieldSpec ss;
  ss.n = ds.n();
  ss.m = ds.m;
  ss.variant = variant;
  ss.layers = ds.layers;
  ss.generators = ds.generators;
  ss.keys = variant == ds.variant
                ? ds.keys
                : variant_keys(ss.layers, ss.m, ss.packed_bits(), variant);
  return ss;
}

Codeword encode_subfield(const SubfieldSpec& ss, std::uint32_t z) {
  if (z & ~full_mask(ss.packed_bits())) {
    throw InvalidInput("z has more than n*m bits");
  }
  Codeword cw;
  cw.q = 2;
  cw.symbols.reserve(ss.keys.size());
  for (auto key : ss.keys) cw.symbols.push_back(parity(z & key) ? 1 : 0);
  return cw;
}

std::vector<std::vector<std::uint32_t>> generator_matrix(const DefiningSet& ds) {
  std::vector<std::vector<std::uint32_t>> g(ds.m);
  for (int c = 0; c < ds.m; ++c) {
    g[c].reserve(ds.keys.size());
    for (auto key : ds.keys) g[c].push_back(ds.symbol(key, c));
  }
  return g;
}

std::vector<std::vector<std::uint8_t>> subfield_generator_matrix(
    const SubfieldSpec& ss) {
  std::vector<std::vector<std::uint8_t>> g(ss.packed_bits());
  for (int b = 0; b < ss.packed_bits(); ++b) {
    g[b].reserve(ss.keys.size());
    for (auto key : ss.keys) g[b].push_back((key >> b) & 1U);
  }
  return g;
}

int generator_rank(const DefiningSet& ds) {
  return static_cast<int>(field_pivots(ds).size());
}

int subfield_generator_rank(const SubfieldSpec& ss) {
  return static_cast<int>(binary_pivots(ss.keys).size());
}

Budget Budget::from_env() {
  Budget b;
  const char* env = std::getenv("SCCODES_BUDGET");
  if (!env || !*env) return b;
  const std::string text(env);
  const auto x = text.find('x');
  auto parse = [&](std::string_view part) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v == 0) {
      throw InvalidInput("SCCODES_BUDGET must look like MESSAGESxLENGTH, got '" +
                         text + "'");
    }
    return v;
  };
  if (x == std::string::npos) parse("");
  const std::string_view all(text);
  b.max_messages = parse(all.substr(0, x));
  b.max_length = parse(all.substr(x + 1));
  return b;
}

void Budget::check(std::uint64_t messages, std::uint64_t length) const {
  if (messages > max_messages || length > max_length) {
    throw BudgetExceeded("enumeration of " + std::to_string(messages) +
                         " messages x length " + std::to_string(length) +
                         " exceeds budget " + std::to_string(max_messages) +
                         "x" + std::to_string(max_length));
  }
}

std::optional<std::uint64_t> BoundsTable::lookup(std::uint64_t q,
                                                 std::uint64_t length,
                                                 int k) const {
  const auto it = best.find({q, length, k});
  if (it == best.end()) return std::nullopt;
  return it->second;
}

Hypotheses hypotheses_of(std::span<const IndexMask> L_list, int m) {
  Hypotheses h;
  h.complex_layers = true;
  const int n = static_cast<int>(L_list.size());
  const IndexMask full = full_mask(m);
  IndexMask uni = 0;
  h.all_nonempty = true;
  h.all_equal = true;
  for (auto L : L_list) {
    uni |= L;
    h.all_nonempty = h.all_nonempty && L != 0;
    h.some_proper = h.some_proper || L != full;
    h.all_equal = h.all_equal && L == L_list.front();
    h.sum_L += std::popcount(L);
  }
  h.union_full = uni == full;
  h.r_nonempty = true;
  for (int i = 0; i + 1 < n; ++i) {
    IndexMask others = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) others |= L_list[j];
    }
    h.r_nonempty = h.r_nonempty && (L_list[i] & ~others) != 0;
  }
  h.sum_le_nm_minus_n1 = h.sum_L <= n * m - (n + 1);
  h.sum_le_nm_minus_2 = h.sum_L <= n * m - 2;
  return h;
}

std::vector<std::uint64_t> CodeReport::nonzero_weights() const {
  std::vector<std::uint64_t> out;
  for (const auto& [w, a] : weights) {
    if (w > 0 && a > 0) out.push_back(w);
  }
  return out;
}

CodeReport code_report(const DefiningSet& ds, const ReportOptions& opts) {
  if (ds.keys.empty()) throw InvalidInput("defining set is empty");
  const std::uint64_t q = ds.ctx->order();
  opts.budget.check(checked_pow(q, ds.m), ds.keys.size());
  const std::vector<int> pivots = field_pivots(ds);
  const int k = static_cast<int>(pivots.size());
  const Classes cls = field_classes(ds, pivots);
  const SupportEngine engine(ds.packed_bits(), ds.keys);
  const bool keep =
      keep_supports(checked_pow(q, k), cls.size(), engine.words(), opts);
  const Enumerated e = enumerate_classes(engine, cls, keep, opts.workers);
  std::optional<bool> minimal;
  if (keep) minimal = q == 2 ? minimal_binary(e, ds.keys.size()) : minimal_field(e);
  CodeReport r = assemble_report(q, ds.keys.size(), k, e, minimal, opts);
  if (ds.generators) r.hypotheses = hypotheses_of(*ds.generators, ds.m);
  return r;
}

CodeReport subfield_report(const SubfieldSpec& ss, const ReportOptions& opts) {
  if (ss.keys.empty()) throw InvalidInput("defining set is empty");
  opts.budget.check(std::uint64_t{1} << ss.packed_bits(), ss.keys.size());
  const std::vector<int> pivots = binary_pivots(ss.keys);
  const int k = static_cast<int>(pivots.size());
  const Classes cls = binary_classes(pivots);
  const SupportEngine engine(ss.packed_bits(), ss.keys);
  const bool keep =
      keep_supports(std::uint64_t{1} << k, cls.size(), engine.words(), opts);
  const Enumerated e = enumerate_classes(engine, cls, keep, opts.workers);
  std::optional<bool> minimal;
  if (keep) minimal = minimal_binary(e, ss.keys.size());
  CodeReport r = assemble_report(2, ss.keys.size(), k, e, minimal, opts);
  if (ss.generators) r.hypotheses = hypotheses_of(*ss.generators, ss.m);
  return r;
}

CodeReport subfield_report(const SubfieldSpec& ss, Variant variant,
                           const ReportOptions& opts) {
  if (variant == ss.variant) return subfield_report(ss, opts);
  SubfieldSpec other = ss;
  other.variant = variant;
  other.keys = variant_keys(ss.layers, ss.m, ss.packed_bits(), variant);
  return subfield_report(other, opts);
}

std::vector<std::uint64_t> message_weights(const DefiningSet& ds,
                                           const Budget& budget) {
  const FieldCtx& ctx = *ds.ctx;
  const int n = ctx.degree();
  const int bits = ds.packed_bits();
  budget.check(std::uint64_t{1} << bits, ds.keys.size());
  const Contrib contrib = field_contrib(ctx, ds.m);
  const SupportEngine engine(bits, ds.keys);
  const std::uint32_t total = std::uint32_t{1} << bits;
  std::vector<std::uint64_t> out(total, 0);
  std::vector<std::uint32_t> f(n);
  for (std::uint32_t key = 1; key < total; ++key) {
    std::fill(f.begin(), f.end(), 0);
    for (int c = 0; c < ds.m; ++c) {
      const std::uint32_t x = ds.symbol(key, c);
      if (x == 0) continue;
      for (int i = 0; i < n; ++i) f[i] ^= contrib[c][x][i];
    }
    out[key] = engine.evaluate(f, nullptr);
  }
  return out;
}

std::vector<std::uint64_t> subfield_message_weights(const SubfieldSpec& ss,
                                                    const Budget& budget) {
  const int bits = ss.packed_bits();
  budget.check(std::uint64_t{1} << bits, ss.keys.size());
  const SupportEngine engine(bits, ss.keys);
  const std::uint32_t total = std::uint32_t{1} << bits;
  std::vector<std::uint64_t> out(total, 0);
  for (std::uint32_t z = 1; z < total; ++z) {
    const std::uint32_t f[1] = {z};
    out[z] = engine.evaluate(f, nullptr);
  }
  return out;
}

std::uint64_t griesmer_sum(std::uint64_t d, std::uint64_t q, int k) {
  std::uint64_t sum = 0;
  std::uint64_t pw = 1;
  for (int i = 0; i < k; ++i) {
    if (pw >= d) {
      sum += d == 0 ? 0 : static_cast<std::uint64_t>(k - i);
      break;
    }
    sum += (d + pw - 1) / pw;
    pw = pw > std::numeric_limits<std::uint64_t>::max() / q
             ? std::numeric_limits<std::uint64_t>::max()
             : pw * q;
  }
  return sum;
}

}  // namespace sccodes
