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

#ifndef SCCODES_CODES_HPP_
#define SCCODES_CODES_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sccodes/field.hpp"
#include "sccodes/simplicial.hpp"
#include "sccodes/weight_theory.hpp"

namespace sccodes {

// Largest n*m for which a defining set is materialized.
inline constexpr int kMaxPackedBits = 20;

enum class Variant { kFull, kDStar, kComplement };

// "d", "dstar", "dc".
Variant parse_variant(const std::string& text);
std::string to_string(Variant v);

// D = D_0 + w D_1 + ... + w^{n-1} D_{n-1} in F_{2^n}^m, restricted to the
// requested variant.
//
// Points are packed keys: layer component d_i occupies bits [i*m, (i+1)*m),
// so bit i*m + c is coordinate i of the field symbol in position c. Keys are
// stored ascending. The same packing is the nm-bit vector (d_0,...,d_{n-1})
// of the expanded binary defining set.
struct DefiningSet {
  std::shared_ptr<const FieldCtx> ctx;
  int m = 0;
  Variant variant = Variant::kDStar;
  // Explicit members of each layer, ascending.
  std::vector<Layer> layers;
  // Present when every layer is Delta_{L_i}.
  std::optional<std::vector<IndexMask>> generators;
  std::vector<std::uint32_t> keys;

  int n() const { return ctx->degree(); }
  int packed_bits() const { return n() * m; }
  std::size_t length() const { return keys.size(); }
  // |D| for the full product set.
  std::uint64_t product_size() const;
  // Field element in position c of the point with the given key.
  std::uint32_t symbol(std::uint32_t key, int c) const;
};

DefiningSet build_defining_set(std::shared_ptr<const FieldCtx> ctx, int m,
                               std::span<const IndexMask> L_list,
                               Variant variant);
// Arbitrary subsets of F_2^m as layers; duplicates are removed.
DefiningSet build_defining_set_from_layers(std::shared_ptr<const FieldCtx> ctx,
                                           int m, std::vector<Layer> layers,
                                           Variant variant);

// Packs a message v in F_{2^n}^m into the key layout (coordinate i of v_c in
// bit i*m + c) and back.
std::uint32_t message_key(std::span<const Fq> v, int m);
std::vector<Fq> message_from_key(std::uint32_t key, const FieldCtx& ctx, int m);

struct Codeword {
  // Field symbols as coordinate masks; 0/1 for binary codes.
  std::vector<std::uint32_t> symbols;
  // Alphabet size.
  std::uint32_t q = 2;

  std::size_t length() const { return symbols.size(); }
  std::size_t weight() const;
};

// (v.d) over d in canonical order, one field multiplication per symbol term.
Codeword encode(const DefiningSet& ds, std::span<const Fq> v);

// Binary subfield code: defining set D^(2) of nm-bit vectors, with the same
// variant applied inside F_2^{nm}.
struct SubfieldSpec {
  int n = 0;
  int m = 0;
  Variant variant = Variant::kDStar;
  std::vector<Layer> layers;
  std::optional<std::vector<IndexMask>> generators;
  std::vector<std::uint32_t> keys;

  int packed_bits() const { return n * m; }
  std::size_t length() const { return keys.size(); }
};

SubfieldSpec subfield_expand(const DefiningSet& ds);
SubfieldSpec subfield_expand(const DefiningSet& ds, Variant variant);

// (z.d) over d in D^(2), z = (a_0, ..., a_{n-1}) packed like a key.
Codeword encode_subfield(const SubfieldSpec& ss, std::uint32_t z);

// Generator matrices. Row c of G holds the c-th symbol of each point;
// G^(2) stacks the coordinate blocks G_0, ..., G_{n-1} of G = sum w^i G_i.
std::vector<std::vector<std::uint32_t>> generator_matrix(const DefiningSet& ds);
std::vector<std::vector<std::uint8_t>> subfield_generator_matrix(
    const SubfieldSpec& ss);

// Rank over F_{2^n} of the m x |D| generator matrix.
int generator_rank(const DefiningSet& ds);
int subfield_generator_rank(const SubfieldSpec& ss);

struct Budget {
  std::uint64_t max_messages = std::uint64_t{1} << 20;
  std::uint64_t max_length = std::uint64_t{1} << 12;

  // SCCODES_BUDGET="MESSAGESxLENGTH" overrides the defaults.
  static Budget from_env();
  // Throws BudgetExceeded.
  void check(std::uint64_t messages, std::uint64_t length) const;
};

// Best known distances keyed by (q, length, k).
struct BoundsTable {
  std::map<std::tuple<std::uint64_t, std::uint64_t, int>, std::uint64_t> best;

  std::optional<std::uint64_t> lookup(std::uint64_t q, std::uint64_t length,
                                      int k) const;
};

struct ReportOptions {
  Budget budget = Budget::from_env();
  unsigned workers = 1;
  const BoundsTable* bounds = nullptr;
  // Largest code size for the pairwise minimality scan.
  std::uint64_t minimality_limit = std::uint64_t{1} << 16;
};

struct Hypotheses {
  // False for explicit (non-complex) layers; the remaining flags are then
  // all false.
  bool complex_layers = false;
  bool all_nonempty = false;
  // R_i = L_i \ union_{j != i} L_j nonempty for i = 0..n-2.
  bool r_nonempty = false;
  bool some_proper = false;
  bool all_equal = false;
  bool union_full = false;
  int sum_L = 0;
  bool sum_le_nm_minus_n1 = false;
  bool sum_le_nm_minus_2 = false;

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

Hypotheses hypotheses_of(std::span<const IndexMask> L_list, int m);

struct CodeReport {
  std::uint64_t q = 2;
  std::uint64_t length = 0;
  int k = 0;
  std::uint64_t d = 0;
  // (w, A_w) ascending in w, A_0 included.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weights;
  std::uint64_t griesmer_sum = 0;
  bool is_griesmer = false;
  std::optional<bool> distance_optimal;
  double ab_ratio = 0.0;
  bool ab_minimal = false;
  // Empty when the code exceeds the scan limit.
  std::optional<bool> exhaustive_minimal;
  std::optional<Hypotheses> hypotheses;

  // Nonzero weights, ascending.
  std::vector<std::uint64_t> nonzero_weights() const;
  std::size_t weight_count() const { return nonzero_weights().size(); }

  friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

CodeReport code_report(const DefiningSet& ds, const ReportOptions& opts = {});
CodeReport subfield_report(const SubfieldSpec& ss,
                           const ReportOptions& opts = {});
CodeReport subfield_report(const SubfieldSpec& ss, Variant variant,
                           const ReportOptions& opts = {});

// Weight of every message, indexed by message key (all q^m of them for the
// field code, all 2^{nm} z for the subfield code).
std::vector<std::uint64_t> message_weights(const DefiningSet& ds,
                                           const Budget& budget = {});
std::vector<std::uint64_t> subfield_message_weights(const SubfieldSpec& ss,
                                                    const Budget& budget = {});

// sum_{i<k} ceil(d / q^i).
std::uint64_t griesmer_sum(std::uint64_t d, std::uint64_t q, int k);

}  // namespace sccodes

#endif  // SCCODES_CODES_HPP_
