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

#include "sccodes/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

std::string fmt_set(const std::vector<std::uint64_t>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ws[i]);
  }
  return s + "}";
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

IndexMask permute_mask(IndexMask L, const std::vector<int>& perm) {
  IndexMask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((L >> i) & 1U) out |= IndexMask{1} << perm[i];
  }
  return out;
}

class RowSink {
 public:
  RowSink(const FieldCtx& ctx, int m, std::span<const IndexMask> L)
      : n_(ctx.degree()),
        poly_(to_string(ctx.modulus())),
        m_(m),
        L_(format_layers(L)) {}

  void add(const std::string& family, const std::string& claim,
           const std::string& expected, const std::string& observed) {
    rows_.push_back({n_, poly_, m_, L_, family, claim, expected, observed,
                     expected == observed ? ClaimStatus::kPass
                                          : ClaimStatus::kFail});
  }
  void add(const std::string& family, const std::string& claim,
           std::uint64_t expected, std::uint64_t observed) {
    add(family, claim, std::to_string(expected), std::to_string(observed));
  }
  void add_flag(const std::string& family, const std::string& claim,
                std::optional<bool> observed) {
    if (!observed) {
      rows_.push_back({n_, poly_, m_, L_, family, claim, "true", "unknown",
                       ClaimStatus::kSkip});
      return;
    }
    add(family, claim, "true", fmt_bool(*observed));
  }

  std::vector<LedgerRow> take() { return std::move(rows_); }

 private:
  int n_;
  std::string poly_;
  int m_;
  std::string L_;
  std::vector<LedgerRow> rows_;
};

void add_parameters(RowSink& sink, const std::string& family,
                    const CodeReport& r, std::uint64_t length, int k,
                    std::uint64_t d, const std::vector<std::uint64_t>& weights) {
  sink.add(family, "length", length, r.length);
  sink.add(family, "dimension", static_cast<std::uint64_t>(k),
           static_cast<std::uint64_t>(r.k));
  sink.add(family, "distance", d, r.d);
  sink.add(family, "weights", fmt_set(weights), fmt_set(r.nonzero_weights()));
  sink.add(family, "weight_count", weights.size(), r.weight_count());
}

// "all" when a[v] + b[v] == target * [v != 0] for every v, else the first
// offending message.
std::string sum_identity(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b,
                         std::uint64_t target) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    const std::uint64_t want = v == 0 ? 0 : target;
    if (a[v] + b[v] != want) {
      return "message " + std::to_string(v) + ": " + std::to_string(a[v]) +
             "+" + std::to_string(b[v]);
    }
  }
  return "all";
}

void add_report_identities(RowSink& sink, const std::string& label,
                           const CodeReport& r) {
  if (r.ab_minimal) {
    sink.add_flag(kFamIdentities, label + ":ab_implies_minimal",
                  r.exhaustive_minimal);
  }
  if (r.is_griesmer) {
    sink.add_flag(kFamIdentities, label + ":griesmer_implies_optimal",
                  r.distance_optimal);
  }
}

}  // namespace

std::vector<std::string> applicable_families(const Hypotheses& h) {
  std::vector<std::string> out;
  if (!h.complex_layers || !h.all_nonempty) return out;
  if (h.r_nonempty) out.push_back(kFamDStar);
  if (h.all_equal) out.push_back(kFamDStarEqual);
  if (h.some_proper && h.r_nonempty) out.push_back(kFamDc);
  if (h.some_proper && h.all_equal) out.push_back(kFamDcEqual);
  out.push_back(kFamSubDStar);
  if (h.some_proper) out.push_back(kFamSubDc);
  return out;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkip:
      return "skip";
  }
  return "?";
}

std::size_t Ledger::count(ClaimStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [s](const auto& r) { return r.status == s; }));
}

std::string Ledger::to_csv() const {
  std::ostringstream os;
  os << "n,poly,m,L,family,claim,expected,observed,status\n";
  for (const auto& r : rows) {
    os << r.n << "," << csv_cell(r.poly) << "," << r.m << "," << csv_cell(r.L)
       << "," << r.family << "," << csv_cell(r.claim) << ","
       << csv_cell(r.expected) << "," << csv_cell(r.observed) << ","
       << to_string(r.status) << "\n";
  }
  return os.str();
}

std::vector<std::vector<IndexMask>> enumerate_layer_tuples(int n, int m,
                                                           bool dedup) {
  if (n < 1 || m < 1 || m > kMaxAmbient) {
    throw InvalidInput("layer tuples need n >= 1 and m in [1, " +
                       std::to_string(kMaxAmbient) + "]");
  }
  const IndexMask top = full_mask(m);
  std::vector<std::vector<int>> perms;
  if (dedup) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<IndexMask>> out;
  std::vector<IndexMask> cur(n, 1);
  while (true) {
    bool keep = true;
    for (const auto& p : perms) {
      std::vector<IndexMask> image(n);
      for (int i = 0; i < n; ++i) image[i] = permute_mask(cur[i], p);
      if (image < cur) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == top) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<LedgerRow> verify_instance(std::shared_ptr<const FieldCtx> ctx,
                                       int m, std::span<const IndexMask> L_list,
                                       const ReportOptions& opts) {
  if (!ctx) throw InvalidInput("verification needs a field context");
  const int n = ctx->degree();
  const std::uint64_t q = ctx->order();
  const Hypotheses h = hypotheses_of(L_list, m);
  const int S = h.sum_L;
  const int nm = n * m;
  RowSink sink(*ctx, m, L_list);
  const auto fams = applicable_families(h);
  auto has = [&](const char* f) {
    return std::find(fams.begin(), fams.end(), f) != fams.end();
  };

  std::optional<DefiningSet> dstar;
  std::optional<DefiningSet> dc;
  std::optional<CodeReport> r_star, r_c, s_star, s_c;
  if (S > 0) {
    dstar = build_defining_set(ctx, m, L_list, Variant::kDStar);
    r_star = code_report(*dstar, opts);
    s_star = subfield_report(subfield_expand(*dstar), opts);
  }
  if (h.some_proper) {
    dc = build_defining_set(ctx, m, L_list, Variant::kComplement);
    r_c = code_report(*dc, opts);
    s_c = subfield_report(subfield_expand(*dc), opts);
  }

  if (has(kFamDStar)) {
    std::vector<std::uint64_t> ws;
    for (int i = n - 1; i >= 0; --i) ws.push_back(pow2(S - n) * (q - pow2(i)));
    IndexMask uni = 0;
    for (auto L : L_list) uni |= L;
    add_parameters(sink, kFamDStar, *r_star, pow2(S) - 1, std::popcount(uni),
                   pow2(S - 1), ws);
  }
  if (has(kFamDStarEqual)) {
    const int l = std::popcount(L_list.front());
    const std::uint64_t d = (q - 1) * pow2(n * (l - 1));
    add_parameters(sink, kFamDStarEqual, *r_star, pow2(n * l) - 1, l, d, {d});
    sink.add(kFamDStarEqual, "griesmer", "true", fmt_bool(r_star->is_griesmer));
    sink.add_flag(kFamDStarEqual, "minimal", r_star->exhaustive_minimal);
  }
  if (has(kFamDc)) {
    const std::uint64_t top = (q - 1) * pow2(n * (m - 1));
    std::vector<std::uint64_t> ws;
    for (int i = 0; i < n; ++i) ws.push_back(top - pow2(S - n) * (q - pow2(i)));
    if (!h.union_full) ws.push_back(top);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    add_parameters(sink, kFamDc, *r_c, pow2(nm) - pow2(S), m, ws.front(), ws);
    sink.add(kFamDc, "griesmer", "true", fmt_bool(r_c->is_griesmer));
    if (h.sum_le_nm_minus_n1) {
      sink.add(kFamDc, "ab_minimal", "true", fmt_bool(r_c->ab_minimal));
      sink.add_flag(kFamDc, "minimal", r_c->exhaustive_minimal);
    }
  }
  if (has(kFamDcEqual)) {
    const int l = std::popcount(L_list.front());
    const std::uint64_t top = (q - 1) * pow2(n * (m - 1));
    const std::uint64_t d = (q - 1) * (pow2(n * (m - 1)) - pow2(n * (l - 1)));
    add_parameters(sink, kFamDcEqual, *r_c, pow2(nm) - pow2(n * l), m, d,
                   {d, top});
    sink.add(kFamDcEqual, "griesmer", "true", fmt_bool(r_c->is_griesmer));
    if (n * (m - l) >= n + 1) {
      sink.add(kFamDcEqual, "ab_minimal", "true", fmt_bool(r_c->ab_minimal));
      sink.add_flag(kFamDcEqual, "minimal", r_c->exhaustive_minimal);
    }
  }
  if (has(kFamSubDStar)) {
    add_parameters(sink, kFamSubDStar, *s_star, pow2(S) - 1, S, pow2(S - 1),
                   {pow2(S - 1)});
    sink.add(kFamSubDStar, "griesmer", "true", fmt_bool(s_star->is_griesmer));
    sink.add_flag(kFamSubDStar, "minimal", s_star->exhaustive_minimal);
  }
  if (has(kFamSubDc)) {
    const std::uint64_t d = pow2(nm - 1) - pow2(S - 1);
    add_parameters(sink, kFamSubDc, *s_c, pow2(nm) - pow2(S), nm, d,
                   {d, pow2(nm - 1)});
    sink.add(kFamSubDc, "griesmer", "true", fmt_bool(s_c->is_griesmer));
    if (h.sum_le_nm_minus_2) {
      sink.add(kFamSubDc, "ab_minimal", "true", fmt_bool(s_c->ab_minimal));
      sink.add_flag(kFamSubDc, "minimal", s_c->exhaustive_minimal);
    }
  }

  if (dstar && dc) {
    sink.add(kFamIdentities, "field_weight_sum", "all",
             sum_identity(message_weights(*dstar, opts.budget),
                          message_weights(*dc, opts.budget),
                          (q - 1) * pow2(n * (m - 1))));
    sink.add(kFamIdentities, "subfield_weight_sum", "all",
             sum_identity(subfield_message_weights(subfield_expand(*dstar),
                                                   opts.budget),
                          subfield_message_weights(subfield_expand(*dc),
                                                   opts.budget),
                          pow2(nm - 1)));
  }
  if (r_star) add_report_identities(sink, "dstar", *r_star);
  if (r_c) add_report_identities(sink, "dc", *r_c);
  if (s_star) add_report_identities(sink, "subfield_dstar", *s_star);
  if (s_c) add_report_identities(sink, "subfield_dc", *s_c);
  return sink.take();
}

Ledger verify_theorems(const SweepConfig& cfg) {
  if (cfg.poly && cfg.n_list.size() != 1) {
    throw InvalidInput("a modulus override needs exactly one n");
  }
  if (cfg.m_max < 1) throw InvalidInput("m-max must be at least 1");
  Ledger ledger;
  for (int n : cfg.n_list) {
    const BinPoly f = cfg.poly ? *cfg.poly : default_modulus(n);
    if (f.degree() != n) {
      throw InvalidInput("modulus " + to_string(f) + " does not have degree " +
                         std::to_string(n));
    }
    auto ctx = std::make_shared<const FieldCtx>(f);
    for (int m = 1; m <= cfg.m_max; ++m) {
      for (const auto& L : enumerate_layer_tuples(n, m, cfg.dedup)) {
        if (cfg.limit && ledger.instances >= *cfg.limit) return ledger;
        auto rows = verify_instance(ctx, m, L, cfg.opts);
        ledger.rows.insert(ledger.rows.end(),
                           std::make_move_iterator(rows.begin()),
                           std::make_move_iterator(rows.end()));
        ++ledger.instances;
      }
    }
  }
  return ledger;
}

}  // namespace sccodes
