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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero
// if any selected criterion fails. `--criterion N` runs a single one.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sccodes/binpoly.hpp"
#include "sccodes/cli.hpp"
#include "sccodes/codes.hpp"
#include "sccodes/lfsr.hpp"
#include "sccodes/weight_theory.hpp"

using namespace sccodes;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt_weights(const std::vector<std::uint64_t>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    s += (i ? "," : "") + std::to_string(ws[i]);
  }
  return s + "}";
}

std::string params(const CodeReport& r) {
  return "[" + std::to_string(r.length) + "," + std::to_string(r.k) + "," +
         std::to_string(r.d) + "] q=" + std::to_string(r.q) + " weights " +
         fmt_weights(r.nonzero_weights());
}

std::shared_ptr<const FieldCtx> field(const char* poly) {
  return std::make_shared<const FieldCtx>(parse_poly(poly));
}

ReportOptions unbounded() {
  ReportOptions o;
  o.budget = Budget{};
  return o;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  const std::vector<IndexMask> L{0b0011, 0b0110, 0b1100};
  const CodeReport r = code_report(
      build_defining_set(field("x^3+x+1"), 4, L, Variant::kDStar), unbounded());
  const double t = seconds_since(t0);
  const bool ok = r.q == 8 && r.length == 63 && r.k == 4 && r.d == 32 &&
                  r.nonzero_weights() == std::vector<std::uint64_t>{32, 48, 56} &&
                  t < 1.0;
  return {ok, params(r) + ", " + std::to_string(t) + " s (limit 1 s)"};
}

Outcome criterion2() {
  const std::vector<IndexMask> L{0b0111, 0b0111};
  const CodeReport r = code_report(
      build_defining_set(field("x^2+x+1"), 4, L, Variant::kDStar), unbounded());
  const bool ok = r.q == 4 && r.length == 63 && r.k == 3 && r.d == 48 &&
                  r.weight_count() == 1 && r.is_griesmer;
  return {ok, params(r) + (r.is_griesmer ? ", griesmer" : ", not griesmer")};
}

Outcome criterion3() {
  const auto f4 = field("x^2+x+1");
  const std::vector<IndexMask> La{0b011, 0b110};
  const CodeReport a =
      code_report(build_defining_set(f4, 3, La, Variant::kComplement), unbounded());
  const bool ok_a = a.q == 4 && a.length == 48 && a.k == 4 && a.d == 36 &&
                    a.nonzero_weights() ==
                        std::vector<std::uint64_t>{36, 40, 48} &&
                    a.is_griesmer;
  const std::vector<IndexMask> Lb{0b0011, 0b0011};
  const CodeReport b =
      code_report(build_defining_set(f4, 4, Lb, Variant::kComplement), unbounded());
  const bool ok_b = b.q == 4 && b.length == 240 && b.k == 4 && b.d == 180 &&
                    b.nonzero_weights() == std::vector<std::uint64_t>{180, 192} &&
                    b.is_griesmer && b.ab_minimal;
  std::string detail = "m=3 instance " + params(a) +
                       " (want [48,4,36] weights {36,40,48}, griesmer) " +
                       (ok_a ? "ok" : "MISMATCH") + "; m=4 instance " +
                       params(b) + (b.ab_minimal ? ", ab_minimal" : "") + " " +
                       (ok_b ? "ok" : "MISMATCH");
  return {ok_a && ok_b, detail};
}

Outcome criterion4() {
  const std::vector<IndexMask> La{0b0011, 0b0110, 0b1100};
  const CodeReport a = subfield_report(
      subfield_expand(build_defining_set(field("x^3+x+1"), 4, La, Variant::kDStar)),
      unbounded());
  const bool ok_a = a.q == 2 && a.length == 15 && a.k == 4 && a.d == 8 &&
                    a.weight_count() == 1 && a.is_griesmer;
  const std::vector<IndexMask> Lb{0b011, 0b110};
  const CodeReport b = subfield_report(
      subfield_expand(
          build_defining_set(field("x^2+x+1"), 3, Lb, Variant::kComplement)),
      unbounded());
  const bool ok_b = b.q == 2 && b.length == 48 && b.k == 6 && b.d == 24 &&
                    b.nonzero_weights() == std::vector<std::uint64_t>{24, 32} &&
                    b.is_griesmer && b.ab_minimal;
  std::string detail = "n=3 instance " + params(a) +
                       " (want [15,4,8] one weight, griesmer) " +
                       (ok_a ? "ok" : "MISMATCH") + "; n=2 instance " +
                       params(b) + (b.ab_minimal ? ", ab_minimal" : "") + " " +
                       (ok_b ? "ok" : "MISMATCH");
  return {ok_a && ok_b, detail};
}

struct DrawnTuple {
  std::vector<Layer> layers;
  // Set when every layer is Delta_L.
  std::optional<std::vector<IndexMask>> L;
};

Layer delta_members(IndexMask L, int m) {
  Layer out;
  for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
    if ((x & ~L) == 0) out.push_back(x);
  }
  return out;
}

// Even draws: all layers Delta_L. Odd draws: each layer is Delta_L or an
// arbitrary nonempty subset of F_2^m.
std::vector<DrawnTuple> draw_tuples(int n, int m, int count, std::mt19937& rng) {
  std::vector<DrawnTuple> out;
  std::uniform_int_distribution<std::uint32_t> mask(0, full_mask(m));
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < count; ++t) {
    DrawnTuple d;
    std::vector<IndexMask> L;
    bool all_delta = true;
    do {
      d.layers.clear();
      L.clear();
      all_delta = true;
      for (int i = 0; i < n; ++i) {
        if (t % 2 == 0 || coin(rng)) {
          L.push_back(mask(rng));
          d.layers.push_back(delta_members(L.back(), m));
        } else {
          all_delta = false;
          Layer layer;
          while (layer.empty()) {
            for (std::uint32_t x = 0; x <= full_mask(m); ++x) {
              if (coin(rng)) layer.push_back(x);
            }
          }
          d.layers.push_back(layer);
        }
      }
      // D = {0} leaves D* empty; draw again.
    } while (std::all_of(d.layers.begin(), d.layers.end(), [](const Layer& l) {
      return l == Layer{0};
    }));
    if (all_delta) d.L = L;
    out.push_back(std::move(d));
  }
  return out;
}

struct SweepStats {
  std::size_t tuples = 0;
  std::size_t messages = 0;
  std::size_t formula_mismatch = 0;
  std::size_t complement_mismatch = 0;
  std::size_t theta_checked = 0;
  std::size_t theta_not_power = 0;
  std::size_t theta_weight_mismatch = 0;
  double seconds = 0;
};

const SweepStats& formula_sweep() {
  static const SweepStats stats = [] {
    SweepStats s;
    const auto t0 = Clock::now();
    std::mt19937 rng(20260);
    for (int n = 2; n <= 3; ++n) {
      const auto ctx = std::make_shared<const FieldCtx>(default_modulus(n));
      const EtaSystem es(*ctx);
      const WSpace ws(es);
      const long long q = 1LL << n;
      for (int m = 2; m <= 4; ++m) {
        const long long top = (q - 1) << (n * (m - 1));
        for (const auto& d : draw_tuples(n, m, 50, rng)) {
          ++s.tuples;
          const auto star =
              build_defining_set_from_layers(ctx, m, d.layers, Variant::kDStar);
          const auto comp = build_defining_set_from_layers(
              ctx, m, d.layers, Variant::kComplement);
          const auto w_star = message_weights(star, Budget{});
          const auto w_comp = message_weights(comp, Budget{});
          int S = 0;
          if (d.L) {
            for (auto L : *d.L) S += std::popcount(L);
          }
          for (std::uint32_t key = 0; key < w_star.size(); ++key) {
            ++s.messages;
            const MsgDecomp msg = MsgDecomp::from_key(key, n, m);
            const long long fs =
                weight_cD_star_formula(es, ws, msg, d.layers);
            const long long fc = weight_cDc_formula(es, ws, msg, d.layers);
            if (fs != static_cast<long long>(w_star[key]) ||
                fc != static_cast<long long>(w_comp[key])) {
              ++s.formula_mismatch;
            }
            const long long want = key == 0 ? 0 : top;
            if (static_cast<long long>(w_star[key] + w_comp[key]) != want ||
                !complementarity_check(es, ws, msg, d.layers)) {
              ++s.complement_mismatch;
            }
            if (d.L) {
              ++s.theta_checked;
              const std::uint32_t th = theta(ws, msg, *d.L);
              if (th < 1 || th > static_cast<std::uint32_t>(q) ||
                  !std::has_single_bit(th)) {
                ++s.theta_not_power;
              } else if (weight_from_theta(th, S, n) !=
                         static_cast<long long>(w_star[key])) {
                ++s.theta_weight_mismatch;
              }
            }
          }
        }
      }
    }
    s.seconds = seconds_since(t0);
    return s;
  }();
  return stats;
}

Outcome criterion5() {
  const SweepStats& s = formula_sweep();
  const bool ok = s.tuples == 300 && s.formula_mismatch == 0 &&
                  s.complement_mismatch == 0 && s.seconds < 60.0;
  std::ostringstream os;
  os << s.tuples << " tuples, " << s.messages << " messages, "
     << s.formula_mismatch << " formula mismatches, " << s.complement_mismatch
     << " complementarity mismatches, " << s.seconds << " s (limit 60 s)";
  return {ok, os.str()};
}

Outcome criterion6() {
  std::size_t fields = 0, failures = 0;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t c = 1ULL << n; c < (2ULL << n); ++c) {
      const BinPoly f(c);
      if (!is_irreducible(f)) continue;
      ++fields;
      const FieldCtx ctx(f);
      const EtaSystem es(ctx);
      if (!check_all_combinations_invertible(es) || !rows_match_states(es)) {
        ++failures;
        std::cerr << "  M-check failed for " << to_string(f) << "\n";
      }
    }
  }
  std::ostringstream os;
  os << fields << " irreducible moduli of degree 1..6, " << failures
     << " failures";
  return {fields == 23 && failures == 0, os.str()};
}

Outcome criterion7() {
  const SweepStats& s = formula_sweep();
  std::ostringstream os;
  os << s.theta_checked << " Delta_L messages, " << s.theta_not_power
     << " theta outside {1,2,...,2^n}, " << s.theta_weight_mismatch
     << " weight mismatches";
  return {s.theta_checked > 0 && s.theta_not_power == 0 &&
              s.theta_weight_mismatch == 0,
          os.str()};
}

Outcome criterion8() {
  const auto path = std::filesystem::temp_directory_path() /
                    ("sccodes_acceptance_ledger_" +
                     std::to_string(static_cast<long>(::getpid())) + ".csv");
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int rc = run_cli(
      {"verify", "--n", "2,3", "--m-max", "4", "--out", path.string()}, out, err);
  const double t = seconds_since(t0);
  std::filesystem::remove(path);
  std::string summary = out.str();
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  const bool ok = rc == kExitOk &&
                  summary.find(", failed 0,") != std::string::npos && t < 600.0;
  std::ostringstream os;
  os << "exit " << rc << ", " << summary << ", " << t << " s (limit 600 s)";
  if (!err.str().empty()) os << ", stderr: " << err.str();
  return {ok, os.str()};
}

Outcome criterion9() {
  const FieldCtx ctx(parse_poly("x^3+x+1"), 7);
  auto bits = [](std::uint32_t v) {
    std::string s;
    for (int i = 0; i < 3; ++i) s += ((v >> i) & 1U) ? '1' : '0';
    return s;
  };
  // Coordinates (1, w, w^2) of w^3..w^7.
  const std::vector<std::string> powers{"110", "011", "111", "101", "100"};
  std::size_t bad = 0;
  for (int k = 3; k <= 7; ++k) bad += bits(ctx.power_bits(k)) != powers[k - 3];
  const EtaSystem es(ctx);
  const std::vector<std::string> M{"100/001/010", "010/101/011", "001/010/101"};
  for (int i = 0; i < 3; ++i) {
    bad += es.coordinate_matrices()[i].to_string() != M[i];
  }
  const std::vector<std::string> prefixes{"1001011", "0101110", "0010111"};
  const auto seqs = basis_sequences(ctx);
  for (int i = 0; i < 3; ++i) bad += seqs[i].prefix_string(7) != prefixes[i];
  return {bad == 0, "11 values compared, " + std::to_string(bad) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> all{
      {1, {"n=3 C_D* parameters and weights", criterion1}},
      {2, {"n=2 one-weight C_D*", criterion2}},
      {3, {"C_Dc example codes", criterion3}},
      {4, {"binary subfield example codes", criterion4}},
      {5, {"closed-form weights equal brute force", criterion5}},
      {6, {"M_i invertibility and state rows", criterion6}},
      {7, {"theta is a power of two and fixes the weight", criterion7}},
      {8, {"theorem ledger has no failed claims", criterion8}},
      {9, {"x^3+x+1 powers, M_i and sequence prefixes", criterion9}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (const auto& [k, v] : all) selected.push_back(k);
  }
  int failed = 0;
  for (int k : selected) {
    const auto it = all.find(k);
    if (it == all.end()) {
      std::cerr << "no criterion " << k << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": "
              << it->second.first << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
