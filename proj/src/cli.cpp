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

#include "sccodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sccodes/binpoly.hpp"
#include "sccodes/codes.hpp"
#include "sccodes/error.hpp"
#include "sccodes/field.hpp"
#include "sccodes/lfsr.hpp"
#include "sccodes/report_io.hpp"
#include "sccodes/simplicial.hpp"
#include "sccodes/verify.hpp"
#include "sccodes/weight_theory.hpp"

namespace sccodes {
namespace {

struct FieldArgs {
  int n = 0;
  std::string poly;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "Extension degree n of F_{2^n}");
    app->add_option("--poly", poly,
                    "Irreducible modulus, e.g. \"x^3+x+1\" or 0xB "
                    "(default: smallest irreducible of degree n with "
                    "nonzero constant term)");
  }

  std::shared_ptr<const FieldCtx> ctx(int max_power = -1) const {
    BinPoly f;
    if (!poly.empty()) {
      f = parse_poly(poly);
      if (n != 0 && f.degree() != n) {
        throw InvalidInput("--poly has degree " + std::to_string(f.degree()) +
                           " but --n is " + std::to_string(n));
      }
    } else if (n != 0) {
      f = default_modulus(n);
    } else {
      throw InvalidInput("give --n or --poly");
    }
    return std::make_shared<const FieldCtx>(f, max_power);
  }
};

struct CodeArgs {
  FieldArgs field;
  int m = 0;
  std::string L;
  std::string layers;
  std::string variant = "dstar";
  bool subfield = false;
  std::string bounds;
  std::string out_path;
  bool strict = false;
  bool table = false;
  unsigned workers = 1;

  void add_to(CLI::App* app, bool with_subfield_flag) {
    field.add_to(app);
    app->add_option("--m", m, "Ambient dimension m")->required();
    auto* l = app->add_option(
        "--L", L, "Index sets L_0;L_1;... of [m], e.g. \"1,2;2,3;3,4\"");
    auto* lay = app->add_option(
        "--layers", layers,
        "Explicit layers instead of complexes: members of F_2^m as "
        "integer bitmasks, e.g. \"0,1,3;0,2\"");
    l->excludes(lay);
    app->add_option("--variant", variant, "d, dstar or dc")
        ->check(CLI::IsMember({"d", "dstar", "dc"}));
    if (with_subfield_flag) {
      app->add_flag("--subfield", subfield, "Report the binary subfield code");
    }
    app->add_option("--bounds", bounds,
                    "CSV of best known distances (q,length,k,best_d)");
    app->add_option("--out", out_path, "Write the JSON report here");
    app->add_flag("--strict", strict,
                  "Exit 4 unless some theorem's hypotheses hold");
    app->add_flag("--table", table, "Also print a readable summary");
    app->add_option("--workers", workers, "Enumeration threads")
        ->check(CLI::Range(1U, 256U));
  }
};

std::vector<Layer> parse_explicit_layers(const std::string& text, int m) {
  std::vector<Layer> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    Layer layer;
    std::stringstream ps(part);
    std::string cell;
    while (std::getline(ps, cell, ',')) {
      if (cell.empty()) continue;
      std::uint64_t v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoull(cell, &pos, 0);
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw InvalidInput("layer member '" + cell + "' is not an integer");
      }
      if (v > full_mask(m)) {
        throw InvalidInput("layer member " + cell + " is outside F_2^" +
                           std::to_string(m));
      }
      layer.push_back(static_cast<std::uint32_t>(v));
    }
    out.push_back(std::move(layer));
  }
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(cell, &pos));
      if (pos != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InvalidInput("'" + cell + "' is not an integer");
    }
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
  if (!f) throw InvalidInput("failed writing '" + path + "'");
}

int run_code(CodeArgs& a, bool subfield, std::ostream& out) {
  auto ctx = a.field.ctx();
  const Variant variant = parse_variant(a.variant);
  if (a.L.empty() && a.layers.empty()) throw InvalidInput("give --L or --layers");
  const DefiningSet ds =
      a.L.empty() ? build_defining_set_from_layers(
                        ctx, a.m, parse_explicit_layers(a.layers, a.m), variant)
                  : build_defining_set(ctx, a.m, parse_layers(a.L, a.m),
                                       variant);
  if (a.strict) {
    const bool ok =
        ds.generators &&
        !applicable_families(hypotheses_of(*ds.generators, a.m)).empty();
    if (!ok) {
      throw HypothesisViolation(
          "no theorem's hypotheses hold for this instance (--strict)");
    }
  }
  ReportOptions opts;
  opts.workers = a.workers;
  BoundsTable table;
  if (!a.bounds.empty()) {
    table = load_bounds_csv(a.bounds);
    opts.bounds = &table;
  }
  const CodeReport r =
      subfield ? subfield_report(subfield_expand(ds), opts) : code_report(ds, opts);
  const std::string json = dump_report(r);
  if (a.out_path.empty()) {
    out << json;
  } else {
    write_file(a.out_path, json);
  }
  if (a.table) out << format_report_table(r);
  return kExitOk;
}

std::string theory_csv(const FieldCtx& ctx) {
  const EtaSystem es(ctx);
  const WSpace ws(es);
  const int n = ctx.degree();
  auto bits = [n](std::uint64_t v) {
    std::string s;
    for (int c = 0; c < n; ++c) s += ((v >> c) & 1U) ? '1' : '0';
    return s;
  };
  std::ostringstream os;
  os << "kind,index,row,value\n";
  for (int k = 0; k <= ctx.max_power(); ++k) {
    os << "power," << k << ",," << bits(ctx.power_bits(k)) << "\n";
  }
  const auto seqs = basis_sequences(ctx);
  for (int i = 0; i < n; ++i) {
    os << "sequence," << i << ",," << seqs[i].prefix_string(2 * n - 1) << "\n";
  }
  for (std::size_t k = 0; k < es.antidiagonals().size(); ++k) {
    for (int r = 0; r < n; ++r) {
      os << "A," << k << "," << r << "," << bits(es.antidiagonals()[k].row(r))
         << "\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      os << "M," << i << "," << r << ","
         << bits(es.coordinate_matrices()[i].row(r)) << "\n";
    }
  }
  for (std::size_t s = 0; s < ws.size(); ++s) {
    for (int j = 0; j < n; ++j) {
      os << "W," << s << "," << j << "," << bits(ws.element(s)[j]) << "\n";
    }
  }
  auto tf = [](bool b) { return b ? "true" : "false"; };
  os << "check,rows_match_states,," << tf(rows_match_states(es)) << "\n";
  os << "check,combinations_invertible,,"
     << tf(check_all_combinations_invertible(es)) << "\n";
  os << "check,w_closed,," << tf(is_closed(ws)) << "\n";
  os << "check,w_bases,," << tf(nonzero_elements_are_bases(ws)) << "\n";
  return os.str();
}

// theta, closed-form weight and encoded weight of c_{D*}(v) for every v.
std::string message_rows(const std::shared_ptr<const FieldCtx>& ctx, int m,
                         const std::vector<IndexMask>& L_list) {
  const DefiningSet ds = build_defining_set(ctx, m, L_list, Variant::kDStar);
  const int n = ctx->degree();
  Budget::from_env().check(std::uint64_t{1} << ds.packed_bits(), ds.length());
  const EtaSystem es(*ctx);
  const WSpace ws(es);
  const int S = hypotheses_of(L_list, m).sum_L;
  std::ostringstream os;
  for (std::uint32_t key = 0; key < (1U << ds.packed_bits()); ++key) {
    const MsgDecomp msg = MsgDecomp::from_key(key, n, m);
    const std::uint32_t th = theta(ws, msg, L_list);
    const auto v = assemble(msg, *ctx);
    os << "message," << key << ",theta," << th << "\n";
    os << "message," << key << ",formula," << weight_from_theta(th, S, n)
       << "\n";
    os << "message," << key << ",oracle," << encode(ds, v).weight() << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Linear codes over F_{2^n} from simplicial complexes", "sccodes"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 failed claims, 2 usage or invalid input, "
      "3 enumeration budget exceeded, 4 hypotheses violated (--strict).\n"
      "SCCODES_BUDGET=MESSAGESxLENGTH overrides the enumeration budget "
      "(default 1048576x4096).");

  auto* field_cmd = app.add_subcommand("field", "Print the power table of w");
  FieldArgs field_args;
  int max_power = -1;
  field_args.add_to(field_cmd);
  field_cmd->add_option("--max-power", max_power,
                        "Largest power K (default 2n-2)");

  auto* lfsr_cmd = app.add_subcommand("lfsr", "Print an LFSR sequence prefix");
  std::string lfsr_poly, lfsr_init;
  std::size_t lfsr_len = 0;
  bool lfsr_json = false;
  lfsr_cmd->add_option("--poly", lfsr_poly, "Characteristic polynomial")
      ->required();
  lfsr_cmd->add_option("--init", lfsr_init, "Initial state, first term first")
      ->required();
  lfsr_cmd->add_option("--len", lfsr_len, "Number of terms")->required();
  lfsr_cmd->add_flag("--json", lfsr_json, "Emit JSON instead of text");

  auto* theory_cmd = app.add_subcommand(
      "theory", "Print A_k, M_i, W and the basis sequences as CSV");
  FieldArgs theory_args;
  theory_args.add_to(theory_cmd);
  int theory_m = 0;
  std::string theory_L;
  theory_cmd->add_option("--m", theory_m,
                         "With --L: add per-message theta/formula/oracle rows");
  theory_cmd->add_option("--L", theory_L, "Index sets L_0;L_1;... of [m]")
      ->needs(theory_cmd->get_option("--m"));

  auto* code_cmd = app.add_subcommand("code", "Build codes and report them");
  code_cmd->require_subcommand(1);
  auto* build_cmd = code_cmd->add_subcommand("build", "Report C_D over F_{2^n}");
  CodeArgs build_args;
  build_args.add_to(build_cmd, true);
  auto* sub_cmd =
      code_cmd->add_subcommand("subfield", "Report the binary subfield code");
  CodeArgs sub_args;
  sub_args.add_to(sub_cmd, false);

  auto* verify_cmd =
      app.add_subcommand("verify", "Check theorem claims over a sweep");
  std::string verify_n = "2,3";
  std::string verify_poly, verify_out;
  int m_max = 3;
  bool dedup = false;
  std::optional<std::size_t> limit;
  unsigned verify_workers = 1;
  verify_cmd->add_option("--n", verify_n, "Comma-separated degrees");
  verify_cmd->add_option("--poly", verify_poly,
                         "Modulus override (single n only)");
  verify_cmd->add_option("--m-max", m_max, "Largest m");
  verify_cmd->add_flag("--dedup", dedup,
                       "One L-tuple per coordinate-permutation orbit");
  verify_cmd->add_option("--limit", limit, "At most this many instances");
  verify_cmd->add_option("--out", verify_out, "Write the ledger CSV here");
  verify_cmd->add_option("--workers", verify_workers, "Enumeration threads")
      ->check(CLI::Range(1U, 256U));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (field_cmd->parsed()) {
      out << field_args.ctx(max_power)->power_table_csv();
    } else if (lfsr_cmd->parsed()) {
      const LfsrSeq seq(parse_poly(lfsr_poly), parse_state(lfsr_init));
      const std::string states = states_matrix(seq).to_string();
      const std::string minpoly = to_string(minimal_polynomial(seq));
      const auto divisors = monic_divisors(seq.charpoly());
      if (lfsr_json) {
        nlohmann::ordered_json member = nlohmann::ordered_json::object();
        for (auto g : divisors) member[to_string(g)] = in_Gf(seq, g);
        const nlohmann::ordered_json j{
            {"charpoly", to_string(seq.charpoly())},
            {"init", lfsr_init},
            {"prefix", seq.prefix_string(lfsr_len)},
            {"states", states},
            {"minimal_polynomial", minpoly},
            {"in_G", member}};
        out << j.dump(2) << "\n";
      } else {
        out << seq.prefix_string(lfsr_len) << "\n";
        out << "states " << states << "\n";
        out << "minimal_polynomial " << minpoly << "\n";
        for (auto g : divisors) {
          out << "in_G(" << to_string(g) << ") "
              << (in_Gf(seq, g) ? "true" : "false") << "\n";
        }
      }
    } else if (theory_cmd->parsed()) {
      const auto ctx = theory_args.ctx();
      out << theory_csv(*ctx);
      if (!theory_L.empty()) {
        out << message_rows(ctx, theory_m, parse_layers(theory_L, theory_m));
      }
    } else if (build_cmd->parsed()) {
      return run_code(build_args, build_args.subfield, out);
    } else if (sub_cmd->parsed()) {
      return run_code(sub_args, true, out);
    } else if (verify_cmd->parsed()) {
      SweepConfig cfg;
      cfg.n_list = parse_int_list(verify_n);
      cfg.m_max = m_max;
      if (!verify_poly.empty()) cfg.poly = parse_poly(verify_poly);
      cfg.dedup = dedup;
      cfg.limit = limit;
      cfg.opts.workers = verify_workers;
      const Ledger ledger = verify_theorems(cfg);
      const std::string csv = ledger.to_csv();
      std::ostream& summary = verify_out.empty() ? err : out;
      if (verify_out.empty()) {
        out << csv;
      } else {
        write_file(verify_out, csv);
      }
      summary << "instances " << ledger.instances << ", claims "
              << ledger.rows.size() << ", passed "
              << ledger.count(ClaimStatus::kPass) << ", failed "
              << ledger.failures() << ", skipped "
              << ledger.count(ClaimStatus::kSkip) << "\n";
      return ledger.failures() == 0 ? kExitOk : kExitClaimsFailed;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitClaimsFailed;
  }
  return kExitOk;
}

}  // namespace sccodes
