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

#ifndef SCCODES_VERIFY_HPP_
#define SCCODES_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sccodes/binpoly.hpp"
#include "sccodes/codes.hpp"

namespace sccodes {

// Theorem families checked per instance.
inline constexpr const char* kFamDStar = "dstar_parameters";
inline constexpr const char* kFamDStarEqual = "dstar_equal_L";
inline constexpr const char* kFamDc = "dc_parameters";
inline constexpr const char* kFamDcEqual = "dc_equal_L";
inline constexpr const char* kFamSubDStar = "subfield_dstar";
inline constexpr const char* kFamSubDc = "subfield_dc";
inline constexpr const char* kFamIdentities = "identities";

// Families whose hypotheses hold (identities excluded).
std::vector<std::string> applicable_families(const Hypotheses& h);

enum class ClaimStatus { kPass, kFail, kSkip };
std::string to_string(ClaimStatus s);

struct LedgerRow {
  int n = 0;
  std::string poly;
  int m = 0;
  std::string L;
  std::string family;
  std::string claim;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::kPass;
};

struct Ledger {
  std::vector<LedgerRow> rows;
  std::size_t instances = 0;

  std::size_t count(ClaimStatus s) const;
  std::size_t failures() const { return count(ClaimStatus::kFail); }
  // Header n,poly,m,L,family,claim,expected,observed,status.
  std::string to_csv() const;
};

struct SweepConfig {
  std::vector<int> n_list;
  int m_max = 1;
  // Modulus override; only valid with a single n. Default: smallest
  // irreducible with nonzero constant term.
  std::optional<BinPoly> poly;
  // Keep one tuple per orbit under permutations of [m].
  bool dedup = false;
  // Cap on the total number of instances.
  std::optional<std::size_t> limit;
  ReportOptions opts;
};

// Ordered n-tuples of nonempty subsets of [m], lexicographic in the masks.
std::vector<std::vector<IndexMask>> enumerate_layer_tuples(int n, int m,
                                                           bool dedup);

// All claims for one instance. Throws BudgetExceeded when out of budget.
std::vector<LedgerRow> verify_instance(std::shared_ptr<const FieldCtx> ctx,
                                       int m, std::span<const IndexMask> L_list,
                                       const ReportOptions& opts = {});

Ledger verify_theorems(const SweepConfig& cfg);

}  // namespace sccodes

#endif  // SCCODES_VERIFY_HPP_
