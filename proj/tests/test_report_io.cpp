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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sccodes/binpoly.hpp"
#include "sccodes/error.hpp"
#include "sccodes/report_io.hpp"

using namespace sccodes;

namespace {

CodeReport sample_report() {
  const auto f4 = std::make_shared<const FieldCtx>(parse_poly("x^2+x+1"));
  const std::vector<IndexMask> L{0b0011, 0b0011};
  return code_report(build_defining_set(f4, 4, L, Variant::kComplement));
}

}  // namespace

TEST_CASE("report json keeps key order and round-trips") {
  const CodeReport r = sample_report();
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "q", "length", "k", "d", "weights", "griesmer_sum",
                    "is_griesmer", "distance_optimal", "ab_ratio", "ab_minimal",
                    "exhaustive_minimal", "hypotheses"});
  CHECK(j["weights"].dump() == "[[0,1],[180,240],[192,15]]");
  CHECK(j["hypotheses"]["sum_L"] == 4);
  const std::string text = dump_report(r);
  CHECK(text.back() == '\n');
  CHECK(parse_report(text) == r);
}

TEST_CASE("unknown report fields are null") {
  CodeReport r;
  r.q = 2;
  r.length = 3;
  r.k = 1;
  r.d = 3;
  r.weights = {{0, 1}, {3, 1}};
  const auto j = to_json(r);
  CHECK(j["distance_optimal"].is_null());
  CHECK(j["exhaustive_minimal"].is_null());
  CHECK(j["hypotheses"].is_null());
  CHECK(report_from_json(j) == r);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report("{"), InvalidInput);
  CHECK_THROWS_AS(parse_report("{\"q\": 2}"), InvalidInput);
  auto j = to_json(sample_report());
  j["k"] = "four";
  CHECK_THROWS_AS(report_from_json(j), InvalidInput);
}

TEST_CASE("bounds csv with header and comments") {
  std::istringstream in(
      "q,length,k,best_d\n"
      "# F_8 entry\n"
      "8, 63, 4, 48\n"
      "\n"
      "2,48,6,24\n");
  const BoundsTable t = parse_bounds_csv(in);
  CHECK(t.best.size() == 2);
  CHECK(t.lookup(8, 63, 4) == 48U);
  CHECK(t.lookup(2, 48, 6) == 24U);
  CHECK_FALSE(t.lookup(2, 48, 5).has_value());
}

TEST_CASE("bounds csv without header") {
  std::istringstream in("4,240,4,180\n");
  CHECK(parse_bounds_csv(in).lookup(4, 240, 4) == 180U);
}

TEST_CASE("bad bounds csv lines") {
  std::istringstream short_row("q,length,k,best_d\n8,63,4\n");
  CHECK_THROWS_AS(parse_bounds_csv(short_row), InvalidInput);
  std::istringstream junk("8,63,x,48\n");
  CHECK_THROWS_AS(parse_bounds_csv(junk), InvalidInput);
  CHECK_THROWS_AS(load_bounds_csv("/nonexistent/bounds.csv"), InvalidInput);
}

TEST_CASE("bounds csv from a file") {
  const std::string path = "test_report_io_bounds.csv";
  {
    std::ofstream out(path);
    out << "q,length,k,best_d\n8,63,4,48\n";
  }
  CHECK(load_bounds_csv(path).lookup(8, 63, 4) == 48U);
  std::remove(path.c_str());
}

TEST_CASE("text table mentions parameters and every weight") {
  const std::string t = format_report_table(sample_report());
  CHECK(t.find("[240, 4, 180] over F_4") != std::string::npos);
  CHECK(t.find("180  240") != std::string::npos);
  CHECK(t.find("192  15") != std::string::npos);
}
