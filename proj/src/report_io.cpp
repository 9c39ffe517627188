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

#include "sccodes/report_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

std::uint64_t to_u64(const std::string& s, int line_no) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("bounds table line " + std::to_string(line_no) +
                       ": not a number: '" + s + "'");
  }
}

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const Hypotheses& h) {
  return nlohmann::ordered_json{
      {"complex_layers", h.complex_layers},
      {"all_nonempty", h.all_nonempty},
      {"r_nonempty", h.r_nonempty},
      {"some_proper", h.some_proper},
      {"all_equal", h.all_equal},
      {"union_full", h.union_full},
      {"sum_L", h.sum_L},
      {"sum_le_nm_minus_n1", h.sum_le_nm_minus_n1},
      {"sum_le_nm_minus_2", h.sum_le_nm_minus_2},
  };
}

Hypotheses hypotheses_from_json(const nlohmann::ordered_json& j) {
  Hypotheses h;
  h.complex_layers = j.at("complex_layers").get<bool>();
  h.all_nonempty = j.at("all_nonempty").get<bool>();
  h.r_nonempty = j.at("r_nonempty").get<bool>();
  h.some_proper = j.at("some_proper").get<bool>();
  h.all_equal = j.at("all_equal").get<bool>();
  h.union_full = j.at("union_full").get<bool>();
  h.sum_L = j.at("sum_L").get<int>();
  h.sum_le_nm_minus_n1 = j.at("sum_le_nm_minus_n1").get<bool>();
  h.sum_le_nm_minus_2 = j.at("sum_le_nm_minus_2").get<bool>();
  return h;
}

nlohmann::ordered_json to_json(const CodeReport& r) {
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const auto& [w, a] : r.weights) weights.push_back({w, a});
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["length"] = r.length;
  j["k"] = r.k;
  j["d"] = r.d;
  j["weights"] = weights;
  j["griesmer_sum"] = r.griesmer_sum;
  j["is_griesmer"] = r.is_griesmer;
  j["distance_optimal"] = opt(r.distance_optimal);
  j["ab_ratio"] = r.ab_ratio;
  j["ab_minimal"] = r.ab_minimal;
  j["exhaustive_minimal"] = opt(r.exhaustive_minimal);
  j["hypotheses"] =
      r.hypotheses ? to_json(*r.hypotheses) : nlohmann::ordered_json(nullptr);
  return j;
}

CodeReport report_from_json(const nlohmann::ordered_json& j) {
  CodeReport r;
  try {
    r.q = j.at("q").get<std::uint64_t>();
    r.length = j.at("length").get<std::uint64_t>();
    r.k = j.at("k").get<int>();
    r.d = j.at("d").get<std::uint64_t>();
    for (const auto& e : j.at("weights")) {
      r.weights.emplace_back(e.at(0).get<std::uint64_t>(),
                             e.at(1).get<std::uint64_t>());
    }
    r.griesmer_sum = j.at("griesmer_sum").get<std::uint64_t>();
    r.is_griesmer = j.at("is_griesmer").get<bool>();
    if (!j.at("distance_optimal").is_null()) {
      r.distance_optimal = j.at("distance_optimal").get<bool>();
    }
    r.ab_ratio = j.at("ab_ratio").get<double>();
    r.ab_minimal = j.at("ab_minimal").get<bool>();
    if (!j.at("exhaustive_minimal").is_null()) {
      r.exhaustive_minimal = j.at("exhaustive_minimal").get<bool>();
    }
    if (!j.at("hypotheses").is_null()) {
      r.hypotheses = hypotheses_from_json(j.at("hypotheses"));
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string dump_report(const CodeReport& r) { return to_json(r).dump(2) + "\n"; }

CodeReport parse_report(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InvalidInput(std::string("report is not JSON: ") + e.what());
  }
  return report_from_json(j);
}

BoundsTable parse_bounds_csv(std::istream& in) {
  BoundsTable table;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split_csv(line);
    if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;
    if (!cells[0].empty() && cells[0][0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (cells == std::vector<std::string>{"q", "length", "k", "best_d"}) {
        continue;
      }
    }
    if (cells.size() != 4) {
      throw InvalidInput("bounds table line " + std::to_string(line_no) +
                         ": expected q,length,k,best_d");
    }
    const auto k = to_u64(cells[2], line_no);
    table.best[{to_u64(cells[0], line_no), to_u64(cells[1], line_no),
                static_cast<int>(k)}] = to_u64(cells[3], line_no);
  }
  return table;
}

BoundsTable load_bounds_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open bounds table '" + path + "'");
  return parse_bounds_csv(in);
}

std::string format_report_table(const CodeReport& r) {
  std::ostringstream os;
  os << "[" << r.length << ", " << r.k << ", " << r.d << "] over F_" << r.q
     << "\n";
  os << "  weight  count\n";
  for (const auto& [w, a] : r.weights) {
    os << "  " << w << "  " << a << "\n";
  }
  auto yn = [](std::optional<bool> b) {
    return b ? (*b ? "yes" : "no") : "unknown";
  };
  os << "griesmer sum " << r.griesmer_sum << " (griesmer: "
     << (r.is_griesmer ? "yes" : "no") << ")\n";
  os << "distance optimal: " << yn(r.distance_optimal) << "\n";
  os << "w_min/w_max = " << r.ab_ratio
     << " (ashikhmin-barg minimal: " << (r.ab_minimal ? "yes" : "no") << ")\n";
  os << "minimal by exhaustive scan: " << yn(r.exhaustive_minimal) << "\n";
  return os.str();
}

}  // namespace sccodes
