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

#include "sccodes/binpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sccodes/error.hpp"

namespace sccodes {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_exponent(std::string_view term, std::string_view whole) {
  // term is "x", "x^k" or "x**k".
  if (term == "x") return 1;
  std::string_view rest;
  if (term.starts_with("x^")) {
    rest = term.substr(2);
  } else if (term.starts_with("x**")) {
    rest = term.substr(3);
  } else {
    throw InvalidInput("bad polynomial term '" + std::string(term) + "' in '" +
                       std::string(whole) + "'");
  }
  int e = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || e < 0 ||
      e > 63) {
    throw InvalidInput("bad exponent in '" + std::string(whole) + "'");
  }
  return e;
}

}  // namespace

BinPoly parse_poly(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InvalidInput("empty polynomial");
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), v, 16);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidInput("bad hex polynomial '" + s + "'");
    }
    return BinPoly(v);
  }
  std::uint64_t bits = 0;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    if (plus == std::string::npos) plus = s.size();
    std::string_view term(s.data() + pos, plus - pos);
    if (term.empty()) throw InvalidInput("empty term in '" + s + "'");
    if (term == "1") {
      bits ^= 1U;
    } else if (term == "0") {
      // no-op
    } else {
      bits ^= std::uint64_t{1} << parse_exponent(term, s);
    }
    pos = plus + 1;
    if (plus == s.size()) break;
  }
  return BinPoly(bits);
}

std::string to_string(BinPoly p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_hex(BinPoly p) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << p.coeffs;
  return os.str();
}

BinPoly operator+(BinPoly a, BinPoly b) { return BinPoly(a.coeffs ^ b.coeffs); }

BinPoly operator*(BinPoly a, BinPoly b) {
  if (a.is_zero() || b.is_zero()) return BinPoly();
  if (a.degree() + b.degree() > 63) {
    throw InvalidInput("polynomial product exceeds degree 63");
  }
  std::uint64_t r = 0;
  for (int i = 0; i <= b.degree(); ++i) {
    if (b.coeff(i)) r ^= a.coeffs << i;
  }
  return BinPoly(r);
}

std::pair<BinPoly, BinPoly> divmod(BinPoly a, BinPoly b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  const int db = b.degree();
  std::uint64_t q = 0;
  std::uint64_t r = a.coeffs;
  for (int d = BinPoly(r).degree(); d >= db; d = BinPoly(r).degree()) {
    q |= std::uint64_t{1} << (d - db);
    r ^= b.coeffs << (d - db);
  }
  return {BinPoly(q), BinPoly(r)};
}

BinPoly operator%(BinPoly a, BinPoly b) { return divmod(a, b).second; }

bool divides(BinPoly d, BinPoly p) { return (p % d).is_zero(); }

bool is_irreducible(BinPoly p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial has no factorization");
  const int n = p.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    // Monic polynomials of degree exactly d.
    const std::uint64_t lead = std::uint64_t{1} << d;
    for (std::uint64_t low = 0; low < lead; ++low) {
      if (divides(BinPoly(lead | low), p)) return false;
    }
  }
  return true;
}

std::vector<std::pair<BinPoly, int>> factor(BinPoly p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial has no factorization");
  std::vector<std::pair<BinPoly, int>> out;
  BinPoly rest = p;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const std::uint64_t lead = std::uint64_t{1} << d;
    for (std::uint64_t low = 0; low < lead && 2 * d <= rest.degree(); ++low) {
      const BinPoly cand(lead | low);
      int mult = 0;
      while (rest.degree() >= d && divides(cand, rest)) {
        rest = divmod(rest, cand).first;
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
    }
  }
  if (rest.degree() >= 1) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& f) { return f.first == rest; });
    if (it != out.end()) {
      ++it->second;
    } else {
      out.emplace_back(rest, 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinPoly> monic_divisors(BinPoly p) {
  std::vector<BinPoly> divs{BinPoly::one()};
  for (const auto& [f, mult] : factor(p)) {
    const std::size_t base = divs.size();
    BinPoly power = BinPoly::one();
    for (int e = 1; e <= mult; ++e) {
      power = power * f;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end(), [](BinPoly a, BinPoly b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs < b.coeffs;
  });
  return divs;
}

BinPoly default_modulus(int n) {
  if (n < 1 || n > 32) throw InvalidInput("degree out of range for a modulus");
  const std::uint64_t lead = std::uint64_t{1} << n;
  for (std::uint64_t low = 1; low < lead; low += 2) {
    const BinPoly cand(lead | low);
    if (is_irreducible(cand)) return cand;
  }
  throw InvalidInput("no irreducible polynomial found");  // unreachable
}

}  // namespace sccodes
