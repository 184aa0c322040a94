/* Copyright 2026 The fqcert Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <array>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fqcert/error.hpp"

namespace fqcert {

/// The four sufficient geometric certificates.
enum class Certificate {
  stci,  ///< set-theoretic complete intersection
  ci,    ///< ideal-theoretic (radical) complete intersection
  nons,  ///< nonsingular complete intersection
  irr,   ///< absolutely irreducible complete intersection
};

inline constexpr std::array<Certificate, 4> kAllCertificates{
    Certificate::stci, Certificate::ci, Certificate::nons, Certificate::irr};

inline std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::stci: return "stci";
    case Certificate::ci: return "ci";
    case Certificate::nons: return "nons";
    case Certificate::irr: return "irr";
  }
  return "?";
}

inline Certificate parse_certificate(std::string_view name) {
  for (Certificate c : kAllCertificates) {
    if (to_string(c) == name) return c;
  }
  fail(ErrorKind::UnsupportedCertificate, "unknown certificate '" + std::string(name) + "'");
}

/// Accepts "all" or a comma separated list.
inline std::vector<Certificate> parse_certificate_list(std::string_view text) {
  if (text == "all") return {kAllCertificates.begin(), kAllCertificates.end()};
  std::vector<Certificate> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_certificate(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Degree pattern d = (d_1, ..., d_s) of s forms in P^n.
/// Invariants: 0 < s < n, d nonincreasing, d_s >= 1, d_1 >= 2.
struct DegreePattern {
  unsigned n = 0;
  std::vector<unsigned> d;

  static DegreePattern make(unsigned n, std::vector<unsigned> d) {
    DegreePattern p{n, std::move(d)};
    p.validate();
    return p;
  }

  std::size_t s() const noexcept { return d.size(); }

  void validate() const {
    if (d.empty() || d.size() >= n) {
      fail(ErrorKind::PatternViolation, "need 0 < s < n, got s=" + std::to_string(d.size()) + " n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 1) fail(ErrorKind::PatternViolation, "degrees must be positive");
      if (i > 0 && d[i] > d[i - 1]) fail(ErrorKind::PatternViolation, "degrees must be nonincreasing");
    }
    if (d.front() < 2) fail(ErrorKind::PatternViolation, "d_1 >= 2 is required (all-linear systems are rejected)");
  }

  /// sigma = sum (d_i - 1).
  unsigned sigma() const noexcept {
    return std::accumulate(d.begin(), d.end(), 0u) - static_cast<unsigned>(d.size());
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
  }

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Parses "2,2,1".
inline std::vector<unsigned> parse_degree_list(std::string_view text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string token(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    try {
      std::size_t used = 0;
      const long v = std::stol(token, &used);
      if (used != token.size() || v < 0) throw std::invalid_argument("bad");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad degree list '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fqcert
