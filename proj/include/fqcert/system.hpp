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

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fqcert/error.hpp"
#include "fqcert/field.hpp"
#include "fqcert/homopoly.hpp"
#include "fqcert/pattern.hpp"

namespace fqcert {

/// f = (f_1, ..., f_s) in F_q[X_0, ..., X_n] with deg f_i = d_i, each f_i
/// nonzero, i.e. a point of the multiprojective coefficient space.
class PolySystem {
 public:
  static PolySystem make(std::vector<HomoPoly> forms) {
    if (forms.empty()) fail(ErrorKind::PatternViolation, "a system needs at least one form");
    const std::size_t nvars = forms.front().nvars();
    std::vector<unsigned> degrees;
    for (const auto& f : forms) {
      if (!f.field()->same_as(*forms.front().field())) fail(ErrorKind::MixedFields, "forms over different fields");
      if (f.nvars() != nvars) fail(ErrorKind::ArityMismatch, "forms in different numbers of variables");
      if (f.is_zero()) fail(ErrorKind::PatternViolation, "zero form is not a point of projective coefficient space");
      degrees.push_back(f.degree());
    }
    PolySystem sys;
    sys.pattern_ = DegreePattern::make(static_cast<unsigned>(nvars - 1), std::move(degrees));
    sys.forms_ = std::move(forms);
    return sys;
  }

  const DegreePattern& pattern() const noexcept { return pattern_; }
  const std::vector<HomoPoly>& forms() const noexcept { return forms_; }
  const FieldPtr& field() const noexcept { return forms_.front().field(); }
  unsigned n() const noexcept { return pattern_.n; }
  std::size_t s() const noexcept { return pattern_.s(); }
  std::size_t nvars() const noexcept { return pattern_.n + 1; }

  friend bool operator==(const PolySystem&, const PolySystem&) = default;

 private:
  DegreePattern pattern_;
  std::vector<HomoPoly> forms_;
};

/// n+1 forms in n+1 variables whose common projective zero set is empty
/// exactly when the certificate holds.
struct TestSystem {
  Certificate cert;
  std::vector<HomoPoly> forms;

  std::vector<unsigned> degrees() const {
    std::vector<unsigned> out;
    for (const auto& f : forms) out.push_back(f.degree());
    return out;
  }
};

/// J_k(f): the s x s determinant of d f_i / d X_j over the columns
/// j in {1, ..., s-1, k-1}, for s+1 <= k <= n+1. Homogeneous of degree sigma.
inline HomoPoly jacobian_minor(const PolySystem& sys, std::size_t k) {
  const std::size_t s = sys.s();
  if (k < s + 1 || k > sys.n() + 1) {
    fail(ErrorKind::IndexOutOfRange, "minor index k=" + std::to_string(k) + " outside [" + std::to_string(s + 1) + ", " +
                                         std::to_string(sys.n() + 1) + "]");
  }
  std::vector<std::size_t> columns;
  for (std::size_t j = 1; j < s; ++j) columns.push_back(j);
  columns.push_back(k - 1);
  std::vector<std::vector<HomoPoly>> matrix;
  for (const auto& f : sys.forms()) {
    std::vector<HomoPoly> row;
    for (std::size_t j : columns) row.push_back(f.derivative(j));
    matrix.push_back(std::move(row));
  }
  return determinant(matrix);
}

/// J(f) = det(d f_i / d X_j : 1 <= i, j <= s), which is J_{s+1}(f).
inline HomoPoly jacobian_det(const PolySystem& sys) { return jacobian_minor(sys, sys.s() + 1); }

/// Forms whose common emptiness is the certificate:
///   stci: f, X_s..X_n          ci:  f, J(f), X_{s+1}..X_n
///   nons: f, J_{s+1}..J_{n+1}  irr: f, J_{s+1}, J_{s+2}, X_{s+2}..X_n
inline TestSystem build_test_system(const PolySystem& sys, Certificate cert) {
  sys.pattern().validate();
  const std::size_t n = sys.n(), s = sys.s(), nvars = sys.nvars();
  const auto& field = sys.field();
  TestSystem out{cert, sys.forms()};
  auto push_variables = [&](std::size_t from) {
    for (std::size_t j = from; j <= n; ++j) out.forms.push_back(HomoPoly::variable(field, nvars, j));
  };
  switch (cert) {
    case Certificate::stci:
      push_variables(s);
      break;
    case Certificate::ci:
      out.forms.push_back(jacobian_det(sys));
      push_variables(s + 1);
      break;
    case Certificate::nons:
      for (std::size_t k = s + 1; k <= n + 1; ++k) out.forms.push_back(jacobian_minor(sys, k));
      break;
    case Certificate::irr:
      if (n < s + 1) fail(ErrorKind::PatternViolation, "irr needs n >= s+1");
      out.forms.push_back(jacobian_minor(sys, s + 1));
      out.forms.push_back(jacobian_minor(sys, s + 2));
      push_variables(s + 2);
      break;
    default:
      fail(ErrorKind::UnsupportedCertificate, "unknown certificate");
  }
  return out;
}

/// Contents of a system file:
///   field p | field p^k
///   nvars <n+1>
///   poly <i>: c:e0,...,en [+ c:e0,...,en]*
/// Blank lines and lines starting with '#' are ignored.
struct SystemFile {
  FieldPtr field;
  std::size_t nvars = 0;
  std::vector<HomoPoly> polys;
};

inline SystemFile parse_system_text(std::string_view text) {
  SystemFile out;
  std::vector<std::pair<std::size_t, HomoPoly>> indexed;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto error_at = [&](ErrorKind kind, const std::string& what) -> void {
    fail(kind, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = detail::strip(line);
    if (view.empty() || view.front() == '#') continue;
    const auto space = view.find_first_of(" \t");
    const std::string_view keyword = view.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : detail::strip(view.substr(space));
    try {
      if (keyword == "field") {
        if (out.field) error_at(ErrorKind::ParseError, "duplicate field line");
        out.field = Field::parse(rest);
      } else if (keyword == "nvars") {
        if (!out.field) error_at(ErrorKind::ParseError, "nvars before field");
        const std::int64_t v = detail::parse_int(rest, line);
        if (v < 1) error_at(ErrorKind::ParseError, "nvars must be positive");
        out.nvars = static_cast<std::size_t>(v);
      } else if (keyword == "poly") {
        if (!out.field || out.nvars == 0) error_at(ErrorKind::ParseError, "poly before field/nvars");
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) error_at(ErrorKind::ParseError, "expected 'poly <i>: terms'");
        const std::int64_t index = detail::parse_int(rest.substr(0, colon), line);
        if (index < 1) error_at(ErrorKind::ParseError, "poly index must be >= 1");
        indexed.emplace_back(static_cast<std::size_t>(index), HomoPoly::parse(rest.substr(colon + 1), out.field, out.nvars));
      } else {
        error_at(ErrorKind::ParseError, "unknown keyword '" + std::string(keyword) + "'");
      }
    } catch (const Error& e) {
      if (std::string_view(e.what()).find("line ") != std::string_view::npos) throw;
      error_at(e.kind(), e.what());
    }
  }
  if (!out.field) fail(ErrorKind::ParseError, "missing field line");
  if (out.nvars == 0) fail(ErrorKind::ParseError, "missing nvars line");
  std::sort(indexed.begin(), indexed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    if (indexed[i].first != i + 1) fail(ErrorKind::ParseError, "poly indices must be 1..s without gaps or repeats");
    out.polys.push_back(std::move(indexed[i].second));
  }
  return out;
}

inline std::string serialize_polys(const FieldPtr& field, std::size_t nvars, const std::vector<HomoPoly>& polys) {
  std::string out = "field " + field->spec() + "\n";
  out += "nvars " + std::to_string(nvars) + "\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    out += "poly " + std::to_string(i + 1) + ": " + polys[i].to_string() + "\n";
  }
  return out;
}

/// Bit-exact canonical text of a system.
inline std::string serialize_system(const PolySystem& sys) {
  return serialize_polys(sys.field(), sys.nvars(), sys.forms());
}

inline PolySystem parse_system(std::string_view text) {
  SystemFile file = parse_system_text(text);
  return PolySystem::make(std::move(file.polys));
}

}  // namespace fqcert
