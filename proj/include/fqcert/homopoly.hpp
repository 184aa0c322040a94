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

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqcert/error.hpp"
#include "fqcert/field.hpp"
#include "fqcert/monomial.hpp"

namespace fqcert {

/// Sparse homogeneous polynomial over F_q in a fixed number of variables.
///
/// The degree is part of the value: the zero polynomial still carries the
/// degree of the graded piece it lives in, so products and determinants of
/// homogeneous entries keep a well-defined degree even when they vanish.
/// Terms are kept in grevlex order (largest first) with nonzero coefficients.
class HomoPoly {
 public:
  using TermMap = std::map<Monomial, Elem, GrevlexFirst>;

  HomoPoly() = default;

  HomoPoly(FieldPtr field, std::size_t nvars, unsigned degree)
      : field_(std::move(field)), nvars_(nvars), degree_(degree) {
    if (!field_) fail(ErrorKind::InvalidArgument, "polynomial needs a field");
    if (nvars_ == 0) fail(ErrorKind::ArityMismatch, "polynomial needs at least one variable");
  }

  /// The coordinate function X_i.
  static HomoPoly variable(FieldPtr field, std::size_t nvars, std::size_t i) {
    if (i >= nvars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
    HomoPoly out(std::move(field), nvars, 1);
    Monomial m(nvars, 0);
    m[i] = 1;
    out.add_term(m, out.field_->one());
    return out;
  }

  static HomoPoly monomial(FieldPtr field, const Monomial& m, Elem coeff) {
    HomoPoly out(std::move(field), m.size(), total_degree(m));
    out.add_term(m, coeff);
    return out;
  }

  /// Parses "c:e0,...,en + c:e0,...,en". Coefficients are integers reduced
  /// into F_p, or "c0|c1|...|c_{k-1}" for extension fields. Like terms are
  /// merged and vanishing terms dropped.
  static HomoPoly parse(std::string_view text, FieldPtr field, std::size_t nvars);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Elem coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Elem{0} : it->second;
  }

  /// Adds c * X^m, merging with an existing term.
  void add_term(const Monomial& m, Elem c) {
    if (m.size() != nvars_) fail(ErrorKind::ArityMismatch, "exponent vector has wrong length");
    if (total_degree(m) != degree_) fail(ErrorKind::InhomogeneousInput, "term degree differs from polynomial degree");
    if (field_->is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (field_->is_zero(it->second)) terms_.erase(it);
    }
  }

  HomoPoly& operator+=(const HomoPoly& other) {
    check_compatible(other);
    if (other.degree_ != degree_) fail(ErrorKind::InhomogeneousInput, "sum of forms of different degree");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  HomoPoly& operator-=(const HomoPoly& other) {
    check_compatible(other);
    if (other.degree_ != degree_) fail(ErrorKind::InhomogeneousInput, "difference of forms of different degree");
    for (const auto& [m, c] : other.terms_) add_term(m, field_->neg(c));
    return *this;
  }

  friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
  friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }

  HomoPoly operator-() const { return scaled(field_->neg(field_->one())); }

  HomoPoly scaled(Elem c) const {
    HomoPoly out(field_, nvars_, degree_);
    if (field_->is_zero(c)) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_->mul(v, c));
    return out;
  }

  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    a.check_compatible(b);
    HomoPoly out(a.field_, a.nvars_, a.degree_ + b.degree_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        out.add_term(m, a.field_->mul(ca, cb));
      }
    }
    return out;
  }

  /// Formal partial derivative with respect to X_j; exponents are reduced
  /// mod p, so e.g. d/dX_0 (X_0^2) = 0 in characteristic 2.
  HomoPoly derivative(std::size_t j) const {
    if (j >= nvars_) fail(ErrorKind::IndexOutOfRange, "derivative variable out of range");
    HomoPoly out(field_, nvars_, degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [m, c] : terms_) {
      if (m[j] == 0) continue;
      const Elem factor = field_->from_int(m[j]);
      if (field_->is_zero(factor)) continue;
      Monomial dm = m;
      --dm[j];
      out.add_term(dm, field_->mul(c, factor));
    }
    return out;
  }

  /// Value at a point with coordinates in the polynomial's own field.
  Elem eval(std::span<const Elem> x) const {
    if (x.size() != nvars_) fail(ErrorKind::ArityMismatch, "point has wrong number of coordinates");
    return eval_with(*field_, x, [](Elem c) { return c; });
  }

  /// Value at a point with coordinates in an extension field.
  Elem eval(std::span<const Elem> x, const Embedding& into) const {
    if (x.size() != nvars_) fail(ErrorKind::ArityMismatch, "point has wrong number of coordinates");
    if (!into.base()->same_as(*field_)) fail(ErrorKind::IncompatibleFields, "embedding does not start at the coefficient field");
    return eval_with(*into.ext(), x, [&](Elem c) { return into(c); });
  }

  /// The same polynomial viewed over a larger field.
  HomoPoly mapped(const Embedding& into) const {
    if (!into.base()->same_as(*field_)) fail(ErrorKind::IncompatibleFields, "embedding does not start at the coefficient field");
    HomoPoly out(into.ext(), nvars_, degree_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, into(c));
    return out;
  }

  /// Projective normal form: leading (grevlex-largest) coefficient equal to 1.
  HomoPoly normalized() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(terms_.begin()->second));
  }

  /// Canonical text form accepted by `parse`. The zero polynomial of degree
  /// e prints as "0:e,0,...,0".
  std::string to_string() const {
    auto exps = [](const Monomial& m) {
      std::string out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[i]);
      }
      return out;
    };
    if (is_zero()) {
      Monomial m(nvars_, 0);
      m[0] = static_cast<std::uint16_t>(degree_);
      return "0:" + exps(m);
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += field_->format(c) + ":" + exps(m);
    }
    return out;
  }

  friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
    return a.field_->same_as(*b.field_) && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const HomoPoly& other) const {
    if (!field_->same_as(*other.field_)) fail(ErrorKind::MixedFields, "polynomials over different fields");
    if (nvars_ != other.nvars_) fail(ErrorKind::ArityMismatch, "polynomials in different numbers of variables");
  }

  template <class Map>
  Elem eval_with(const Field& f, std::span<const Elem> x, Map map) const {
    Elem acc = f.zero();
    for (const auto& [m, c] : terms_) {
      Elem term = map(c);
      for (std::size_t i = 0; i < nvars_ && !f.is_zero(term); ++i) {
        if (m[i]) term = f.mul(term, f.pow(x[i], m[i]));
      }
      acc = f.add(acc, term);
    }
    return acc;
  }

  FieldPtr field_;
  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  TermMap terms_;
};

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view s, std::string_view context) {
  s = strip(s);
  std::int64_t value = 0;
  const bool negative = !s.empty() && s.front() == '-';
  if (negative) s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return negative ? -value : value;
}

}  // namespace detail

inline HomoPoly HomoPoly::parse(std::string_view text, FieldPtr field, std::size_t nvars) {
  text = detail::strip(text);
  if (text.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  std::vector<std::pair<Monomial, Elem>> terms;
  std::optional<unsigned> degree;
  for (std::string_view raw : detail::split(text, '+')) {
    const std::string_view term = detail::strip(raw);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::ParseError, "term '" + std::string(term) + "' lacks ':'");
    const std::string_view coeff_text = detail::strip(term.substr(0, colon));
    const auto exps = detail::split(term.substr(colon + 1), ',');
    if (exps.size() != nvars) {
      fail(ErrorKind::ArityMismatch, "term '" + std::string(term) + "' has " + std::to_string(exps.size()) +
                                         " exponents, expected " + std::to_string(nvars));
    }
    Monomial m;
    for (auto e : exps) {
      const std::int64_t v = detail::parse_int(e, term);
      if (v < 0 || v > 0xFFFF) fail(ErrorKind::ParseError, "exponent out of range in '" + std::string(term) + "'");
      m.push_back(static_cast<std::uint16_t>(v));
    }
    const unsigned deg = total_degree(m);
    if (degree && *degree != deg) fail(ErrorKind::InhomogeneousInput, "terms of degree " + std::to_string(*degree) + " and " + std::to_string(deg));
    degree = deg;
    Elem c;
    if (coeff_text.find('|') != std::string_view::npos) {
      if (field->is_prime_field()) fail(ErrorKind::ParseError, "vector coefficient over a prime field");
      std::vector<std::int64_t> digits;
      for (auto piece : detail::split(coeff_text, '|')) digits.push_back(detail::parse_int(piece, term));
      c = field->from_coeffs(digits);
    } else {
      c = field->from_int(detail::parse_int(coeff_text, term));
    }
    terms.emplace_back(std::move(m), c);
  }
  HomoPoly out(std::move(field), nvars, *degree);
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

/// Determinant of a square matrix of forms by cofactor expansion along the
/// first row. Rows are expected to be homogeneous of a common degree each.
inline HomoPoly determinant(const std::vector<std::vector<HomoPoly>>& matrix) {
  const std::size_t size = matrix.size();
  if (size == 0) fail(ErrorKind::EmptyInput, "empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != size) fail(ErrorKind::ArityMismatch, "matrix is not square");
  }
  if (size == 1) return matrix[0][0];
  unsigned degree = 0;
  for (const auto& row : matrix) degree += row[0].degree();
  HomoPoly result(matrix[0][0].field(), matrix[0][0].nvars(), degree);
  for (std::size_t col = 0; col < size; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<HomoPoly>> minor;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<HomoPoly> row;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) row.push_back(matrix[r][c]);
      }
      minor.push_back(std::move(row));
    }
    HomoPoly term = matrix[0][col] * determinant(minor);
    if (col % 2 == 0) result += term;
    else result -= term;
  }
  return result;
}

}  // namespace fqcert
