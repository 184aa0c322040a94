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

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "fqcert/error.hpp"
#include "fqcert/field.hpp"
#include "fqcert/homopoly.hpp"
#include "fqcert/monomial.hpp"
#include "fqcert/system.hpp"

namespace fqcert {

/// N = sum (e_j - 1) + 1: the degree at which n+1 forms without a common
/// projective zero generate every monomial.
inline unsigned macaulay_degree(std::span<const unsigned> degrees) {
  if (degrees.empty()) fail(ErrorKind::EmptyInput, "no degrees");
  unsigned total = 1;
  for (unsigned e : degrees) {
    if (e < 1) fail(ErrorKind::InvalidArgument, "form degrees must be positive");
    total += e - 1;
  }
  return total;
}

struct EmptinessVerdict {
  bool empty = false;
  std::size_t rank = 0;
  unsigned degree = 0;  ///< Macaulay degree N
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Rank of a dense matrix over F_q by row-by-row elimination into an echelon
/// basis. Stops as soon as the rank reaches the column count.
inline std::size_t matrix_rank(const Field& field, std::vector<std::vector<Elem>> rows, std::size_t cols) {
  std::vector<std::vector<Elem>> basis;
  std::vector<std::size_t> pivots;
  for (auto& row : rows) {
    if (row.size() != cols) fail(ErrorKind::ArityMismatch, "ragged matrix");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem factor = row[pivots[b]];
      if (field.is_zero(factor)) continue;
      const auto& brow = basis[b];
      for (std::size_t c = pivots[b]; c < cols; ++c) {
        if (!field.is_zero(brow[c])) row[c] = field.sub(row[c], field.mul(factor, brow[c]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < cols && field.is_zero(row[pivot])) ++pivot;
    if (pivot == cols) continue;
    const Elem inv = field.inv(row[pivot]);
    for (std::size_t c = pivot; c < cols; ++c) row[c] = field.mul(row[c], inv);
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
    if (basis.size() == cols) break;
  }
  return basis.size();
}

/// The Macaulay matrix of n+1 forms in n+1 variables at degree N: columns are
/// the degree-N monomials in grevlex order, rows the products m * g_j with m
/// running over monomials of degree N - e_j.
class MacaulayInstance {
 public:
  static MacaulayInstance build(std::span<const HomoPoly> forms) {
    if (forms.empty()) fail(ErrorKind::EmptyInput, "no forms");
    const std::size_t nvars = forms.front().nvars();
    for (const auto& f : forms) {
      if (f.nvars() != nvars) fail(ErrorKind::ArityMismatch, "forms in different numbers of variables");
      if (!f.field()->same_as(*forms.front().field())) fail(ErrorKind::MixedFields, "forms over different fields");
    }
    if (forms.size() != nvars) {
      fail(ErrorKind::ArityMismatch, "need exactly n+1 forms in n+1 variables, got " + std::to_string(forms.size()) +
                                         " forms in " + std::to_string(nvars) + " variables");
    }
    std::vector<unsigned> degrees;
    for (const auto& f : forms) degrees.push_back(f.degree());
    MacaulayInstance inst;
    inst.forms_.assign(forms.begin(), forms.end());
    inst.degree_ = macaulay_degree(degrees);
    inst.columns_ = MonomialIndex(monomials_of_degree(nvars, inst.degree_));
    for (std::size_t j = 0; j < forms.size(); ++j) {
      for (auto& m : monomials_of_degree(nvars, inst.degree_ - degrees[j])) inst.rows_.emplace_back(j, std::move(m));
    }
    return inst;
  }

  unsigned degree() const noexcept { return degree_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return columns_.size(); }
  const MonomialIndex& columns() const noexcept { return columns_; }
  /// (form index, multiplier monomial) per row.
  const std::vector<std::pair<std::size_t, Monomial>>& row_generators() const noexcept { return rows_; }
  const FieldPtr& field() const noexcept { return forms_.front().field(); }

  std::vector<std::vector<Elem>> dense_matrix() const {
    std::vector<std::vector<Elem>> matrix;
    matrix.reserve(rows_.size());
    Monomial product(forms_.front().nvars());
    for (const auto& [j, m] : rows_) {
      std::vector<Elem> row(columns_.size(), Elem{0});
      for (const auto& [mono, c] : forms_[j].terms()) {
        for (std::size_t i = 0; i < product.size(); ++i) product[i] = static_cast<std::uint16_t>(mono[i] + m[i]);
        row[columns_.at(product)] = c;
      }
      matrix.push_back(std::move(row));
    }
    return matrix;
  }

  std::size_t rank() const { return matrix_rank(*field(), dense_matrix(), col_count()); }

 private:
  MacaulayInstance() : columns_({}) {}

  std::vector<HomoPoly> forms_;
  unsigned degree_ = 0;
  MonomialIndex columns_;
  std::vector<std::pair<std::size_t, Monomial>> rows_;
};

/// Decides whether n+1 forms in n+1 variables have no common zero in
/// projective space over the algebraic closure. A zero form imposes no
/// condition, so any zero form makes the answer "not empty" immediately.
/// Rank over F_q equals rank over every extension, so the verdict is
/// closure-correct.
inline EmptinessVerdict projective_empty(std::span<const HomoPoly> forms) {
  if (forms.empty()) fail(ErrorKind::EmptyInput, "no forms");
  const std::size_t nvars = forms.front().nvars();
  for (const auto& f : forms) {
    if (!f.field()->same_as(*forms.front().field())) fail(ErrorKind::MixedFields, "forms over different fields");
    if (f.nvars() != nvars) fail(ErrorKind::ArityMismatch, "forms in different numbers of variables");
  }
  if (forms.size() != nvars) fail(ErrorKind::ArityMismatch, "need exactly n+1 forms in n+1 variables");
  std::vector<unsigned> degrees;
  for (const auto& f : forms) degrees.push_back(f.degree());
  EmptinessVerdict verdict;
  verdict.degree = macaulay_degree(degrees);
  for (const auto& f : forms) {
    if (f.is_zero()) return verdict;
  }
  const auto inst = MacaulayInstance::build(forms);
  verdict.rows = inst.row_count();
  verdict.cols = inst.col_count();
  verdict.rank = inst.rank();
  verdict.empty = verdict.rank == verdict.cols;
  return verdict;
}

inline EmptinessVerdict projective_empty(const TestSystem& ts) { return projective_empty(std::span<const HomoPoly>(ts.forms)); }

/// True guarantees the certificate's geometric conclusion for Z(f); false
/// guarantees nothing.
inline bool certify(const PolySystem& sys, Certificate cert) {
  return projective_empty(build_test_system(sys, cert)).empty;
}

}  // namespace fqcert
