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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fqcert/error.hpp"
#include "fqcert/field.hpp"
#include "fqcert/homopoly.hpp"
#include "fqcert/projective.hpp"
#include "fqcert/system.hpp"

namespace fqcert {

/// Default ceiling on the number of points a brute-force search may visit.
inline constexpr std::uint64_t kDefaultSearchCap = 30'000'000;

/// A form flattened for repeated evaluation over one field.
class FlatForm {
 public:
  FlatForm(const HomoPoly& g, const Field& field) : field_(&field), nvars_(g.nvars()) {
    for (const auto& [m, c] : g.terms()) {
      coeffs_.push_back(c);
      exps_.insert(exps_.end(), m.begin(), m.end());
    }
  }

  std::size_t term_count() const noexcept { return coeffs_.size(); }

  /// powers[i * stride + e] must hold x_i^e for e <= degree.
  Elem eval(const std::vector<Elem>& powers, std::size_t stride) const {
    const Field& f = *field_;
    Elem sum = f.zero();
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      Elem term = coeffs_[t];
      const std::uint16_t* e = &exps_[t * nvars_];
      for (std::size_t i = 0; i < nvars_ && !f.is_zero(term); ++i) {
        if (e[i] != 0) term = f.mul(term, powers[i * stride + e[i]]);
      }
      sum = f.add(sum, term);
    }
    return sum;
  }


 private:
  const Field* field_;
  std::size_t nvars_;
  std::vector<Elem> coeffs_;
  std::vector<std::uint16_t> exps_;
};

/// Evaluates a list of forms at points, stopping at the first nonvanishing form.
class CommonZeroTester {
 public:
  CommonZeroTester(std::span<const HomoPoly> forms, const FieldPtr& field) : field_(field) {
    if (forms.empty()) fail(ErrorKind::EmptyInput, "no forms");
    nvars_ = forms.front().nvars();
    for (const auto& g : forms) {
      if (g.nvars() != nvars_) fail(ErrorKind::ArityMismatch, "forms disagree on the number of variables");
      if (g.is_zero()) continue;
      maxdeg_ = std::max(maxdeg_, g.degree());
      if (g.field()->same_as(*field)) {
        forms_.emplace_back(g, *field);
      } else {
        forms_.emplace_back(g.mapped(Embedding::between(g.field(), field)), *field);
      }
    }
    std::stable_sort(forms_.begin(), forms_.end(),
                     [](const FlatForm& a, const FlatForm& b) { return a.term_count() < b.term_count(); });
    powers_.assign(nvars_ * (maxdeg_ + 1), field->one());
  }

  std::size_t nvars() const noexcept { return nvars_; }

  bool vanishes_at(const std::vector<Elem>& x) {
    const Field& f = *field_;
    const std::size_t stride = maxdeg_ + 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Elem* row = &powers_[i * stride];
      row[0] = f.one();
      for (unsigned e = 1; e <= maxdeg_; ++e) row[e] = f.mul(row[e - 1], x[i]);
    }
    for (const auto& g : forms_) {
      if (!f.is_zero(g.eval(powers_, stride))) return false;
    }
    return true;
  }

 private:
  FieldPtr field_;
  std::size_t nvars_ = 0;
  unsigned maxdeg_ = 0;
  std::vector<FlatForm> forms_;
  std::vector<Elem> powers_;
};

struct BruteForceVerdict {
  bool nonempty = false;
  unsigned m = 0;                 ///< extension degree of the witness, or the searched maximum
  std::vector<Elem> point;        ///< coordinates in F_{q^m}
  FieldPtr ext;                   ///< field of the witness
  unsigned max_ext = 0;
  std::uint64_t points_visited = 0;
  /// Completeness is only guaranteed for finite zero sets; positive-dimensional
  /// sets are assumed to acquire points by the searched extension degree.
  bool completeness_heuristic = true;
};

inline unsigned default_max_ext(std::span<const HomoPoly> forms) {
  std::uint64_t prod = 1;
  for (const auto& g : forms) {
    prod *= std::max(1u, g.degree());
    if (prod > 64) break;
  }
  return static_cast<unsigned>(std::max<std::uint64_t>(std::min<std::uint64_t>(prod, 64), 4));
}

/// Total number of points in P^{nvars-1}(F_{q^m}) for m = 1..max_ext, saturating.
inline std::uint64_t search_space_size(std::uint64_t q, std::size_t nvars, unsigned max_ext) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, Q = 1;
  for (unsigned m = 1; m <= max_ext; ++m) {
    if (Q > kMax / q) return kMax;
    Q *= q;
    const std::uint64_t pts = projective_size(Q, nvars);
    if (pts == kMax || total > kMax - pts) return kMax;
    total += pts;
  }
  return total;
}

/// Looks for a common zero in P^n(F_{q^m}), m = 1, 2, ..., max_ext.
inline BruteForceVerdict brute_force_empty(std::span<const HomoPoly> forms, unsigned max_ext = 0,
                                           std::uint64_t cap = kDefaultSearchCap) {
  if (forms.empty()) fail(ErrorKind::EmptyInput, "no forms");
  const FieldPtr& base = forms.front().field();
  for (const auto& g : forms) {
    if (!g.field()->same_as(*base)) fail(ErrorKind::MixedFields, "forms over different fields");
  }
  const std::size_t nvars = forms.front().nvars();
  if (max_ext == 0) max_ext = default_max_ext(forms);
  const std::uint64_t space = search_space_size(base->order(), nvars, max_ext);
  if (space > cap) {
    fail(ErrorKind::SearchSpaceTooLarge,
         "search over extensions up to degree " + std::to_string(max_ext) + " exceeds the cap of " + std::to_string(cap) + " points");
  }
  BruteForceVerdict out;
  out.max_ext = max_ext;
  for (unsigned m = 1; m <= max_ext; ++m) {
    FieldPtr ext = m == 1 ? base : Field::extension_of(*base, m);
    CommonZeroTester tester(forms, ext);
    ProjectiveEnumerator points(*ext, nvars);
    std::vector<Elem> x(nvars);
    for (std::uint64_t i = 0; i < points.size(); ++i) {
      points.fill(i, x);
      ++out.points_visited;
      if (tester.vanishes_at(x)) {
        out.nonempty = true;
        out.m = m;
        out.point = x;
        out.ext = ext;
        return out;
      }
    }
  }
  out.m = max_ext;
  return out;
}

inline BruteForceVerdict brute_force_empty(const TestSystem& ts, unsigned max_ext = 0, std::uint64_t cap = kDefaultSearchCap) {
  return brute_force_empty(std::span<const HomoPoly>(ts.forms), max_ext, cap);
}

/// Number of points of P^n(F_{q^m}) where every form vanishes.
inline std::uint64_t count_projective_zeros(std::span<const HomoPoly> forms, unsigned m = 1,
                                            std::uint64_t cap = kDefaultSearchCap) {
  if (forms.empty()) fail(ErrorKind::EmptyInput, "no forms");
  const FieldPtr& base = forms.front().field();
  const std::size_t nvars = forms.front().nvars();
  FieldPtr ext = m == 1 ? base : Field::extension_of(*base, m);
  ProjectiveEnumerator points(*ext, nvars);
  if (points.size() > cap) fail(ErrorKind::SearchSpaceTooLarge, "point count exceeds the cap");
  CommonZeroTester tester(forms, ext);
  std::vector<Elem> x(nvars);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    points.fill(i, x);
    if (tester.vanishes_at(x)) ++count;
  }
  return count;
}

/// Form on P^{n_1} x ... x P^{n_s}, homogeneous of degree d_i in the i-th block of variables.
struct MultihomogeneousForm {
  FieldPtr field;
  std::vector<unsigned> n;
  std::vector<unsigned> d;
  /// One monomial per block, with its coefficient.
  std::vector<std::pair<std::vector<Monomial>, Elem>> terms;
};

/// Every product of per-block monomials, in a fixed order.
inline std::vector<std::vector<Monomial>> multihomogeneous_basis(const std::vector<unsigned>& n,
                                                                 const std::vector<unsigned>& d) {
  if (n.size() != d.size()) fail(ErrorKind::ArityMismatch, "n and d must have the same length");
  std::vector<std::vector<Monomial>> out{{}};
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::vector<std::vector<Monomial>> next;
    for (const auto& prefix : out) {
      for (const auto& m : monomials_of_degree(n[i] + 1, d[i])) {
        next.push_back(prefix);
        next.back().push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Zeros of a multihomogeneous form in P^{n_1}(F_q) x ... x P^{n_s}(F_q).
inline std::uint64_t count_multihomogeneous_zeros(const MultihomogeneousForm& g, std::uint64_t cap = kDefaultSearchCap) {
  const Field& f = *g.field;
  const std::size_t s = g.n.size();
  std::vector<ProjectiveEnumerator> spaces;
  std::uint64_t total = 1;
  for (unsigned ni : g.n) {
    spaces.emplace_back(f, ni + 1);
    if (total > cap / spaces.back().size()) fail(ErrorKind::SearchSpaceTooLarge, "product space exceeds the cap");
    total *= spaces.back().size();
  }
  std::vector<std::vector<Elem>> pts(s);
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = s; i-- > 0;) {
      pts[i] = spaces[i].at(rest % spaces[i].size());
      rest /= spaces[i].size();
    }
    Elem sum = f.zero();
    for (const auto& [mons, c] : g.terms) {
      Elem t = c;
      for (std::size_t i = 0; i < s && !f.is_zero(t); ++i) {
        for (std::size_t v = 0; v < mons[i].size(); ++v) t = f.mul(t, f.pow(pts[i][v], mons[i][v]));
      }
      sum = f.add(sum, t);
    }
    zeros += f.is_zero(sum) ? 1 : 0;
  }
  return zeros;
}

namespace detail {

/// True iff g divides f. Division by a single form: the remainder vanishes
/// exactly when g is a factor.
inline bool divides(const HomoPoly& g, const HomoPoly& f) {
  if (g.is_zero()) return f.is_zero();
  if (g.degree() > f.degree()) return f.is_zero();
  const Field& field = *f.field();
  const auto& [lead_m, lead_c] = *g.terms().begin();
  const Elem lead_inv = field.inv(lead_c);
  HomoPoly r = f;
  const std::size_t nv = f.nvars();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms().begin();
    Monomial quot(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      if (rm[i] < lead_m[i]) return false;
      quot[i] = static_cast<std::uint16_t>(rm[i] - lead_m[i]);
    }
    r -= HomoPoly::monomial(f.field(), quot, field.mul(rc, lead_inv)) * g;
  }
  return true;
}

}  // namespace detail

struct AbsIrrVerdict {
  bool irreducible = true;
  unsigned m = 0;                 ///< extension degree where a factor was found
  std::optional<HomoPoly> factor;  ///< normalized factor over F_{q^m}
  unsigned max_ext = 0;
};

/// Candidate count for brute_force_absirr, saturating.
inline std::uint64_t absirr_search_size(std::uint64_t q, std::size_t nvars, unsigned degree, unsigned max_ext) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, Q = 1;
  for (unsigned m = 1; m <= max_ext; ++m) {
    if (Q > kMax / q) return kMax;
    Q *= q;
    for (unsigned k = 1; 2 * k <= degree; ++k) {
      const std::uint64_t c = projective_size(Q, monomial_count(nvars, k));
      if (c == kMax || total > kMax - c) return kMax;
      total += c;
    }
  }
  return total;
}

/// Decides whether f has a factor of positive lower degree over F_{q^m}, m <= max_ext.
inline AbsIrrVerdict brute_force_absirr(const HomoPoly& f, unsigned max_ext = 0, std::uint64_t cap = kDefaultSearchCap) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial");
  if (f.degree() > 4 || f.nvars() > 3) fail(ErrorKind::SearchSpaceTooLarge, "need degree <= 4 and at most 3 variables");
  if (max_ext == 0) max_ext = std::max(1u, f.degree());
  const FieldPtr& base = f.field();
  if (absirr_search_size(base->order(), f.nvars(), f.degree(), max_ext) > cap) {
    fail(ErrorKind::SearchSpaceTooLarge, "factor search exceeds the cap");
  }
  AbsIrrVerdict out;
  out.max_ext = max_ext;
  const std::size_t nv = f.nvars();
  for (unsigned m = 1; m <= max_ext; ++m) {
    FieldPtr ext = m == 1 ? base : Field::extension_of(*base, m);
    const HomoPoly fe = m == 1 ? f : f.mapped(Embedding::between(base, ext));
    for (unsigned k = 1; 2 * k <= f.degree(); ++k) {
      const auto basis = monomials_of_degree(nv, k);
      ProjectiveEnumerator candidates(*ext, basis.size());
      std::vector<Elem> c(basis.size());
      for (std::uint64_t i = 0; i < candidates.size(); ++i) {
        candidates.fill(i, c);
        HomoPoly g(ext, nv, k);
        for (std::size_t j = 0; j < basis.size(); ++j) g.add_term(basis[j], c[j]);
        if (detail::divides(g, fe)) {
          out.irreducible = false;
          out.m = m;
          out.factor = g;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace fqcert
