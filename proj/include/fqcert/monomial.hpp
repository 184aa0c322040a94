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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "fqcert/error.hpp"

namespace fqcert {

/// Exponent vector (e_0, ..., e_n) of X_0^{e_0} ... X_n^{e_n}.
using Monomial = std::vector<std::uint16_t>;

inline unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

/// Graded reverse lexicographic order with X_0 > X_1 > ... > X_n:
/// higher total degree first; on ties, the monomial whose last differing
/// exponent is smaller is the larger one.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Strict weak order putting grevlex-larger monomials first.
struct GrevlexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

/// Number of monomials of degree `degree` in `nvars` variables, C(degree+nvars-1, nvars-1).
inline std::uint64_t monomial_count(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  std::uint64_t result = 1;
  const std::uint64_t k = nvars - 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (degree + i) / i;
  }
  return result;
}

/// All monomials of the given degree, grevlex-largest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  if (nvars == 0) fail(ErrorKind::ArityMismatch, "at least one variable is required");
  std::vector<Monomial> out;
  out.reserve(monomial_count(nvars, degree));
  Monomial current(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      current[var] = static_cast<std::uint16_t>(left);
      out.push_back(current);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      current[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrevlexFirst{});
  return out;
}

/// Position lookup for a fixed monomial basis.
class MonomialIndex {
 public:
  explicit MonomialIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }

  std::size_t at(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) fail(ErrorKind::IndexOutOfRange, "monomial outside the basis");
    return it->second;
  }

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace fqcert
