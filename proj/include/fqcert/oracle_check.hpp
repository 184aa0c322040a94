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
#include <random>
#include <string>
#include <vector>

#include "fqcert/census.hpp"
#include "fqcert/macaulay.hpp"
#include "fqcert/oracle.hpp"

namespace fqcert {

/// How an oracle instance was built.
enum class InstanceKind { uniform, sparse, planted_base, planted_quadratic, common_factor };

inline std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::uniform: return "uniform";
    case InstanceKind::sparse: return "sparse";
    case InstanceKind::planted_base: return "planted_base";
    case InstanceKind::planted_quadratic: return "planted_quadratic";
    case InstanceKind::common_factor: return "common_factor";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultOracleInstanceCap = 5'000'000;

struct OracleInstance {
  InstanceKind kind = InstanceKind::uniform;
  std::vector<HomoPoly> forms;
  unsigned max_ext = 0;
  std::uint64_t search_space = 0;
};

namespace detail {

inline HomoPoly random_form(const FieldPtr& f, std::size_t nv, unsigned degree, std::mt19937_64& rng,
                            std::uint64_t keep_per_mille = 1000, bool allow_zero = false) {
  const auto basis = monomials_of_degree(nv, degree);
  while (true) {
    HomoPoly g(f, nv, degree);
    for (const auto& m : basis) {
      if (uniform_below(rng, 1000) < keep_per_mille) g.add_term(m, f->element(uniform_below(rng, f->order())));
    }
    if (allow_zero || !g.is_zero()) return g;
  }
}

inline HomoPoly power_of_variable(const FieldPtr& f, std::size_t nv, std::size_t i, unsigned e) {
  Monomial m(nv, 0);
  m[i] = static_cast<std::uint16_t>(e);
  return HomoPoly::monomial(f, m, f->one());
}

/// Irreducible a X0^2 + b X0 X1 + X1^2 over F_q, found by search.
inline HomoPoly irreducible_binary_quadratic(const FieldPtr& f, std::size_t nv, std::mt19937_64& rng) {
  while (true) {
    const Elem a = f->element(1 + uniform_below(rng, f->order() - 1));
    const Elem b = f->element(uniform_below(rng, f->order()));
    bool has_root = false;
    for (std::uint64_t t = 0; t < f->order() && !has_root; ++t) {
      const Elem x = f->element(t);
      has_root = f->is_zero(f->add(f->add(f->mul(a, f->mul(x, x)), f->mul(b, x)), f->one()));
    }
    if (has_root) continue;
    Monomial m20(nv, 0), m11(nv, 0), m02(nv, 0);
    m20[0] = 2;
    m11[0] = m11[1] = 1;
    m02[1] = 2;
    HomoPoly q(f, nv, 2);
    q.add_term(m20, a);
    q.add_term(m11, b);
    q.add_term(m02, f->one());
    return q;
  }
}

}  // namespace detail

/// Random test system with n <= 3, q in {2,3,5} and degree product <= 8.
/// Draws whose brute-force search space exceeds `cap` are redrawn.
inline OracleInstance random_oracle_instance(std::uint64_t seed, std::uint64_t cap = kDefaultOracleInstanceCap) {
  std::mt19937_64 rng(seed);
  static constexpr std::uint64_t kQs[] = {2, 3, 5};
  static constexpr InstanceKind kKinds[] = {InstanceKind::uniform, InstanceKind::sparse, InstanceKind::planted_base,
                                            InstanceKind::planted_quadratic, InstanceKind::common_factor};
  while (true) {
    const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 3));
    const std::uint64_t q = kQs[uniform_below(rng, 3)];
    const std::size_t nv = n + 1;
    std::vector<unsigned> e(nv);
    unsigned prod = 1;
    for (auto& ej : e) {
      ej = 1 + static_cast<unsigned>(uniform_below(rng, 3));
      prod *= ej;
    }
    if (prod > 8) continue;
    const unsigned max_ext = std::max(prod, 4u);
    const std::uint64_t space = search_space_size(q, nv, max_ext);
    if (space > cap) continue;
    InstanceKind kind = kKinds[uniform_below(rng, 5)];
    // The quadratic plant needs room for X_2..X_n in the linear forms.
    if (kind == InstanceKind::planted_quadratic && n == 1 && *std::min_element(e.begin(), e.end()) < 2) continue;

    const FieldPtr f = field_for_order(q);
    OracleInstance inst{kind, {}, max_ext, space};
    switch (kind) {
      case InstanceKind::uniform:
        for (unsigned ej : e) inst.forms.push_back(detail::random_form(f, nv, ej, rng));
        break;
      case InstanceKind::sparse:
        for (unsigned ej : e) inst.forms.push_back(detail::random_form(f, nv, ej, rng, 350));
        break;
      case InstanceKind::planted_base: {
        const auto point = ProjectiveEnumerator(*f, nv).at(uniform_below(rng, projective_size(q, nv)));
        std::size_t lead = 0;
        while (f->is_zero(point[lead])) ++lead;  // the leading coordinate is 1
        for (unsigned ej : e) {
          HomoPoly g(f, nv, ej);
          while (g.is_zero()) {
            g = detail::random_form(f, nv, ej, rng);
            g -= detail::power_of_variable(f, nv, lead, ej).scaled(g.eval(point));
          }
          inst.forms.push_back(std::move(g));
        }
        break;
      }
      case InstanceKind::planted_quadratic: {
        // Every form lies in (Q, X_2, ..., X_n), so the conjugate roots of Q are common zeros.
        const HomoPoly quad = detail::irreducible_binary_quadratic(f, nv, rng);
        for (unsigned ej : e) {
          HomoPoly g(f, nv, ej);
          while (g.is_zero()) {
            if (ej >= 2) g += quad * detail::random_form(f, nv, ej - 2, rng, 1000, true);
            for (std::size_t k = 2; k < nv; ++k) {
              g += HomoPoly::variable(f, nv, k) * detail::random_form(f, nv, ej - 1, rng, 1000, true);
            }
          }
          inst.forms.push_back(std::move(g));
        }
        break;
      }
      case InstanceKind::common_factor: {
        const HomoPoly l = detail::random_form(f, nv, 1, rng);
        for (unsigned ej : e) inst.forms.push_back(l * detail::random_form(f, nv, ej - 1, rng));
        break;
      }
    }
    return inst;
  }
}

struct OracleDisagreement {
  std::uint64_t index = 0;
  InstanceKind kind = InstanceKind::uniform;
  std::string forms;
  bool macaulay_empty = false;
  bool brute_nonempty = false;
};

struct OracleCheckReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t agree = 0;
  std::uint64_t empty = 0;      ///< instances the Macaulay test calls empty
  std::uint64_t nonempty = 0;
  std::uint64_t witness_in_extension = 0;  ///< nonempty instances whose first witness needs m > 1
  std::uint64_t points_visited = 0;
  std::vector<std::uint64_t> kind_counts = std::vector<std::uint64_t>(5, 0);
  std::vector<OracleDisagreement> disagreements;
  /// Completeness of the point search is heuristic for positive-dimensional zero sets.
  bool completeness_heuristic = true;
};

/// Cross-checks projective_empty against brute_force_empty on random instances.
inline OracleCheckReport oracle_check(std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t cap = kDefaultOracleInstanceCap) {
  OracleCheckReport out;
  out.trials = trials;
  out.seed = seed;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto inst = random_oracle_instance(trial_seed(seed, i), cap);
    ++out.kind_counts[static_cast<std::size_t>(inst.kind)];
    const bool empty = projective_empty(std::span<const HomoPoly>(inst.forms)).empty;
    const auto brute = brute_force_empty(std::span<const HomoPoly>(inst.forms), inst.max_ext, cap);
    out.points_visited += brute.points_visited;
    (empty ? out.empty : out.nonempty)++;
    if (brute.nonempty && brute.m > 1) ++out.witness_in_extension;
    if (empty == !brute.nonempty) {
      ++out.agree;
    } else {
      out.disagreements.push_back({i, inst.kind, serialize_polys(inst.forms.front().field(), inst.forms.front().nvars(), inst.forms),
                                   empty, brute.nonempty});
    }
  }
  return out;
}

}  // namespace fqcert
