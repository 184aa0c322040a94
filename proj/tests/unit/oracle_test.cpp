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

#include "fqcert/oracle.hpp"
#include "fqcert/oracle_check.hpp"

#include <gtest/gtest.h>

#include <set>

namespace fqcert {
namespace {

HomoPoly P(const char* text, const FieldPtr& f, std::size_t nvars) { return HomoPoly::parse(text, f, nvars); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

std::vector<HomoPoly> with_coordinates(HomoPoly first, std::size_t nv) {
  std::vector<HomoPoly> forms{std::move(first)};
  for (std::size_t i = 1; i < nv; ++i) forms.push_back(HomoPoly::variable(forms.front().field(), nv, i));
  return forms;
}

TEST(ProjectiveEnumerator, BijectiveAndNormalized) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    auto f = field_for_order(q);
    for (std::size_t len = 1; len <= 4; ++len) {
      ProjectiveEnumerator e(*f, len);
      ASSERT_EQ(e.size(), projective_size(q, len));
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint64_t i = 0; i < e.size(); ++i) {
        const auto v = e.at(i);
        std::size_t lead = 0;
        while (f->is_zero(v[lead])) ++lead;
        ASSERT_EQ(v[lead], f->one());
        ASSERT_EQ(e.index_of(v), i);
        std::vector<std::uint32_t> codes;
        for (Elem x : v) codes.push_back(x.code);
        ASSERT_TRUE(seen.insert(codes).second);
      }
    }
  }
}

TEST(BruteForceEmpty, Examples) {
  auto f2 = Field::create(2);
  const auto a = brute_force_empty(with_coordinates(P("1:2,0,0", f2, 3), 3), 2);
  EXPECT_FALSE(a.nonempty);
  EXPECT_EQ(a.max_ext, 2u);

  const auto b = brute_force_empty(with_coordinates(P("1:1,1,0", f2, 3), 3));
  ASSERT_TRUE(b.nonempty);
  EXPECT_EQ(b.m, 1u);
  EXPECT_EQ(b.point, (std::vector<Elem>{Elem{1}, Elem{0}, Elem{0}}));

  auto f3 = Field::create(3);
  EXPECT_FALSE(brute_force_empty(with_coordinates(P("1:2,0,0 + 1:0,2,0", f3, 3), 3), 2).nonempty);
}

TEST(BruteForceEmpty, FindsConjugateWitness) {
  // X_0^2 + X_1^2 over F_3 vanishes only at (±i : 1) with i^2 = -1.
  auto f3 = Field::create(3);
  std::vector<HomoPoly> forms{P("1:2,0 + 1:0,2", f3, 2), P("1:2,0 + 1:0,2", f3, 2)};
  const auto v = brute_force_empty(forms, 2);
  ASSERT_TRUE(v.nonempty);
  EXPECT_EQ(v.m, 2u);
  EXPECT_EQ(v.ext->order(), 9u);
  EXPECT_FALSE(projective_empty(forms).empty);
}

TEST(BruteForceEmpty, Errors) {
  auto f5 = Field::create(5);
  std::vector<HomoPoly> big{P("1:4,0,0,0", f5, 4), P("1:0,4,0,0", f5, 4), P("1:0,0,4,0", f5, 4), P("1:0,0,0,4", f5, 4)};
  EXPECT_EQ(kind_of([&] { brute_force_empty(big); }), ErrorKind::SearchSpaceTooLarge);
  std::vector<HomoPoly> mixed{HomoPoly::variable(f5, 2, 0), HomoPoly::variable(Field::create(3), 2, 1)};
  EXPECT_EQ(kind_of([&] { brute_force_empty(mixed); }), ErrorKind::MixedFields);
}

TEST(BruteForceAbsIrr, Examples) {
  auto f2 = Field::create(2);
  const auto a = brute_force_absirr(P("1:1,1", f2, 2));
  EXPECT_FALSE(a.irreducible);
  EXPECT_EQ(a.m, 1u);
  EXPECT_TRUE(brute_force_absirr(P("1:2,0,0 + 1:0,1,1", f2, 3)).irreducible);
  auto f3 = Field::create(3);
  const auto c = brute_force_absirr(P("1:2,0,0 + 1:0,2,0", f3, 3));
  EXPECT_FALSE(c.irreducible);
  EXPECT_EQ(c.m, 2u);
}

TEST(BruteForceAbsIrr, QuarticsAndCubics) {
  auto f2 = Field::create(2);
  // (X_0^2 + X_0 X_1 + X_1^2)^2: the quadratic factor is already defined over F_2.
  const auto sq = brute_force_absirr(P("1:4,0,0 + 1:2,2,0 + 1:0,4,0", f2, 3));
  EXPECT_FALSE(sq.irreducible);
  EXPECT_EQ(sq.m, 1u);
  EXPECT_EQ(sq.factor->degree(), 2u);
  // X_0^2 + X_0 X_1 + X_1^2 itself needs F_4 for its linear factors.
  const auto split = brute_force_absirr(P("1:2,0,0 + 1:1,1,0 + 1:0,2,0", f2, 3));
  EXPECT_FALSE(split.irreducible);
  EXPECT_EQ(split.m, 2u);
  // Fermat cubic X^3 + Y^3 + Z^3 over F_2 is smooth, hence irreducible.
  EXPECT_TRUE(brute_force_absirr(P("1:3,0,0 + 1:0,3,0 + 1:0,0,3", f2, 3)).irreducible);
  EXPECT_EQ(kind_of([&] { brute_force_absirr(P("1:5,0,0", f2, 3)); }), ErrorKind::SearchSpaceTooLarge);
}

TEST(CountProjectiveZeros, ConicsAndLines) {
  auto f3 = Field::create(3);
  std::vector<HomoPoly> conic{P("1:2,0,0 + 1:0,1,1", f3, 3)};
  EXPECT_EQ(count_projective_zeros(conic), 4u);  // a smooth conic has q+1 points
  EXPECT_EQ(count_projective_zeros(conic, 2), 10u);
  std::vector<HomoPoly> pair{P("1:1,1,0", f3, 3)};
  EXPECT_EQ(count_projective_zeros(pair), 7u);  // two lines meeting in a point
}

MultihomogeneousForm random_multihomogeneous(const FieldPtr& f, const std::vector<unsigned>& n,
                                             const std::vector<unsigned>& d, std::mt19937_64& rng) {
  const auto basis = multihomogeneous_basis(n, d);
  MultihomogeneousForm g{f, n, d, {}};
  while (g.terms.empty()) {
    for (const auto& mons : basis) {
      const Elem c = f->element(uniform_below(rng, f->order()));
      if (!f->is_zero(c)) g.terms.emplace_back(mons, c);
    }
  }
  return g;
}

TEST(MultihomogeneousZeros, ExhaustiveBilinearOverF2) {
  auto f2 = Field::create(2);
  const std::vector<unsigned> n{1, 1}, d{1, 1};
  const auto basis = multihomogeneous_basis(n, d);
  ASSERT_EQ(basis.size(), 4u);
  const BigInt bound = multihomog_zero_bound(d, n, 2);
  EXPECT_EQ(bound, 5);
  std::uint64_t worst = 0;
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    MultihomogeneousForm g{f2, n, d, {}};
    for (std::size_t j = 0; j < 4; ++j) {
      if ((mask >> j) & 1) g.terms.emplace_back(basis[j], f2->one());
    }
    worst = std::max(worst, count_multihomogeneous_zeros(g));
  }
  EXPECT_EQ(BigInt(worst), bound);  // X_0 Y_0 vanishes on 3 + 3 - 1 points
}

TEST(MultihomogeneousZeros, RandomizedBound) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {3u, 5u}) {
    auto f = field_for_order(q);
    const std::vector<unsigned> n{1, 2}, d{2, 2};
    const BigInt bound = multihomog_zero_bound(d, n, q);
    for (int trial = 0; trial < 100; ++trial) {
      ASSERT_LE(BigInt(count_multihomogeneous_zeros(random_multihomogeneous(f, n, d, rng))), bound);
    }
  }
}

TEST(OracleInstances, RespectLimits) {
  std::set<InstanceKind> kinds;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto inst = random_oracle_instance(trial_seed(99, i));
    kinds.insert(inst.kind);
    const std::size_t nv = inst.forms.size();
    ASSERT_GE(nv, 2u);
    ASSERT_LE(nv, 4u);
    unsigned prod = 1;
    for (const auto& g : inst.forms) {
      ASSERT_EQ(g.nvars(), nv);
      ASSERT_FALSE(g.is_zero());
      prod *= g.degree();
    }
    ASSERT_LE(prod, 8u);
    const auto q = inst.forms.front().field()->order();
    ASSERT_TRUE(q == 2 || q == 3 || q == 5);
    ASSERT_LE(inst.search_space, kDefaultOracleInstanceCap);
  }
  EXPECT_EQ(kinds.size(), 5u);
}

TEST(OracleCheck, MacaulayAgreesWithPointSearch) {
  const auto r = oracle_check(240, 2026);
  for (const auto& d : r.disagreements) {
    ADD_FAILURE() << "instance " << d.index << " (" << to_string(d.kind) << ") macaulay_empty=" << d.macaulay_empty
                  << " brute_nonempty=" << d.brute_nonempty << "\n"
                  << d.forms;
  }
  EXPECT_EQ(r.agree, r.trials);
  EXPECT_GT(r.empty, 30u);
  EXPECT_GT(r.nonempty, 30u);
  EXPECT_GT(r.witness_in_extension, 0u);
  RecordProperty("empty", static_cast<int>(r.empty));
  RecordProperty("nonempty", static_cast<int>(r.nonempty));
  RecordProperty("witness_in_extension", static_cast<int>(r.witness_in_extension));
}

}  // namespace
}  // namespace fqcert
