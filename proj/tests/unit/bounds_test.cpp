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

#include "fqcert/bounds.hpp"
#include "fqcert/chow.hpp"
#include "fqcert/system.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

namespace fqcert {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

std::vector<DegreePattern> patterns_up_to(unsigned max_n, unsigned max_d) {
  std::vector<DegreePattern> out;
  for (unsigned n = 2; n <= max_n; ++n) {
    for (unsigned s = 1; s < n; ++s) {
      std::vector<unsigned> d;
      std::function<void(unsigned)> rec = [&](unsigned cap) {
        if (d.size() == s) {
          if (d.front() >= 2) out.push_back(DegreePattern::make(n, d));
          return;
        }
        for (unsigned v = 1; v <= cap; ++v) {
          d.push_back(v);
          rec(v);
          d.pop_back();
        }
      };
      rec(max_d);
    }
  }
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

TEST(PatternStats, Examples) {
  auto a = pattern_stats(DegreePattern::make(3, {2, 2}));
  EXPECT_EQ(a.delta, 4);
  EXPECT_EQ(a.sigma, 2u);
  EXPECT_EQ(a.D, big({9, 9}));
  EXPECT_EQ(a.D_total, 18);
  auto b = pattern_stats(DegreePattern::make(2, {3}));
  EXPECT_EQ(b.delta, 3);
  EXPECT_EQ(b.sigma, 2u);
  EXPECT_EQ(b.D, big({9}));
  auto c = pattern_stats(DegreePattern::make(4, {12, 1, 1}));
  EXPECT_EQ(c.delta, 12);
  EXPECT_EQ(c.sigma, 11u);
  EXPECT_EQ(c.D, big({1819, 4, 4}));
  EXPECT_EQ(c.D_total, 1827);
  EXPECT_EQ(kind_of([] { pattern_stats(DegreePattern{3, {1, 1}}); }), ErrorKind::PatternViolation);
}

TEST(DegreeBounds, Examples) {
  const auto p = DegreePattern::make(3, {2, 2});
  EXPECT_EQ(degree_bounds(p, Certificate::stci).per_i, big({2, 2}));
  const auto ci = degree_bounds(p, Certificate::ci);
  EXPECT_EQ(ci.per_i, big({8, 8}));
  EXPECT_EQ(ci.concise, 16);
  const auto nons = degree_bounds(DegreePattern::make(2, {3}), Certificate::nons);
  EXPECT_EQ(nons.per_i, big({16}));
  EXPECT_EQ(nons.concise, 24);
}

TEST(DegreeBounds, AgreeWithChowExtraction) {
  for (const auto& p : patterns_up_to(6, 4)) {
    for (Certificate c : {Certificate::nons, Certificate::irr}) {
      const auto cls = chow_class(c, p);
      const auto db = degree_bounds(p, c);
      for (std::size_t i = 1; i <= p.s(); ++i) ASSERT_EQ(db.per_i[i - 1], extract_bound(cls, i)) << p.to_string();
    }
  }
}

TEST(DegreeBounds, PerIBelowConcise) {
  for (const auto& p : patterns_up_to(7, 5)) {
    for (Certificate c : kAllCertificates) {
      const auto db = degree_bounds(p, c);
      for (const auto& e : db.per_i) {
        ASSERT_GE(e, 1);
        ASSERT_LE(e, db.concise) << p.to_string() << " " << to_string(c);
      }
    }
  }
}

TEST(MacaulayDegrees, ClosedFormMatchesRecipe) {
  for (const auto& p : patterns_up_to(6, 4)) {
    for (Certificate c : kAllCertificates) {
      ASSERT_EQ(macaulay_degree(recipe_degrees(p, c)), certificate_macaulay_degree(p, c)) << p.to_string();
    }
  }
  // The recipe degrees are the degrees the test-system builder actually produces.
  auto f = Field::create(5);
  for (const auto& p : patterns_up_to(4, 3)) {
    std::vector<HomoPoly> forms;
    for (unsigned di : p.d) {
      Monomial m(p.n + 1, 0);
      m[0] = static_cast<std::uint16_t>(di);
      forms.push_back(HomoPoly::monomial(f, m, f->one()));
    }
    const auto sys = PolySystem::make(forms);
    for (Certificate c : kAllCertificates) {
      ASSERT_EQ(build_test_system(sys, c).degrees(), recipe_degrees(p, c)) << p.to_string();
    }
  }
}

TEST(ProbabilityBound, Examples) {
  const auto p = DegreePattern::make(3, {2, 1});
  const auto ci = probability_lower_bound(p, 101, Certificate::ci);
  EXPECT_EQ(ci.concise, Rational(93, 101));
  EXPECT_TRUE(ci.guard_met);
  EXPECT_EQ(ci.degrees.per_i, big({3, 4}));
  EXPECT_EQ(ci.product, Rational(9506, 10201));
  const auto nons = probability_lower_bound(p, 101, Certificate::nons);
  EXPECT_EQ(nons.concise, Rational(85, 101));
  EXPECT_TRUE(nons.guard_met);
  const auto irr = probability_lower_bound(p, 101, Certificate::irr);
  EXPECT_EQ(irr.concise, Rational(89, 101));
  EXPECT_TRUE(irr.guard_met);
}

TEST(ProbabilityBound, GuardUnmetIsReported) {
  const auto b = probability_lower_bound(DegreePattern::make(3, {3, 3}), 2, Certificate::nons);
  EXPECT_FALSE(b.guard_met);
  EXPECT_LT(b.concise, 0);
  EXPECT_EQ(b.product, 0);
  EXPECT_EQ(kind_of([] { probability_lower_bound(DegreePattern::make(2, {2}), 6, Certificate::ci); }),
            ErrorKind::InvalidArgument);
}

TEST(ProbabilityBound, ChainAndMonotonicity) {
  const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 101, 127, 128, 1024, 65521};
  for (const auto& p : patterns_up_to(5, 4)) {
    for (Certificate c : kAllCertificates) {
      Rational prev_concise = -1000000, prev_product = -1;
      for (std::uint64_t q : qs) {
        const auto b = probability_lower_bound(p, q, c);
        ASSERT_LE(b.concise, 1);
        ASSERT_LE(b.product, 1);
        ASSERT_GE(b.product, 0);
        if (b.guard_met) {
          ASSERT_GE(b.product, b.concise) << p.to_string() << " q=" << q;
        }
        ASSERT_EQ(b.guard_met, 3 * BigInt(q) >= BigInt(p.s()) * b.degrees.concise);
        ASSERT_GE(b.concise, prev_concise);
        ASSERT_GE(b.product, prev_product);
        prev_concise = b.concise;
        prev_product = b.product;
      }
    }
  }
}

TEST(ProjectiveCount, Examples) {
  EXPECT_EQ(projective_count(2, BigInt(2)), 7);
  EXPECT_EQ(projective_count(5, BigInt(2)), 63);
  EXPECT_EQ(projective_count(0, BigInt(97)), 1);
  EXPECT_EQ(projective_count(BigInt(3), BigInt(3)), 40);
}

TEST(MultihomogZeroBound, Examples) {
  EXPECT_EQ(multihomog_zero_bound({1, 1}, {1, 1}, 2), 5);
  EXPECT_EQ(multihomog_zero_bound({1}, {2}, 3), 4);
  EXPECT_EQ(multihomog_zero_bound({2, 1}, {1, 1}, 2), 7);
  EXPECT_EQ(kind_of([] { multihomog_zero_bound({3, 1}, {1, 1}, 2); }), ErrorKind::HypothesisViolated);
}

TEST(GOfB, Examples) {
  EXPECT_EQ(g_of_b(4, 2).value, 3);
  EXPECT_EQ(g_of_b(7, 3).value, 0);
  EXPECT_EQ(g_of_b(6, 3).value, 54);
  EXPECT_EQ(g_of_b(4, 4).value, 40);
  EXPECT_EQ(g_of_b(12, 4).value, 1595);
}

TEST(GOfB, ConvexityAndPositivity) {
  for (std::uint64_t b = 2; b <= 200; ++b) {
    for (unsigned n = 2; n <= 8; ++n) {
      const auto g = g_of_b(b, n);
      if (g.rho != b) {
        ASSERT_GE(g.value, 1) << b << " " << n;
      }
      if (b % 2 == 0) {
        ASSERT_TRUE(g.convexity.has_value());
      }
      // b = 2 is prime, so g vanishes while the convexity expression does not.
      if (b % 2 == 0 && b >= 4) {
        ASSERT_GE(g.value, *g.convexity) << b << " " << n;
      }
    }
  }
}

TEST(FactorizationCount, Examples) {
  EXPECT_EQ(factorization_count(12, 2).count, 3u);
  EXPECT_EQ(factorization_count(12, 3).count, 4u);
  const auto eight = factorization_count(8, 3);
  EXPECT_EQ(eight.count, 3u);
  EXPECT_NEAR(eight.lemma_bound, std::pow(8.0, std::log2(3.0)), 1e-9);
  EXPECT_EQ(factorization_count(7, 4).count, 1u);
}

TEST(FactorizationCount, LemmaBound) {
  // Compare logarithms; a margin below 1e-9 would be too close to call in double precision.
  for (std::uint64_t b = 3; b <= 10000; ++b) {
    const double rhs = std::log2(static_cast<double>(b)) * std::log2(std::log2(static_cast<double>(b)));
    for (unsigned s = 1; s <= 8; ++s) {
      const double lhs = std::log2(static_cast<double>(factorization_count(b, s).count));
      ASSERT_GT(rhs - lhs, 1e-9) << "b=" << b << " s=" << s;
    }
  }
}

TEST(BellNumber, Examples) {
  EXPECT_EQ(bell_number(0), 1);
  EXPECT_EQ(bell_number(3), 5);
  EXPECT_EQ(bell_number(4), 15);
  EXPECT_EQ(bell_number(10), 115975);
}

TEST(BellNumber, LemmaInequality) {
  for (unsigned m = 3; m <= 25; ++m) {
    const double lhs = std::log2(to_double(Rational(bell_number(m))));
    const double rhs = m * std::log2(0.8 * m / std::log(static_cast<double>(m)));
    ASSERT_GT(rhs - lhs, 1e-9) << m;
  }
}

TEST(HypersurfaceCensus, NInd) {
  EXPECT_EQ(hypersurface_census_bounds(3, 2, 2, 2).n_ind, 15);
  // s = 2, n = 2 is not a valid (n, s) pair here; the count itself is p_2 = 7.
  EXPECT_EQ(hypersurface_census_bounds(3, 1, 2, 2).n_ind, 1);
  EXPECT_EQ(kind_of([] { hypersurface_census_bounds(2, 2, 2, 2); }), ErrorKind::PatternViolation);
}

TEST(HypersurfaceCensus, HypErrorExample) {
  const auto h = hypersurface_census_bounds(4, 2, 4, 9);
  EXPECT_EQ(h.g, 40);
  EXPECT_EQ(h.m_s, 2u);
  EXPECT_EQ(h.hyp_error, Rational(2, 59049) + Rational(2, ipow(BigInt(9), 40)));
  EXPECT_FALSE(h.exceptional);
  EXPECT_EQ(h.irr_hyp_error, Rational(23, ipow(BigInt(9), 6)));
  EXPECT_EQ(h.p_irr, Rational(1) - h.irr_hyp_error - Rational(4, ipow(BigInt(9), 40)));
  EXPECT_EQ(h.reference, projective_count(BigInt(69), BigInt(9)) * projective_count(4, BigInt(9)));
  // The exact form replaces b^{log2 log2 b} by M_s(b) <= that bound, so it is at least as strong.
  EXPECT_GE(to_double(h.p_irr), h.p_irr_loglog);
}

TEST(HypersurfaceCensus, ExceptionalConstant) {
  const auto h = hypersurface_census_bounds(4, 2, 2, 5);
  EXPECT_TRUE(h.exceptional);
  EXPECT_EQ(h.irr_hyp_error, Rational(14 * 25, 3125));
}

TEST(PatternLandscape, Example12) {
  const auto l = pattern_landscape(12, 4, 3);
  ASSERT_EQ(l.patterns.size(), 4u);
  EXPECT_EQ(l.patterns[0].pattern.d, (std::vector<unsigned>{12, 1, 1}));
  EXPECT_EQ(l.patterns[0].D_total, 1827);
  EXPECT_EQ(l.patterns[1].pattern.d, (std::vector<unsigned>{6, 2, 1}));
  EXPECT_EQ(l.patterns[1].D_total, 227);
  EXPECT_EQ(l.patterns[2].pattern.d, (std::vector<unsigned>{4, 3, 1}));
  EXPECT_EQ(l.patterns[2].D_total, 107);
  EXPECT_EQ(l.patterns[3].pattern.d, (std::vector<unsigned>{3, 2, 2}));
  EXPECT_EQ(l.patterns[3].D_total, 62);
  EXPECT_EQ(l.m_s, 4u);
  EXPECT_TRUE(l.dominance);
  EXPECT_TRUE(l.g_margin);
  EXPECT_EQ(*l.best_rival_margin, 1600);
  EXPECT_EQ(l.g, 1595);
}

TEST(PatternLandscape, PrimeAndSmall) {
  const auto prime = pattern_landscape(5, 3, 2);
  ASSERT_EQ(prime.patterns.size(), 1u);
  EXPECT_EQ(prime.g, 0);
  EXPECT_FALSE(prime.best_rival_margin.has_value());
  EXPECT_TRUE(prime.dominance);

  const auto four = pattern_landscape(4, 3, 2);
  ASSERT_EQ(four.patterns.size(), 2u);
  EXPECT_EQ(four.patterns[0].D_total, 37);  // C(7,3)-1 + C(4,3)-1
  EXPECT_EQ(four.patterns[1].D_total, 18);
  EXPECT_EQ(*four.best_rival_margin, 19);
  EXPECT_EQ(four.g, 15);
}

TEST(PatternLandscape, DominanceExhaustive) {
  for (std::uint64_t b = 2; b <= 60; ++b) {
    for (unsigned n = 3; n <= 8; ++n) {
      for (unsigned s = 2; s <= 5 && s < n; ++s) {
        const auto l = pattern_landscape(b, n, s);
        ASSERT_TRUE(l.dominance) << b << " " << n << " " << s;
        ASSERT_TRUE(l.g_margin) << b << " " << n << " " << s;
        ASSERT_EQ(l.m_s, l.patterns.size());
        if (l.g_difference) {
          ASSERT_EQ(*l.g_difference, l.g + n + 1) << b << " " << n << " " << s;
        }
      }
    }
  }
}

TEST(BoundsReport, Assembles) {
  const auto r = bounds_report(DegreePattern::make(3, {2, 2}), 5, {kAllCertificates.begin(), kAllCertificates.end()});
  EXPECT_EQ(r.p_n, 156);
  EXPECT_EQ(r.p_D, projective_count(9, BigInt(5)) * projective_count(9, BigInt(5)));
  ASSERT_EQ(r.certs.size(), 4u);
  EXPECT_EQ(r.macaulay, (std::vector<unsigned>{3, 4, 5, 5}));
}

}  // namespace
}  // namespace fqcert
