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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fqcert/bignum.hpp"
#include "fqcert/bounds.hpp"
#include "fqcert/macaulay.hpp"
#include "fqcert/oracle.hpp"
#include "fqcert/pattern.hpp"
#include "fqcert/projective.hpp"
#include "fqcert/system.hpp"

namespace fqcert {

inline constexpr std::uint64_t kDefaultExhaustiveCap = 10'000'000;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of trial `index`: the index-th output of a splitmix64 stream started at `master`.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + index * 0x9E3779B97F4A7C15ULL);
}

/// Uniform draw from [0, n) by rejection. Unlike std::uniform_int_distribution
/// the mapping is fixed, so runs reproduce across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t accept_max = kMax - (kMax % n + 1) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r <= accept_max) return r % n;
  }
}

/// F_q for a prime power q, with the default modulus.
inline FieldPtr field_for_order(std::uint64_t q) {
  require_prime_power(q);
  const std::uint64_t p = detail::prime_factors(q).front();
  unsigned k = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++k;
  return Field::create(p, k);
}

/// Draws every form uniformly from the nonzero coefficient vectors.
inline PolySystem sample_system(const DegreePattern& pattern, const FieldPtr& field, std::uint64_t seed) {
  pattern.validate();
  std::mt19937_64 rng(seed);
  const std::size_t nv = pattern.n + 1;
  std::vector<HomoPoly> forms;
  for (unsigned di : pattern.d) {
    const auto basis = monomials_of_degree(nv, di);
    while (true) {
      HomoPoly g(field, nv, di);
      for (const auto& m : basis) g.add_term(m, field->element(uniform_below(rng, field->order())));
      if (!g.is_zero()) {
        forms.push_back(std::move(g));
        break;
      }
    }
  }
  return PolySystem::make(std::move(forms));
}

/// Each form scaled so its leading coefficient is 1.
inline PolySystem canonical(const PolySystem& sys) {
  std::vector<HomoPoly> forms;
  for (const auto& g : sys.forms()) forms.push_back(g.normalized());
  return PolySystem::make(std::move(forms));
}

/// Indexes the canonical representatives of P^{D_1}(F_q) x ... x P^{D_s}(F_q).
/// The last form varies fastest.
class SystemEnumerator {
 public:
  SystemEnumerator(const DegreePattern& pattern, FieldPtr field, std::uint64_t cap = kDefaultExhaustiveCap)
      : pattern_(pattern), field_(std::move(field)) {
    pattern.validate();
    const std::size_t nv = pattern.n + 1;
    total_ = 1;
    for (unsigned di : pattern.d) {
      bases_.push_back(monomials_of_degree(nv, di));
      const std::uint64_t len = bases_.back().size();
      const std::uint64_t size = projective_size(field_->order(), len);
      if (size > cap || total_ > cap / size) {
        fail(ErrorKind::TooLarge, "p_D exceeds the exhaustive cap of " + std::to_string(cap));
      }
      total_ *= size;
      spaces_.emplace_back(*field_, len);
    }
  }

  std::uint64_t size() const noexcept { return total_; }

  PolySystem at(std::uint64_t index) const {
    if (index >= total_) fail(ErrorKind::IndexOutOfRange, "system index out of range");
    const std::size_t s = spaces_.size();
    std::vector<std::uint64_t> parts(s);
    for (std::size_t i = s; i-- > 0;) {
      parts[i] = index % spaces_[i].size();
      index /= spaces_[i].size();
    }
    std::vector<HomoPoly> forms;
    for (std::size_t i = 0; i < s; ++i) {
      const auto coeffs = spaces_[i].at(parts[i]);
      HomoPoly g(field_, pattern_.n + 1, pattern_.d[i]);
      for (std::size_t j = 0; j < coeffs.size(); ++j) g.add_term(bases_[i][j], coeffs[j]);
      forms.push_back(std::move(g));
    }
    return PolySystem::make(std::move(forms));
  }

  /// Inverse of at() on canonical systems.
  std::uint64_t index_of(const PolySystem& sys) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < spaces_.size(); ++i) {
      std::vector<Elem> coeffs;
      for (const auto& m : bases_[i]) coeffs.push_back(sys.forms()[i].coefficient(m));
      index = index * spaces_[i].size() + spaces_[i].index_of(coeffs);
    }
    return index;
  }

 private:
  DegreePattern pattern_;
  FieldPtr field_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<ProjectiveEnumerator> spaces_;
  std::uint64_t total_ = 1;
};

enum class CensusMode { monte_carlo, exhaustive };

inline std::string_view to_string(CensusMode m) { return m == CensusMode::monte_carlo ? "monte_carlo" : "exhaustive"; }

enum class Verdict { consistent, violated, vacuous };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

struct CensusConfig {
  DegreePattern pattern;
  std::uint64_t q = 2;
  std::vector<Certificate> certs{kAllCertificates.begin(), kAllCertificates.end()};
  CensusMode mode = CensusMode::monte_carlo;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultExhaustiveCap;
  bool count_points = false;  ///< tally F_q-points of Z(f) and check them against δ p_{n-s}
  bool keep_records = false;
};

struct TrialRecord {
  std::uint64_t index = 0;
  std::optional<std::uint64_t> seed;  ///< Monte Carlo only
  std::string system;                 ///< canonical serialization
  std::vector<bool> passed;           ///< aligned with CensusConfig::certs
  std::optional<std::uint64_t> points;
};

struct Interval {
  double lo = 0, hi = 1;
};

/// Wilson score interval for count/total at z standard deviations.
inline Interval wilson_interval(std::uint64_t count, std::uint64_t total, double z = 3.0) {
  if (total == 0) return {0.0, 1.0};
  const double n = static_cast<double>(total);
  const double p = static_cast<double>(count) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // The endpoints are exactly 0 and 1 at the extremes; keep rounding out of them.
  const double lo = count == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = count == total ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

struct CertTally {
  Certificate cert;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  Rational freq;
  std::optional<Interval> interval;  ///< Monte Carlo only
  ProbabilityBound bound;
  Verdict verdict = Verdict::vacuous;          ///< against the concise bound
  Verdict product_verdict = Verdict::vacuous;  ///< against the product bound
};

struct CensusReport {
  CensusConfig config;
  FieldPtr field;
  BigInt p_D;
  std::uint64_t total = 0;
  std::vector<CertTally> per_cert;
  std::vector<TrialRecord> records;
  /// Point-count check, when enabled: systems passing ci with more than δ p_{n-s} points.
  std::uint64_t point_bound_checked = 0;
  std::uint64_t point_bound_violations = 0;
  std::uint64_t max_points = 0;            ///< over every system
  std::uint64_t max_certified_points = 0;  ///< over ci-certified systems
  BigInt point_bound;  ///< δ p_{n-s}
  double runtime_ms = 0;

  bool any_violated() const {
    return std::any_of(per_cert.begin(), per_cert.end(), [](const CertTally& t) {
             return t.verdict == Verdict::violated || t.product_verdict == Verdict::violated;
           }) ||
           point_bound_violations > 0;
  }
};

namespace detail {

inline Verdict judge(const CertTally& t, const Rational& bound, CensusMode mode, const BigInt& p_D) {
  if (!t.bound.guard_met) return Verdict::vacuous;
  if (mode == CensusMode::exhaustive) {
    return Rational(BigInt(t.count)) < bound * p_D ? Verdict::violated : Verdict::consistent;
  }
  return t.interval->hi < to_double(bound) ? Verdict::violated : Verdict::consistent;
}

}  // namespace detail

inline CensusReport run_census(const CensusConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  config.pattern.validate();
  if (config.certs.empty()) fail(ErrorKind::EmptyInput, "no certificates requested");
  CensusReport report;
  report.config = config;
  report.field = field_for_order(config.q);
  const auto bounds = bounds_report(config.pattern, config.q, config.certs);
  report.p_D = bounds.p_D;
  report.point_bound = bounds.stats.delta * projective_count(config.pattern.n - static_cast<unsigned>(config.pattern.s()), BigInt(config.q));

  std::optional<SystemEnumerator> enumerator;
  if (config.mode == CensusMode::exhaustive) {
    enumerator.emplace(config.pattern, report.field, config.cap);
    report.total = enumerator->size();
  } else {
    if (config.trials == 0) fail(ErrorKind::InvalidArgument, "need at least one trial");
    report.total = config.trials;
  }

  const std::size_t ncert = config.certs.size();
  const auto ci_slot = std::find(config.certs.begin(), config.certs.end(), Certificate::ci);
  const bool check_points = config.count_points;
  std::vector<std::uint8_t> passed(report.total * ncert, 0);
  std::vector<std::uint64_t> points(check_points ? report.total : 0, 0);
  std::vector<std::string> texts(config.keep_records ? report.total : 0);

  auto run_one = [&](std::uint64_t i) {
    const PolySystem sys = enumerator ? enumerator->at(i)
                                      : canonical(sample_system(config.pattern, report.field, trial_seed(config.seed, i)));
    for (std::size_t c = 0; c < ncert; ++c) passed[i * ncert + c] = certify(sys, config.certs[c]) ? 1 : 0;
    if (check_points) points[i] = count_projective_zeros(sys.forms());
    if (config.keep_records) texts[i] = serialize_system(sys);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::min<std::uint64_t>(report.total, 256))));
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < report.total; ++i) run_one(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    constexpr std::uint64_t kChunk = 64;
    auto worker = [&] {
      while (true) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= report.total) return;
        const std::uint64_t end = std::min(report.total, begin + kChunk);
        try {
          for (std::uint64_t i = begin; i < end; ++i) run_one(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = report.total;
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t c = 0; c < ncert; ++c) {
    CertTally t{config.certs[c], 0, report.total, 0, std::nullopt, bounds.certs[c]};
    for (std::uint64_t i = 0; i < report.total; ++i) t.count += passed[i * ncert + c];
    t.freq = Rational(BigInt(t.count), BigInt(t.total));
    if (config.mode == CensusMode::monte_carlo) t.interval = wilson_interval(t.count, t.total);
    t.verdict = detail::judge(t, t.bound.concise, config.mode, report.p_D);
    t.product_verdict = detail::judge(t, t.bound.product, config.mode, report.p_D);
    report.per_cert.push_back(std::move(t));
  }

  if (check_points) {
    for (std::uint64_t i = 0; i < report.total; ++i) {
      report.max_points = std::max(report.max_points, points[i]);
      if (ci_slot != config.certs.end() && passed[i * ncert + (ci_slot - config.certs.begin())]) {
        ++report.point_bound_checked;
        report.max_certified_points = std::max(report.max_certified_points, points[i]);
        if (BigInt(points[i]) > report.point_bound) ++report.point_bound_violations;
      }
    }
  }

  if (config.keep_records) {
    report.records.reserve(report.total);
    for (std::uint64_t i = 0; i < report.total; ++i) {
      TrialRecord r;
      r.index = i;
      if (config.mode == CensusMode::monte_carlo) r.seed = trial_seed(config.seed, i);
      r.system = std::move(texts[i]);
      for (std::size_t c = 0; c < ncert; ++c) r.passed.push_back(passed[i * ncert + c] != 0);
      if (check_points) r.points = points[i];
      report.records.push_back(std::move(r));
    }
  }

  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace fqcert
