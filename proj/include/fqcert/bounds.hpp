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
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fqcert/bignum.hpp"
#include "fqcert/error.hpp"
#include "fqcert/field.hpp"
#include "fqcert/macaulay.hpp"
#include "fqcert/pattern.hpp"

namespace fqcert {

struct PatternStats {
  BigInt delta;
  unsigned sigma = 0;
  std::vector<BigInt> D;  ///< D_i = C(d_i+n, n) - 1
  BigInt D_total;
};

inline PatternStats pattern_stats(const DegreePattern& p) {
  p.validate();
  PatternStats st;
  st.delta = 1;
  st.sigma = p.sigma();
  st.D_total = 0;
  for (unsigned di : p.d) {
    st.delta *= di;
    st.D.push_back(binomial(BigInt(di) + p.n, p.n) - 1);
    st.D_total += st.D.back();
  }
  return st;
}

/// p_n = q^n + ... + q + 1.
inline BigInt projective_count(unsigned n, const BigInt& q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "q must be at least 2");
  BigInt out = 0, pw = 1;
  for (unsigned i = 0; i <= n; ++i) {
    out += pw;
    pw *= q;
  }
  return out;
}

/// p_n for a possibly huge n.
inline BigInt projective_count(const BigInt& n, const BigInt& q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "q must be at least 2");
  if (n > 1'000'000) fail(ErrorKind::TooLarge, "projective dimension too large to expand");
  return (ipow(q, n.convert_to<unsigned>() + 1) - 1) / (q - 1);
}

inline bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  const auto f = detail::prime_factors(q);
  return f.size() == 1;
}

inline void require_prime_power(std::uint64_t q) {
  if (!is_prime_power(q)) fail(ErrorKind::InvalidArgument, "q must be a prime power, got " + std::to_string(q));
}

/// Per-i obstruction degree bounds and the concise uniform bound.
struct DegreeBounds {
  Certificate cert;
  std::vector<BigInt> per_i;
  BigInt concise;
};

inline DegreeBounds degree_bounds(const DegreePattern& p, Certificate cert) {
  const auto st = pattern_stats(p);
  const BigInt sigma = st.sigma;
  const BigInt& delta = st.delta;
  const unsigned ns = p.n - static_cast<unsigned>(p.s());
  DegreeBounds out{cert, {}, 0};
  for (unsigned di : p.d) {
    const BigInt cofactor = delta / di;  // δ/d_i is exact
    switch (cert) {
      case Certificate::stci: out.per_i.push_back(cofactor); break;
      case Certificate::ci: out.per_i.push_back(cofactor * sigma + delta); break;
      case Certificate::nons: out.per_i.push_back(ipow(sigma, ns) * (cofactor * sigma + delta * (ns + 1))); break;
      case Certificate::irr: out.per_i.push_back(sigma * (cofactor * sigma + 2 * delta)); break;
    }
  }
  switch (cert) {
    case Certificate::stci: out.concise = *std::max_element(out.per_i.begin(), out.per_i.end()); break;
    case Certificate::ci: out.concise = 2 * sigma * delta; break;
    case Certificate::nons: out.concise = (sigma + p.n) * ipow(sigma, ns) * delta; break;
    case Certificate::irr: out.concise = 3 * sigma * sigma * delta; break;
  }
  return out;
}

/// Degrees of the forms in each certificate's test system.
inline std::vector<unsigned> recipe_degrees(const DegreePattern& p, Certificate cert) {
  p.validate();
  const unsigned sigma = p.sigma();
  std::vector<unsigned> out = p.d;
  auto pad = [&](std::size_t total, unsigned value) {
    while (out.size() < total) out.push_back(value);
  };
  switch (cert) {
    case Certificate::stci: break;
    case Certificate::ci: out.push_back(sigma); break;
    case Certificate::nons: pad(p.n + 1, sigma); break;
    case Certificate::irr:
      out.push_back(sigma);
      out.push_back(sigma);
      break;
  }
  pad(p.n + 1, 1);
  return out;
}

/// Macaulay degree of a certificate's test system, in closed form.
inline unsigned certificate_macaulay_degree(const DegreePattern& p, Certificate cert) {
  p.validate();
  const unsigned sigma = p.sigma();
  const unsigned ns = p.n - static_cast<unsigned>(p.s());
  switch (cert) {
    case Certificate::stci: return sigma + 1;
    case Certificate::ci: return 2 * sigma;
    case Certificate::nons: return sigma + (ns + 1) * (sigma - 1) + 1;
    case Certificate::irr: return 3 * sigma - 1;
  }
  return 0;
}

struct ProbabilityBound {
  Certificate cert;
  BigInt q;
  DegreeBounds degrees;
  Rational concise;  ///< 1 - s e / q
  bool guard_met = false;  ///< 3q >= s e
  Rational product;  ///< prod max(0, 1 - e_i / q)
};

inline ProbabilityBound probability_lower_bound(const DegreePattern& p, std::uint64_t q, Certificate cert) {
  require_prime_power(q);
  ProbabilityBound out{cert, BigInt(q), degree_bounds(p, cert), 0, false, 1};
  const BigInt s = p.s();
  const BigInt se = s * out.degrees.concise;
  out.concise = Rational(1) - Rational(se, out.q);
  out.guard_met = 3 * out.q >= se;
  for (const BigInt& ei : out.degrees.per_i) {
    const Rational factor = Rational(1) - Rational(ei, out.q);
    out.product *= factor > 0 ? factor : Rational(0);
  }
  return out;
}

/// Upper bound on the F_q-zeros of a multihomogeneous form in P^{n_1} x ... x P^{n_s}.
inline BigInt multihomog_zero_bound(const std::vector<unsigned>& d, const std::vector<unsigned>& n, std::uint64_t q) {
  if (d.size() != n.size()) fail(ErrorKind::ArityMismatch, "d and n must have the same length");
  if (d.empty()) fail(ErrorKind::EmptyInput, "no factors");
  for (unsigned di : d) {
    if (di > q) fail(ErrorKind::HypothesisViolated, "need d_i <= q for all i");
  }
  for (unsigned ni : n) {
    if (ni < 1) fail(ErrorKind::InvalidArgument, "factor dimensions must be positive");
  }
  const std::size_t s = d.size();
  BigInt total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
    BigInt term = 1;
    int bits = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const bool on = (mask >> i) & 1;
      bits += on;
      if (on) term *= d[i];
      term *= projective_count(n[i] - (on ? 1 : 0), BigInt(q));
    }
    total += bits % 2 == 1 ? term : BigInt(-term);
  }
  return total;
}

inline std::uint64_t smallest_prime_factor(std::uint64_t b) {
  for (std::uint64_t r = 2; r * r <= b; ++r) {
    if (b % r == 0) return r;
  }
  return b;
}

struct GOfB {
  BigInt value;                    ///< C(b+n,n) - C(b/ρ+n,n) - C(ρ+n,n), zero for prime b
  std::optional<BigInt> convexity;  ///< C(b+n,n) - 2 C(b/2+n,n), even b only
  std::uint64_t rho = 0;
};

inline GOfB g_of_b(std::uint64_t b, unsigned n) {
  if (b < 2) fail(ErrorKind::InvalidArgument, "b must be at least 2");
  if (n < 2) fail(ErrorKind::InvalidArgument, "n must be at least 2");
  GOfB out;
  out.rho = smallest_prime_factor(b);
  const BigInt top = binomial(BigInt(b) + n, n);
  out.value = out.rho == b ? BigInt(0)
                           : top - binomial(BigInt(b / out.rho) + n, n) - binomial(BigInt(out.rho) + n, n);
  if (b % 2 == 0) out.convexity = top - 2 * binomial(BigInt(b / 2) + n, n);
  return out;
}

/// Nonincreasing factor tuples of b, every factor >= 2, at most s factors. (b) itself is included.
inline std::vector<std::vector<std::uint64_t>> factorizations(std::uint64_t b, unsigned s) {
  if (b < 2) fail(ErrorKind::InvalidArgument, "b must be at least 2");
  if (s < 1) fail(ErrorKind::InvalidArgument, "s must be at least 1");
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rest, std::uint64_t cap) {
    if (rest == 1) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == s) return;
    for (std::uint64_t f = std::min(cap, rest); f >= 2; --f) {
      if (rest % f != 0) continue;
      cur.push_back(f);
      rec(rest / f, f);
      cur.pop_back();
    }
  };
  rec(b, b);
  return out;
}

struct FactorizationCount {
  std::uint64_t count = 0;
  double lemma_bound = 0;  ///< b^{log2 log2 b}
};

inline double loglog_bound(std::uint64_t b) {
  const double lb = std::log2(static_cast<double>(b));
  return std::pow(static_cast<double>(b), std::log2(lb));
}

inline FactorizationCount factorization_count(std::uint64_t b, unsigned s) {
  return {factorizations(b, s).size(), loglog_bound(b)};
}

/// B_m via the Bell triangle.
inline BigInt bell_number(unsigned m) {
  std::vector<BigInt> row{1};
  for (unsigned i = 0; i < m; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

struct HypersurfaceCensusBounds {
  unsigned n = 0, s = 0;
  std::uint64_t b = 0, q = 0;
  BigInt D_b;
  BigInt n_ind;
  BigInt reference;  ///< p_{D_b} p_n^{s-1}
  BigInt g;
  std::uint64_t m_s = 0;
  double loglog = 0;
  bool exceptional = false;  ///< b = 2 and n - s <= 3
  Rational hyp_error;        ///< (1+9/q)/q^{n-s+3} + M_s(b)/q^g
  double hyp_error_loglog = 0;  ///< same with b^{log2 log2 b} for M_s(b)
  Rational irr_hyp_error;      ///< (1+14/q)/q^{n-s+3}, or 14 q^2/q^{n-s+3}
  Rational irr_error;          ///< irr_hyp_error + M_s(b)/q^g
  double irr_error_loglog = 0;
  Rational p_irr;  ///< 1 - irr_hyp_error - 2 M_s(b)/q^g
  double p_irr_loglog = 0;
};

inline HypersurfaceCensusBounds hypersurface_census_bounds(unsigned n, unsigned s, std::uint64_t b, std::uint64_t q) {
  if (s < 1 || s >= n) fail(ErrorKind::PatternViolation, "need 0 < s < n");
  if (b < 2) fail(ErrorKind::PatternViolation, "b must be at least 2");
  require_prime_power(q);
  HypersurfaceCensusBounds out;
  out.n = n;
  out.s = s;
  out.b = b;
  out.q = q;
  const BigInt Q = q;
  out.D_b = binomial(BigInt(b) + n, n) - 1;
  out.n_ind = 1;
  for (unsigned k = 0; k + 2 <= s; ++k) out.n_ind *= (ipow(Q, n + 1) - ipow(Q, k)) / (Q - 1);
  out.reference = projective_count(out.D_b, Q) * ipow(projective_count(n, Q), s - 1);
  out.g = g_of_b(b, n).value;
  out.m_s = factorization_count(b, s).count;
  out.loglog = loglog_bound(b);
  out.exceptional = b == 2 && n - s <= 3;

  const unsigned gexp = out.g.convert_to<unsigned>();
  const BigInt q_g = ipow(Q, gexp);
  const BigInt q_tail = ipow(Q, n - s + 3);
  const Rational rival = Rational(BigInt(out.m_s), q_g);
  out.hyp_error = Rational(Q + 9, Q * q_tail) + rival;
  out.irr_hyp_error = out.exceptional ? Rational(14 * Q * Q, q_tail) : Rational(Q + 14, Q * q_tail);
  out.irr_error = out.irr_hyp_error + rival;
  out.p_irr = Rational(1) - out.irr_hyp_error - 2 * rival;

  const double qd = static_cast<double>(q);
  const double loglog_rival = out.loglog / std::pow(qd, static_cast<double>(gexp));
  out.hyp_error_loglog = to_double(Rational(Q + 9, Q * q_tail)) + loglog_rival;
  out.irr_error_loglog = to_double(out.irr_hyp_error) + loglog_rival;
  out.p_irr_loglog = 1.0 - to_double(out.irr_hyp_error) - 2 * loglog_rival;
  return out;
}

struct LandscapeEntry {
  DegreePattern pattern;
  BigInt D_total;
  BigInt margin;  ///< |D(d^(b))| - |D(d)|
};

struct PatternLandscape {
  std::uint64_t b = 0;
  unsigned n = 0, s = 0;
  std::vector<LandscapeEntry> patterns;  ///< d^(b) first, then the others in factorization order
  BigInt g;
  std::optional<BigInt> g_difference;  ///< |D(d^(b))| - |D(b/ρ, ρ, 1, ...)| when that pattern exists
  std::uint64_t m_s = 0;
  bool dominance = true;      ///< |D(d^(b))| > |D(d)| for every rival
  bool g_margin = true;       ///< |D(d^(b))| >= |D(d)| + g for every rival
  std::optional<BigInt> best_rival_margin;
};

inline PatternLandscape pattern_landscape(std::uint64_t b, unsigned n, unsigned s) {
  if (s < 1 || s >= n) fail(ErrorKind::PatternViolation, "need 0 < s < n");
  if (b < 2) fail(ErrorKind::PatternViolation, "b must be at least 2");
  if (b > 0xffffffffULL) fail(ErrorKind::TooLarge, "b too large");
  PatternLandscape out;
  out.b = b;
  out.n = n;
  out.s = s;
  out.g = g_of_b(b, std::max(n, 2u)).value;
  const auto facts = factorizations(b, s);
  out.m_s = facts.size();
  for (const auto& f : facts) {
    std::vector<unsigned> d(f.begin(), f.end());
    d.resize(s, 1);
    const auto p = DegreePattern::make(n, d);
    out.patterns.push_back({p, pattern_stats(p).D_total, 0});
  }
  const BigInt top = out.patterns.front().D_total;
  const std::uint64_t rho = smallest_prime_factor(b);
  for (std::size_t i = 0; i < out.patterns.size(); ++i) {
    auto& e = out.patterns[i];
    e.margin = top - e.D_total;
    if (i == 0) continue;
    out.dominance = out.dominance && e.margin > 0;
    out.g_margin = out.g_margin && e.margin >= out.g;
    if (!out.best_rival_margin || e.margin < *out.best_rival_margin) out.best_rival_margin = e.margin;
    if (rho != b && e.pattern.d[0] == std::max<std::uint64_t>(b / rho, rho) &&
        e.pattern.d[1] == std::min<std::uint64_t>(b / rho, rho) && (s < 3 || e.pattern.d[2] == 1)) {
      out.g_difference = e.margin;
    }
  }
  return out;
}

/// Everything computable in closed form for one pattern and field size.
struct BoundsReport {
  DegreePattern pattern;
  std::uint64_t q = 0;
  PatternStats stats;
  BigInt p_n;
  BigInt p_D;  ///< prod p_{D_i}
  std::vector<ProbabilityBound> certs;
  std::vector<unsigned> macaulay;  ///< per certificate, same order as certs
};

inline BoundsReport bounds_report(const DegreePattern& p, std::uint64_t q, const std::vector<Certificate>& certs) {
  require_prime_power(q);
  BoundsReport out;
  out.pattern = p;
  out.q = q;
  out.stats = pattern_stats(p);
  out.p_n = projective_count(p.n, BigInt(q));
  out.p_D = 1;
  for (const BigInt& Di : out.stats.D) out.p_D *= projective_count(Di, BigInt(q));
  for (Certificate c : certs) {
    out.certs.push_back(probability_lower_bound(p, q, c));
    out.macaulay.push_back(certificate_macaulay_degree(p, c));
  }
  return out;
}

}  // namespace fqcert
