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

#include <map>
#include <string>
#include <vector>

#include "fqcert/bignum.hpp"
#include "fqcert/error.hpp"
#include "fqcert/pattern.hpp"

namespace fqcert {

/// Element of Z[θ_0, θ_1, …, θ_s] / (θ_0^{n+2}).
///
/// Exponent tuples are (a_0, …, a_s). Only θ_0 is truncated.
class ChowClass {
 public:
  using Exponents = std::vector<unsigned>;

  ChowClass(unsigned n, std::size_t s) : n_(n), s_(s) {}

  static ChowClass constant(unsigned n, std::size_t s, const BigInt& c) {
    ChowClass out(n, s);
    out.add(Exponents(s + 1, 0), c);
    return out;
  }

  /// Σ c_j θ_j.
  static ChowClass linear(unsigned n, std::size_t s, const std::vector<BigInt>& coeffs) {
    if (coeffs.size() != s + 1) fail(ErrorKind::ArityMismatch, "linear form needs s+1 coefficients");
    ChowClass out(n, s);
    for (std::size_t j = 0; j <= s; ++j) {
      Exponents e(s + 1, 0);
      e[j] = 1;
      out.add(e, coeffs[j]);
    }
    return out;
  }

  unsigned n() const noexcept { return n_; }
  std::size_t s() const noexcept { return s_; }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }

  BigInt coefficient(const Exponents& e) const {
    if (e.size() != s_ + 1) fail(ErrorKind::ArityMismatch, "exponent tuple has wrong length");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Coefficient of θ_0^{a0} θ_i (i = 0 means the pure θ_0 power).
  BigInt coefficient_theta0(unsigned a0, std::size_t i = 0) const {
    if (i > s_) fail(ErrorKind::IndexOutOfRange, "theta index out of range");
    Exponents e(s_ + 1, 0);
    e[0] = a0;
    if (i > 0) e[i] = 1;
    return coefficient(e);
  }

  void add(const Exponents& e, const BigInt& c) {
    if (e[0] > n_ + 1 || c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) {
    a.check_same(b);
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }

  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.check_same(b);
    ChowClass out(a.n_, a.s_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        if (ea[0] + eb[0] > a.n_ + 1) continue;
        Exponents e(ea.size());
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
        out.add(e, ca * cb);
      }
    }
    return out;
  }

  ChowClass pow(unsigned e) const {
    ChowClass out = constant(n_, s_, 1);
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
  }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.n_ == b.n_ && a.s_ == b.s_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str();
      for (std::size_t j = 0; j < it->first.size(); ++j) {
        if (it->first[j] == 0) continue;
        out += "*t" + std::to_string(j);
        if (it->first[j] > 1) out += "^" + std::to_string(it->first[j]);
      }
    }
    return out;
  }

 private:
  void check_same(const ChowClass& other) const {
    if (n_ != other.n_ || s_ != other.s_) fail(ErrorKind::IncompatibleFields, "Chow classes live in different rings");
  }

  unsigned n_;
  std::size_t s_;
  std::map<Exponents, BigInt> terms_;
};

/// Class of the incidence variety for nons or irr.
inline ChowClass chow_class(Certificate cert, const DegreePattern& pattern) {
  pattern.validate();
  if (cert != Certificate::nons && cert != Certificate::irr) {
    fail(ErrorKind::UnsupportedCertificate, "Chow classes exist only for nons and irr");
  }
  const unsigned n = pattern.n;
  const std::size_t s = pattern.s();
  ChowClass cls = ChowClass::constant(n, s, 1);
  for (std::size_t i = 1; i <= s; ++i) {
    std::vector<BigInt> c(s + 1, 0);
    c[0] = pattern.d[i - 1];
    c[i] = 1;
    cls = cls * ChowClass::linear(n, s, c);
  }
  std::vector<BigInt> jac(s + 1, 1);
  jac[0] = pattern.sigma();
  const ChowClass jacobian = ChowClass::linear(n, s, jac);
  if (cert == Certificate::nons) return cls * jacobian.pow(n - static_cast<unsigned>(s) + 1);
  std::vector<BigInt> theta0(s + 1, 0);
  theta0[0] = 1;
  return cls * jacobian.pow(2) * ChowClass::linear(n, s, theta0).pow(n - static_cast<unsigned>(s) - 1);
}

/// Coefficient of θ_0^n θ_i.
inline BigInt extract_bound(const ChowClass& cls, std::size_t i) {
  if (i < 1 || i > cls.s()) fail(ErrorKind::IndexOutOfRange, "i must lie in [1, s]");
  return cls.coefficient_theta0(cls.n(), i);
}

/// Coefficient of θ_0^{n+1}.
inline BigInt top_coefficient(const ChowClass& cls) { return cls.coefficient_theta0(cls.n() + 1); }

}  // namespace fqcert
