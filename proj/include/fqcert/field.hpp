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

#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqcert/error.hpp"

namespace fqcert {

/// An element of some finite field F_q. The code is the integer
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1} of the fully reduced coefficient
/// vector, so codes below p are exactly the prime subfield.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

/// Dense polynomial over F_p, ascending coefficients.
using Coeffs = std::vector<std::uint32_t>;

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + p - b);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod f for monic f.
inline Coeffs poly_rem(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, f[i], p), p);
    }
    trim(a);
  }
  return a;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

inline Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  return poly_rem(poly_mul(a, b, p), f, p);
}

inline Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t p) {
  Coeffs result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

inline Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
  trim(a);
  return a;
}

/// Monic gcd.
inline Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint32_t inv_lead = inv_mod(b.back(), p);
    for (auto& c : b) c = mul_mod(c, inv_lead, p);
    a = poly_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint32_t inv_lead = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv_lead, p);
  }
  return a;
}

/// Rabin's test for a monic polynomial of degree k >= 1 over F_p.
inline bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const Coeffs x{0, 1};
  // frob[i] = x^{p^i} mod f
  std::vector<Coeffs> frob{poly_rem(x, f, p)};
  for (std::size_t i = 1; i <= k; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (poly_sub(frob[k], x, p).size() != 0) return false;
  for (std::uint64_t r : prime_factors(k)) {
    const Coeffs g = poly_gcd(f, poly_sub(frob[k / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^k. Immutable after creation and safe to share
/// across threads. Elements are plain `Elem` codes; all arithmetic goes
/// through the field object.
class Field {
 public:
  using Coeffs = detail::Coeffs;

  /// Orders are capped so every product of two codes fits in 64 bits.
  static constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 31) - 1;
  /// Extension fields up to this order use log/antilog/Zech tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// Builds F_{p^k}. Without a modulus (k > 1) the first monic irreducible in
  /// code order is used, so the choice is reproducible everywhere.
  static FieldPtr create(std::uint64_t p, unsigned k = 1,
                         std::optional<Coeffs> modulus = std::nullopt) {
    if (!detail::is_prime(p) || p > kMaxOrder) fail(ErrorKind::NotPrime, std::to_string(p) + " is not a prime below 2^31");
    if (k == 0) fail(ErrorKind::DegreeMismatch, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) fail(ErrorKind::FieldTooLarge, "field order exceeds 2^31 - 1");
    }
    const auto pp = static_cast<std::uint32_t>(p);
    Coeffs mod;
    if (modulus) {
      mod = *modulus;
      if (k == 1 && mod.empty()) {
        // prime field, nothing to check
      } else {
        if (mod.size() != k + 1) fail(ErrorKind::DegreeMismatch, "modulus degree differs from k");
        for (auto& c : mod) c %= pp;
        if (mod.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic of degree k");
        if (!detail::is_irreducible(mod, pp)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
      }
    } else if (k > 1) {
      mod = find_modulus(pp, k);
    }
    if (k == 1) mod.clear();
    return FieldPtr(new Field(pp, k, q, std::move(mod)));
  }

  /// Parses "p" or "p^k".
  static FieldPtr parse(std::string_view spec) {
    auto parse_uint = [&](std::string_view s) -> std::uint64_t {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        fail(ErrorKind::ParseError, "bad field '" + std::string(spec) + "'");
      }
      return value;
    };
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return create(parse_uint(spec));
    const std::uint64_t k = parse_uint(spec.substr(caret + 1));
    if (k > 64) fail(ErrorKind::FieldTooLarge, "extension degree too large");
    return create(parse_uint(spec.substr(0, caret)), static_cast<unsigned>(k));
  }

  /// F_{q^m} for q the order of `base`, built over the same prime.
  static FieldPtr extension_of(const Field& base, unsigned m) {
    if (m == 0) fail(ErrorKind::DegreeMismatch, "extension degree must be positive");
    if (m == 1) return create(base.p_, base.k_, base.k_ > 1 ? std::optional<Coeffs>(base.modulus_) : std::nullopt);
    return create(base.p_, base.k_ * m);
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Ascending coefficients, length k+1; empty for prime fields.
  const Coeffs& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  std::string spec() const {
    return k_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(k_);
  }

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  bool is_zero(Elem a) const noexcept { return a.code == 0; }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  /// The element with the given code; enumerating 0..q-1 visits F_q once.
  Elem element(std::uint64_t index) const {
    if (index >= q_) fail(ErrorKind::IndexOutOfRange, "element index out of range");
    return {static_cast<std::uint32_t>(index)};
  }

  Elem add(Elem a, Elem b) const noexcept {
    if (k_ == 1) return {detail::add_mod(a.code, b.code, p_)};
    if (p_ == 2) return {a.code ^ b.code};
    if (!exp_.empty()) {
      if (a.code == 0) return b;
      if (b.code == 0) return a;
      const std::uint32_t la = log_[a.code];
      const std::uint32_t lb = log_[b.code];
      const std::uint32_t diff = lb >= la ? lb - la : static_cast<std::uint32_t>(lb + (q_ - 1) - la);
      const std::int64_t z = zech_[diff];
      if (z < 0) return {0};
      return exp_[la + static_cast<std::uint32_t>(z)];
    }
    return digitwise(a, b, [p = p_](std::uint32_t x, std::uint32_t y) { return detail::add_mod(x, y, p); });
  }

  Elem neg(Elem a) const noexcept {
    if (a.code == 0) return a;
    if (k_ == 1) return {p_ - a.code};
    if (p_ == 2) return a;
    return digitwise(a, Elem{0}, [p = p_](std::uint32_t x, std::uint32_t) { return detail::sub_mod(0, x, p); });
  }

  Elem sub(Elem a, Elem b) const noexcept {
    if (k_ == 1) return {detail::sub_mod(a.code, b.code, p_)};
    if (p_ == 2) return {a.code ^ b.code};
    return add(a, neg(b));
  }

  Elem mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return {detail::mul_mod(a.code, b.code, p_)};
    if (a.code == 0 || b.code == 0) return {0};
    if (!exp_.empty()) return exp_[log_[a.code] + log_[b.code]];
    return slow_mul(a, b);
  }

  Elem inv(Elem a) const {
    if (a.code == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (k_ == 1) return {detail::inv_mod(a.code, p_)};
    if (!exp_.empty()) {
      const std::uint32_t l = log_[a.code];
      return exp_[l == 0 ? 0 : static_cast<std::uint32_t>(q_ - 1 - l)];
    }
    return pow(a, q_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return result;
  }

  Coeffs to_coeffs(Elem a) const {
    Coeffs out(k_, 0);
    std::uint32_t c = a.code;
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = c % p_;
      c /= p_;
    }
    return out;
  }

  /// Reduces the given F_p-coefficients modulo the field modulus.
  Elem from_coeffs(std::span<const std::int64_t> coeffs) const {
    Coeffs reduced;
    reduced.reserve(coeffs.size());
    for (std::int64_t c : coeffs) reduced.push_back(from_int(c).code);
    if (k_ > 1) {
      reduced = detail::poly_rem(std::move(reduced), modulus_, p_);
    } else if (reduced.size() > 1) {
      fail(ErrorKind::DegreeMismatch, "prime field elements take a single coefficient");
    }
    reduced.resize(k_, 0);
    return encode(reduced);
  }

  /// "c" for prime fields, "c0|c1|...|c_{k-1}" otherwise.
  std::string format(Elem a) const {
    if (k_ == 1) return std::to_string(a.code);
    std::string out;
    const Coeffs c = to_coeffs(a);
    for (unsigned i = 0; i < k_; ++i) {
      if (i) out += '|';
      out += std::to_string(c[i]);
    }
    return out;
  }

 private:
  Field(std::uint32_t p, unsigned k, std::uint64_t q, Coeffs modulus)
      : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {
    if (k_ > 1 && q_ <= kTableLimit) build_tables();
  }

  static Coeffs find_modulus(std::uint32_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Coeffs f(k + 1, 0);
      std::uint64_t rest = t;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      f[k] = 1;
      if (f[0] == 0) continue;  // divisible by x
      if (detail::is_irreducible(f, p)) return f;
    }
    fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
  }

  Elem encode(const Coeffs& c) const {
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i];
    return {static_cast<std::uint32_t>(code)};
  }

  template <class Op>
  Elem digitwise(Elem a, Elem b, Op op) const noexcept {
    std::uint64_t code = 0, scale = 1;
    std::uint32_t x = a.code, y = b.code;
    for (unsigned i = 0; i < k_; ++i) {
      code += scale * op(x % p_, y % p_);
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return {static_cast<std::uint32_t>(code)};
  }

  Elem slow_mul(Elem a, Elem b) const {
    Coeffs ca = to_coeffs(a), cb = to_coeffs(b);
    detail::trim(ca);
    detail::trim(cb);
    Coeffs prod = detail::poly_mulmod(ca, cb, modulus_, p_);
    prod.resize(k_, 0);
    return encode(prod);
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      e >>= 1;
      if (e > 0) a = slow_mul(a, a);
    }
    return result;
  }

  void build_tables() {
    const std::uint64_t group = q_ - 1;
    const auto factors = detail::prime_factors(group);
    Elem generator{0};
    for (std::uint64_t c = 1; c < q_; ++c) {
      const Elem g{static_cast<std::uint32_t>(c)};
      bool primitive = true;
      for (std::uint64_t r : factors) {
        if (slow_pow(g, group / r) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
    exp_.assign(2 * group, Elem{0});
    log_.assign(q_, 0);
    Elem x = one();
    for (std::uint64_t i = 0; i < group; ++i) {
      exp_[i] = x;
      exp_[i + group] = x;
      log_[x.code] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, generator);
    }
    zech_.assign(group, -1);
    if (p_ != 2) {
      for (std::uint64_t i = 0; i < group; ++i) {
        const Elem s = digitwise(exp_[i], one(), [p = p_](std::uint32_t u, std::uint32_t v) {
          return detail::add_mod(u, v, p);
        });
        zech_[i] = s.code == 0 ? -1 : static_cast<std::int64_t>(log_[s.code]);
      }
    }
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  Coeffs modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
};

/// Field homomorphism F_q -> F_{q^m}. Built by locating a root of the small
/// field's modulus inside the large field.
class Embedding {
 public:
  static Embedding between(FieldPtr base, FieldPtr ext) {
    if (base->characteristic() != ext->characteristic() || ext->degree() % base->degree() != 0) {
      fail(ErrorKind::IncompatibleFields, "F_" + ext->spec() + " does not contain F_" + base->spec());
    }
    Embedding emb;
    emb.base_ = base;
    emb.ext_ = ext;
    if (base->is_prime_field() || base->same_as(*ext)) {
      emb.identity_ = true;
      return emb;
    }
    const auto& mod = base->modulus();
    for (std::uint64_t c = 0; c < ext->order(); ++c) {
      const Elem x{static_cast<std::uint32_t>(c)};
      Elem value = ext->zero();
      for (std::size_t i = mod.size(); i-- > 0;) value = ext->add(ext->mul(value, x), Elem{mod[i]});
      if (ext->is_zero(value)) {
        Elem power = ext->one();
        for (unsigned i = 0; i < base->degree(); ++i) {
          emb.basis_.push_back(power);
          power = ext->mul(power, x);
        }
        return emb;
      }
    }
    fail(ErrorKind::IncompatibleFields, "no root of the base modulus in the extension");
  }

  Elem operator()(Elem a) const {
    if (identity_) return a;
    const auto c = base_->to_coeffs(a);
    Elem out = ext_->zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) out = ext_->add(out, ext_->mul(Elem{c[i]}, basis_[i]));
    }
    return out;
  }

  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& ext() const noexcept { return ext_; }

 private:
  FieldPtr base_;
  FieldPtr ext_;
  bool identity_ = false;
  std::vector<Elem> basis_;
};

}  // namespace fqcert
