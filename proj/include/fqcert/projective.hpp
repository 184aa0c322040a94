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
#include <limits>
#include <vector>

#include "fqcert/error.hpp"
#include "fqcert/field.hpp"

namespace fqcert {

/// Number of points of P^{len-1}(F_q), or nullopt-like saturation at UINT64_MAX.
inline std::uint64_t projective_size(std::uint64_t q, std::size_t len) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > kMax - pw) return kMax;
    total += pw;
    if (i + 1 < len) {
      if (pw > kMax / q) {
        pw = kMax;
      } else {
        pw *= q;
      }
    }
  }
  return total;
}

/// Projective points of F_q^len in a fixed order: points whose first nonzero
/// coordinate sits at position j come before those with position j+1; the
/// first nonzero coordinate is 1 and the tail is read base q, last entry fastest.
class ProjectiveEnumerator {
 public:
  ProjectiveEnumerator(const Field& field, std::size_t len) : field_(&field), len_(len) {
    if (len == 0) fail(ErrorKind::InvalidArgument, "projective space needs at least one coordinate");
    size_ = projective_size(field.order(), len);
    if (size_ == std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::TooLarge, "projective space too large to index");
  }

  std::uint64_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return len_; }

  std::vector<Elem> at(std::uint64_t index) const {
    std::vector<Elem> out(len_, field_->zero());
    fill(index, out);
    return out;
  }

  void fill(std::uint64_t index, std::vector<Elem>& out) const {
    if (index >= size_) fail(ErrorKind::IndexOutOfRange, "projective index out of range");
    const std::uint64_t q = field_->order();
    std::size_t lead = 0;
    std::uint64_t block = size_ - projective_size(q, len_ - 1);  // q^{len-1}
    while (index >= block) {
      index -= block;
      ++lead;
      block /= q;
    }
    for (std::size_t i = 0; i < lead; ++i) out[i] = field_->zero();
    out[lead] = field_->one();
    for (std::size_t i = len_; i-- > lead + 1;) {
      out[i] = field_->element(index % q);
      index /= q;
    }
  }

  /// Inverse of at() for a vector whose first nonzero entry is 1.
  std::uint64_t index_of(const std::vector<Elem>& v) const {
    if (v.size() != len_) fail(ErrorKind::ArityMismatch, "vector length differs");
    const std::uint64_t q = field_->order();
    std::uint64_t offset = 0;
    std::uint64_t block = size_ - projective_size(q, len_ - 1);
    std::size_t lead = 0;
    while (lead < len_ && field_->is_zero(v[lead])) {
      offset += block;
      block /= q;
      ++lead;
    }
    if (lead == len_ || v[lead] != field_->one()) fail(ErrorKind::InvalidArgument, "vector is not normalized");
    std::uint64_t tail = 0;
    for (std::size_t i = lead + 1; i < len_; ++i) tail = tail * q + v[i].code;
    return offset + tail;
  }

 private:
  const Field* field_;
  std::size_t len_;
  std::uint64_t size_;
};

}  // namespace fqcert
