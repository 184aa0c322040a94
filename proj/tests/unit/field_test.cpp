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

#include "fqcert/field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace fqcert {
namespace {

Elem x_of(const Field& f) { return f.from_coeffs(std::vector<std::int64_t>{0, 1}); }

TEST(FieldCreate, PrimeField) {
  auto f = Field::create(2);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_TRUE(f->modulus().empty());
  EXPECT_EQ(f->spec(), "2");
}

TEST(FieldCreate, DefaultModulusForF4) {
  auto f = Field::create(2, 2);
  EXPECT_EQ(f->order(), 4u);
  EXPECT_EQ(f->modulus(), (Field::Coeffs{1, 1, 1}));
}

TEST(FieldCreate, DefaultModulusForF9IsXSquaredPlusOne) {
  EXPECT_EQ(Field::create(3, 2)->modulus(), (Field::Coeffs{1, 0, 1}));
}

TEST(FieldCreate, AcceptsExplicitIrreducibleModulus) {
  auto f = Field::create(3, 2, Field::Coeffs{1, 0, 1});
  EXPECT_EQ(f->order(), 9u);
}

TEST(FieldCreate, Errors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { Field::create(4); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::create(1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::create(2, 2, Field::Coeffs{1, 0, 1}); }), ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { Field::create(2, 3, Field::Coeffs{1, 1, 1}); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([] { Field::create(3, 2, Field::Coeffs{1, 0, 2}); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([] { Field::create(2, 40); }), ErrorKind::FieldTooLarge);
  EXPECT_EQ(kind_of([] { Field::parse("2^x"); }), ErrorKind::ParseError);
}

TEST(FieldParse, OrdersAndExtensions) {
  EXPECT_EQ(Field::parse("101")->order(), 101u);
  auto f16 = Field::parse("2^4");
  EXPECT_EQ(f16->order(), 16u);
  EXPECT_EQ(f16->spec(), "2^4");
}

TEST(FieldInv, Examples) {
  auto f5 = Field::create(5);
  EXPECT_EQ(f5->inv(Elem{2}), Elem{3});
  auto f2 = Field::create(2);
  EXPECT_EQ(f2->inv(Elem{1}), Elem{1});
  auto f4 = Field::create(2, 2);
  const Elem x = x_of(*f4);
  const Elem x_plus_1 = f4->add(x, f4->one());
  EXPECT_EQ(f4->inv(x), x_plus_1);
  EXPECT_EQ(f4->mul(x, x_plus_1), f4->one());
}

TEST(FieldInv, ZeroThrows) {
  auto f = Field::create(7);
  EXPECT_THROW(f->inv(f->zero()), Error);
  auto f9 = Field::create(3, 2);
  try {
    f9->inv(f9->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, RandomTriples) {
  const auto [p, k] = GetParam();
  auto f = Field::create(p, k);
  std::mt19937_64 rng(1234 + p * 31 + k);
  std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
  for (int t = 0; t < 10000; ++t) {
    const Elem a = f->element(pick(rng)), b = f->element(pick(rng)), c = f->element(pick(rng));
    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    ASSERT_EQ(f->add(a, b), f->add(b, a));
    ASSERT_EQ(f->mul(a, b), f->mul(b, a));
    ASSERT_EQ(f->add(a, f->neg(a)), f->zero());
    ASSERT_EQ(f->sub(a, b), f->add(a, f->neg(b)));
    if (!f->is_zero(a)) {
      ASSERT_EQ(f->mul(a, f->inv(a)), f->one());
    }
  }
}

// Covers prime fields, table-backed extensions, and the untabled path
// (orders above 2^20) in both characteristic 2 and odd characteristic.
INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{101, 1}, std::pair{65521, 1},
                                           std::pair{2147483647, 1}, std::pair{2, 2}, std::pair{2, 8}, std::pair{3, 2},
                                           std::pair{5, 3}, std::pair{7, 4}, std::pair{2, 21}, std::pair{3, 13}));

TEST(FieldFrobenius, ExhaustiveUpTo64) {
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3},
                      {2, 5}, {7, 2}, {2, 6}, {61, 1}}) {
    auto f = Field::create(p, k);
    ASSERT_LE(f->order(), 64u);
    for (std::uint64_t i = 0; i < f->order(); ++i) {
      const Elem a = f->element(i);
      ASSERT_EQ(f->pow(a, f->order()), a) << f->spec() << " element " << i;
    }
  }
}

TEST(FieldEnumeration, DistinctCanonicalElements) {
  for (auto [p, k] : {std::pair{2, 4}, {3, 3}, {13, 1}, {5, 2}}) {
    auto f = Field::create(p, k);
    std::set<Field::Coeffs> seen;
    for (std::uint64_t i = 0; i < f->order(); ++i) {
      const auto c = f->to_coeffs(f->element(i));
      ASSERT_EQ(c.size(), static_cast<std::size_t>(k));
      for (auto digit : c) ASSERT_LT(digit, static_cast<std::uint32_t>(p));
      ASSERT_EQ(f->from_coeffs(std::vector<std::int64_t>(c.begin(), c.end())), f->element(i));
      seen.insert(c);
    }
    EXPECT_EQ(seen.size(), f->order());
  }
}

TEST(FieldMultiplication, TablesAgreeWithPolynomialProduct) {
  for (auto [p, k] : {std::pair{3, 2}, {2, 4}, {5, 3}}) {
    auto f = Field::create(p, k);
    for (std::uint64_t i = 0; i < f->order(); ++i) {
      for (std::uint64_t j = 0; j < f->order(); ++j) {
        auto a = f->to_coeffs(f->element(i)), b = f->to_coeffs(f->element(j));
        detail::trim(a);
        detail::trim(b);
        auto prod = detail::poly_mulmod(a, b, f->modulus(), p);
        std::vector<std::int64_t> digits(prod.begin(), prod.end());
        ASSERT_EQ(f->mul(f->element(i), f->element(j)), f->from_coeffs(digits));
      }
    }
  }
}

TEST(FieldEmbedding, PreservesOperations) {
  auto f4 = Field::create(2, 2);
  auto f16 = Field::extension_of(*f4, 2);
  ASSERT_EQ(f16->order(), 16u);
  auto emb = Embedding::between(f4, f16);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(emb(f4->add(Elem{a}, Elem{b})), f16->add(emb(Elem{a}), emb(Elem{b})));
      EXPECT_EQ(emb(f4->mul(Elem{a}, Elem{b})), f16->mul(emb(Elem{a}), emb(Elem{b})));
    }
  }
  EXPECT_THROW(Embedding::between(f4, Field::create(2, 3)), Error);
  EXPECT_THROW(Embedding::between(Field::create(3), f16), Error);
}

TEST(FieldFormat, Coefficients) {
  auto f9 = Field::create(3, 2);
  EXPECT_EQ(f9->format(f9->from_coeffs(std::vector<std::int64_t>{2, 1})), "2|1");
  EXPECT_EQ(Field::create(7)->format(Elem{5}), "5");
  EXPECT_EQ(Field::create(7)->from_int(-1), Elem{6});
}

}  // namespace
}  // namespace fqcert
