// Copyright 2026 The seqideal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "seqideal/field.hpp"
#include "seqideal/gf2_packed.hpp"
#include "test_support.hpp"

using namespace seqideal;
using seqideal::testing::random_element;
using seqideal::testing::Rng;

TEST_CASE("field arithmetic examples") {
  const auto gf2 = FieldSpec::gf2();
  const auto gf7 = FieldSpec::gfp(7);
  const auto q = FieldSpec::rationals();

  CHECK(GF2(true) + GF2(true) == GF2(false));
  CHECK(GF2(true) * GF2(true) == GF2(true));
  CHECK(Fp(5, 7) + Fp(4, 7) == Fp(2, 7));
  CHECK(Fp(3, 7).inverse() == Fp(5, 7));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(one<GF2>(gf2).bit());
  CHECK(zero<Fp>(gf7).is_zero());
  CHECK(to_string(one<Rational>(q)) == "1");
  CHECK(Fp(-1, 7) == Fp(6, 7));
  CHECK(Fp(INT64_MIN, 7) == Fp(INT64_MIN % 7 + 7, 7));
}

TEST_CASE("inverse of zero and mismatched fields are errors") {
  CHECK_THROWS_AS(GF2(false).inverse(), std::domain_error);
  CHECK_THROWS_AS(Fp(0, 5).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(0, 1).inverse(), std::domain_error);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), FieldMismatch);
  CHECK_THROWS_AS(Fp(1, 5) * Fp(1, 7), FieldMismatch);
  CHECK_THROWS_AS(GF2::from_int(FieldSpec::gfp(5), 1), FieldMismatch);
}

TEST_CASE("field spec construction and parsing") {
  CHECK_THROWS_AS(FieldSpec::gfp(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::gfp(1), std::invalid_argument);
  CHECK(FieldSpec::gfp(2).characteristic() == 2);
  CHECK(FieldSpec::parse("gf2") == FieldSpec::gf2());
  CHECK(FieldSpec::parse("gfp:101") == FieldSpec::gfp(101));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK_THROWS_AS(FieldSpec::parse("gfp:"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("gfp:12x"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("gfp:15"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("r"), ParseError);
  CHECK(FieldSpec::gfp(13).to_string() == "gfp:13");
  CHECK(is_prime(2));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));
}

TEST_CASE("scalar parsing") {
  const auto gf5 = FieldSpec::gfp(5);
  const auto q = FieldSpec::rationals();
  CHECK(Fp::parse("-1", gf5) == Fp(4, 5));
  CHECK(Fp::parse("123456789012345678901234567890", gf5) == Fp(0, 5));
  CHECK(Rational::parse("1/2", q) == Rational(1, 2));
  CHECK(Rational::parse("-6/4", q) == Rational(-3, 2));
  CHECK(Rational::parse("7", q) == Rational(7, 1));
  CHECK(Rational::parse("3/-6", q) == Rational(-1, 2));
  CHECK(GF2::parse("1", FieldSpec::gf2()) == GF2(true));

  CHECK_THROWS_AS(GF2::parse("2", FieldSpec::gf2()), ParseError);
  CHECK_THROWS_AS(GF2::parse("-1", FieldSpec::gf2()), ParseError);
  CHECK_THROWS_AS(Fp::parse("1.5", gf5), ParseError);
  CHECK_THROWS_AS(Fp::parse("-", gf5), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0", q), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/", q), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2", q), ParseError);
}

template <FieldScalar S>
void check_axioms(const FieldSpec& spec) {
  Rng rng(0xf1e1d);
  for (int i = 0; i < 1000; ++i) {
    S a = random_element<S>(spec, rng);
    S b = random_element<S>(spec, rng);
    S c = random_element<S>(spec, rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == zero<S>(spec));
    REQUIRE(a + (-a) == zero<S>(spec));
    if (!a.is_zero()) {
      REQUIRE(a.inverse() * a == one<S>(spec));
      REQUIRE((b / a) * a == b);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  check_axioms<GF2>(FieldSpec::gf2());
  check_axioms<Fp>(FieldSpec::gfp(5));
  check_axioms<Fp>(FieldSpec::gfp(7));
  check_axioms<Fp>(FieldSpec::gfp(4294967291ULL));
  check_axioms<Rational>(FieldSpec::rationals());
}

TEST_CASE("GF(2) coefficients round-trip through the bit-packed representation") {
  Rng rng(7);
  const auto gf2 = FieldSpec::gf2();
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = static_cast<int>(rng() % 300);
    auto f = seqideal::testing::random_form<GF2>(gf2, deg, rng);
    REQUIRE(unpack(pack(f)) == f);
    auto c = seqideal::testing::random_monic<GF2>(gf2, deg, rng);
    REQUIRE(unpack(pack(c)) == c);
  }
}
