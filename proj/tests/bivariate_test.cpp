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
#include "seqideal/form.hpp"
#include "seqideal/inverse_form.hpp"
#include "seqideal/unipoly.hpp"
#include "test_support.hpp"

using namespace seqideal;
using seqideal::testing::ints;
using seqideal::testing::Rng;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::gf2();

InverseForm<Rational> worked() {
  return from_sequence(kQ, ints<Rational>(kQ, {1, 0, 0, 0, -1, 1, 0, 0, 1, -2}));
}

}  // namespace

TEST_CASE("inverse forms from sequences") {
  auto F = from_sequence(kGF2, ints<GF2>(kGF2, {1, 1, 0, 1}));
  CHECK(F.degree() == -3);
  CHECK(to_string(F) == "x^-3+x^-1z^-2+z^-3");

  auto one = from_sequence(kGF2, ints<GF2>(kGF2, {1}));
  CHECK(one.degree() == 0);
  CHECK(to_string(one) == "1");

  CHECK(to_string(worked()) == "-2x^-9+x^-8z^-1+x^-5z^-4-x^-4z^-5+z^-9");
  CHECK(to_sequence(worked()) == ints<Rational>(kQ, {1, 0, 0, 0, -1, 1, 0, 0, 1, -2}));
  CHECK_THROWS_AS(from_sequence(kQ, std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("subforms") {
  auto F = worked();
  CHECK(to_string(F.subform(-5)) == "x^-5-x^-4z^-1+z^-5");
  CHECK(to_string(F.subform(-4)) == "-x^-4+z^-4");
  CHECK(to_string(F.subform(-8)) == "x^-8+x^-5z^-3-x^-4z^-4+z^-8");
  CHECK(*F.order() == 0);
  CHECK(to_string(F.subform(0)) == "1");
  CHECK(F.subform(-9) == F);
  CHECK_THROWS_AS(F.subform(1), std::out_of_range);
  CHECK_THROWS_AS(F.subform(-10), std::out_of_range);

  auto G = from_sequence(kQ, ints<Rational>(kQ, {0, 0, 3, 1}));
  CHECK(*G.order() == -2);
  CHECK(to_string(G.subform(-2)) == "3x^-2");
  CHECK_THROWS_AS(G.subform(-1), std::out_of_range);
  CHECK_FALSE(from_sequence(kQ, ints<Rational>(kQ, {0, 0})).order());
}

TEST_CASE("augmentation") {
  auto z3 = InverseForm<Rational>::from_sequence(kQ, ints<Rational>(kQ, {1, 0, 0, 0}));
  CHECK(to_string(z3) == "z^-3");
  CHECK(to_string(z3.augment(Rational(5, 1))) == "5x^-4+z^-4");
  CHECK(to_string(from_sequence(kGF2, ints<GF2>(kGF2, {1})).augment(GF2(true))) == "x^-1+z^-1");
  auto F = worked();
  CHECK(to_string(F.augment(Rational(0, 1))) == "-2x^-9z^-1+x^-8z^-2+x^-5z^-5-x^-4z^-6+z^-10");
}

TEST_CASE("module action") {
  // x o x^-1 z^-1 = z^-1
  auto F = from_sequence(kQ, ints<Rational>(kQ, {0, 1, 0}));
  CHECK(to_string(F) == "x^-1z^-1");
  auto r = apply(x_pow<Rational>(kQ, 1), F);
  REQUIRE(r);
  CHECK(to_string(*r) == "z^-1");

  // x^{1-m} o x^m = 0
  auto xm = InverseForm<Rational>::x_pow(kQ, -3);
  CHECK(to_string(xm) == "x^-3");
  CHECK_FALSE(apply(x_pow<Rational>(kQ, 4), xm));
  CHECK(annihilates(x_pow<Rational>(kQ, 4), xm));
  CHECK(annihilates(z_pow<Rational>(kQ, 1), xm));
  CHECK_FALSE(annihilates(x_pow<Rational>(kQ, 3), xm));

  auto f = Form<Rational>::from_ints(kQ, {-1, 1, 0, 0, 0, 1});
  CHECK(to_string(f) == "x^5+xz^4-z^5");
  CHECK(annihilates(f, worked()));
  auto g = Form<Rational>::from_ints(kQ, {0, 1, 1, 1, 1, 0, 0});
  CHECK(to_string(g) == "x^4z^2+x^3z^3+x^2z^4+xz^5");
  auto g6 = g + z_pow<Rational>(kQ, 6);
  CHECK(annihilates(g6, worked()));
  CHECK_FALSE(annihilates(g, worked()));
}

TEST_CASE("discrepancy") {
  auto G = from_sequence(kGF2, ints<GF2>(kGF2, {1, 1}));
  CHECK(to_string(G) == "x^-1+z^-1");
  auto G2 = from_sequence(kGF2, ints<GF2>(kGF2, {1, 0, 1}));
  CHECK(to_string(G2) == "x^-2+z^-2");
  // (x + z) against x^-1 z^-1 + z^-2, i.e. the sequence (1, 1, 0).
  auto H = from_sequence(kGF2, ints<GF2>(kGF2, {1, 1, 0}));
  CHECK(to_string(H) == "x^-1z^-1+z^-2");
  CHECK(discrepancy(Form<GF2>::from_ints(kGF2, {1, 1}), H) == GF2(true));

  CHECK(discrepancy(x_pow<Rational>(kQ, 5), worked().subform(-3)).is_zero());

  auto f4 = Form<Rational>::from_ints(kQ, {1, 0, 0, 0, 1});
  CHECK(discrepancy(f4, worked().subform(-5)) == Rational(1, 1));
}

TEST_CASE("leading terms") {
  auto f = Form<GF2>::from_ints(kGF2, {1, 1, 1});
  CHECK(grlex_lt(f).x_exp == 2);
  CHECK(leading_coefficient(f) == GF2(true));
  CHECK(in_ll(f));
  auto z = z_pow<GF2>(kGF2, 1);
  CHECK(grlex_lt(z).x_exp == 0);
  CHECK_FALSE(in_ll(z));
  auto g = Form<GF2>::from_ints(kGF2, {1, 1, 1, 1, 0});
  CHECK(to_string(g) == "x^3z+x^2z^2+xz^3+z^4");
  CHECK(grlex_lt(g).x_exp == 3);
  CHECK(grlex_lt(g).z_exp == 1);
  CHECK_FALSE(in_ll(g));
  CHECK_THROWS_AS(grlex_lt(Form<GF2>(kGF2)), std::domain_error);

  auto h = Form<Rational>::from_ints(kQ, {0, 0, 3, 2});
  CHECK(to_string(h) == "2x^3+3x^2z");
  CHECK_FALSE(is_monic(h));
  CHECK(to_string(make_monic(h)) == "x^3+(3/2)x^2z");
}

TEST_CASE("homogenization") {
  auto c = UniPoly<Rational>::from_ints(kQ, {-1, 1, 0, 0, 0, 1});
  CHECK(to_string(c) == "x^5+x-1");
  CHECK(to_string(homogenize(c)) == "x^5+xz^4-z^5");
  CHECK(homogenize(UniPoly<Rational>::from_ints(kQ, {1})) == Form<Rational>::one_form(kQ));
  CHECK(to_string(dehomogenize(Form<GF2>::from_ints(kGF2, {1, 1, 1}))) == "x^2+x+1");
  CHECK_THROWS_AS(dehomogenize(Form<GF2>::from_ints(kGF2, {1, 1, 0})), std::invalid_argument);
}

TEST_CASE("form gcd") {
  auto f = Form<Rational>::from_ints(kQ, {-1, 1, 0, 0, 0, 1});
  auto g = Form<Rational>::from_ints(kQ, {1, 1, 1, 1, 1, 0, 0});
  CHECK(form_gcd(f, g) == Form<Rational>::one_form(kQ));
  // Independent check: f(x, 1) and g(x, 1) / 1 share no root factor.
  auto fu = dehomogenize(f);
  auto gu = UniPoly<Rational>::from_ints(kQ, {1, 1, 1, 1, 1});
  CHECK(gcd(fu, gu).degree() == 0);

  auto xz = Form<GF2>::monomial(kGF2, 1, 1);
  CHECK(form_gcd(xz, z_pow<GF2>(kGF2, 2)) == z_pow<GF2>(kGF2, 1));
  auto h = Form<Rational>::from_ints(kQ, {0, 2, 4});
  CHECK(form_gcd(h, Form<Rational>(kQ)) == make_monic(h));

  // (x + z)(x + 2z) z and (x + z) z^2 over Q.
  auto a = Form<Rational>::from_ints(kQ, {1, 1}) * Form<Rational>::from_ints(kQ, {2, 1}) * z_pow<Rational>(kQ, 1);
  auto b = Form<Rational>::from_ints(kQ, {1, 1}) * z_pow<Rational>(kQ, 2);
  CHECK(to_string(form_gcd(a, b)) == "xz+z^2");
}

TEST_CASE("evaluation at (0, 1)") {
  CHECK(eval_at_01(Form<GF2>::from_ints(kGF2, {1, 1})) == GF2(true));
  CHECK(eval_at_01(x_pow<GF2>(kGF2, 1)) == GF2(false));
  CHECK(eval_at_01(Form<GF2>::from_ints(kGF2, {0, 0, 1, 1, 1})) == GF2(false));
}

// Sequence of an action result, with the zero result as `len` zeros.
template <FieldScalar S>
std::vector<S> padded(const std::optional<InverseForm<S>>& r, const FieldSpec& spec, std::size_t len) {
  return r ? to_sequence(*r) : std::vector<S>(len, zero<S>(spec));
}

template <FieldScalar S>
void check_properties(const FieldSpec& spec) {
  Rng rng(0xb1 + spec.characteristic());
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(1 + rng() % 10);
    auto s = seqideal::testing::random_sequence<S>(spec, n, rng);
    auto F = from_sequence(spec, s);
    REQUIRE(to_sequence(F) == s);

    const int deg = static_cast<int>(rng() % (n + 1));
    auto phi = seqideal::testing::random_form<S>(spec, deg, rng);
    auto psi = seqideal::testing::random_form<S>(spec, deg, rng);
    S a = seqideal::testing::random_element<S>(spec, rng);
    const int d = deg + F.degree();
    REQUIRE(apply(phi, F).has_value() == (d <= 0 && !phi.is_zero()));
    if (d <= 0) {
      const auto len = static_cast<std::size_t>(1 - d);
      auto lhs = padded(apply(phi + psi, F), spec, len);
      auto sum = padded(apply(phi, F), spec, len);
      auto rhs2 = padded(apply(psi, F), spec, len);
      for (std::size_t i = 0; i < len; ++i) sum[i] += rhs2[i];
      REQUIRE(lhs == sum);
      auto expect = padded(apply(phi, F), spec, len);
      for (auto& e : expect) e = a * e;
      REQUIRE(padded(apply(a * phi, F), spec, len) == expect);
    }

    // z^k drops the last k terms.
    const int k = static_cast<int>(rng() % n);
    auto zk = apply(z_pow<S>(spec, k), F);
    REQUIRE(zk);
    REQUIRE(to_sequence(*zk) == std::vector<S>(s.begin(), s.end() - k));

    auto c = seqideal::testing::random_monic<S>(spec, deg, rng);
    auto hc = homogenize(c);
    REQUIRE(hc.degree() == c.degree());
    REQUIRE(in_ll(hc));
    REQUIRE(is_monic(hc));
    REQUIRE(dehomogenize(hc) == c);
    REQUIRE(annihilates(hc, F) == seqideal::testing::satisfies_recurrence(c, s));
  }
}

TEST_CASE("linearity, round trips and the recurrence equivalence") {
  check_properties<GF2>(kGF2);
  check_properties<Fp>(FieldSpec::gfp(5));
  check_properties<Fp>(FieldSpec::gfp(7));
  check_properties<Rational>(kQ);
}

TEST_CASE("recurrence equivalence on sequences with many annihilators") {
  // Periodic sequences make satisfied recurrences common enough to exercise
  // the positive side of the equivalence.
  Rng rng(99);
  const auto gf3 = FieldSpec::gfp(3);
  int positives = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto period = 1 + rng() % 3;
    auto base = seqideal::testing::random_sequence<Fp>(gf3, period, rng);
    std::vector<Fp> s;
    for (std::size_t i = 0; i < 9; ++i) s.push_back(base[i % period]);
    auto c = seqideal::testing::random_monic<Fp>(gf3, static_cast<int>(rng() % 4), rng);
    const bool expect = seqideal::testing::satisfies_recurrence(c, s);
    positives += expect ? 1 : 0;
    REQUIRE(annihilates(homogenize(c), from_sequence(gf3, s)) == expect);
  }
  CHECK(positives > 20);
}
