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

#include <set>

#include "doctest.h"
#include "seqideal/oracles.hpp"
#include "seqideal/rueppel.hpp"
#include "seqideal/vop.hpp"
#include "test_support.hpp"

using namespace seqideal;
using seqideal::testing::bits;
using seqideal::testing::ints;
using seqideal::testing::Rng;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::gf2();

std::vector<Rational> worked_seq() { return ints<Rational>(kQ, {1, 0, 0, 0, -1, 1, 0, 0, 1, -2}); }

template <FieldScalar S>
std::span<const S> sp(const std::vector<S>& v) {
  return {v.data(), v.size()};
}

}  // namespace

TEST_CASE("reciprocal") {
  auto c = UniPoly<Rational>::from_ints(kQ, {-1, 1, 0, 0, 0, 1});
  CHECK(to_string(reciprocal(c)) == "x^5-x^4-1");
  CHECK(to_string(reciprocal(UniPoly<GF2>::from_ints(kGF2, {1, 1}))) == "x+1");
  CHECK(to_string(reciprocal(UniPoly<GF2>::x_pow(kGF2, 3))) == "1");
  CHECK(to_string(reverse_at(UniPoly<GF2>::from_ints(kGF2, {0, 1}), 3)) == "x^2");
  Rng rng(5);
  const auto gf7 = FieldSpec::gfp(7);
  for (int t = 0; t < 200; ++t) {
    auto p = seqideal::testing::random_monic<Fp>(gf7, static_cast<int>(rng() % 8), rng);
    if (p.coeff(0).is_zero()) continue;
    REQUIRE(reciprocal(reciprocal(p)) == p);
  }
}

TEST_CASE("Berlekamp-Massey examples") {
  auto s = worked_seq();
  auto bm = berlekamp_massey(kQ, sp(s));
  CHECK(bm.L == 5);
  CHECK(to_string(bm.gamma) == "-x^5+x^4+1");
  CHECK(to_string(make_monic(bm.gamma)) == "x^5-x^4-1");
  CHECK(connection_matches(bm, UniPoly<Rational>::from_ints(kQ, {-1, 1, 0, 0, 0, 1})));

  auto z = bits("000000");
  auto bz = berlekamp_massey(kGF2, sp(z));
  CHECK(bz.L == 0);
  CHECK(to_string(bz.gamma) == "1");

  for (int k = 1; k <= 40; ++k) {
    auto r = rueppel::terms(2 * k);
    auto b = berlekamp_massey(kGF2, sp(r));
    REQUIRE(b.L == k);
    REQUIRE(b.gamma == reciprocal(dehomogenize(unpack(rueppel::ralg(2 * k).f))));
  }
}

TEST_CASE("brute-force minimal polynomials") {
  auto s = worked_seq();
  auto r = brute_force_min_poly(kQ, sp(s));
  CHECK(r.lambda == 5);
  CHECK(r.solution_dimension == 0);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(to_string(r.witnesses[0]) == "x^5+x-1");

  auto ten = rueppel::terms(10);
  CHECK(brute_force_min_poly(kGF2, sp(ten)).lambda == 5);

  auto one = bits("1");
  auto r1 = brute_force_min_poly(kGF2, sp(one));
  CHECK(r1.lambda == 1);
  std::set<std::string> w;
  for (const auto& p : r1.witnesses) w.insert(to_string(p));
  CHECK(w == std::set<std::string>{"x", "x+1"});
  CHECK(r1.complete);

  const FieldSpec big = FieldSpec::gfp(4294967291ULL);
  std::vector<Fp> big_one{Fp(1, 4294967291ULL)};
  auto rb = brute_force_min_poly(big, std::span<const Fp>(big_one));
  CHECK(rb.lambda == 1);
  CHECK_FALSE(rb.complete);
  CHECK(rb.solution_dimension == 1);
  REQUIRE(rb.witnesses.size() == 1);
  CHECK(rb.witnesses[0].degree() == 1);

  auto long_seq = std::vector<GF2>(17, GF2(true));
  CHECK_THROWS_AS(brute_force_min_poly(kGF2, sp(long_seq)), std::length_error);
  CHECK(brute_force_min_poly(kGF2, sp(long_seq), 32).lambda == 1);

  auto zeros = bits("0000");
  auto rz = brute_force_min_poly(kGF2, sp(zeros));
  CHECK(rz.lambda == 0);
  CHECK(to_string(rz.witnesses.at(0)) == "1");
}

TEST_CASE("brute force agrees with direct enumeration over GF(2)") {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<GF2> s;
      for (int i = 0; i < n; ++i) s.emplace_back(((mask >> i) & 1U) != 0);
      auto r = brute_force_min_poly(kGF2, sp(s));
      const int lambda = seqideal::testing::naive_lambda_gf2(s);
      REQUIRE(r.lambda == lambda);
      std::set<std::string> got, want;
      for (const auto& p : r.witnesses) got.insert(to_string(p));
      for (const auto& p : seqideal::testing::naive_min_polys_gf2(s, lambda)) want.insert(to_string(p));
      REQUIRE(got == want);
    }
  }
}

template <FieldScalar S>
void cross_check(const FieldSpec& spec, int trials, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto s = seqideal::testing::random_sequence<S>(spec, 1 + rng() % 10, rng);
    if (t % 5 == 0) s[0] = zero<S>(spec);
    auto vop = synthesize(spec, s);
    auto bf = brute_force_min_poly(spec, sp(s));
    auto bm = berlekamp_massey(spec, sp(s));
    REQUIRE(vop.lambda() == bf.lambda);
    REQUIRE(bm.L == bf.lambda);
    for (const auto& w : bf.witnesses) REQUIRE(seqideal::testing::satisfies_recurrence(w, s));
    if (vop.degenerate) continue;
    auto c = dehomogenize(vop.vop.f);
    REQUIRE(seqideal::testing::satisfies_recurrence(c, s));
    const bool unique = vop.vop.g.degree() > vop.vop.f.degree();
    if constexpr (S::kFinite) {
      REQUIRE(std::find(bf.witnesses.begin(), bf.witnesses.end(), c) != bf.witnesses.end());
      REQUIRE((bf.witnesses.size() == 1) == unique);
    } else {
      REQUIRE((bf.solution_dimension == 0) == unique);
      if (unique) REQUIRE(bf.witnesses.front() == c);
    }
    if (unique) {
      REQUIRE(connection_matches(bm, c));
      REQUIRE(make_monic(bm.gamma) == reciprocal(c));
    }
  }
}

TEST_CASE("oracles agree on random sequences") {
  cross_check<GF2>(kGF2, 500, 21);
  cross_check<Fp>(FieldSpec::gfp(5), 500, 22);
  cross_check<Fp>(FieldSpec::gfp(7), 500, 23);
  cross_check<Rational>(kQ, 500, 24);
}

TEST_CASE("Euclidean construction on Rueppel prefixes") {
  auto r2 = rueppel::terms(2);
  auto e1 = dai_ea(kGF2, 1, sp(r2));
  REQUIRE(e1.quotients.size() == 1);
  CHECK(to_string(e1.quotients[0]) == "x+1");
  CHECK(to_string(e1.c) == "x+1");

  auto r4 = rueppel::terms(4);
  auto e2 = dai_ea(kGF2, 2, sp(r4));
  REQUIRE(e2.quotients.size() == 2);
  CHECK(to_string(e2.quotients[1]) == "x");
  CHECK(to_string(e2.c) == "x^2+x+1");

  for (int k = 1; k <= 64; ++k) {
    auto r = rueppel::terms(2 * k);
    auto e = dai_ea(kGF2, k, sp(r));
    REQUIRE(static_cast<int>(e.quotients.size()) == k);
    for (int i = 1; i < k; ++i) REQUIRE(to_string(e.quotients[static_cast<std::size_t>(i)]) == "x");
    REQUIRE(e.c == dehomogenize(unpack(rueppel::ralg(2 * k).f)));
  }
  CHECK_THROWS_AS(dai_ea(kGF2, 2, sp(r2)), std::invalid_argument);
}

TEST_CASE("Euclidean construction over other fields") {
  // The last c satisfies the recurrence and has degree lambda whenever the
  // minimal polynomial of the 2k terms has degree at most k.
  Rng rng(8);
  const auto gf5 = FieldSpec::gfp(5);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const int k = 1 + static_cast<int>(rng() % 5);
    auto s = seqideal::testing::random_sequence<Fp>(gf5, static_cast<std::size_t>(2 * k), rng);
    auto e = dai_ea(gf5, k, sp(s));
    const int lambda = linear_complexity(gf5, s);
    if (lambda > k) continue;
    ++checked;
    REQUIRE(e.c.degree() == lambda);
    REQUIRE(seqideal::testing::satisfies_recurrence(make_monic(e.c), s));
  }
  CHECK(checked > 100);
}
