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

// Shared generators and test-only oracles.

#ifndef SEQIDEAL_TESTS_TEST_SUPPORT_HPP_
#define SEQIDEAL_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/form.hpp"
#include "seqideal/inverse_form.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal::testing {

using Rng = std::mt19937_64;

template <FieldScalar S>
S random_element(const FieldSpec& spec, Rng& rng) {
  if constexpr (std::is_same_v<S, GF2>) {
    return GF2((rng() & 1U) != 0);
  } else if constexpr (std::is_same_v<S, Fp>) {
    return Fp(static_cast<std::int64_t>(rng() % spec.characteristic()), spec.characteristic());
  } else {
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
  }
}

template <FieldScalar S>
std::vector<S> random_sequence(const FieldSpec& spec, std::size_t n, Rng& rng) {
  std::vector<S> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(random_element<S>(spec, rng));
  return s;
}

template <FieldScalar S>
Form<S> random_form(const FieldSpec& spec, int degree, Rng& rng) {
  std::vector<S> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element<S>(spec, rng));
  return Form<S>(spec, degree, std::move(c));
}

template <FieldScalar S>
UniPoly<S> random_monic(const FieldSpec& spec, int degree, Rng& rng) {
  std::vector<S> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element<S>(spec, rng));
  c.push_back(one<S>(spec));
  return UniPoly<S>(spec, std::move(c));
}

// c_l s_{k+l} + ... + c_0 s_k = 0 for all 0 <= k <= n-l-1, checked directly.
template <FieldScalar S>
bool satisfies_recurrence(const UniPoly<S>& c, const std::vector<S>& s) {
  const int l = c.degree();
  const int n = static_cast<int>(s.size());
  for (int k = 0; k + l <= n - 1; ++k) {
    S acc = zero<S>(c.spec());
    for (int i = 0; i <= l; ++i) acc += c.coeff(i) * s[static_cast<std::size_t>(k + i)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

// Linear complexity over GF(2) by enumerating every monic polynomial of each
// degree as a bit mask. Exponential; n <= 14 or so.
inline int naive_lambda_gf2(const std::vector<GF2>& s) {
  const int n = static_cast<int>(s.size());
  for (int l = 0; l <= n; ++l) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
      bool ok = true;
      for (int k = 0; ok && k + l <= n - 1; ++k) {
        bool acc = s[static_cast<std::size_t>(k + l)].bit();
        for (int i = 0; i < l; ++i) acc ^= ((mask >> i) & 1U) && s[static_cast<std::size_t>(k + i)].bit();
        ok = !acc;
      }
      if (ok) return l;
    }
  }
  return n;
}

// All monic degree-l polynomials over GF(2) satisfying the recurrence.
inline std::vector<UniPoly<GF2>> naive_min_polys_gf2(const std::vector<GF2>& s, int l) {
  std::vector<UniPoly<GF2>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<GF2> c;
    for (int i = 0; i < l; ++i) c.emplace_back(((mask >> i) & 1U) != 0);
    c.emplace_back(true);
    UniPoly<GF2> p(FieldSpec::gf2(), std::move(c));
    if (satisfies_recurrence(p, s)) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<GF2> bits(const std::string& text) {
  std::vector<GF2> out;
  for (char ch : text) out.emplace_back(ch == '1');
  return out;
}

template <FieldScalar S>
std::vector<S> ints(const FieldSpec& spec, std::initializer_list<std::int64_t> v) {
  std::vector<S> out;
  for (auto i : v) out.push_back(S::from_int(spec, i));
  return out;
}

}  // namespace seqideal::testing

#endif  // SEQIDEAL_TESTS_TEST_SUPPORT_HPP_
