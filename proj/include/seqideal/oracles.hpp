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

// Reference implementations used to cross-check the VOP construction. None of
// these share code with vop.hpp beyond the scalar and polynomial types.

#ifndef SEQIDEAL_ORACLES_HPP_
#define SEQIDEAL_ORACLES_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal {

// x^|c| c(1/x), made monic. Involutive on polynomials with c(0) != 0.
template <FieldScalar S>
UniPoly<S> reciprocal(const UniPoly<S>& c) {
  if (c.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  std::vector<S> rev(c.coeffs().rbegin(), c.coeffs().rend());
  return make_monic(UniPoly<S>(c.spec(), std::move(rev)));
}

// x^L c(1/x) without normalization: coefficient i is c_{L-i}. For a monic c of
// degree <= L this is the connection polynomial with constant term 1.
template <FieldScalar S>
UniPoly<S> reverse_at(const UniPoly<S>& c, int L) {
  std::vector<S> rev;
  rev.reserve(static_cast<std::size_t>(L) + 1);
  for (int i = 0; i <= L; ++i) rev.push_back(c.coeff(L - i));
  return UniPoly<S>(c.spec(), std::move(rev));
}

// ---------------------------------------------------------------------------
// Massey's LFSR synthesis.

template <FieldScalar S>
struct BMResult {
  int L = 0;
  UniPoly<S> gamma;  // connection polynomial, gamma_0 = 1, degree <= L
};

template <FieldScalar S>
BMResult<S> berlekamp_massey(const FieldSpec& spec, std::span<const S> seq) {
  UniPoly<S> C = UniPoly<S>::constant(spec, one<S>(spec));
  UniPoly<S> B = C;
  int L = 0;
  int m = 1;
  S b = one<S>(spec);
  for (std::size_t N = 0; N < seq.size(); ++N) {
    S d = seq[N];
    for (int i = 1; i <= L; ++i) d += C.coeff(i) * seq[N - static_cast<std::size_t>(i)];
    if (d.is_zero()) {
      ++m;
      continue;
    }
    UniPoly<S> update = (d / b) * (UniPoly<S>::x_pow(spec, m) * B);
    if (2 * L <= static_cast<int>(N)) {
      UniPoly<S> T = C;
      C -= update;
      L = static_cast<int>(N) + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      C -= update;
      ++m;
    }
  }
  return {L, std::move(C)};
}

// True iff gamma is the connection polynomial of the monic characteristic
// polynomial c at length L, comparing the zero-padded degree-L coefficient
// vectors (gamma_L may vanish).
template <FieldScalar S>
bool connection_matches(const BMResult<S>& bm, const UniPoly<S>& c) {
  return c.degree() <= bm.L && reverse_at(c, bm.L) == bm.gamma;
}

// ---------------------------------------------------------------------------
// Minimal polynomials straight from the definition: the smallest l for which
//   c_l s_{k+l} + ... + c_0 s_k = 0  (0 <= k <= n-l-1)
// has a monic solution, found by exact Gaussian elimination.

template <FieldScalar S>
struct BruteForceResult {
  int lambda = 0;
  // Over finite fields: every monic solution of degree lambda. Over Q: one
  // particular solution.
  std::vector<UniPoly<S>> witnesses;
  // Dimension of the affine solution space.
  int solution_dimension = 0;
  // False when the finite solution set exceeded max_witnesses; witnesses then
  // holds one particular solution.
  bool complete = true;
};

namespace detail {

// Solves A c = rhs. Returns nullopt if inconsistent, else a particular
// solution and a basis of the null space.
template <FieldScalar S>
std::optional<std::pair<std::vector<S>, std::vector<std::vector<S>>>> solve_affine(
    const FieldSpec& spec, std::vector<std::vector<S>> A, std::vector<S> rhs, std::size_t cols) {
  const std::size_t rows = A.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(rhs[p], rhs[r]);
    const S inv = A[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) A[r][k] = A[r][k] * inv;
    rhs[r] = rhs[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      const S factor = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= factor * A[r][k];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<S> particular(cols, zero<S>(spec));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) particular[pivot_col[i]] = rhs[i];
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(cols, zero<S>(spec));
    v[free] = one<S>(spec);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][free];
    basis.push_back(std::move(v));
  }
  return std::pair{std::move(particular), std::move(basis)};
}

}  // namespace detail

inline constexpr std::size_t kBruteForceDefaultBound = 16;

template <FieldScalar S>
BruteForceResult<S> brute_force_min_poly(const FieldSpec& spec, std::span<const S> seq,
                                         std::size_t max_length = kBruteForceDefaultBound,
                                         std::size_t max_witnesses = std::size_t{1} << 16) {
  if (seq.size() > max_length) {
    throw std::length_error("brute_force_min_poly: sequence length " + std::to_string(seq.size()) + " exceeds bound " +
                            std::to_string(max_length));
  }
  const int n = static_cast<int>(seq.size());
  for (int l = 0; l <= n; ++l) {
    // Unknowns c_0..c_{l-1}; c_l = 1.
    std::vector<std::vector<S>> A;
    std::vector<S> rhs;
    for (int k = 0; k + l <= n - 1; ++k) {
      std::vector<S> row;
      for (int i = 0; i < l; ++i) row.push_back(seq[static_cast<std::size_t>(k + i)]);
      A.push_back(std::move(row));
      rhs.push_back(-seq[static_cast<std::size_t>(k + l)]);
    }
    auto sol = detail::solve_affine(spec, std::move(A), std::move(rhs), static_cast<std::size_t>(l));
    if (!sol) continue;
    auto& [particular, basis] = *sol;
    BruteForceResult<S> out;
    out.lambda = l;
    out.solution_dimension = static_cast<int>(basis.size());
    auto to_poly = [&](std::vector<S> c) {
      c.push_back(one<S>(spec));
      return UniPoly<S>(spec, std::move(c));
    };
    if constexpr (S::kFinite) {
      const auto q = static_cast<std::size_t>(spec.characteristic());
      std::size_t total = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (total > max_witnesses / q) {
          out.complete = false;
          out.witnesses.push_back(to_poly(std::move(particular)));
          return out;
        }
        total *= q;
      }
      const auto elems = basis.empty() ? std::vector<S>{} : S::elements(spec);
      std::vector<std::size_t> digits(basis.size(), 0);
      for (std::size_t t = 0; t < total; ++t) {
        std::vector<S> c = particular;
        for (std::size_t b = 0; b < basis.size(); ++b) {
          for (std::size_t i = 0; i < c.size(); ++i) c[i] += elems[digits[b]] * basis[b][i];
        }
        out.witnesses.push_back(to_poly(std::move(c)));
        for (std::size_t i = 0; i < digits.size() && ++digits[i] == elems.size(); ++i) digits[i] = 0;
      }
    } else {
      out.witnesses.push_back(to_poly(particular));
    }
    return out;
  }
  throw std::logic_error("brute_force_min_poly: x^n must be feasible");
}

// ---------------------------------------------------------------------------
// Euclidean-algorithm construction of the minimal polynomial of 2k terms:
// r_{-1} = x^{2k}, r_0 = s_0 x^{2k-1} + ... + s_{2k-1}, then
// r_{i-2} = q_i r_{i-1} + r_i and c_i = q_i c_{i-1} + c_{i-2} (c_{-1} = 0,
// c_0 = 1), stopping at the first i with |r_i| < k.

template <FieldScalar S>
struct EAResult {
  UniPoly<S> c;
  std::vector<UniPoly<S>> quotients;      // q_1, q_2, ...
  std::vector<int> remainder_degrees;     // |r_1|, |r_2|, ... (-1 for zero)
};

template <FieldScalar S>
EAResult<S> dai_ea(const FieldSpec& spec, int k, std::span<const S> seq) {
  if (k < 1 || seq.size() != static_cast<std::size_t>(2 * k)) {
    throw std::invalid_argument("dai_ea: expected exactly 2k terms with k >= 1");
  }
  std::vector<S> r0c(seq.rbegin(), seq.rend());
  UniPoly<S> prev = UniPoly<S>::x_pow(spec, 2 * k);
  UniPoly<S> cur(spec, std::move(r0c));
  UniPoly<S> c_prev(spec);
  UniPoly<S> c_cur = UniPoly<S>::constant(spec, one<S>(spec));
  EAResult<S> out{c_cur, {}, {}};
  while (!cur.is_zero() && cur.degree() >= k) {
    auto [q, r] = divmod(prev, cur);
    UniPoly<S> c_next = q * c_cur + c_prev;
    out.quotients.push_back(std::move(q));
    out.remainder_degrees.push_back(r.degree());
    prev = std::move(cur);
    cur = std::move(r);
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  out.c = std::move(c_cur);
  return out;
}

}  // namespace seqideal

#endif  // SEQIDEAL_ORACLES_HPP_
