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

// Dense univariate polynomials F[x], coefficients in ascending degree.

#ifndef SEQIDEAL_UNIPOLY_HPP_
#define SEQIDEAL_UNIPOLY_HPP_

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqideal/field.hpp"

namespace seqideal {

template <FieldScalar S>
class UniPoly {
 public:
  explicit UniPoly(FieldSpec spec) : spec_(spec) {}
  UniPoly(FieldSpec spec, std::vector<S> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(FieldSpec spec, S c) { return UniPoly(spec, {std::move(c)}); }
  static UniPoly monomial(FieldSpec spec, int degree, S c) {
    std::vector<S> v(static_cast<std::size_t>(degree) + 1, zero<S>(spec));
    v.back() = std::move(c);
    return UniPoly(spec, std::move(v));
  }
  static UniPoly x_pow(FieldSpec spec, int degree) { return monomial(spec, degree, one<S>(spec)); }
  // Convenience for tests and literals: coefficients as integers, ascending.
  static UniPoly from_ints(FieldSpec spec, std::initializer_list<std::int64_t> ints) {
    std::vector<S> v;
    for (auto i : ints) v.push_back(S::from_int(spec, i));
    return UniPoly(spec, std::move(v));
  }

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  S coeff(int i) const {
    if (i < 0 || i > degree()) return zero<S>(spec_);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  std::span<const S> coeffs() const { return coeffs_; }
  const S& leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && coeffs_.back() == one<S>(spec_); }

  S operator()(const S& x) const {
    S acc = zero<S>(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero<S>(spec_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero<S>(spec_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UniPoly operator*(const S& s, UniPoly a) {
    if (s.is_zero()) return UniPoly(a.spec_);
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.spec_);
    std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, zero<S>(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.spec_, std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  FieldSpec spec_;
  std::vector<S> coeffs_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
template <FieldScalar S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldSpec& spec = a.spec();
  std::vector<S> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<S>(spec), a};
  std::vector<S> quot(static_cast<std::size_t>(a.degree() - db) + 1, zero<S>(spec));
  const S lead_inv = b.leading_coefficient().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const S c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly<S>(spec, std::move(quot)), UniPoly<S>(spec, std::move(rem))};
}

template <FieldScalar S>
UniPoly<S> make_monic(UniPoly<S> p) {
  if (p.is_zero()) return p;
  const S inv = p.leading_coefficient().inverse();
  return inv * std::move(p);
}

// Monic gcd; gcd(0, 0) = 0.
template <FieldScalar S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    UniPoly<S> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

namespace detail {

// Renders c * mono where mono is a (possibly empty) monomial string.
template <FieldScalar S>
void append_term(std::string& out, const S& c, const std::string& mono) {
  std::string cs = to_string(c);
  bool negative = !cs.empty() && cs.front() == '-';
  if (negative) cs.erase(0, 1);
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (mono.empty()) {
    out += cs;
  } else if (cs != "1") {
    out += cs.find('/') != std::string::npos ? "(" + cs + ")" : cs;
    out += mono;
  } else {
    out += mono;
  }
}

inline std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

// Sparse rendering, highest degree first, e.g. "x^5+x-1".
template <FieldScalar S>
std::string to_string(const UniPoly<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const S& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) detail::append_term(out, c, detail::power("x", i));
  }
  return out;
}

}  // namespace seqideal

#endif  // SEQIDEAL_UNIPOLY_HPP_
