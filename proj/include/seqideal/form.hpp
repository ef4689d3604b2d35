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

// Homogeneous forms in F[x, z].
//
// A form of degree d is stored densely by x-exponent: coeff(i) is the
// coefficient of x^i z^(d-i). Monomials are ordered grlex with x > z, so the
// leading term of a form is its nonzero term with the largest x-exponent.

#ifndef SEQIDEAL_FORM_HPP_
#define SEQIDEAL_FORM_HPP_

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal {

template <FieldScalar S>
class Form {
 public:
  // The zero form.
  explicit Form(FieldSpec spec) : spec_(spec) {}
  // coeffs.size() must equal degree + 1. An all-zero array yields the zero form.
  Form(FieldSpec spec, int degree, std::vector<S> coeffs) : spec_(spec), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
      throw std::invalid_argument("Form: coefficient array does not match degree");
    }
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return c.is_zero(); })) {
      coeffs_.clear();
      degree_ = -1;
    }
  }

  static Form monomial(FieldSpec spec, int x_exp, int z_exp, S c) {
    std::vector<S> v(static_cast<std::size_t>(x_exp + z_exp) + 1, zero<S>(spec));
    v[static_cast<std::size_t>(x_exp)] = std::move(c);
    return Form(spec, x_exp + z_exp, std::move(v));
  }
  static Form monomial(FieldSpec spec, int x_exp, int z_exp) { return monomial(spec, x_exp, z_exp, one<S>(spec)); }
  static Form one_form(FieldSpec spec) { return monomial(spec, 0, 0); }
  // Literal helper: integer coefficients by ascending x-exponent.
  static Form from_ints(FieldSpec spec, std::initializer_list<std::int64_t> ints) {
    std::vector<S> v;
    for (auto i : ints) v.push_back(S::from_int(spec, i));
    const int d = static_cast<int>(v.size()) - 1;
    return Form(spec, d, std::move(v));
  }

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Total degree; -1 for the zero form.
  int degree() const { return degree_; }
  S coeff(int x_exp) const {
    if (x_exp < 0 || x_exp > degree_) return zero<S>(spec_);
    return coeffs_[static_cast<std::size_t>(x_exp)];
  }
  std::span<const S> coeffs() const { return coeffs_; }

  // Unchecked mutable access for in-place updates; callers keep the
  // canonical-zero invariant by calling normalize() afterwards if needed.
  std::vector<S>& mutable_coeffs() { return coeffs_; }
  void normalize() {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return c.is_zero(); })) {
      coeffs_.clear();
      degree_ = -1;
    } else {
      degree_ = static_cast<int>(coeffs_.size()) - 1;
    }
  }

  // Multiplication by x^k and z^k.
  Form& shift_x(int k) {
    if (is_zero() || k == 0) return *this;
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(k), zero<S>(spec_));
    degree_ += k;
    return *this;
  }
  Form& shift_z(int k) {
    if (is_zero() || k == 0) return *this;
    coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k), zero<S>(spec_));
    degree_ += k;
    return *this;
  }

  // this -= c * x^k * other; requires degree() == k + other.degree().
  Form& sub_scaled_shifted(const S& c, int k, const Form& other) {
    if (c.is_zero() || other.is_zero()) return *this;
    if (is_zero()) {
      *this = other;
      shift_x(k);
      for (auto& v : coeffs_) v = -(c * v);
      return *this;
    }
    if (degree_ != other.degree_ + k) throw std::invalid_argument("Form: degree mismatch in subtraction");
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i + static_cast<std::size_t>(k)] -= c * other.coeffs_[i];
    }
    normalize();
    return *this;
  }

  Form& operator+=(const Form& o) { return sub_scaled_shifted(-one<S>(spec_), 0, o); }
  Form& operator-=(const Form& o) { return sub_scaled_shifted(one<S>(spec_), 0, o); }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Form operator*(const S& s, Form a) {
    if (s.is_zero()) return Form(a.spec_);
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }
  friend Form operator*(const Form& a, const Form& b) {
    if (a.is_zero() || b.is_zero()) return Form(a.spec_);
    std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, zero<S>(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Form(a.spec_, a.degree_ + b.degree_, std::move(out));
  }
  friend bool operator==(const Form& a, const Form& b) {
    return a.spec_ == b.spec_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldSpec spec_;
  int degree_ = -1;
  std::vector<S> coeffs_;
};

template <FieldScalar S>
Form<S> x_pow(const FieldSpec& spec, int k) {
  return Form<S>::monomial(spec, k, 0);
}

template <FieldScalar S>
Form<S> z_pow(const FieldSpec& spec, int k) {
  return Form<S>::monomial(spec, 0, k);
}

struct LeadingTerm {
  int x_exp;
  int z_exp;
};

// x-exponent of the grlex leading term; throws on the zero form.
template <FieldScalar S>
int leading_x_exponent(const Form<S>& phi) {
  if (phi.is_zero()) throw std::domain_error("leading term of the zero form");
  auto c = phi.coeffs();
  for (int i = phi.degree(); i >= 0; --i) {
    if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return 0;  // unreachable for canonical forms
}

template <FieldScalar S>
LeadingTerm grlex_lt(const Form<S>& phi) {
  const int i = leading_x_exponent(phi);
  return {i, phi.degree() - i};
}

template <FieldScalar S>
S leading_coefficient(const Form<S>& phi) {
  return phi.coeff(leading_x_exponent(phi));
}

// z does not divide the leading term.
template <FieldScalar S>
bool in_ll(const Form<S>& phi) {
  return !phi.is_zero() && !phi.coeff(phi.degree()).is_zero();
}

template <FieldScalar S>
bool is_monic(const Form<S>& phi) {
  return !phi.is_zero() && leading_coefficient(phi) == one<S>(phi.spec());
}

template <FieldScalar S>
Form<S> make_monic(Form<S> phi) {
  if (phi.is_zero()) return phi;
  const S inv = leading_coefficient(phi).inverse();
  return inv * std::move(phi);
}

// Largest e with z^e | phi.
template <FieldScalar S>
int z_valuation(const Form<S>& phi) {
  return phi.degree() - leading_x_exponent(phi);
}

// phi(0, 1), the coefficient of z^|phi|.
template <FieldScalar S>
S eval_at_01(const Form<S>& phi) {
  return phi.coeff(0);
}

template <FieldScalar S>
Form<S> homogenize(const UniPoly<S>& c) {
  if (c.is_zero()) return Form<S>(c.spec());
  return Form<S>(c.spec(), c.degree(), std::vector<S>(c.coeffs().begin(), c.coeffs().end()));
}

// f(x, 1) for f in LL; throws std::invalid_argument otherwise since the
// degree would drop.
template <FieldScalar S>
UniPoly<S> dehomogenize(const Form<S>& f) {
  if (!in_ll(f)) throw std::invalid_argument("dehomogenize: form is not a leading form (z divides its leading term)");
  return UniPoly<S>(f.spec(), std::vector<S>(f.coeffs().begin(), f.coeffs().end()));
}

// Monic gcd of two forms, not both zero. Each input is split as z^e * w^ with
// w univariate; the result is z^min(e) * gcd(w1, w2)^.
template <FieldScalar S>
Form<S> form_gcd(const Form<S>& phi, const Form<S>& psi) {
  if (phi.is_zero() && psi.is_zero()) throw std::invalid_argument("form_gcd: both arguments are zero");
  if (psi.is_zero()) return make_monic(phi);
  if (phi.is_zero()) return make_monic(psi);
  auto split = [](const Form<S>& f) {
    const int lx = leading_x_exponent(f);
    auto c = f.coeffs();
    return std::pair{f.degree() - lx, UniPoly<S>(f.spec(), std::vector<S>(c.begin(), c.begin() + lx + 1))};
  };
  auto [e1, w1] = split(phi);
  auto [e2, w2] = split(psi);
  Form<S> g = homogenize(gcd(std::move(w1), std::move(w2)));
  return g.shift_z(std::min(e1, e2));
}

// Sparse rendering, highest x-exponent first, e.g. "x^5+xz^4-z^5".
template <FieldScalar S>
std::string to_string(const Form<S>& phi) {
  if (phi.is_zero()) return "0";
  std::string out;
  for (int i = phi.degree(); i >= 0; --i) {
    const S& c = phi.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) detail::append_term(out, c, detail::power("x", i) + detail::power("z", phi.degree() - i));
  }
  return out;
}

}  // namespace seqideal

#endif  // SEQIDEAL_FORM_HPP_
