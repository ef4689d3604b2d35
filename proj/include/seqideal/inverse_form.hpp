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

// Inverse forms in F[x^-1, z^-1] and the action of F[x, z] on them.
//
// The sequence (s_0, ..., s_{n-1}) corresponds to the inverse form
//
//   F = s_{n-1} x^{1-n} + s_{n-2} x^{2-n} z^{-1} + ... + s_0 z^{1-n}
//
// of total degree m = 1 - n. Storage is by sequence position, so the
// coefficient F_j of x^j z^{m-j} (m <= j <= 0) is s_{-j}. This is the only
// place where the negative-exponent bookkeeping lives.

#ifndef SEQIDEAL_INVERSE_FORM_HPP_
#define SEQIDEAL_INVERSE_FORM_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/form.hpp"

namespace seqideal {

template <FieldScalar S>
class InverseForm {
 public:
  // Throws std::invalid_argument on an empty sequence.
  static InverseForm from_sequence(FieldSpec spec, std::vector<S> seq) {
    if (seq.empty()) throw std::invalid_argument("InverseForm: empty sequence");
    return InverseForm(spec, std::move(seq));
  }
  // x^m with m <= 0, i.e. the sequence (0, ..., 0, 1) of length 1 - m.
  static InverseForm x_pow(FieldSpec spec, int m) {
    if (m > 0) throw std::invalid_argument("InverseForm: positive degree");
    std::vector<S> seq(static_cast<std::size_t>(1 - m), zero<S>(spec));
    seq.back() = one<S>(spec);
    return InverseForm(spec, std::move(seq));
  }

  const FieldSpec& spec() const { return spec_; }
  // Total degree m = 1 - n.
  int degree() const { return 1 - static_cast<int>(seq_.size()); }
  std::size_t length() const { return seq_.size(); }
  std::span<const S> sequence() const { return seq_; }

  // F_j, the coefficient of x^j z^{m-j}; zero outside m <= j <= 0.
  S coeff(int j) const {
    if (j > 0 || j < degree()) return zero<S>(spec_);
    return seq_[static_cast<std::size_t>(-j)];
  }

  bool is_zero() const {
    return std::all_of(seq_.begin(), seq_.end(), [](const S& c) { return c.is_zero(); });
  }

  // v(F) = max{j : F_j != 0}; nullopt for the all-zero form.
  std::optional<int> order() const {
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (!seq_[i].is_zero()) return -static_cast<int>(i);
    }
    return std::nullopt;
  }

  // F^(j) for m <= j <= v(F): the inverse form of the prefix s_0..s_{-j}.
  InverseForm subform(int j) const {
    auto v = order();
    if (!v) throw std::out_of_range("subform: zero inverse form has no order");
    if (j < degree() || j > *v) {
      throw std::out_of_range("subform: index " + std::to_string(j) + " outside [" + std::to_string(degree()) + ", " +
                              std::to_string(*v) + "]");
    }
    return InverseForm(spec_, std::vector<S>(seq_.begin(), seq_.begin() + (1 - j)));
  }

  // a x^{m-1} + F z^{-1}: appends a to the sequence.
  InverseForm augment(const S& a) const {
    InverseForm g = *this;
    g.augment_in_place(a);
    return g;
  }
  void augment_in_place(const S& a) { seq_.push_back(a); }

  friend bool operator==(const InverseForm& a, const InverseForm& b) {
    return a.spec_ == b.spec_ && a.seq_ == b.seq_;
  }

 private:
  InverseForm(FieldSpec spec, std::vector<S> seq) : spec_(spec), seq_(std::move(seq)) {}

  FieldSpec spec_;
  std::vector<S> seq_;
};

template <FieldScalar S>
InverseForm<S> from_sequence(FieldSpec spec, std::vector<S> seq) {
  return InverseForm<S>::from_sequence(spec, std::move(seq));
}

template <FieldScalar S>
std::vector<S> to_sequence(const InverseForm<S>& F) {
  return {F.sequence().begin(), F.sequence().end()};
}

// phi o F. Returns nullopt when phi = 0 or |phi| + |F| > 0 (every monomial
// product leaves the module, so the action is zero); otherwise the inverse form of degree
// d = |phi| + |F| whose x^j coefficient is [phi . F]_j for d <= j <= 0. The
// returned form may itself be all-zero.
template <FieldScalar S>
std::optional<InverseForm<S>> apply(const Form<S>& phi, const InverseForm<S>& F) {
  if (phi.spec() != F.spec()) throw FieldMismatch("apply: form and inverse form over different fields");
  if (phi.is_zero()) return std::nullopt;
  const int d = phi.degree() + F.degree();
  if (d > 0) return std::nullopt;
  auto seq = F.sequence();
  auto c = phi.coeffs();
  // Result position t (x-exponent -t) collects phi_i * F_{-t-i} = phi_i * s_{t+i}.
  std::vector<S> out(static_cast<std::size_t>(1 - d), zero<S>(F.spec()));
  for (std::size_t t = 0; t < out.size(); ++t) {
    S acc = zero<S>(F.spec());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) acc += c[i] * seq[t + i];
    }
    out[t] = std::move(acc);
  }
  return InverseForm<S>::from_sequence(F.spec(), std::move(out));
}

// phi o F == 0.
template <FieldScalar S>
bool annihilates(const Form<S>& phi, const InverseForm<S>& F) {
  auto r = apply(phi, F);
  return !r || r->is_zero();
}

// Discrepancy of f against the inverse form of the sequence prefix `seq`:
// [f . G]_(|f|+|G|, 0), or zero when |f| + |G| > 0. Computed as a windowed
// dot product over the last |f| + 1 terms; the product is never formed.
template <FieldScalar S>
S discrepancy(const Form<S>& f, std::span<const S> seq, const FieldSpec& spec) {
  const int n = static_cast<int>(seq.size());
  if (f.is_zero() || f.degree() + 1 - n > 0) return zero<S>(spec);
  // x-exponent e = |f| + |G|; coefficient i of f meets G_{e-i} = s_{i-e}.
  const int offset = n - 1 - f.degree();
  auto c = f.coeffs();
  S acc = zero<S>(spec);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) acc += c[i] * seq[static_cast<std::size_t>(offset) + i];
  }
  return acc;
}

template <FieldScalar S>
S discrepancy(const Form<S>& f, const InverseForm<S>& G) {
  if (f.spec() != G.spec()) throw FieldMismatch("discrepancy: operands over different fields");
  return discrepancy(f, G.sequence(), G.spec());
}

// Rendering in ascending x-exponent, e.g. "x^-3+x^-1z^-2+z^-3"; "0" when all
// coefficients vanish.
template <FieldScalar S>
std::string to_string(const InverseForm<S>& F) {
  std::string out;
  const int m = F.degree();
  for (int j = m; j <= 0; ++j) {
    S c = F.coeff(j);
    if (c.is_zero()) continue;
    std::string mono;
    if (j != 0) mono += "x^" + std::to_string(j);
    if (m - j != 0) mono += "z^" + std::to_string(m - j);
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace seqideal

#endif  // SEQIDEAL_INVERSE_FORM_HPP_
