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

// Inductive construction of a generating pair (f, g) for the annihilator
// ideal I_F of an inverse form F.
//
// A viable ordered pair (VOP) for I_F satisfies
//   * f, g nonzero and monic, z does not divide LT(f), z divides g,
//   * I_F = <f, g>,
//   * |f| + |g| = 2 - |F|.
// Then |f| is the linear complexity of the sequence and f(x, 1) is a minimal
// polynomial. The construction consumes one sequence term per step and costs
// O(|f| + |g|) field operations per step, O(n^2) in total.

#ifndef SEQIDEAL_VOP_HPP_
#define SEQIDEAL_VOP_HPP_

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/form.hpp"
#include "seqideal/inverse_form.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal {

template <FieldScalar S>
struct Vop {
  Form<S> f;  // leading generator
  Form<S> g;  // cogenerator

  friend bool operator==(const Vop&, const Vop&) = default;
};

// One row of a linear-complexity profile. Row k describes the prefix
// s_0..s_k: lambda = |f^(k)|. The step fields record the construction step
// that produced row k from row k-1 (discrepancy Delta_{k-1}, d_{k-1}, and the
// multiplier q = Delta / Delta'); they are empty for rows that no step
// produced (leading zeros and the first nonzero term).
template <FieldScalar S>
struct ProfileEntry {
  int k = 0;
  int lambda = 0;
  std::optional<S> delta;
  std::optional<int> d_before;
  std::optional<S> q;
  std::optional<S> delta_prime;  // Delta' in effect when q was formed
};

// SEQIDEAL_DEBUG_ASSERTS=1 turns on per-step invariant checks (O(n) extra
// work per step).
inline bool debug_asserts_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("SEQIDEAL_DEBUG_ASSERTS");
    return v != nullptr && std::string(v) == "1";
  }();
  return enabled;
}

// Every violated VOP property for (vop, F), empty when the pair is viable.
// The gcd test covers coprimality of the generators.
template <FieldScalar S>
std::vector<std::string> vop_violations(const InverseForm<S>& F, const Vop<S>& vop, bool check_gcd = true) {
  std::vector<std::string> out;
  const auto& [f, g] = vop;
  if (f.is_zero() || g.is_zero()) {
    out.emplace_back("zero generator");
    return out;
  }
  if (!in_ll(f)) out.emplace_back("f is not a leading form");
  if (!is_monic(f)) out.emplace_back("f is not monic");
  if (!is_monic(g)) out.emplace_back("g is not monic");
  if (!g.coeff(g.degree()).is_zero()) out.emplace_back("z does not divide g");
  if (f.degree() + g.degree() != 2 - F.degree()) out.emplace_back("|f| + |g| != 2 - |F|");
  if (!annihilates(f, F)) out.emplace_back("f does not annihilate F");
  if (!annihilates(g, F)) out.emplace_back("g does not annihilate F");
  if (check_gcd && form_gcd(f, g).degree() != 0) out.emplace_back("gcd(f, g) != 1");
  return out;
}

// State of the construction after consuming the prefix s_0..s_{-j} of F.
template <FieldScalar S>
class VopState {
 public:
  // Inductive basis: scans to the order v of F and starts from
  // (x^{1-v}, z) with d = v. Throws std::invalid_argument for F = 0.
  //
  // Delta' starts at F_v, the discrepancy of g = z against the next subform;
  // this is 1 when F is normalized (F_v = 1) and keeps q = Delta / Delta'
  // correct for unnormalized inputs over any field.
  static VopState init(InverseForm<S> F) {
    auto v = F.order();
    if (!v) throw std::invalid_argument("VopState::init: zero inverse form");
    const FieldSpec spec = F.spec();
    VopState st(std::move(F), Vop<S>{x_pow<S>(spec, 1 - *v), z_pow<S>(spec, 1)}, *v, *v);
    st.delta_prime_ = st.F_.coeff(*v);
    for (int k = 0; k < -*v; ++k) st.profile_.push_back(ProfileEntry<S>{k, 0, {}, {}, {}, {}});
    st.profile_.push_back(ProfileEntry<S>{-*v, 1 - *v, {}, {}, {}, {}});
    return st;
  }

  // Resume from a known VOP for the prefix of length `prefix_length`, with
  // Delta' the discrepancy of vop.g against the next subform.
  static VopState seeded(InverseForm<S> F, Vop<S> vop, std::size_t prefix_length, S delta_prime) {
    if (prefix_length == 0 || prefix_length > F.length()) throw std::out_of_range("VopState::seeded: bad prefix length");
    const int j = 1 - static_cast<int>(prefix_length);
    const int d = vop.g.degree() - vop.f.degree();
    VopState st(std::move(F), std::move(vop), j, d);
    st.delta_prime_ = std::move(delta_prime);
    st.profile_.push_back(ProfileEntry<S>{-j, st.vop_.f.degree(), {}, {}, {}, {}});
    return st;
  }

  const Vop<S>& vop() const { return vop_; }
  const InverseForm<S>& inverse_form() const { return F_; }
  const std::vector<ProfileEntry<S>>& profile() const { return profile_; }
  int d() const { return d_; }
  const S& delta_prime() const { return delta_prime_; }
  // Index of the subform generated so far; the consumed prefix is s_0..s_{-j}.
  int j() const { return j_; }
  bool done() const { return j_ == F_.degree(); }

  // Discrepancy the next step would see if the next term were `a`.
  S next_discrepancy(const S& a) const {
    std::vector<S> window(F_.sequence().begin(), F_.sequence().begin() + (1 - j_));
    window.push_back(a);
    return discrepancy(vop_.f, std::span<const S>(window), F_.spec());
  }

  // Consumes F_{j-1} and updates (f, g); returns the new profile row.
  const ProfileEntry<S>& step() {
    if (done()) throw std::logic_error("VopState::step: inverse form exhausted");
    const FieldSpec& spec = F_.spec();
    auto prefix = F_.sequence().first(static_cast<std::size_t>(2 - j_));
    const S delta = discrepancy(vop_.f, prefix, spec);
    const S used_delta_prime = delta_prime_;
    const S q = delta / delta_prime_;
    const int d_before = d_;
    auto& [f, g] = vop_;
    if (!delta.is_zero()) {
      if (d_ <= 0) {
        f.sub_scaled_shifted(q, -d_, g);
      } else {
        Form<S> t = f;
        f.shift_x(d_);
        f.sub_scaled_shifted(q, 0, g);
        g = std::move(t);
        delta_prime_ = delta;
        d_ = -d_;
      }
    }
    g.shift_z(1);
    d_ += 1;
    j_ -= 1;
    profile_.push_back(ProfileEntry<S>{-j_, f.degree(), delta, d_before, q, used_delta_prime});
    if (debug_asserts_enabled()) {
      auto consumed = F_.sequence().first(static_cast<std::size_t>(1 - j_));
      auto bad = vop_violations(InverseForm<S>::from_sequence(spec, {consumed.begin(), consumed.end()}), vop_, false);
      if (!bad.empty()) throw std::logic_error("VOP invariant violated at k=" + std::to_string(-j_) + ": " + bad.front());
      if (d_ != g.degree() - f.degree()) throw std::logic_error("d out of sync with |g| - |f|");
    }
    return profile_.back();
  }

  // Appends a term to F and consumes it.
  const ProfileEntry<S>& push(const S& a) {
    if (!done()) throw std::logic_error("VopState::push: pending terms not yet consumed");
    F_.augment_in_place(a);
    return step();
  }

  void run() {
    while (!done()) step();
  }

 private:
  VopState(InverseForm<S> F, Vop<S> vop, int j, int d)
      : F_(std::move(F)), vop_(std::move(vop)), delta_prime_(one<S>(F_.spec())), j_(j), d_(d) {}

  InverseForm<S> F_;
  Vop<S> vop_;
  S delta_prime_;
  int j_;
  int d_;
  std::vector<ProfileEntry<S>> profile_;
};

template <FieldScalar S>
struct SynthesisResult {
  Vop<S> vop;
  std::vector<ProfileEntry<S>> profile;
  // All-zero input: f = 1, g = z^{2-|F|}, lambda = 0.
  bool degenerate = false;

  int lambda() const { return vop.f.degree(); }
};

// Streaming front end accepting one term at a time, including leading zeros.
template <FieldScalar S>
class Synthesizer {
 public:
  explicit Synthesizer(FieldSpec spec) : spec_(spec) {}

  void push(const S& a) {
    if (state_) {
      state_->push(a);
      return;
    }
    zeros_.push_back(a);
    if (!a.is_zero()) {
      state_ = VopState<S>::init(InverseForm<S>::from_sequence(spec_, std::move(zeros_)));
      zeros_.clear();
    }
  }

  std::size_t length() const { return state_ ? state_->inverse_form().length() : zeros_.size(); }
  bool degenerate() const { return !state_; }
  const std::optional<VopState<S>>& state() const { return state_; }

  SynthesisResult<S> result() const {
    if (state_) return {state_->vop(), state_->profile(), false};
    SynthesisResult<S> r{{Form<S>::one_form(spec_), z_pow<S>(spec_, static_cast<int>(zeros_.size()) + 1)}, {}, true};
    for (std::size_t k = 0; k < zeros_.size(); ++k) r.profile.push_back(ProfileEntry<S>{static_cast<int>(k), 0, {}, {}, {}, {}});
    return r;
  }

 private:
  FieldSpec spec_;
  std::vector<S> zeros_;
  std::optional<VopState<S>> state_;
};

// Batch construction. Total: the all-zero form yields the degenerate pair.
template <FieldScalar S>
SynthesisResult<S> synthesize(const InverseForm<S>& F) {
  if (F.is_zero()) {
    Synthesizer<S> s(F.spec());
    for (const auto& a : F.sequence()) s.push(a);
    return s.result();
  }
  auto st = VopState<S>::init(F);
  st.run();
  return {st.vop(), st.profile(), false};
}

template <FieldScalar S>
SynthesisResult<S> synthesize(const FieldSpec& spec, std::vector<S> seq) {
  return synthesize(InverseForm<S>::from_sequence(spec, std::move(seq)));
}

template <FieldScalar S>
int linear_complexity(const FieldSpec& spec, std::vector<S> seq) {
  return synthesize(spec, std::move(seq)).lambda();
}

template <FieldScalar S>
UniPoly<S> minimal_polynomial(const FieldSpec& spec, std::vector<S> seq) {
  return dehomogenize(synthesize(spec, std::move(seq)).vop.f);
}

// ---------------------------------------------------------------------------
// Minimal-degree leading forms of I_F.

template <FieldScalar S>
struct Theta {
  enum class Kind { Unique, Parametric };
  Kind kind;
  Form<S> f;
  Form<S> g;
  // |f| - |g| for the parametric family {f + psi g : psi a form of this degree}.
  int free_degree = 0;

  bool is_unique() const { return kind == Kind::Unique; }
};

template <FieldScalar S>
Theta<S> minimal_leading_forms(const Vop<S>& vop) {
  const int df = vop.f.degree(), dg = vop.g.degree();
  if (dg > df) return {Theta<S>::Kind::Unique, vop.f, vop.g, 0};
  return {Theta<S>::Kind::Parametric, vop.f, vop.g, df - dg};
}

// Expands a Theta description over a finite field. Throws
// std::invalid_argument over the rationals and std::length_error when the set
// would exceed `limit` elements.
template <FieldScalar S>
std::vector<Form<S>> enumerate_theta(const Theta<S>& theta, std::size_t limit = std::size_t{1} << 20) {
  if (theta.is_unique()) return {theta.f};
  const FieldSpec& spec = theta.f.spec();
  if constexpr (!S::kFinite) {
    throw std::invalid_argument("enumerate_theta: infinite set over the rationals");
  } else {
    const auto q = static_cast<std::size_t>(spec.characteristic());
    const std::size_t width = static_cast<std::size_t>(theta.free_degree) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < width; ++i) {
      if (total > limit / q) throw std::length_error("enumerate_theta: set too large");
      total *= q;
    }
    const auto elems = S::elements(spec);
    std::vector<Form<S>> out;
    out.reserve(total);
    std::vector<std::size_t> digits(width, 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<S> c;
      c.reserve(width);
      for (auto dgt : digits) c.push_back(elems[dgt]);
      Form<S> psi(spec, theta.free_degree, std::move(c));
      out.push_back(theta.f + psi * theta.g);
      for (std::size_t i = 0; i < width && ++digits[i] == elems.size(); ++i) digits[i] = 0;
    }
    return out;
  }
}

// ---------------------------------------------------------------------------
// Perfect linear complexity profile: s_0 != 0 and lambda_k = floor((k+2)/2)
// for every prefix. Also checks the equivalent shift criterion (Delta_k != 0
// with d_k = 1 exactly at odd k) and throws std::logic_error if the two
// disagree.
template <FieldScalar S>
bool is_plcp(const std::vector<ProfileEntry<S>>& profile) {
  if (profile.empty() || profile.front().lambda != 1) return false;
  bool by_lambda = true;
  for (const auto& e : profile) by_lambda = by_lambda && e.lambda == (e.k + 2) / 2;
  bool by_shift = true;
  for (std::size_t i = 1; i < profile.size(); ++i) {
    const auto& e = profile[i];
    const int k = e.k - 1;  // row i carries Delta_{k}, d_{k}
    const bool shift_is_x = e.delta && !e.delta->is_zero() && e.d_before == 1;
    by_shift = by_shift && (shift_is_x == (k % 2 == 1));
  }
  if (by_lambda != by_shift) throw std::logic_error("is_plcp: profile and shift criteria disagree");
  return by_lambda;
}

}  // namespace seqideal

#endif  // SEQIDEAL_VOP_HPP_
