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

#include "seqideal/rueppel.hpp"

#include <bit>
#include <stdexcept>

#include "seqideal/vop.hpp"

namespace seqideal::rueppel {

std::vector<bool> sequence(int n) {
  if (n < 1) throw std::invalid_argument("rueppel: n must be at least 1");
  std::vector<bool> r(static_cast<std::size_t>(n), false);
  for (std::uint64_t p = 1; p - 1 < static_cast<std::uint64_t>(n); p <<= 1) r[p - 1] = true;
  return r;
}

std::vector<GF2> terms(int n) {
  auto bits = sequence(n);
  return {bits.begin(), bits.end()};
}

InverseForm<GF2> inverse_form(int n) { return InverseForm<GF2>::from_sequence(FieldSpec::gf2(), terms(n)); }

// --- ralg -------------------------------------------------------------------

Stepper::Stepper() : vop_{BitForm(1, BitPoly::from_mask(0b11)), BitForm::monomial(0, 1)} {}

void Stepper::step() {
  auto& [f, g] = vop_;
  if (k_ % 2 == 1) {
    BitForm t = f;
    f.shift_x(1);
    f += g;
    g = std::move(t);
  }
  g.shift_z(1);
  ++k_;
}

BitVop ralg(int n) {
  if (n < 1) throw std::invalid_argument("ralg: n must be at least 1");
  Stepper s;
  while (s.k() < n - 1) s.step();
  return s.vop();
}

// --- matrices ---------------------------------------------------------------

StepMatrix StepMatrix::identity() {
  StepMatrix m;
  m.a[0][0] = BitForm::monomial(0, 0);
  m.a[1][1] = BitForm::monomial(0, 0);
  return m;
}

StepMatrix StepMatrix::E() {
  StepMatrix m;
  m.a[0][0] = BitForm::monomial(0, 0);
  m.a[1][1] = BitForm::monomial(0, 1);
  return m;
}

StepMatrix StepMatrix::U() {
  StepMatrix m;
  m.a[0][0] = BitForm::monomial(1, 0);
  m.a[0][1] = BitForm::monomial(0, 1);
  m.a[1][0] = BitForm::monomial(0, 0);
  return m;
}

StepMatrix StepMatrix::P() { return U() * E(); }

StepMatrix operator*(const StepMatrix& l, const StepMatrix& r) {
  StepMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.a[i][j] = l.a[i][0] * r.a[0][j] + l.a[i][1] * r.a[1][j];
  }
  return out;
}

BitVop operator*(const BitVop& row, const StepMatrix& m) {
  return {row.f * m.a[0][0] + row.g * m.a[1][0], row.f * m.a[0][1] + row.g * m.a[1][1]};
}

namespace {

StepMatrix matrix_pow(StepMatrix base, std::uint64_t e) {
  StepMatrix acc = StepMatrix::identity();
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

}  // namespace

BitVop matrix_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("matrix_recurrence: n must be at least 1");
  const int k = n - 1;
  const BitForm x_plus_z(1, BitPoly::from_mask(0b11));
  if (k == 0) return {x_plus_z, BitForm::monomial(0, 1)};
  const BitVop base{x_plus_z, BitForm::monomial(0, 2)};
  const auto i = static_cast<std::uint64_t>(k / 2);
  if (k % 2 == 1) return base * matrix_pow(StepMatrix::P(), i);
  return base * (matrix_pow(StepMatrix::P(), i - 1) * StepMatrix::U());
}

// --- closed form --------------------------------------------------------------

BitForm closed_form(std::uint64_t l) {
  if (l == 0 || !std::has_single_bit(l)) throw std::invalid_argument("closed_form: l must be a power of two");
  const int li = static_cast<int>(l);
  BitPoly c = BitPoly::monomial(li);
  for (std::uint64_t p = 1; p <= l; p <<= 1) c.set(li - static_cast<int>(p), true);
  return BitForm(li, std::move(c));
}

// --- discrepancy parity ----------------------------------------------------------

bool delta_parity_check(int n, int* first_failure) {
  if (n < 2) throw std::invalid_argument("delta_parity_check: n must be at least 2");
  const FieldSpec gf2 = FieldSpec::gf2();
  Vop<GF2> seed{Form<GF2>::from_ints(gf2, {1, 1}), z_pow<GF2>(gf2, 1)};
  auto st = VopState<GF2>::seeded(inverse_form(n), std::move(seed), 1, GF2(true));
  while (!st.done()) {
    const auto& row = st.step();
    const int k = row.k - 1;
    const bool delta = !row.delta->is_zero();
    const bool ok = delta == (k % 2 == 1) && (k % 2 == 0 || *row.d_before == 1);
    if (!ok) {
      if (first_failure != nullptr) *first_failure = k;
      return false;
    }
  }
  return true;
}

// --- quadratic extension ------------------------------------------------------

QuadExt operator*(const QuadExt& l, const QuadExt& r) {
  // rho^2 = x rho + 1.
  BitPoly bd = l.b_ * r.b_;
  BitPoly a = l.a_ * r.a_ ^ bd;
  BitPoly b = l.a_ * r.b_ ^ l.b_ * r.a_;
  b.xor_shifted(bd, 1);
  return {std::move(a), std::move(b)};
}

QuadExt pow(QuadExt base, std::uint64_t e) {
  QuadExt acc = QuadExt::one();
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

QuadExtReport quad_ext_report(int k) {
  if (k < 1) throw std::invalid_argument("quad_ext_identity: k must be at least 1");
  const auto ek = static_cast<std::uint64_t>(k);
  QuadExtReport rep;
  rep.k = k;
  rep.eta = (QuadExt::one() + QuadExt::rho()) * pow(QuadExt::rho(), ek) +
            (QuadExt::one() + QuadExt::rho_inverse()) * pow(QuadExt::rho_inverse(), ek);
  rep.rho_component_zero = rep.eta.b().is_zero();
  BitPoly expected = ralg(2 * k).f.coeffs();
  expected.shift_left(1);
  rep.matches_generator = rep.rho_component_zero && rep.eta.a() == expected;
  rep.divisible_by_x = !rep.eta.a().is_zero() && !rep.eta.a().coeff(0);
  rep.degree_is_k_plus_1 = rep.eta.a().degree() == k + 1;
  return rep;
}

// --- sweeps -------------------------------------------------------------------

namespace {

bool fail_at(int k, int* first_failure) {
  if (first_failure != nullptr) *first_failure = k;
  return false;
}

}  // namespace

bool plcp_sweep(int n, int* first_failure) {
  if (n < 1) throw std::invalid_argument("plcp_sweep: n must be at least 1");
  Stepper s;
  for (int len = 1; len <= n; ++len) {
    if (s.vop().f.degree() != (len + 1) / 2) return fail_at(len, first_failure);
    if (len < n) s.step();
  }
  return true;
}

bool closed_form_sweep(int n, int* first_failure) {
  if (n < 1) throw std::invalid_argument("closed_form_sweep: n must be at least 1");
  Stepper s;
  for (std::uint64_t l = 1; 2 * l <= static_cast<std::uint64_t>(n); l <<= 1) {
    while (s.k() < static_cast<int>(2 * l) - 1) s.step();
    if (s.vop().f != closed_form(l)) return fail_at(static_cast<int>(l), first_failure);
  }
  return true;
}

bool matrix_sweep(int n, int* first_failure) {
  if (n < 1) throw std::invalid_argument("matrix_sweep: n must be at least 1");
  const StepMatrix E = StepMatrix::E(), U = StepMatrix::U();
  Stepper s;
  BitVop row = s.vop();
  for (int k = 0; k < n - 1; ++k) {
    row = row * (k % 2 == 0 ? E : U);
    s.step();
    if (row != s.vop()) return fail_at(k + 1, first_failure);
  }
  if (matrix_recurrence(n) != s.vop()) return fail_at(n - 1, first_failure);
  return true;
}

bool quad_ext_sweep(int max_k, int* first_failure) {
  if (max_k < 1) throw std::invalid_argument("quad_ext_sweep: k must be at least 1");
  const QuadExt one_plus_rho = QuadExt::one() + QuadExt::rho();
  const QuadExt one_plus_inv = QuadExt::one() + QuadExt::rho_inverse();
  QuadExt p = QuadExt::rho(), q = QuadExt::rho_inverse();
  Stepper s;
  for (int k = 1; k <= max_k; ++k) {
    const QuadExt eta = one_plus_rho * p + one_plus_inv * q;
    while (s.k() < 2 * k - 1) s.step();
    BitPoly expected = s.vop().f.coeffs();
    expected.shift_left(1);
    const bool ok = eta.b().is_zero() && eta.a() == expected && !eta.a().coeff(0) && eta.a().degree() == k + 1;
    if (!ok) return fail_at(k, first_failure);
    p = p * QuadExt::rho();
    q = q * QuadExt::rho_inverse();
  }
  if (!quad_ext_identity(max_k)) return fail_at(max_k, first_failure);
  return true;
}

}  // namespace seqideal::rueppel
