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

// The Rueppel sequence r_i = 1 iff i = 2^k - 1, and the generator pairs of
// the annihilator ideals of its prefixes.
//
// Indexing follows the construction: the pair for the prefix r_0..r_k is
// (f^(k), g^(k)), so ralg(n) returns the pair after k = n - 1 steps. Starting
// from (x + z, z), the update from k to k + 1 is
//
//   (f, z g)        if k is even,
//   (x f + g, z f)  if k is odd,
//
// and |f^(k)| = floor((k + 2) / 2).

#ifndef SEQIDEAL_RUEPPEL_HPP_
#define SEQIDEAL_RUEPPEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/gf2_packed.hpp"
#include "seqideal/inverse_form.hpp"

namespace seqideal::rueppel {

// r_0..r_{n-1}; throws std::invalid_argument for n < 1.
std::vector<bool> sequence(int n);
std::vector<GF2> terms(int n);
InverseForm<GF2> inverse_form(int n);

struct BitVop {
  BitForm f;
  BitForm g;

  friend bool operator==(const BitVop&, const BitVop&) = default;
};

// Division- and multiplication-free recurrence, one step per term.
class Stepper {
 public:
  Stepper();
  // Pair for the prefix r_0..r_k.
  const BitVop& vop() const { return vop_; }
  int k() const { return k_; }
  void step();

 private:
  BitVop vop_;
  int k_ = 0;
};

// Pair for r_0..r_{n-1}.
BitVop ralg(int n);

// Same pair via products of the 2x2 step matrices
//   E = [[1, 0], [0, z]],  U = [[x, z], [1, 0]],  P = U E,
// with (f^(2i+1), g^(2i+1)) = (x + z, z^2) P^i and
// (f^(2i), g^(2i)) = (x + z, z^2) P^(i-1) U.
BitVop matrix_recurrence(int n);

// 2x2 matrix over GF(2)[x, z]; entry (r, c) is a form.
struct StepMatrix {
  BitForm a[2][2];

  static StepMatrix identity();
  static StepMatrix E();
  static StepMatrix U();
  static StepMatrix P();

  friend StepMatrix operator*(const StepMatrix& l, const StepMatrix& r);
  friend bool operator==(const StepMatrix&, const StepMatrix&) = default;
};

// Row vector (f, g) times M.
BitVop operator*(const BitVop& row, const StepMatrix& m);

// x^l + sum_{j=0}^{log2 l} x^{l-2^j} z^{2^j} for l a power of two; throws
// std::invalid_argument otherwise.
BitForm closed_form(std::uint64_t l);

// Generic-field construction seeded with (x + z, z) on r_0..r_{n-1}; true iff
// Delta_k = k mod 2 and d_k = 1 at odd k for 0 <= k <= n - 2. The optional
// out-parameter receives the first failing k.
bool delta_parity_check(int n, int* first_failure = nullptr);

// a + b rho in GF(2)[x][rho] / (rho^2 + x rho + 1).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(BitPoly a, BitPoly b) : a_(std::move(a)), b_(std::move(b)) {}
  static QuadExt one() { return {BitPoly::one(), {}}; }
  static QuadExt rho() { return {{}, BitPoly::one()}; }
  // rho^-1 = rho + x, since rho (rho + x) = rho^2 + x rho = 1.
  static QuadExt rho_inverse() { return {BitPoly::monomial(1), BitPoly::one()}; }

  const BitPoly& a() const { return a_; }
  const BitPoly& b() const { return b_; }

  friend QuadExt operator+(const QuadExt& l, const QuadExt& r) { return {l.a_ ^ r.a_, l.b_ ^ r.b_}; }
  friend QuadExt operator*(const QuadExt& l, const QuadExt& r);
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  BitPoly a_;
  BitPoly b_;
};

// Square-and-multiply.
QuadExt pow(QuadExt base, std::uint64_t e);

struct QuadExtReport {
  int k = 0;
  QuadExt eta;                  // (1 + rho) rho^k + (1 + rho^-1) rho^-k
  bool rho_component_zero = false;
  bool matches_generator = false;  // eta == x f^(2k-1)(x, 1)
  bool divisible_by_x = false;
  bool degree_is_k_plus_1 = false;

  bool ok() const { return rho_component_zero && matches_generator && divisible_by_x && degree_is_k_plus_1; }
};

QuadExtReport quad_ext_report(int k);
inline bool quad_ext_identity(int k) { return quad_ext_report(k).ok(); }

// Prefix sweeps: one serial pass each, O(n^2 / 64) word operations. Each
// returns true iff the property holds at every index in range and otherwise
// stores the first failing index in `first_failure` when non-null.

// |f^(n-1)| = floor((n + 1) / 2) for every length 1..n.
bool plcp_sweep(int n, int* first_failure = nullptr);
// ralg(2l).f == closed_form(l) for every power of two l with 2l <= n.
bool closed_form_sweep(int n, int* first_failure = nullptr);
// (f^(k+1), g^(k+1)) = (f^(k), g^(k)) M_k with M_k = E (k even), U (k odd),
// for every k < n - 1, and matrix_recurrence(n) == ralg(n).
bool matrix_sweep(int n, int* first_failure = nullptr);
// The identity checked by quad_ext_report for every 1 <= k <= max_k, with
// rho^k and rho^-k maintained incrementally; k = max_k is additionally
// recomputed by square-and-multiply.
bool quad_ext_sweep(int max_k, int* first_failure = nullptr);

}  // namespace seqideal::rueppel

#endif  // SEQIDEAL_RUEPPEL_HPP_
