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

// Bit-packed GF(2)[x] polynomials and GF(2) forms. Addition is XOR over
// 64-bit limbs; multiplication by x is a one-bit shift.

#ifndef SEQIDEAL_GF2_PACKED_HPP_
#define SEQIDEAL_GF2_PACKED_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "seqideal/field.hpp"
#include "seqideal/form.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal {

class BitPoly {
 public:
  BitPoly() = default;
  static BitPoly monomial(int k);
  static BitPoly one() { return monomial(0); }
  // Bit i of the mask is the coefficient of x^i.
  static BitPoly from_mask(std::uint64_t mask);

  bool is_zero() const { return words_.empty(); }
  int degree() const;
  bool coeff(int i) const;
  void set(int i, bool bit);
  int popcount() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  // Multiplication by x^k.
  BitPoly& shift_left(int k);
  // this ^= other * x^k.
  BitPoly& xor_shifted(const BitPoly& other, int k);

  BitPoly& operator^=(const BitPoly& o) { return xor_shifted(o, 0); }
  friend BitPoly operator^(BitPoly a, const BitPoly& b) { return a ^= b; }
  friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a ^= b; }
  // Carry-less product.
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
  friend bool operator==(const BitPoly&, const BitPoly&) = default;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

// Quotient and remainder in GF(2)[x].
std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b);

UniPoly<GF2> unpack(const BitPoly& p);
BitPoly pack(const UniPoly<GF2>& p);
std::string to_string(const BitPoly& p);

// Homogeneous form of a given degree over GF(2); coefficient bit i belongs to
// x^i z^(degree-i). degree is -1 exactly when the form is zero.
class BitForm {
 public:
  BitForm() = default;
  BitForm(int degree, BitPoly coeffs);
  static BitForm monomial(int x_exp, int z_exp);

  bool is_zero() const { return degree_ < 0; }
  int degree() const { return degree_; }
  const BitPoly& coeffs() const { return coeffs_; }
  bool coeff(int x_exp) const { return coeffs_.coeff(x_exp); }
  int term_count() const { return coeffs_.popcount(); }

  BitForm& shift_x(int k = 1);
  BitForm& shift_z(int k = 1);
  // Throws std::invalid_argument when both operands are nonzero with
  // different degrees.
  BitForm& operator+=(const BitForm& o);
  friend BitForm operator+(BitForm a, const BitForm& b) { return a += b; }
  friend BitForm operator*(const BitForm& a, const BitForm& b);
  friend bool operator==(const BitForm&, const BitForm&) = default;

 private:
  int degree_ = -1;
  BitPoly coeffs_;
};

Form<GF2> unpack(const BitForm& f);
BitForm pack(const Form<GF2>& f);
std::string to_string(const BitForm& f);

}  // namespace seqideal

#endif  // SEQIDEAL_GF2_PACKED_HPP_
