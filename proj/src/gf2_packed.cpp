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

#include "seqideal/gf2_packed.hpp"

#include <bit>
#include <stdexcept>

namespace seqideal {

namespace {
constexpr int kBits = 64;
}

BitPoly BitPoly::monomial(int k) {
  BitPoly p;
  p.set(k, true);
  return p;
}

BitPoly BitPoly::from_mask(std::uint64_t mask) {
  BitPoly p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

int BitPoly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(words_.back()));
}

bool BitPoly::coeff(int i) const {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i / kBits);
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kBits)) & 1U;
}

void BitPoly::set(int i, bool bit) {
  if (i < 0) throw std::out_of_range("BitPoly::set: negative index");
  const auto w = static_cast<std::size_t>(i / kBits);
  if (w >= words_.size()) {
    if (!bit) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % kBits);
  words_[w] = bit ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

int BitPoly::popcount() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

BitPoly& BitPoly::shift_left(int k) {
  if (is_zero() || k == 0) return *this;
  BitPoly out;
  out.xor_shifted(*this, k);
  return *this = std::move(out);
}

BitPoly& BitPoly::xor_shifted(const BitPoly& other, int k) {
  if (other.is_zero()) return *this;
  const auto word_shift = static_cast<std::size_t>(k / kBits);
  const int bit_shift = k % kBits;
  const std::size_t need = other.words_.size() + word_shift + (bit_shift != 0 ? 1 : 0);
  if (words_.size() < need) words_.resize(need, 0);
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i + word_shift] ^= other.words_[i];
  } else {
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      words_[i + word_shift] ^= other.words_[i] << bit_shift;
      words_[i + word_shift + 1] ^= other.words_[i] >> (kBits - bit_shift);
    }
  }
  trim();
  return *this;
}

void BitPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
  const BitPoly& sparse = a.popcount() <= b.popcount() ? a : b;
  const BitPoly& dense = &sparse == &a ? b : a;
  BitPoly out;
  for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
    std::uint64_t word = sparse.words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.xor_shifted(dense, static_cast<int>(w) * kBits + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b) {
  if (b.is_zero()) throw std::domain_error("BitPoly division by zero");
  BitPoly q, r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    q.set(shift, true);
    r.xor_shifted(b, shift);
  }
  return {q, r};
}

UniPoly<GF2> unpack(const BitPoly& p) {
  std::vector<GF2> c;
  c.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
  return UniPoly<GF2>(FieldSpec::gf2(), std::move(c));
}

BitPoly pack(const UniPoly<GF2>& p) {
  BitPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).bit()) out.set(i, true);
  }
  return out;
}

std::string to_string(const BitPoly& p) { return to_string(unpack(p)); }

// --- BitForm ------------------------------------------------------------------

BitForm::BitForm(int degree, BitPoly coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.is_zero()) {
    degree_ = -1;
  } else if (coeffs_.degree() > degree_) {
    throw std::invalid_argument("BitForm: coefficient beyond the form degree");
  }
}

BitForm BitForm::monomial(int x_exp, int z_exp) { return BitForm(x_exp + z_exp, BitPoly::monomial(x_exp)); }

BitForm& BitForm::shift_x(int k) {
  if (is_zero()) return *this;
  coeffs_.shift_left(k);
  degree_ += k;
  return *this;
}

BitForm& BitForm::shift_z(int k) {
  if (is_zero()) return *this;
  degree_ += k;
  return *this;
}

BitForm& BitForm::operator+=(const BitForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_) throw std::invalid_argument("BitForm: adding forms of different degrees");
  coeffs_ ^= o.coeffs_;
  if (coeffs_.is_zero()) degree_ = -1;
  return *this;
}

BitForm operator*(const BitForm& a, const BitForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return BitForm(a.degree_ + b.degree_, a.coeffs_ * b.coeffs_);
}

Form<GF2> unpack(const BitForm& f) {
  if (f.is_zero()) return Form<GF2>(FieldSpec::gf2());
  std::vector<GF2> c;
  c.reserve(static_cast<std::size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) c.emplace_back(f.coeff(i));
  return Form<GF2>(FieldSpec::gf2(), f.degree(), std::move(c));
}

BitForm pack(const Form<GF2>& f) {
  if (f.is_zero()) return {};
  BitPoly c;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i).bit()) c.set(i, true);
  }
  return BitForm(f.degree(), std::move(c));
}

std::string to_string(const BitForm& f) { return to_string(unpack(f)); }

}  // namespace seqideal
