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

// Exact scalar fields: GF(2), GF(p) for prime p, and the rationals.
//
// Every scalar type models the FieldScalar concept below. Algorithms in the
// rest of the library are templated on the scalar; a FieldSpec travels with
// every container so that zero and one can be produced for runtime moduli.

#ifndef SEQIDEAL_FIELD_HPP_
#define SEQIDEAL_FIELD_HPP_

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqideal {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class FieldSpec {
 public:
  enum class Kind { GF2, GFp, Rationals };

  static FieldSpec gf2() { return FieldSpec(Kind::GF2, 2); }
  // Throws std::invalid_argument unless p is a prime below 2^32.
  static FieldSpec gfp(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  // Accepts "gf2", "gfp:<p>" and "q".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  // Characteristic; 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ != Kind::Rationals; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Fp;
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec);

// Deterministic trial division.
bool is_prime(std::uint64_t n);

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// GF(2)

class GF2 {
 public:
  static constexpr bool kFinite = true;

  constexpr GF2() = default;
  constexpr explicit GF2(bool bit) : bit_(bit) {}

  static GF2 from_int(const FieldSpec& spec, std::int64_t v);
  // Only the literals "0" and "1" are accepted.
  static GF2 parse(std::string_view text, const FieldSpec& spec);
  static std::vector<GF2> elements(const FieldSpec&) { return {GF2(false), GF2(true)}; }

  FieldSpec spec() const { return FieldSpec::gf2(); }
  constexpr bool bit() const { return bit_; }
  constexpr bool is_zero() const { return !bit_; }
  GF2 inverse() const {
    if (!bit_) throw std::domain_error("GF(2): inverse of zero");
    return *this;
  }

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.bit_ != b.bit_); }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2(a.bit_ != b.bit_); }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.bit_ && b.bit_); }
  friend GF2 operator/(GF2 a, GF2 b) { return a * b.inverse(); }
  friend constexpr GF2 operator-(GF2 a) { return a; }
  GF2& operator+=(GF2 o) { return *this = *this + o; }
  GF2& operator-=(GF2 o) { return *this = *this - o; }
  GF2& operator*=(GF2 o) { return *this = *this * o; }
  friend constexpr bool operator==(GF2, GF2) = default;

 private:
  bool bit_ = false;
};

std::string to_string(const GF2& a);

// ---------------------------------------------------------------------------
// GF(p), runtime modulus carried by every element.

class Fp {
 public:
  static constexpr bool kFinite = true;

  // value is reduced modulo p.
  Fp(std::int64_t value, std::uint64_t p);

  static Fp from_int(const FieldSpec& spec, std::int64_t v);
  // Signed decimal integers of any length, reduced mod p.
  static Fp parse(std::string_view text, const FieldSpec& spec);
  static std::vector<Fp> elements(const FieldSpec& spec);

  FieldSpec spec() const { return FieldSpec(FieldSpec::Kind::GFp, p_); }
  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  Fp inverse() const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    return raw(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return raw(a.v_ * b.v_ % a.p_, a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r(0, p);
    r.v_ = v;
    return r;
  }
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw FieldMismatch("GF(p): operands from different fields");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::string to_string(const Fp& a);

// ---------------------------------------------------------------------------
// The rationals, arbitrary precision, always in lowest terms.

class Rational {
 public:
  static constexpr bool kFinite = false;

  Rational() = default;
  explicit Rational(BigRational v) : v_(std::move(v)) {}
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_int(const FieldSpec& spec, std::int64_t v);
  // "a" or "a/b" with b != 0; signs allowed on either part.
  static Rational parse(std::string_view text, const FieldSpec& spec);

  FieldSpec spec() const { return FieldSpec::rationals(); }
  const BigRational& value() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  Rational inverse() const {
    if (v_.is_zero()) throw std::domain_error("Q: inverse of zero");
    return Rational(BigRational(1) / v_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  BigRational v_;
};

std::string to_string(const Rational& a);

// ---------------------------------------------------------------------------

template <class S>
concept FieldScalar = std::copyable<S> && std::equality_comparable<S> &&
    requires(const S a, const S b, const FieldSpec& spec, std::int64_t i, std::string_view t) {
      { a + b } -> std::same_as<S>;
      { a - b } -> std::same_as<S>;
      { a * b } -> std::same_as<S>;
      { a / b } -> std::same_as<S>;
      { -a } -> std::same_as<S>;
      { a.is_zero() } -> std::same_as<bool>;
      { a.inverse() } -> std::same_as<S>;
      { a.spec() } -> std::same_as<FieldSpec>;
      { S::from_int(spec, i) } -> std::same_as<S>;
      { S::parse(t, spec) } -> std::same_as<S>;
      { to_string(a) } -> std::same_as<std::string>;
      { S::kFinite } -> std::convertible_to<bool>;
    };

template <FieldScalar S>
S zero(const FieldSpec& spec) {
  return S::from_int(spec, 0);
}

template <FieldScalar S>
S one(const FieldSpec& spec) {
  return S::from_int(spec, 1);
}

// True iff the scalar type can represent elements of the field described by
// spec (GF2 <-> gf2, Fp <-> gfp:p, Rational <-> q).
template <FieldScalar S>
bool scalar_matches(const FieldSpec& spec);

template <>
inline bool scalar_matches<GF2>(const FieldSpec& spec) {
  return spec.kind() == FieldSpec::Kind::GF2;
}
template <>
inline bool scalar_matches<Fp>(const FieldSpec& spec) {
  return spec.kind() == FieldSpec::Kind::GFp;
}
template <>
inline bool scalar_matches<Rational>(const FieldSpec& spec) {
  return spec.kind() == FieldSpec::Kind::Rationals;
}

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const S& a) {
  return os << to_string(a);
}

}  // namespace seqideal

#endif  // SEQIDEAL_FIELD_HPP_
