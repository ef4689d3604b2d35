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

#include "seqideal/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

namespace seqideal {

namespace {

// Optional sign followed by one or more decimal digits.
bool is_signed_integer(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_big(std::string_view t) {
  bool negative = false;
  if (t.front() == '-' || t.front() == '+') {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  BigInt v{std::string(t)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::gfp(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("GF(p): modulus must be below 2^32");
  if (!is_prime(p)) throw std::invalid_argument("GF(p): modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::GFp, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "gf2") return gf2();
  if (text == "q") return rationals();
  constexpr std::string_view prefix = "gfp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad field modulus: '" + std::string(digits) + "'");
    }
    return gfp(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected gf2, gfp:<p> or q)");
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::GF2:
      return "gf2";
    case Kind::GFp:
      return "gfp:" + std::to_string(p_);
    case Kind::Rationals:
      return "q";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) { return os << spec.to_string(); }

// --- GF2 --------------------------------------------------------------------

GF2 GF2::from_int(const FieldSpec& spec, std::int64_t v) {
  if (spec.kind() != FieldSpec::Kind::GF2) throw FieldMismatch("GF2 scalar requested for field " + spec.to_string());
  return GF2((v & 1) != 0);
}

GF2 GF2::parse(std::string_view text, const FieldSpec& spec) {
  if (spec.kind() != FieldSpec::Kind::GF2) throw FieldMismatch("GF2 scalar requested for field " + spec.to_string());
  if (text == "0") return GF2(false);
  if (text == "1") return GF2(true);
  throw ParseError("GF(2) accepts only 0 or 1, got '" + std::string(text) + "'");
}

std::string to_string(const GF2& a) { return a.bit() ? "1" : "0"; }

// --- Fp ---------------------------------------------------------------------

Fp::Fp(std::int64_t value, std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("GF(p): modulus must be at least 2");
  if (value >= 0) {
    v_ = static_cast<std::uint64_t>(value) % p;
  } else {
    // -(value+1) avoids overflow at INT64_MIN.
    std::uint64_t m = static_cast<std::uint64_t>(-(value + 1)) % p;
    v_ = (p - 1 - m) % p;
  }
}

Fp Fp::from_int(const FieldSpec& spec, std::int64_t v) {
  if (spec.kind() != FieldSpec::Kind::GFp) throw FieldMismatch("GF(p) scalar requested for field " + spec.to_string());
  return Fp(v, spec.characteristic());
}

Fp Fp::parse(std::string_view text, const FieldSpec& spec) {
  if (spec.kind() != FieldSpec::Kind::GFp) throw FieldMismatch("GF(p) scalar requested for field " + spec.to_string());
  if (!is_signed_integer(text)) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  BigInt p(spec.characteristic());
  BigInt r = parse_big(text) % p;
  if (r < 0) r += p;
  return Fp(static_cast<std::int64_t>(r.convert_to<std::uint64_t>()), spec.characteristic());
}

std::vector<Fp> Fp::elements(const FieldSpec& spec) {
  std::vector<Fp> out;
  out.reserve(spec.characteristic());
  for (std::uint64_t v = 0; v < spec.characteristic(); ++v) out.push_back(Fp(static_cast<std::int64_t>(v), spec.characteristic()));
  return out;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("GF(p): inverse of zero");
  // Extended Euclid on (v, p).
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(v_);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::pair(t1, t0 - q * t1);
  }
  return Fp(t0, p_);
}

std::string to_string(const Fp& a) { return std::to_string(a.value()); }

// --- Rational ---------------------------------------------------------------

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Q: zero denominator");
  BigInt n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  v_ = BigRational(n, d);
}

Rational Rational::from_int(const FieldSpec& spec, std::int64_t v) {
  if (spec.kind() != FieldSpec::Kind::Rationals) throw FieldMismatch("rational scalar requested for field " + spec.to_string());
  return Rational(BigRational(v));
}

Rational Rational::parse(std::string_view text, const FieldSpec& spec) {
  if (spec.kind() != FieldSpec::Kind::Rationals) throw FieldMismatch("rational scalar requested for field " + spec.to_string());
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_signed_integer(num)) throw ParseError("expected a rational a or a/b, got '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(BigRational(parse_big(num)));
  std::string_view den = text.substr(slash + 1);
  if (!is_signed_integer(den)) throw ParseError("expected a rational a or a/b, got '" + std::string(text) + "'");
  BigInt d = parse_big(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  BigInt n = parse_big(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(BigRational(n, d));
}

std::string to_string(const Rational& a) {
  if (a.denominator() == 1) return a.numerator().str();
  return a.numerator().str() + "/" + a.denominator().str();
}

}  // namespace seqideal
