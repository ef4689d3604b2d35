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

// Field-independent analysis report with JSON and text renderings.
//
// Polynomials and forms serialize as {"degree": d, "coeffs": [c_0, ..., c_d]}
// with decimal-string coefficients ("a/b" over Q). For a form, c_i belongs to
// x^i z^(d-i). The zero polynomial is {"degree": -1, "coeffs": []}.

#ifndef SEQIDEAL_REPORT_HPP_
#define SEQIDEAL_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "seqideal/field.hpp"
#include "seqideal/form.hpp"
#include "seqideal/unipoly.hpp"

namespace seqideal {

struct SerializedPoly {
  int degree = -1;
  std::vector<std::string> coeffs;

  friend bool operator==(const SerializedPoly&, const SerializedPoly&) = default;
};

template <FieldScalar S>
SerializedPoly serialize(const Form<S>& f) {
  SerializedPoly out{f.degree(), {}};
  for (const auto& c : f.coeffs()) out.coeffs.push_back(to_string(c));
  return out;
}

template <FieldScalar S>
SerializedPoly serialize(const UniPoly<S>& p) {
  SerializedPoly out{p.degree(), {}};
  for (const auto& c : p.coeffs()) out.coeffs.push_back(to_string(c));
  return out;
}

struct ProfileRow {
  int k = 0;
  int lambda = 0;
  std::optional<std::string> delta;  // Delta_{k-1}
  std::optional<int> d;              // d_{k-1}

  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

struct BmCheck {
  int L = 0;
  SerializedPoly gamma;
  bool agrees = false;

  friend bool operator==(const BmCheck&, const BmCheck&) = default;
};

struct OracleCheck {
  int lambda = 0;
  bool agrees = false;

  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct AnalysisReport {
  std::string field;
  int n = 0;
  int lambda = 0;
  SerializedPoly f;
  SerializedPoly g;
  SerializedPoly min_poly;
  std::vector<ProfileRow> profile;  // empty unless requested
  bool plcp = false;
  // "unique", "parametric(<deg>)", or the enumerated set.
  std::variant<std::string, std::vector<SerializedPoly>> theta;
  bool degenerate = false;
  std::optional<BmCheck> bm;
  std::optional<OracleCheck> oracle;

  // False iff a requested cross-check disagreed.
  bool checks_pass() const { return (!bm || bm->agrees) && (!oracle || oracle->agrees); }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool profile = false;
  bool check_bm = false;
  bool check_oracle = false;
  bool enumerate_theta = false;
  std::size_t oracle_max_length = 16;
  std::size_t theta_limit = std::size_t{1} << 16;
};

// Parses `input` over `field` and runs the construction plus the requested
// cross-checks. Throws ParseError on malformed input, std::invalid_argument
// for an empty sequence or an over-long --check-oracle input, and
// std::length_error when the Theta set exceeds theta_limit.
AnalysisReport analyze(const FieldSpec& field, std::string_view input, const AnalyzeOptions& opts);

nlohmann::json to_json(const AnalysisReport& r);
// Throws ParseError when the document does not match the schema.
AnalysisReport report_from_json(const nlohmann::json& j);

// Sparse monomial rendering of a serialized form ("x^5+xz^4-z^5") or
// polynomial ("x^5+x-1") over `field`.
std::string render_form(const FieldSpec& field, const SerializedPoly& p);
std::string render_poly(const FieldSpec& field, const SerializedPoly& p);

std::string render_text(const AnalysisReport& r);

}  // namespace seqideal

#endif  // SEQIDEAL_REPORT_HPP_
