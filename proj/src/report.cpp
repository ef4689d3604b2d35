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

#include "seqideal/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "seqideal/io.hpp"
#include "seqideal/oracles.hpp"
#include "seqideal/vop.hpp"

namespace seqideal {

using nlohmann::json;

namespace {

// Checks sum_i c_i s_{k+i} = 0 for every window of length deg(c) + 1.
template <FieldScalar S>
bool annihilates_sequence(const UniPoly<S>& c, const std::vector<S>& seq) {
  const int l = c.degree();
  if (l < 0) return false;
  for (std::size_t k = 0; k + static_cast<std::size_t>(l) < seq.size(); ++k) {
    S acc = zero<S>(c.spec());
    for (int i = 0; i <= l; ++i) acc += c.coeff(i) * seq[k + static_cast<std::size_t>(i)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

template <FieldScalar S>
AnalysisReport analyze_typed(const FieldSpec& spec, std::vector<S> seq, const AnalyzeOptions& opts) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  if (opts.check_oracle && seq.size() > opts.oracle_max_length) {
    throw std::invalid_argument("--check-oracle accepts at most " + std::to_string(opts.oracle_max_length) +
                                " terms, got " + std::to_string(seq.size()));
  }
  auto res = synthesize(spec, seq);
  AnalysisReport r;
  r.field = spec.to_string();
  r.n = static_cast<int>(seq.size());
  r.lambda = res.lambda();
  r.f = serialize(res.vop.f);
  r.g = serialize(res.vop.g);
  const UniPoly<S> min_poly = dehomogenize(res.vop.f);
  r.min_poly = serialize(min_poly);
  r.plcp = is_plcp(res.profile);
  r.degenerate = res.degenerate;
  if (opts.profile) {
    for (const auto& e : res.profile) {
      ProfileRow row{e.k, e.lambda, {}, e.d_before};
      if (e.delta) row.delta = to_string(*e.delta);
      r.profile.push_back(std::move(row));
    }
  }

  const auto theta = minimal_leading_forms(res.vop);
  if (opts.enumerate_theta && !res.degenerate) {
    std::vector<SerializedPoly> all;
    for (const auto& t : enumerate_theta(theta, opts.theta_limit)) all.push_back(serialize(t));
    r.theta = std::move(all);
  } else if (theta.is_unique() || res.degenerate) {
    r.theta = std::string("unique");
  } else {
    r.theta = "parametric(" + std::to_string(theta.free_degree) + ")";
  }

  const bool unique = res.vop.g.degree() > res.vop.f.degree();
  if (opts.check_bm) {
    auto bm = berlekamp_massey(spec, std::span<const S>(seq));
    bool agrees = bm.L == r.lambda;
    if (agrees && unique) agrees = connection_matches(bm, min_poly) && make_monic(bm.gamma) == reciprocal(min_poly);
    r.bm = BmCheck{bm.L, serialize(bm.gamma), agrees};
  }
  if (opts.check_oracle) {
    auto bf = brute_force_min_poly(spec, std::span<const S>(seq), opts.oracle_max_length);
    bool agrees = bf.lambda == r.lambda;
    if constexpr (S::kFinite) {
      if (bf.complete) {
        agrees = agrees && std::find(bf.witnesses.begin(), bf.witnesses.end(), min_poly) != bf.witnesses.end();
      } else {
        agrees = agrees && annihilates_sequence(min_poly, seq);
      }
    } else {
      agrees = agrees && (!unique || bf.witnesses.front() == min_poly);
    }
    r.oracle = OracleCheck{bf.lambda, agrees};
  }
  return r;
}

template <FieldScalar S>
std::vector<S> parse_coeffs(const FieldSpec& spec, const SerializedPoly& p) {
  std::vector<S> c;
  for (const auto& s : p.coeffs) c.push_back(S::parse(s, spec));
  return c;
}

template <FieldScalar S>
std::string render_form_typed(const FieldSpec& spec, const SerializedPoly& p) {
  if (p.degree < 0) return "0";
  return to_string(Form<S>(spec, p.degree, parse_coeffs<S>(spec, p)));
}

template <FieldScalar S>
std::string render_poly_typed(const FieldSpec& spec, const SerializedPoly& p) {
  return to_string(UniPoly<S>(spec, parse_coeffs<S>(spec, p)));
}

json poly_to_json(const SerializedPoly& p) { return json{{"degree", p.degree}, {"coeffs", p.coeffs}}; }

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("report: " + what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

SerializedPoly poly_from_json(const json& j) {
  SerializedPoly p;
  const json& d = member(j, "degree");
  const json& c = member(j, "coeffs");
  if (!d.is_number_integer() || !c.is_array()) schema_error("bad polynomial");
  p.degree = d.get<int>();
  for (const auto& e : c) {
    if (!e.is_string()) schema_error("coefficients must be strings");
    p.coeffs.push_back(e.get<std::string>());
  }
  if (p.coeffs.size() != static_cast<std::size_t>(p.degree + 1)) schema_error("degree does not match coefficient count");
  return p;
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const json::exception&) {
    schema_error(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

AnalysisReport analyze(const FieldSpec& field, std::string_view input, const AnalyzeOptions& opts) {
  switch (field.kind()) {
    case FieldSpec::Kind::GF2:
      return analyze_typed(field, parse_sequence<GF2>(input, field), opts);
    case FieldSpec::Kind::GFp:
      return analyze_typed(field, parse_sequence<Fp>(input, field), opts);
    case FieldSpec::Kind::Rationals:
      return analyze_typed(field, parse_sequence<Rational>(input, field), opts);
  }
  throw std::logic_error("analyze: unknown field kind");
}

std::string render_form(const FieldSpec& field, const SerializedPoly& p) {
  switch (field.kind()) {
    case FieldSpec::Kind::GF2:
      return render_form_typed<GF2>(field, p);
    case FieldSpec::Kind::GFp:
      return render_form_typed<Fp>(field, p);
    case FieldSpec::Kind::Rationals:
      return render_form_typed<Rational>(field, p);
  }
  throw std::logic_error("render_form: unknown field kind");
}

std::string render_poly(const FieldSpec& field, const SerializedPoly& p) {
  switch (field.kind()) {
    case FieldSpec::Kind::GF2:
      return render_poly_typed<GF2>(field, p);
    case FieldSpec::Kind::GFp:
      return render_poly_typed<Fp>(field, p);
    case FieldSpec::Kind::Rationals:
      return render_poly_typed<Rational>(field, p);
  }
  throw std::logic_error("render_poly: unknown field kind");
}

json to_json(const AnalysisReport& r) {
  json j;
  j["field"] = r.field;
  j["n"] = r.n;
  j["lambda"] = r.lambda;
  j["f"] = poly_to_json(r.f);
  j["g"] = poly_to_json(r.g);
  j["min_poly"] = poly_to_json(r.min_poly);
  json prof = json::array();
  for (const auto& row : r.profile) {
    json e{{"k", row.k}, {"lambda", row.lambda}};
    e["delta"] = row.delta ? json(*row.delta) : json(nullptr);
    e["d"] = row.d ? json(*row.d) : json(nullptr);
    prof.push_back(std::move(e));
  }
  j["profile"] = std::move(prof);
  j["plcp"] = r.plcp;
  if (const auto* s = std::get_if<std::string>(&r.theta)) {
    j["theta"] = *s;
  } else {
    json all = json::array();
    for (const auto& t : std::get<std::vector<SerializedPoly>>(r.theta)) all.push_back(poly_to_json(t));
    j["theta"] = std::move(all);
  }
  j["degenerate"] = r.degenerate;
  if (r.bm) j["bm"] = json{{"L", r.bm->L}, {"gamma", poly_to_json(r.bm->gamma)}, {"agrees", r.bm->agrees}};
  if (r.oracle) j["oracle"] = json{{"lambda", r.oracle->lambda}, {"agrees", r.oracle->agrees}};
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.field = get_as<std::string>(j, "field");
  r.n = get_as<int>(j, "n");
  r.lambda = get_as<int>(j, "lambda");
  r.f = poly_from_json(member(j, "f"));
  r.g = poly_from_json(member(j, "g"));
  r.min_poly = poly_from_json(member(j, "min_poly"));
  const json& prof = member(j, "profile");
  if (!prof.is_array()) schema_error("profile must be an array");
  for (const auto& e : prof) {
    ProfileRow row{get_as<int>(e, "k"), get_as<int>(e, "lambda"), {}, {}};
    const json& delta = member(e, "delta");
    const json& d = member(e, "d");
    if (!delta.is_null()) row.delta = get_as<std::string>(e, "delta");
    if (!d.is_null()) row.d = get_as<int>(e, "d");
    r.profile.push_back(std::move(row));
  }
  r.plcp = get_as<bool>(j, "plcp");
  const json& theta = member(j, "theta");
  if (theta.is_string()) {
    r.theta = theta.get<std::string>();
  } else if (theta.is_array()) {
    std::vector<SerializedPoly> all;
    for (const auto& t : theta) all.push_back(poly_from_json(t));
    r.theta = std::move(all);
  } else {
    schema_error("theta must be a string or an array");
  }
  r.degenerate = get_as<bool>(j, "degenerate");
  if (j.contains("bm")) {
    const json& b = j.at("bm");
    r.bm = BmCheck{get_as<int>(b, "L"), poly_from_json(member(b, "gamma")), get_as<bool>(b, "agrees")};
  }
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    r.oracle = OracleCheck{get_as<int>(o, "lambda"), get_as<bool>(o, "agrees")};
  }
  return r;
}

std::string render_text(const AnalysisReport& r) {
  const FieldSpec spec = FieldSpec::parse(r.field);
  std::ostringstream out;
  out << "field: " << r.field << '\n'
      << "n: " << r.n << '\n'
      << "lambda: " << r.lambda << '\n'
      << "f: " << render_form(spec, r.f) << '\n'
      << "g: " << render_form(spec, r.g) << '\n'
      << "min_poly: " << render_poly(spec, r.min_poly) << '\n'
      << "plcp: " << (r.plcp ? "true" : "false") << '\n';
  if (const auto* s = std::get_if<std::string>(&r.theta)) {
    out << "theta: " << *s << '\n';
  } else {
    const auto& all = std::get<std::vector<SerializedPoly>>(r.theta);
    out << "theta: " << all.size() << " forms\n";
    for (const auto& t : all) out << "  " << render_form(spec, t) << '\n';
  }
  out << "degenerate: " << (r.degenerate ? "true" : "false") << '\n';
  if (!r.profile.empty()) {
    out << "profile:\n  k lambda delta d\n";
    for (const auto& row : r.profile) {
      out << "  " << row.k << ' ' << row.lambda << ' ' << row.delta.value_or("-") << ' '
          << (row.d ? std::to_string(*row.d) : std::string("-")) << '\n';
    }
  }
  if (r.bm) {
    out << "bm: L=" << r.bm->L << " gamma=" << render_poly(spec, r.bm->gamma)
        << (r.bm->agrees ? " agrees" : " MISMATCH") << '\n';
  }
  if (r.oracle) out << "oracle: lambda=" << r.oracle->lambda << (r.oracle->agrees ? " agrees" : " MISMATCH") << '\n';
  return out.str();
}

}  // namespace seqideal
