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

#include "seqideal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqideal/oracles.hpp"
#include "seqideal/report.hpp"
#include "seqideal/rueppel.hpp"
#include "seqideal/vop.hpp"

namespace seqideal {

using nlohmann::json;

// --- rueppel checks ----------------------------------------------------------

namespace {

// Exhaustive Euclidean sweep bound; beyond it only the last k is checked.
constexpr int kDaiSweep = 256;

CheckResult make(const std::string& name, bool pass, const std::string& detail) { return {name, pass, detail}; }

CheckResult check_dai(int n) {
  const int max_k = n / 2;
  if (max_k < 1) return make("dai", true, "no complete pair of terms");
  const FieldSpec gf2 = FieldSpec::gf2();
  const auto x = UniPoly<GF2>::x_pow(gf2, 1);
  const auto x1 = UniPoly<GF2>::from_ints(gf2, {1, 1});
  auto check_k = [&](int k, const rueppel::BitVop& vop, const std::vector<GF2>& r) -> bool {
    auto e = dai_ea(gf2, k, std::span<const GF2>(r.data(), static_cast<std::size_t>(2 * k)));
    if (static_cast<int>(e.quotients.size()) != k || e.quotients[0] != x1) return false;
    for (std::size_t i = 1; i < e.quotients.size(); ++i) {
      if (e.quotients[i] != x) return false;
    }
    return e.c == dehomogenize(unpack(vop.f));
  };
  const auto r = rueppel::terms(2 * max_k);
  rueppel::Stepper s;
  const int sweep = std::min(max_k, kDaiSweep);
  for (int k = 1; k <= sweep; ++k) {
    while (s.k() < 2 * k - 1) s.step();
    if (!check_k(k, s.vop(), r)) return make("dai", false, "first failure at k=" + std::to_string(k));
  }
  if (max_k > sweep && !check_k(max_k, rueppel::ralg(2 * max_k), r)) {
    return make("dai", false, "failure at k=" + std::to_string(max_k));
  }
  std::string detail = "k=1.." + std::to_string(sweep);
  if (max_k > sweep) detail += " and k=" + std::to_string(max_k);
  return make("dai", true, detail);
}

template <typename Fn>
CheckResult sweep_check(const std::string& name, Fn fn, const std::string& range) {
  int bad = -1;
  const bool ok = fn(&bad);
  return make(name, ok, ok ? range : "first failure at " + std::to_string(bad));
}

}  // namespace

const std::vector<std::string>& rueppel_check_names() {
  static const std::vector<std::string> names = {"plcp", "closed-form", "delta", "matrix", "quadext", "dai"};
  return names;
}

CheckResult run_rueppel_check(const std::string& name, int n) {
  const std::string upto = "n<=" + std::to_string(n);
  if (name == "plcp") return sweep_check(name, [n](int* b) { return rueppel::plcp_sweep(n, b); }, upto);
  if (name == "closed-form") {
    return sweep_check(name, [n](int* b) { return rueppel::closed_form_sweep(n, b); }, "2l<=" + std::to_string(n));
  }
  if (name == "delta") {
    if (n < 2) return make(name, true, "no steps");
    return sweep_check(name, [n](int* b) { return rueppel::delta_parity_check(n, b); }, "k<=" + std::to_string(n - 2));
  }
  if (name == "matrix") return sweep_check(name, [n](int* b) { return rueppel::matrix_sweep(n, b); }, upto);
  if (name == "quadext") {
    if (n < 2) return make(name, true, "no complete pair of terms");
    return sweep_check(name, [n](int* b) { return rueppel::quad_ext_sweep(n / 2, b); }, "k<=" + std::to_string(n / 2));
  }
  if (name == "dai") return check_dai(n);
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckResult> run_rueppel_checks(const std::vector<std::string>& names, int n, int jobs) {
  std::vector<CheckResult> out(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      try {
        out[i] = run_rueppel_check(names[i], n);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, names.size()))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// --- bench ------------------------------------------------------------------------

namespace {

std::vector<GF2> random_bits(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  std::vector<GF2> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.emplace_back((rng() & 1U) != 0);
  return s;
}

}  // namespace

BenchRow bench_one(const std::string& impl, int n, std::uint64_t seed, int repeats) {
  if (n < 1) throw std::invalid_argument("bench: n must be at least 1");
  if (repeats < 1) throw std::invalid_argument("bench: repeats must be at least 1");
  const FieldSpec gf2 = FieldSpec::gf2();
  std::vector<GF2> s;
  if (impl == "vop" || impl == "bm") {
    s = random_bits(n, seed);
  } else if (impl != "ralg") {
    throw std::invalid_argument("bench: unknown implementation '" + impl + "'");
  }
  std::vector<std::int64_t> times;
  int lambda = 0;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    if (impl == "vop") {
      lambda = synthesize(gf2, s).lambda();
    } else if (impl == "bm") {
      lambda = berlekamp_massey(gf2, std::span<const GF2>(s)).L;
    } else {
      lambda = rueppel::ralg(n).f.degree();
    }
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
  return {impl, n, times[times.size() / 2], lambda};
}

// --- profile --random-plcp --------------------------------------------------------

std::vector<bool> random_plcp_sequence(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_plcp_sequence: n must be at least 1");
  const FieldSpec gf2 = FieldSpec::gf2();
  std::mt19937_64 rng(seed);
  auto st = VopState<GF2>::init(InverseForm<GF2>::from_sequence(gf2, {GF2(true)}));
  std::vector<bool> out{true};
  for (int k = 0; k + 1 < n; ++k) {
    // Appending s_{k+1} produces Delta_k, which is affine in the new term with
    // slope 1 (f is monic in x).
    const bool want = (k % 2 == 1) || ((rng() & 1U) != 0);
    const bool base = st.next_discrepancy(GF2(false)).bit();
    const bool a = want != base;
    st.push(GF2(a));
    out.push_back(a);
  }
  return out;
}

// --- commands ---------------------------------------------------------------------

namespace {

std::string bitstring(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

json form_json(const BitForm& f) { return json{{"degree", f.degree()}, {"coeffs", serialize(unpack(f)).coeffs}}; }

int cmd_analyze(const std::string& field_text, const std::string& input, const AnalyzeOptions& opts, bool as_json,
                std::istream& in, std::ostream& out, std::ostream& err) {
  const FieldSpec field = FieldSpec::parse(field_text);
  std::string text;
  std::string source = input;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    source = "<stdin>";
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      err << "error: cannot open '" << input << "'\n";
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  AnalysisReport r;
  try {
    r = analyze(field, text, opts);
  } catch (const ParseError& e) {
    err << source << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (as_json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << render_text(r);
  }
  if (!r.checks_pass()) {
    err << "cross-check mismatch\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_rueppel(int n, std::vector<std::string> verify, bool as_json, int jobs, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: --n must be at least 1\n";
    return kExitUsage;
  }
  std::vector<std::string> names;
  for (const auto& v : verify) {
    if (v == "all") {
      names = rueppel_check_names();
      break;
    }
    const auto& known = rueppel_check_names();
    if (std::find(known.begin(), known.end(), v) == known.end()) {
      err << "error: unknown check '" << v << "'\n";
      return kExitUsage;
    }
    if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
  }
  const auto vop = rueppel::ralg(n);
  const auto checks = run_rueppel_checks(names, n, jobs);
  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  if (as_json) {
    json j{{"n", n}, {"lambda", vop.f.degree()}, {"f", form_json(vop.f)}, {"g", form_json(vop.g)}};
    json cs = json::array();
    for (const auto& c : checks) cs.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(cs);
    j["pass"] = all_pass;
    out << j.dump(2) << '\n';
  } else {
    out << "n: " << n << '\n' << "lambda: " << vop.f.degree() << '\n';
    out << "f: " << to_string(vop.f) << '\n' << "g: " << to_string(vop.g) << '\n';
    for (const auto& c : checks) out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
  }
  return all_pass ? kExitOk : kExitMismatch;
}

int cmd_bench(int max_n, int step, const std::string& impl, std::uint64_t seed, int repeats, std::ostream& out,
              std::ostream& err) {
  if (max_n < 1 || step < 1 || repeats < 1) {
    err << "error: --max-n, --step and --repeats must be positive\n";
    return kExitUsage;
  }
  std::vector<std::string> impls;
  if (impl == "all") {
    impls = {"vop", "ralg", "bm"};
  } else {
    impls = {impl};
  }
  out << "impl,n,nanos,lambda\n";
  bool agree = true;
  for (int n = step; n <= max_n; n += step) {
    int vop_lambda = -1;
    for (const auto& i : impls) {
      const auto row = bench_one(i, n, seed, repeats);
      out << row.impl << ',' << row.n << ',' << row.nanos << ',' << row.lambda << '\n';
      if (i == "vop") vop_lambda = row.lambda;
      if (i == "bm" && vop_lambda >= 0 && row.lambda != vop_lambda) agree = false;
    }
  }
  if (!agree) {
    err << "bm and vop disagree on lambda\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_profile(int n, std::uint64_t seed, bool as_json, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: --n must be at least 1\n";
    return kExitUsage;
  }
  const auto bits = random_plcp_sequence(n, seed);
  std::vector<GF2> s(bits.begin(), bits.end());
  const bool plcp = is_plcp(synthesize(FieldSpec::gf2(), s).profile);
  if (as_json) {
    out << json{{"n", n}, {"seed", seed}, {"sequence", bitstring(bits)}, {"plcp", plcp}}.dump(2) << '\n';
  } else {
    out << bitstring(bits) << '\n';
  }
  return plcp ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear complexity and annihilator ideals of finite sequences", "seqideal"};
  app.require_subcommand(1);

  std::string field_text, input = "-";
  AnalyzeOptions aopts;
  bool json_out = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Minimal polynomial, generators and profile of a sequence");
  analyze_cmd->add_option("--field", field_text, "gf2, gfp:<p> or q")->required();
  analyze_cmd->add_option("--input", input, "Input file, or - for stdin")->capture_default_str();
  analyze_cmd->add_flag("--profile", aopts.profile, "Include the linear complexity profile");
  analyze_cmd->add_flag("--json", json_out, "Emit JSON");
  analyze_cmd->add_flag("--check-bm", aopts.check_bm, "Cross-check with Berlekamp-Massey");
  analyze_cmd->add_flag("--check-oracle", aopts.check_oracle, "Cross-check by linear algebra (at most 16 terms)");
  analyze_cmd->add_flag("--enumerate-theta", aopts.enumerate_theta, "List every minimal leading form (finite fields)");

  int n = 0;
  std::vector<std::string> verify;
  int jobs = 1;
  auto* rueppel_cmd = app.add_subcommand("rueppel", "Generators for prefixes of the Rueppel sequence");
  rueppel_cmd->add_option("--n", n, "Prefix length")->required();
  rueppel_cmd->add_option("--verify", verify, "plcp, closed-form, delta, matrix, quadext, dai or all")
      ->delimiter(',');
  rueppel_cmd->add_flag("--json", json_out, "Emit JSON");
  rueppel_cmd->add_option("--jobs", jobs, "Checks to run in parallel")->check(CLI::PositiveNumber);

  int max_n = 0, step = 0, repeats = 1;
  std::string impl = "all";
  std::uint64_t seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Timing CSV: impl,n,nanos,lambda");
  bench_cmd->add_option("--max-n", max_n, "Largest length")->required();
  bench_cmd->add_option("--step", step, "Length increment (default max-n / 8)");
  bench_cmd->add_option("--impl", impl, "vop, ralg, bm or all")
      ->check(CLI::IsMember({"vop", "ralg", "bm", "all"}))
      ->capture_default_str();
  bench_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  bench_cmd->add_option("--repeats", repeats, "Runs per point; the median is reported")->capture_default_str();

  bool random_plcp = false;
  int profile_n = 0;
  std::uint64_t profile_seed = 1;
  auto* profile_cmd = app.add_subcommand("profile", "Sequence utilities");
  profile_cmd->add_flag("--random-plcp", random_plcp, "Emit a random sequence with a perfect profile")->required();
  profile_cmd->add_option("--n", profile_n, "Length")->required();
  profile_cmd->add_option("--seed", profile_seed, "PRNG seed")->capture_default_str();
  profile_cmd->add_flag("--json", json_out, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(field_text, input, aopts, json_out, in, out, err);
    if (*rueppel_cmd) return cmd_rueppel(n, verify, json_out, jobs, out, err);
    if (*bench_cmd) return cmd_bench(max_n, step > 0 ? step : std::max(1, max_n / 8), impl, seed, repeats, out, err);
    if (*profile_cmd) return cmd_profile(profile_n, profile_seed, json_out, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"seqideal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace seqideal
