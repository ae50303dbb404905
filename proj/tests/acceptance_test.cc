//
// Copyright 2026 The gaussdp Authors
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
//

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails. `--criterion N` runs one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gaussdp/calib.h"
#include "gaussdp/calibrate.h"
#include "gaussdp/compose.h"
#include "gaussdp/mech.h"
#include "gaussdp/relations.h"
#include "gaussdp/specfun.h"
#include "oracle/mpfr_oracle.h"

namespace {

using namespace gaussdp;  // NOLINT
using Clock = std::chrono::steady_clock;

const Sensitivity kUnit(1.0);

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failed checks for one criterion.
class Check {
 public:
  void Near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      Fail(what + ": got " + Str(got) + ", want " + Str(want) + " +- " +
           Str(tol));
    }
  }
  void True(bool ok, const std::string& what) {
    if (!ok) Fail(what);
  }
  void Fail(const std::string& what) {
    if (failures_++ < 6) notes_ += "\n    " + what;
  }
  bool ok() const { return failures_ == 0; }
  int failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

  static std::string Str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

std::vector<double> LogGrid(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = a * std::pow(b / a, double(i) / (n - 1));
  return g;
}

double Sigma(Mechanism m, double eps, double delta) {
  return Calibrate(m, PrivacyBudget(eps, delta), kUnit).noise.sigma;
}

const std::vector<double> kEpsGrid = {0.01, 0.05, 0.1, 0.5, 1.0};
const std::vector<double> kDeltaGrid = {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1};

// Runs `f` and fails if one call takes longer than `limit` seconds.
template <typename F>
double Timed(Check& c, double limit, const std::string& what, F f) {
  const auto start = Clock::now();
  const double v = f();
  const double took = Seconds(start);
  if (took > limit) c.Fail(what + " took " + Check::Str(took) + " s");
  return v;
}

void Criterion1(Check& c) {
  struct Case { Mechanism m; double eps, delta, want; };
  const Case cases[] = {{Mechanism::kDwork2014, 10, 0.01, 0.3108},
                        {Mechanism::kDwork2014, 10, 1e-5, 0.4845},
                        {Mechanism::kDwork2014, 10, 1e-3, 0.3776},
                        {Mechanism::kDwork2006, 10, 0.1, 0.2448}};
  for (const auto& k : cases) {
    const std::string what = std::string(MechanismName(k.m)) + " (" +
                             Check::Str(k.eps) + ", " + Check::Str(k.delta) + ")";
    const double got = Timed(c, 1e-3, what, [&] {
      return k.m == Mechanism::kDwork2014
                 ? SigmaDwork2014(PrivacyBudget(k.eps, k.delta), kUnit).sigma
                 : SigmaDwork2006(PrivacyBudget(k.eps, k.delta), kUnit).sigma;
    });
    c.Near(got, k.want, 1e-4, what);
  }
}

void Criterion2(Check& c) {
  struct Case { double eps, delta, want; };
  const Case cases[] = {{10, 0.01, 0.3501}, {10, 0.1, 0.2818},
                        {10, 1e-3, 0.4061}, {6, 0.1, 0.3813}, {8, 0.1, 0.3215}};
  for (const auto& k : cases) {
    const std::string what =
        "dp-opt (" + Check::Str(k.eps) + ", " + Check::Str(k.delta) + ")";
    const double got = Timed(c, 10e-3, what, [&] {
      return SolveDpOpt(PrivacyBudget(k.eps, k.delta), kUnit).noise.sigma;
    });
    c.Near(got, k.want, 5e-4, what);
  }
}

void Criterion3(Check& c) {
  const auto start = Clock::now();
  const double deltas[] = {1e-3, 1e-4, 1e-5, 1e-6};
  const double g14[] = {7.47, 8.00, 8.43, 8.79};
  const double g06[] = {8.51, 8.99, 9.39, 9.73};
  for (int i = 0; i < 4; ++i) {
    const double d = deltas[i];
    c.Near(FailureThreshold(Dwork2014Multiplier(d), d), g14[i], 0.01,
           "G_dwork2014(" + Check::Str(d) + ")");
    c.Near(FailureThreshold(Dwork2006Multiplier(d), d), g06[i], 0.01,
           "G_dwork2006(" + Check::Str(d) + ")");
  }
  if (Seconds(start) > 1.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void Criterion4(Check& c) {
  const auto start = Clock::now();
  const std::vector<Mechanism> dp = {Mechanism::kDpOpt, Mechanism::kMech1,
                                     Mechanism::kMech2, Mechanism::kDwork2014,
                                     Mechanism::kDwork2006};
  const std::vector<Mechanism> pdp = {Mechanism::kPdpOpt, Mechanism::kMech3,
                                      Mechanism::kMech4, Mechanism::kCdpRoute};
  for (double eps : kEpsGrid) {
    for (double delta : kDeltaGrid) {
      for (const auto* chain : {&dp, &pdp}) {
        for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
          const Mechanism a = (*chain)[i], b = (*chain)[i + 1];
          c.True(Sigma(a, eps, delta) < Sigma(b, eps, delta),
                 std::string(MechanismName(a)) + " < " +
                     std::string(MechanismName(b)) + " at (" + Check::Str(eps) +
                     ", " + Check::Str(delta) + ")");
        }
      }
    }
  }
  if (Seconds(start) > 1.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void Criterion5(Check& c) {
  const auto start = Clock::now();
  for (double eps : kEpsGrid) {
    for (double delta : kDeltaGrid) {
      const PrivacyBudget b(eps, delta);
      const std::string at = " at (" + Check::Str(eps) + ", " + Check::Str(delta) + ")";
      const auto dp = SolveDpOpt(b, kUnit);
      c.True(std::abs(DpOptResidual(dp.root, eps, delta)) <= 1e-9,
             "dp-opt residual" + at);
      c.Near(DpDeltaProfile(dp.noise.sigma, eps, kUnit), delta, 1e-9,
             "dp profile inversion" + at);
      const auto pdp = SolvePdpOpt(b, kUnit);
      c.True(std::abs(PdpOptResidual(pdp.root, eps, delta)) <= 1e-9,
             "pdp-opt residual" + at);
      c.Near(PdpDeltaProfile(pdp.noise.sigma, eps, kUnit), delta, 1e-9,
             "pdp profile inversion" + at);
    }
  }
  if (Seconds(start) > 1.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void InRange(Check& c, double v, double lo, double hi, const std::string& what) {
  c.True(v >= lo && v <= hi, what + " = " + Check::Str(v) + ", want [" +
                                 Check::Str(lo) + ", " + Check::Str(hi) + "]");
}

void Criterion6(Check& c) {
  const auto start = Clock::now();
  InRange(c, Sigma(Mechanism::kDpOpt, 1e-6, 0.01) /
                 DpOptZeroEpsilon(0.01, kUnit).sigma,
          0.999, 1.0, "(a) small-eps DP ratio");
  InRange(c, Sigma(Mechanism::kDpOpt, 1e6, 0.01) * std::sqrt(2e6), 0.99, 1.01,
          "(b) large-eps DP ratio");
  InRange(c, Sigma(Mechanism::kDpOpt, 1, 1e-12) / std::sqrt(2 * std::log(1e12)),
          0.9, 1.1, "(c) small-delta DP ratio");
  InRange(c, Sigma(Mechanism::kPdpOpt, 1e-6, 0.01) * 1e-6 * std::sqrt(2.0) /
                 specfun::InverseErfc(0.01),
          0.999, 1.001, "(d) small-eps pDP ratio");
  if (Seconds(start) > 1.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void Criterion7(Check& c) {
  const auto start = Clock::now();
  constexpr std::int64_t kSamples = 1000000;
  std::uint64_t seed = 700;
  for (auto [eps, delta] : {std::pair{1.0, 1e-2}, std::pair{5.0, 1e-3}}) {
    const std::string at = " at (" + Check::Str(eps) + ", " + Check::Str(delta) + ")";
    const PrivacyBudget b(eps, delta);
    const double sp = SolvePdpOpt(b, kUnit).noise.sigma;
    const double rate = PrivacyLossSample(1.0, sp, eps, kSamples, ++seed);
    const double se = std::sqrt(delta * (1 - delta) / kSamples);
    c.True(std::abs(rate - delta) <= 3 * se,
           "pDP violation " + Check::Str(rate) + " vs " + Check::Str(delta) +
               " (se " + Check::Str(se) + ")" + at);
    const double sd = SolveDpOpt(b, kUnit).noise.sigma;
    const auto est =
        EstimateDpDelta(CountLossTails(1.0, sd, eps, kSamples, ++seed), eps);
    c.True(std::abs(est.value - delta) <= 3 * est.standard_error,
           "DP expression " + Check::Str(est.value) + " vs " + Check::Str(delta) +
               " (se " + Check::Str(est.standard_error) + ")" + at);
  }
  if (Seconds(start) > 5.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void Criterion8(Check& c) {
  const auto start = Clock::now();
  const std::vector<CompositionTerm> three = {
      {Sensitivity(1), 1}, {Sensitivity(2), 2}, {Sensitivity(3), 3}};
  c.Near(EffectiveUnitSigma(three), 1 / std::sqrt(3.0), 1e-12, "{(1,1),(2,2),(3,3)}");
  for (int m : {1, 2, 4, 9, 16, 64}) {
    for (double sigma : {0.3, 2.0, 7.0}) {
      const std::vector<CompositionTerm> copies(m, {kUnit, sigma});
      c.True(EffectiveUnitSigma(copies) == sigma / std::sqrt(double(m)),
             "m-copy law m=" + std::to_string(m) + " sigma=" + Check::Str(sigma));
    }
  }
  const double s = SolveDpOpt(PrivacyBudget(1, 1e-4), kUnit).noise.sigma;
  const std::vector<CompositionTerm> one = {{kUnit, s}};
  c.Near(ComposedDpDelta(one, 1), 1e-4, 1e-9, "single-term DP");
  const double p = SolvePdpOpt(PrivacyBudget(1, 1e-4), kUnit).noise.sigma;
  const std::vector<CompositionTerm> onep = {{kUnit, p}};
  c.Near(ComposedPdpDelta(onep, 1), 1e-4, 1e-9, "single-term pDP");
  if (Seconds(start) > 10e-3) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

void Criterion9(Check& c) {
  const auto start = Clock::now();
  const PrivacyBudget b(0.1, 1e-4);
  const Mechanism chain[] = {Mechanism::kDpOpt, Mechanism::kMech1,
                             Mechanism::kMech2, Mechanism::kDwork2014,
                             Mechanism::kDwork2006};
  std::vector<ExperimentReport> reports;
  for (Mechanism m : chain) reports.push_back(MeanExperiment(1000, 10, b, m, 200, 1));
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    const auto& lo = reports[i];
    const auto& hi = reports[i + 1];
    const double gap = hi.metric - lo.metric;
    const double se = std::hypot(lo.metric_stderr, hi.metric_stderr);
    c.True(gap > se, std::string(MechanismName(lo.mechanism)) + " < " +
                         std::string(MechanismName(hi.mechanism)) + ": gap " +
                         Check::Str(gap) + ", combined se " + Check::Str(se));
  }
  for (Mechanism m : chain) {
    const auto r = MeanExperiment(1000, 10, b, m, 1000, 2);
    const double want = 10 * r.sigma * r.sigma;
    c.True(std::abs(r.mean_square - want) <= 0.1 * want,
           std::string(MechanismName(m)) + " mean square " +
               Check::Str(r.mean_square) + " vs d sigma^2 " + Check::Str(want));
  }
  if (Seconds(start) > 30.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

double RelErr(double got, double want) { return std::abs(got / want - 1.0); }

void Criterion10(Check& c) {
  const auto start = Clock::now();
  // erfc, 1e-13 relative on [-6, 26.5] (the top of the double range is
  // subnormal beyond that).
  for (double x : LogGrid(1e-6, 26.5, 1000)) {
    c.True(RelErr(specfun::Erfc(x), oracle::Erfc(x)) <= 1e-13,
           "erfc(" + Check::Str(x) + ")");
  }
  for (double x : LogGrid(1e-6, 6.0, 1000)) {
    c.True(RelErr(specfun::Erfc(-x), oracle::Erfc(-x)) <= 1e-13,
           "erfc(-" + Check::Str(x) + ")");
  }
  for (double x : LogGrid(1e-6, 1e6, 1000)) {
    c.True(RelErr(specfun::Erfcx(x), oracle::Erfcx(x)) <= 1e-13,
           "erfcx(" + Check::Str(x) + ")");
  }
  for (double x : LogGrid(1e-6, 26.0, 1000)) {
    c.True(RelErr(specfun::Erfcx(-x), oracle::Erfcx(-x)) <= 1e-13,
           "erfcx(-" + Check::Str(x) + ")");
  }
  for (double p : LogGrid(1e-15, 1.999, 1000)) {
    c.True(RelErr(oracle::Erfc(specfun::InverseErfc(p)), p) <= 1e-12,
           "inverfc(" + Check::Str(p) + ")");
  }
  // Seed > inverfc(y) exactly when erfc(seed) < y.
  for (double y : LogGrid(1e-12, 0.99, 1000)) {
    const oracle::Big at = oracle::Erfc(oracle::Big(specfun::InverseErfcSeed(y)));
    c.True(at < oracle::Big(y), "seed bound at " + Check::Str(y));
  }
  if (Seconds(start) > 5.0) c.Fail("runtime " + Check::Str(Seconds(start)) + " s");
}

struct Criterion {
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {"closed-form classical noise values", Criterion1},
      {"optimal DP noise values", Criterion2},
      {"classical failure frontier", Criterion3},
      {"noise ordering chains", Criterion4},
      {"residual and profile inversion", Criterion5},
      {"asymptotic limits", Criterion6},
      {"Monte-Carlo privacy soundness", Criterion7},
      {"composition accounting", Criterion8},
      {"mean-estimation experiment", Criterion9},
      {"special-function accuracy", Criterion10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  const auto& all = Criteria();
  if (only < 0 || only > static_cast<int>(all.size()) || (argc != 1 && only == 0)) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i) + 1) continue;
    Check check;
    const auto start = Clock::now();
    try {
      all[i].run(check);
    } catch (const std::exception& e) {
      check.Fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.3f s)%s\n", check.ok() ? "PASS" : "FAIL",
                i + 1, all[i].title, Seconds(start), check.notes().c_str());
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
