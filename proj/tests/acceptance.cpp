// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance          run every criterion
//   acceptance 4        run criterion 4 only
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "subord/report.hpp"
#include "subord/thresholds.hpp"
#include "subord/verifier.hpp"
#include "support.hpp"

using namespace subord;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<TheoremCase> catalogued_cases() {
  std::vector<TheoremCase> out;
  for (CaseLabel l : kAllCases)
    out.push_back(is_janowski(l) ? TheoremCase::make(l, kDefaultJanowski) : TheoremCase::make(l));
  return out;
}

// 1. All 13 printed decimals within 1e-5, under 1 s.
Outcome constant_reproduction() {
  const auto t0 = Clock::now();
  const auto rows = report::constant_table(report::RunConfig{});
  const double elapsed = seconds_since(t0);
  std::string failures;
  int compared = 0;
  for (const auto& r : rows) {
    if (!r.deviation) continue;
    ++compared;
    if (*r.deviation > 1e-5)
      failures += fmt(" %s: %.9g vs printed %.9g (dev %.3g);",
                      std::string(to_string(r.theorem_case.label)).c_str(), *r.reproduced,
                      *r.printed, *r.deviation);
  }
  const bool ok = failures.empty() && compared == 13 && elapsed < 1.0;
  return {ok, fmt("%d decimals compared in %.3f s;", compared, elapsed) + failures};
}

// 2. closed form vs bisection within 1e-9: 12 parameter-free cases and a
// 5 x 5 Janowski grid for T1f, T2e, T3d, under 5 s.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int compared = 0;
  auto compare = [&](const TheoremCase& c) {
    const double d = std::abs(closed_form_beta(c).beta_sharp - beta_numeric(c, 1e-12).beta_sharp);
    worst = std::max(worst, d);
    ++compared;
  };
  for (CaseLabel l : kAllCases)
    if (!is_janowski(l)) compare(TheoremCase::make(l));
  for (CaseLabel l : {CaseLabel::T1f, CaseLabel::T2e, CaseLabel::T3d})
    for (int i = 0; i < 5; ++i) {
      const double a = 0.2 + 0.7 * i / 4.0;
      for (int k = 0; k < 5; ++k)
        compare(TheoremCase::make(l, JanowskiParams{a, -0.8 + (a - 0.1 + 0.8) * k / 4.0}));
    }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-9 && compared == 12 + 75 && elapsed < 5.0,
          fmt("%d cases, max |closed - numeric| = %.3g, %.3f s", compared, worst, elapsed)};
}

// 3. ODE residual <= 1e-10 on a 10^3-point grid of the closed disk, three
// beta values per family.
Outcome ode_residual_check() {
  const auto grid = subord::testing::polar_grid(10, 100);
  const std::pair<SolutionFamily, std::array<double, 3>> sweeps[] = {
      {SolutionFamily::Linear, {0.3, 1.1, 50.0}},
      {SolutionFamily::Exponential, {0.3, 0.7, 50.0}},
      {SolutionFamily::Reciprocal, {0.46, 1.0, 50.0}},
  };
  double worst = 0.0;
  for (const auto& [family, betas] : sweeps)
    for (double beta : betas) {
      const DominantSolution q(family, beta);
      for (Complex z : grid) worst = std::max(worst, ode_residual(q, z));
    }
  return {grid.size() == 1000 && worst <= 1e-10, fmt("max residual %.3g over 9 x 1000 points", worst)};
}

// 4. Pass at 1.000001 beta_sharp, fail at 0.999 beta_sharp with a real-axis
// counterexample, n = 4096, under 30 s.
Outcome sharp_dichotomy() {
  const auto t0 = Clock::now();
  std::string failures;
  int cases = 0;
  for (const TheoremCase& c : catalogued_cases()) {
    ++cases;
    const double sharp = closed_form_beta(c).beta_sharp;
    const auto above = verify_subordination(c, 1.000001 * sharp, 4096);
    const auto below = sharpness_falsify(c, 1e-3, 4096);
    const bool real_cx =
        below.counterexample && std::abs(below.counterexample->imag()) <= 1e-6;
    if (!above.passed || !above.center_anchored || below.passed || !real_cx)
      failures += " " + c.name() + ";";
  }
  const double elapsed = seconds_since(t0);
  return {failures.empty() && elapsed < 30.0,
          fmt("%d cases in %.2f s;", cases, elapsed) + failures};
}

// 5. Winding number vs closed-form predicates on 10^4 random points per
// region with clearance >= 1e-5.
Outcome containment_agreement() {
  std::mt19937_64 rng(20240501);
  int disagreements = 0;
  int total = 0;
  for (const TargetFunction& t : {TargetFunction(TargetKind::Sqrt), TargetFunction::janowski(0.5, -0.5),
                                  TargetFunction(TargetKind::Exp)}) {
    const RegionOracle region(t);
    double lo_re = 1e300, hi_re = -1e300, hi_im = 0.0;
    for (Complex w : region.boundary()) {
      lo_re = std::min(lo_re, w.real());
      hi_re = std::max(hi_re, w.real());
      hi_im = std::max(hi_im, std::abs(w.imag()));
    }
    const double pad = 0.25 * (hi_re - lo_re);
    std::uniform_real_distribution<double> ux(lo_re - pad, hi_re + pad);
    std::uniform_real_distribution<double> uy(-hi_im - pad, hi_im + pad);
    int accepted = 0;
    while (accepted < 10000) {
      const Complex w{ux(rng), uy(rng)};
      if (region.probe(w).distance < 1e-5) continue;
      ++accepted;
      const auto closed = contains_closed_form(t, w, kDefaultBand);
      if (!closed || closed->status != region.classify_by_winding(w, kDefaultBand).status)
        ++disagreements;
    }
    total += accepted;
  }
  return {disagreements == 0, fmt("%d disagreements over %d points", disagreements, total)};
}

// 6. Lemma hypotheses on the 0.99 polar grid.
Outcome lemma_check() {
  const LemmaCheck lc = lemma_minimum(0.99, 360);
  return {check_lemma_conditions(0.99, 360) && lc.min_real_part > 0.0,
          fmt("min Re(zQ'/Q) = %.9g over %zu points", lc.min_real_part, lc.points)};
}

// 7. Derived crossover equals 0.151764; the printed denominator does not.
Outcome crossover_record() {
  constexpr double sqrt2 = std::numbers::sqrt2;
  const double derived = 2.0 * (1.0 - std::numbers::ln2) / (sqrt2 - std::log(1.0 + sqrt2)) - 1.0;
  const double numerator = 2.0 - std::log(4.0) - sqrt2 + std::log(1.0 + sqrt2);
  const double printed_text = numerator / (sqrt2 - std::log(1.0 + sqrt2 + 1.0));
  const bool ok = std::abs(derived - 0.151764) <= 1e-6 &&
                  std::abs(janowski_crossover(SolutionFamily::Linear) - derived) <= 1e-15 &&
                  std::abs(janowski_crossover(SolutionFamily::Reciprocal) - derived) <= 1e-15 &&
                  std::abs(printed_text - 0.151764) > 1e-3;
  return {ok, fmt("derived %.9g, printed denominator gives %.9g", derived, printed_text)};
}

// 8. Conjugate symmetry, q(0) = 1, beta monotonicity / nesting, winding 1
// around the centre.
Outcome property_suites() {
  std::mt19937_64 rng(8);
  int failures = 0;
  const auto targets = subord::testing::all_targets();
  for (const auto& t : targets) {
    for (int i = 0; i < 2000; ++i) {
      const Complex z = subord::testing::random_in_disk(rng);
      if (subord::testing::rel_diff(t(std::conj(z)), std::conj(t(z))) > 1e-15) ++failures;
    }
    if (winding_number(boundary_curve(t, kDefaultBoundarySamples), 1.0) != 1) ++failures;
    if (RegionOracle(t).probe(1.0).winding != 1) ++failures;
  }
  const SolutionFamily families[] = {SolutionFamily::Linear, SolutionFamily::Exponential,
                                     SolutionFamily::Reciprocal};
  const double betas[] = {0.6, 0.9, 1.5, 3.0, 10.0};
  for (SolutionFamily f : families) {
    for (double beta : betas) {
      const DominantSolution q(f, beta);
      if (q(0.0) != Complex{1.0, 0.0}) ++failures;
      for (int i = 0; i < 500; ++i) {
        const Complex z = subord::testing::random_in_disk(rng);
        if (subord::testing::rel_diff(q(std::conj(z)), std::conj(q(z))) > 1e-14) ++failures;
      }
    }
    for (double x : {-0.9, -0.3, 0.4, 1.0}) {
      for (std::size_t i = 0; i + 1 < std::size(betas); ++i) {
        const double v0 = dominant_on_axis(f, betas[i], x);
        const double v1 = dominant_on_axis(f, betas[i + 1], x);
        if (x < 0 ? !(v0 < v1 && v1 < 1.0) : !(v0 > v1 && v1 > 1.0)) ++failures;
      }
    }
    constexpr std::size_t n = 1024;
    for (std::size_t i = 0; i + 1 < std::size(betas); ++i) {
      const DominantSolution outer(f, betas[i]);
      const DominantSolution inner(f, betas[i + 1]);
      const auto curve = sample_on_circle(outer, n);
      for (std::size_t m = 0; m < n; m += 4)
        if (probe_closed_curve(outer, curve, inner(circle_point(m, n))).winding != 1) ++failures;
    }
  }
  return {failures == 0, fmt("%d property violations", failures)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "constant reproduction", constant_reproduction},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "ODE residual", ode_residual_check},
      {4, "sharp-threshold dichotomy", sharp_dichotomy},
      {5, "containment-oracle agreement", containment_agreement},
      {6, "lemma check", lemma_check},
      {7, "B0 discrepancy record", crossover_record},
      {8, "property suites", property_suites},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_passed = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const Outcome o = c.run();
    all_passed = all_passed && o.passed;
    std::printf("[%s] AC%d %s: %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
  }
  return all_passed ? 0 : 1;
}
