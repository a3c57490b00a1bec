// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rqpd/analysis.hpp"
#include "rqpd/cli.hpp"
#include "test_support.hpp"

using namespace rqpd;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

const double kOmegaGrid5[] = {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, 7 * kPi / 16};
const StrategyParams kD = to_params(NamedStrategy::D);
const StrategyParams kQ = to_params(NamedStrategy::Q);

Outcome rest_thresholds() {
  const ThresholdSet t = thresholds_closed_form(WignerAngle(0.0), WignerAngle(0.0));
  const double th1 = std::asin(std::sqrt(1.0 / 5.0));
  const double th2 = std::asin(std::sqrt(2.0 / 5.0));
  if (!t.gA12 || !t.gA34 || !t.gB13 || !t.gB24) return {false, "a threshold is absent"};
  const double err = std::max({std::abs(*t.gA12 - th1), std::abs(*t.gA34 - th2),
                               std::abs(*t.gB13 - th1), std::abs(*t.gB24 - th2)});
  // The 9-digit literals agree with the exact values to their printed precision.
  const bool literals = std::abs(th1 - 0.463647609) < 5e-10 && std::abs(th2 - 0.684719203) < 5e-10;
  return {err <= 1e-12 && literals,
          fmt("gA12=%.12f gA34=%.12f", *t.gA12, *t.gA34) + fmt(" max err %.2e", err)};
}

Outcome closed_vs_numeric() {
  double worst = 0.0;
  int compared = 0;
  int absent_checked = 0;
  for (double oa : kOmegaGrid5) {
    for (double ob : kOmegaGrid5) {
      const WignerAngle wa(oa), wb(ob);
      const auto cf = thresholds_closed_form(wa, wb).as_array();
      const auto nu = thresholds_numeric(wa, wb, Backend::Printed).as_array();
      const auto sweep = sweep_gamma(wa, wb, 1000, Backend::Printed);
      for (std::size_t k = 0; k < 4; ++k) {
        if (cf[k]) {
          if (!nu[k]) return {false, fmt("numeric missing at (%.4f, %.4f)", oa, ob)};
          worst = std::max(worst, std::abs(*cf[k] - *nu[k]));
          ++compared;
          continue;
        }
        // No closed-form value: the difference must not change sign on 1000 samples.
        bool pos = false, neg = false;
        for (const SweepRow& row : sweep) {
          const SdsReport s = sds_of(row.table, 0.0);
          pos |= s.margins[k] > 0.0;
          neg |= s.margins[k] < 0.0;
        }
        if (pos && neg) return {false, fmt("sign change without closed form at (%.4f, %.4f)", oa, ob)};
        if (nu[k]) return {false, fmt("numeric root without closed form at (%.4f, %.4f)", oa, ob)};
        ++absent_checked;
      }
    }
  }
  return {worst < 1e-9, std::to_string(compared) + " thresholds, max |diff| " + fmt("%.2e", worst) +
                            "; " + std::to_string(absent_checked) + " absent confirmed"};
}

Outcome nash_at_rest() {
  const auto ne = [](double g) {
    return nash_set(profile_table(GameInstance(g, WignerAngle(0), WignerAngle(0), Backend::Unitary)))
        .equilibria;
  };
  const bool ok = ne(0.2) == std::vector<Profile>{Profile::DD} &&
                  ne(0.55) == std::vector<Profile>{Profile::QD, Profile::DQ} &&
                  ne(1.5) == std::vector<Profile>{Profile::QQ};
  return {ok, "{DD} @0.2, {QD,DQ} @0.55, {QQ} @1.5"};
}

Outcome bob_always_defects() {
  const WignerAngle w(7 * kPi / 16);
  const auto rows = sweep_gamma(w, w, 1000, Backend::Printed);
  double min_margin = 1e300;
  for (const SweepRow& row : rows) {
    const double m13 = row.table.bob(1) - row.table.bob(3);
    const double m24 = row.table.bob(2) - row.table.bob(4);
    min_margin = std::min({min_margin, m13, m24});
    if (!(m13 > 0.0 && m24 > 0.0)) return {false, fmt("Bob's D not dominant at gamma=%.6f", row.gamma)};
  }
  return {true, fmt("1000 samples, smallest margin %.4f", min_margin)};
}

Outcome alice_limit() {
  for (int j = 0; j <= 100; ++j) {
    const double ob = grid_point(0.0, kHalfPi, static_cast<std::size_t>(j), 101);
    const ThresholdSet t = thresholds_closed_form(WignerAngle(kHalfPi), WignerAngle(ob));
    if (!t.gA34 || *t.gA34 != 0.0) return {false, fmt("gA34 != 0 at omega_b=%.6f", ob)};
  }
  return {true, "gA34 == 0 exactly for 101 omega_b samples"};
}

Outcome threshold_ordering() {
  const std::size_t n = 121;
  int strict_pairs = 0;
  int edge_ties = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const WignerAngle wa(grid_point(0, kHalfPi, i, n)), wb(grid_point(0, kHalfPi, j, n));
      const ThresholdSet t = thresholds_closed_form(wa, wb);
      // Wigner angles from finite rapidities stay below π/2. On the limiting
      // edges the gap between a player's two thresholds, ∝ cos Ω_A cos Ω_B,
      // closes and the pair coincides.
      const bool edge = wa.omega() == kHalfPi || wb.omega() == kHalfPi;
      const auto check = [&](const std::optional<double>& lo, const std::optional<double>& hi) {
        if (!lo || !hi) return true;
        if (edge) {
          if (*lo == *hi) ++edge_ties;
          return *lo <= *hi + 1e-15;
        }
        ++strict_pairs;
        return *lo < *hi;
      };
      if (!check(t.gA12, t.gA34)) return {false, fmt("Alice order broken at (%.4f, %.4f)", wa.omega(), wb.omega())};
      if (!check(t.gB13, t.gB24)) return {false, fmt("Bob order broken at (%.4f, %.4f)", wa.omega(), wb.omega())};
    }
  }
  return {true, std::to_string(strict_pairs) + " strict pairs on 121x121; " + std::to_string(edge_ties) +
                    " ties on the pi/2 edges"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, kHalfPi);
  const Mat2 d = strategy_unitary(kD);
  const Mat4 dd = tensor2(d, d);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const StrategyParams a(theta(rng), phi(rng)), b(theta(rng), phi(rng));
    const double g = phi(rng);
    const Mat4 j = test::expi_series(dd, g / 2.0);
    const State4 explicit_amp =
        apply(tensor2(strategy_unitary(a), strategy_unitary(b)) * j, State4::basis(Basis::CC));
    worst = std::max(worst, max_abs_diff(k_coefficients(a, b, g), explicit_amp));
  }
  return {worst < 1e-12, fmt("10^4 draws, max error %.2e", worst)};
}

Outcome normalization() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> half(0.0, kHalfPi), full(0.0, kPi);
  double worst_unitary = 0.0;
  double worst_defect = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const GameInstance g(half(rng), WignerAngle(half(rng)), WignerAngle(half(rng)), Backend::Unitary);
    const auto pr = joint_probabilities(g, {full(rng), half(rng)}, {full(rng), half(rng)});
    worst_unitary = std::max(worst_unitary, std::abs(pr.joint.sum() - 1.0));
    worst_defect = std::max(worst_defect, unitarity_defect(coefficient_map(g).matrix));
  }
  double worst_printed = 0.0;
  const StrategyParams s[] = {kD, kQ};
  for (int gi = 0; gi < 5; ++gi) {
    for (double oa : kOmegaGrid5) {
      for (double ob : kOmegaGrid5) {
        const GameInstance g(kHalfPi * gi / 4.0, WignerAngle(oa), WignerAngle(ob), Backend::Printed);
        for (const auto& a : s)
          for (const auto& b : s)
            worst_printed = std::max(worst_printed, joint_probabilities(g, a, b).joint.norm_defect);
      }
    }
  }
  return {worst_unitary < 1e-12 && worst_printed < 1e-12 && worst_defect < 1e-12,
          fmt("unitary sum err %.2e, printed S-profile err %.2e", worst_unitary, worst_printed) +
              fmt(", map defect %.2e", worst_defect)};
}

Outcome discrepancy_ledger() {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> half(0.0, kHalfPi);
  double elsewhere = 0.0;
  double disputed_min = 1e300;
  for (int i = 0; i < 100; ++i) {
    const double g = half(rng), oa = half(rng), ob = half(rng);
    const Mat4 p = coefficient_map(GameInstance(g, WignerAngle(oa), WignerAngle(ob), Backend::Printed)).matrix;
    const Mat4 u = coefficient_map(GameInstance(g, WignerAngle(oa), WignerAngle(ob), Backend::Unitary)).matrix;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        const double diff = std::abs(p(r, c) - u(r, c));
        if (c == 3 && (r == 1 || r == 2)) {
          disputed_min = std::min(disputed_min, diff);
        } else {
          elsewhere = std::max(elsewhere, diff);
        }
      }
    }
  }
  const Mat4 witness = coefficient_matrix(Backend::Printed, kHalfPi, kPi / 3, 2 * kPi / 3);
  const double defect = unitarity_defect(witness);
  return {elsewhere < 1e-12 && defect > 0.3,
          fmt("undisputed max diff %.2e, witness defect %.4f", elsewhere, defect) +
              fmt(", smallest disputed diff %.3f", disputed_min)};
}

Outcome quantum_equilibrium_scan() {
  const GameInstance g(kHalfPi, WignerAngle(0), WignerAngle(0), Backend::Unitary);
  const BestResponse br = best_response_scan(g, kQ, Player::Alice, 181, 91);
  const bool ok = std::abs(br.payoff - 3.0) < 1e-9 && br.strategy.theta() == 0.0 &&
                  br.strategy.phi() == kHalfPi;
  return {ok, fmt("payoff %.12f at theta=%.6f", br.payoff, br.strategy.theta()) +
                  fmt(", phi=%.6f", br.strategy.phi())};
}

Outcome wigner_properties() {
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const Rapidity x(0.03 * i);
    if (wigner_angle(Rapidity(0.0), x).omega() != 0.0 || wigner_angle(x, Rapidity(0.0)).omega() != 0.0)
      return {false, "nonzero angle with a zero rapidity"};
    for (int j = 0; j <= n; j += 7) {
      const Rapidity y(0.03 * j);
      if (wigner_angle(x, y).omega() != wigner_angle(y, x).omega()) return {false, "asymmetric"};
    }
  }
  for (int fixed = 0; fixed <= 10; ++fixed) {
    const Rapidity other(0.5 * fixed);
    double prev = -1.0;
    for (int i = 0; i <= n; ++i) {
      const double w = wigner_angle(other, Rapidity(0.03 * i)).omega();
      if (w < prev) return {false, "decreasing adjacent pair"};
      prev = w;
    }
  }
  return {true, "symmetric, zero on axes, monotone on 11 grids"};
}

Outcome region_fixture() {
  const auto cells = always_classical_scan(9, Backend::Printed);
  const auto at = [&](std::size_t i, std::size_t j) { return cells[i * 9 + j]; };
  const bool flags = at(7, 7).bob_always_d && !at(0, 0).bob_always_d && !at(1, 1).bob_always_d;

  std::ostringstream a, b, err;
  const int ca = cli::run({"region-map", "--grid", "33"}, a, err);
  const int cb = cli::run({"region-map", "--grid", "33", "--threads", "4"}, b, err);
  const bool identical = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  return {flags && identical,
          std::string(flags ? "fixture flags ok" : "fixture flags wrong") +
              (identical ? ", CSV byte-identical" : ", CSV differs")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rest-frame thresholds", rest_thresholds},
      {2, "closed form vs numeric on 5x5 grid", closed_vs_numeric},
      {3, "three-region Nash structure at rest", nash_at_rest},
      {4, "Bob's D strictly dominant at 7pi/16", bob_always_defects},
      {5, "gA34 = 0 at omega_a = pi/2", alice_limit},
      {6, "threshold ordering", threshold_ordering},
      {7, "k-coefficient oracle equivalence", oracle_equivalence},
      {8, "unitarity and normalization", normalization},
      {9, "coefficient map discrepancy ledger", discrepancy_ledger},
      {10, "Q,Q best-response scan", quantum_equilibrium_scan},
      {11, "Wigner-angle properties", wigner_properties},
      {12, "region-map fixture and determinism", region_fixture},
  };

  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2d %-42s %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failures, secs);
  return failures == 0 ? 0 : 1;
}
