#include "rqpd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "rqpd/detail/trig.hpp"
#include "rqpd/errors.hpp"

namespace rqpd {

namespace {

constexpr double kBisectionWidth = 1e-11;
constexpr int kBisectionMaxIter = 200;
// A payoff difference this close to zero at an endpoint is a root there.
constexpr double kEndpointRoot = 1e-12;

// Squared half-angle cosine and sine, (1 ± cos Ω)/2. At Ω = π/2 both are 0.5 exactly.
struct HalfSquares {
  double c2;
  double s2;
};

HalfSquares half_squares(double omega) {
  const double cos_omega = detail::cos_endpoint_exact(omega);
  return {(1.0 + cos_omega) / 2.0, (1.0 - cos_omega) / 2.0};
}

std::optional<double> arcsin_sqrt(double num, double den) {
  if (!(den > 0.0)) return std::nullopt;
  const double ratio = num / den;
  if (!(ratio >= 0.0 && ratio <= 1.0)) return std::nullopt;
  return std::asin(std::sqrt(ratio));
}

using Difference = std::function<double(double)>;

std::optional<double> bracketed_root(const Difference& f) {
  double lo = 0.0;
  double hi = kHalfPi;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (std::abs(f_lo) <= kEndpointRoot) return lo;
  if (std::abs(f_hi) <= kEndpointRoot) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) return std::nullopt;

  const bool rising = f_lo < 0.0;
  for (int iter = 0; iter < kBisectionMaxIter; ++iter) {
    if (hi - lo < kBisectionWidth) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("threshold bisection did not converge", hi - lo);
}

void check_grid(std::size_t n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + " needs at least 2 points");
}

bool exceeds(double x, double tol) { return x > tol; }

}  // namespace

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::DD:
      return "DD";
    case Profile::QD:
      return "QD";
    case Profile::DQ:
      return "DQ";
    case Profile::QQ:
      return "QQ";
  }
  return "?";
}

NamedStrategy alice_move(Profile p) {
  return (p == Profile::DD || p == Profile::DQ) ? NamedStrategy::D : NamedStrategy::Q;
}

NamedStrategy bob_move(Profile p) {
  return (p == Profile::DD || p == Profile::QD) ? NamedStrategy::D : NamedStrategy::Q;
}

std::string_view to_string(Sds s) {
  switch (s) {
    case Sds::D:
      return "D";
    case Sds::Q:
      return "Q";
    case Sds::None:
      return "NONE";
  }
  return "?";
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Classical:
      return "CLASSICAL";
    case Region::Transition:
      return "TRANSITION";
    case Region::Quantum:
      return "QUANTUM";
  }
  return "?";
}

ProfileTable profile_table(const GameInstance& g) {
  ProfileTable t;
  for (Profile p : kProfiles) {
    t[p] = payoffs(g, to_params(alice_move(p)), to_params(bob_move(p)));
  }
  return t;
}

SdsReport sds_of(const ProfileTable& t, double tie_tol) {
  SdsReport rep;
  rep.margins = {t.alice(1) - t.alice(2), t.alice(3) - t.alice(4), t.bob(1) - t.bob(3),
                 t.bob(2) - t.bob(4)};
  const auto classify = [tie_tol](double m1, double m2) {
    if (exceeds(m1, tie_tol) && exceeds(m2, tie_tol)) return Sds::D;
    if (exceeds(-m1, tie_tol) && exceeds(-m2, tie_tol)) return Sds::Q;
    return Sds::None;
  };
  rep.alice = classify(rep.margins[0], rep.margins[1]);
  rep.bob = classify(rep.margins[2], rep.margins[3]);
  return rep;
}

bool NashReport::contains(Profile p) const {
  return std::find(equilibria.begin(), equilibria.end(), p) != equilibria.end();
}

NashReport nash_set(const ProfileTable& t, double tie_tol) {
  NashReport rep;
  rep.tie_tolerance = tie_tol;
  const auto profile_of = [](NamedStrategy a, NamedStrategy b) {
    if (a == NamedStrategy::D) return b == NamedStrategy::D ? Profile::DD : Profile::DQ;
    return b == NamedStrategy::D ? Profile::QD : Profile::QQ;
  };
  const auto flip = [](NamedStrategy s) {
    return s == NamedStrategy::D ? NamedStrategy::Q : NamedStrategy::D;
  };
  for (Profile p : kProfiles) {
    const NamedStrategy a = alice_move(p);
    const NamedStrategy b = bob_move(p);
    const bool alice_ok = t[p].alice + tie_tol >= t[profile_of(flip(a), b)].alice;
    const bool bob_ok = t[p].bob + tie_tol >= t[profile_of(a, flip(b))].bob;
    if (alice_ok && bob_ok) rep.equilibria.push_back(p);
  }
  return rep;
}

ThresholdSet thresholds_closed_form(WignerAngle omega_a, WignerAngle omega_b) {
  const auto [ca, sa] = half_squares(omega_a.omega());
  const auto [cb, sb] = half_squares(omega_b.omega());

  // Terms are grouped by the other player's factor so that each numerator
  // cancels exactly when that player's c² and s² coincide.
  const double den_a = 5 * ca * cb - 5 * sa * sb + 3 * ca * sb + 2 * sa * cb;
  const double num_a12 = (ca * cb - sa * cb) + (2 * ca * sb - 2 * sa * sb);
  const double num_a34 = (2 * ca * cb - 2 * sa * cb) + (ca * sb - sa * sb);

  const double den_b = 5 * ca * cb - 5 * sa * sb - 3 * ca * sb - 2 * sa * cb;
  const double num_b13 = (ca * cb - ca * sb) + (2 * sa * cb - 2 * sa * sb);
  const double num_b24 = (2 * ca * cb - 2 * ca * sb) + (sa * cb - sa * sb);

  return {arcsin_sqrt(num_a12, den_a), arcsin_sqrt(num_a34, den_a), arcsin_sqrt(num_b13, den_b),
          arcsin_sqrt(num_b24, den_b)};
}

ThresholdSet thresholds_numeric(WignerAngle omega_a, WignerAngle omega_b, Backend backend,
                                const PayoffParams& pay) {
  const auto table_at = [&](double gamma) {
    return profile_table(GameInstance(gamma, omega_a, omega_b, backend, pay));
  };
  ThresholdSet out;
  out.gA12 = bracketed_root([&](double g) { return sds_of(table_at(g)).margins[0]; });
  out.gA34 = bracketed_root([&](double g) { return sds_of(table_at(g)).margins[1]; });
  out.gB13 = bracketed_root([&](double g) { return sds_of(table_at(g)).margins[2]; });
  out.gB24 = bracketed_root([&](double g) { return sds_of(table_at(g)).margins[3]; });
  return out;
}

RegionLabel region_classify(const GameInstance& g, double tie_tol) {
  const SdsReport sds = sds_of(profile_table(g), tie_tol);
  const auto region = [](Sds s) {
    switch (s) {
      case Sds::D:
        return Region::Classical;
      case Sds::Q:
        return Region::Quantum;
      case Sds::None:
        break;
    }
    return Region::Transition;
  };
  return {region(sds.alice), region(sds.bob)};
}

double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (i + 1 >= n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::vector<RegionCell> always_classical_scan(std::size_t grid_n, Backend backend,
                                              unsigned threads) {
  check_grid(grid_n, "region scan");
  std::vector<RegionCell> cells(grid_n * grid_n);

  const auto evaluate = [&](std::size_t idx) {
    const WignerAngle oa(grid_point(0.0, kHalfPi, idx / grid_n, grid_n));
    const WignerAngle ob(grid_point(0.0, kHalfPi, idx % grid_n, grid_n));
    const SdsReport at_zero = sds_of(profile_table(GameInstance(0.0, oa, ob, backend)));
    const SdsReport at_max = sds_of(profile_table(GameInstance(kHalfPi, oa, ob, backend)));

    // Margins are affine in sin²γ, so the endpoints bound every interior γ.
    const bool bob_d = at_zero.margins[2] > kTieTolerance && at_zero.margins[3] > kTieTolerance &&
                       at_max.margins[2] > kTieTolerance && at_max.margins[3] > kTieTolerance;
    const bool alice_q =
        at_zero.margins[0] <= kTieTolerance && at_zero.margins[1] <= kTieTolerance &&
        at_max.margins[0] < -kTieTolerance && at_max.margins[1] < -kTieTolerance;
    cells[idx] = {oa.omega(), ob.omega(), bob_d, alice_q};
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, cells.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) evaluate(i);
    return cells;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cells.size(); i += workers) evaluate(i);
    });
  }
  pool.clear();  // joins
  return cells;
}

std::vector<SweepRow> sweep_gamma(WignerAngle omega_a, WignerAngle omega_b, std::size_t n,
                                  Backend backend, const PayoffParams& pay) {
  check_grid(n, "gamma sweep");
  std::vector<SweepRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gamma = grid_point(0.0, kHalfPi, i, n);
    rows.push_back({gamma, profile_table(GameInstance(gamma, omega_a, omega_b, backend, pay))});
  }
  return rows;
}

BestResponse best_response_scan(const GameInstance& g, const StrategyParams& opponent,
                                Player responder, std::size_t n_theta, std::size_t n_phi) {
  check_grid(n_theta, "theta grid");
  check_grid(n_phi, "phi grid");
  std::optional<BestResponse> best;
  for (std::size_t i = 0; i < n_theta; ++i) {
    for (std::size_t j = 0; j < n_phi; ++j) {
      const StrategyParams mine(grid_point(0.0, kPi, i, n_theta), grid_point(0.0, kHalfPi, j, n_phi));
      const double value = responder == Player::Alice ? payoffs(g, mine, opponent).alice
                                                      : payoffs(g, opponent, mine).bob;
      if (!best || value > best->payoff + kTolerance) best = BestResponse{mine, value};
    }
  }
  return *best;
}

double entanglement_degree(double gamma) {
  const State4 psi = apply(entangler(gamma), State4::basis(Basis::CC));
  return 2.0 * std::abs(psi[Basis::CC] * psi[Basis::DD] - psi[Basis::CD] * psi[Basis::DC]);
}

}  // namespace rqpd
