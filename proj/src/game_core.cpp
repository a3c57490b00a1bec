#include "rqpd/game_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "rqpd/detail/trig.hpp"
#include "rqpd/errors.hpp"

namespace rqpd {

using detail::cos_endpoint_exact;
using detail::half_cos;
using detail::half_sin;

namespace {

void check_range(const char* name, double value, double lo, double hi) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double clamp_dust(double x) {
  if (x < 0.0 && x >= -kTolerance) return 0.0;
  if (x > 1.0 && x <= 1.0 + kTolerance) return 1.0;
  return x;
}

Complex expi(double angle) { return {cos_endpoint_exact(angle), std::sin(angle)}; }

}  // namespace

StrategyParams::StrategyParams(double theta, double phi) : theta_(theta), phi_(phi) {
  check_range("theta", theta, 0.0, kPi);
  check_range("phi", phi, 0.0, kHalfPi);
}

StrategyParams to_params(NamedStrategy s) {
  switch (s) {
    case NamedStrategy::C:
      return {0.0, 0.0};
    case NamedStrategy::D:
      return {kPi, 0.0};
    case NamedStrategy::Q:
      return {0.0, kHalfPi};
  }
  throw DomainError("unknown named strategy");
}

std::string_view to_string(NamedStrategy s) {
  switch (s) {
    case NamedStrategy::C:
      return "C";
    case NamedStrategy::D:
      return "D";
    case NamedStrategy::Q:
      return "Q";
  }
  return "?";
}

NamedStrategy parse_named_strategy(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text.front()))) {
      case 'C':
        return NamedStrategy::C;
      case 'D':
        return NamedStrategy::D;
      case 'Q':
        return NamedStrategy::Q;
    }
  }
  throw DomainError("unknown strategy '" + std::string(text) + "' (expected C, D or Q)");
}

PayoffParams::PayoffParams(double t, double r, double p, double s, bool allow_non_dilemma)
    : t_(t), r_(r), p_(p), s_(s) {
  for (double v : {t, r, p, s}) {
    if (!std::isfinite(v)) throw DomainError("payoff constants must be finite");
  }
  if (!allow_non_dilemma && !(t > r && r > p && p > s)) {
    throw DomainError("payoff constants violate t > r > p > s");
  }
}

JointProbabilities JointProbabilities::from_amplitudes(const State4& psi) {
  JointProbabilities pr;
  pr.p_cc = std::norm(psi[Basis::CC]);
  pr.p_cd = std::norm(psi[Basis::CD]);
  pr.p_dc = std::norm(psi[Basis::DC]);
  pr.p_dd = std::norm(psi[Basis::DD]);
  pr.norm_defect = std::abs(pr.sum() - 1.0);
  pr.p_cc = clamp_dust(pr.p_cc);
  pr.p_cd = clamp_dust(pr.p_cd);
  pr.p_dc = clamp_dust(pr.p_dc);
  pr.p_dd = clamp_dust(pr.p_dd);
  return pr;
}

void check_gamma(double gamma) { check_range("gamma", gamma, 0.0, kHalfPi); }

Mat2 strategy_unitary(const StrategyParams& s) {
  const double c = half_cos(s.theta());
  const double sn = half_sin(s.theta());
  Mat2 u;
  u(0, 0) = expi(s.phi()) * c;
  u(0, 1) = sn;
  u(1, 0) = -sn;
  u(1, 1) = std::conj(expi(s.phi())) * c;
  return u;
}

Mat4 entangler(double gamma) {
  check_gamma(gamma);
  const Mat2 d = strategy_unitary(to_params(NamedStrategy::D));
  return Complex(half_cos(gamma)) * Mat4::identity() +
         Complex(0.0, half_sin(gamma)) * tensor2(d, d);
}

KVector k_coefficients(const StrategyParams& a, const StrategyParams& b, double gamma) {
  check_gamma(gamma);
  const double ca = half_cos(a.theta());
  const double sa = half_sin(a.theta());
  const double cb = half_cos(b.theta());
  const double sb = half_sin(b.theta());
  const double cg = half_cos(gamma);
  const double sg = half_sin(gamma);
  const Complex ea = expi(a.phi());
  const Complex eb = expi(b.phi());

  KVector k;
  k[Basis::CC] = ea * eb * (ca * cb * cg) + kI * (sa * sb * sg);
  k[Basis::CD] = -ea * (ca * sb * cg) + kI * std::conj(eb) * (sa * cb * sg);
  k[Basis::DC] = -eb * (sa * cb * cg) + kI * std::conj(ea) * (ca * sb * sg);
  k[Basis::DD] = Complex(sa * sb * cg) + kI * std::conj(ea * eb) * (ca * cb * sg);
  return k;
}

PayoffPair payoff_from_probabilities(const JointProbabilities& pr, const PayoffParams& pay,
                                     double max_norm_defect) {
  if (!(pr.norm_defect <= max_norm_defect)) {
    throw NumericError("probability norm defect " + std::to_string(pr.norm_defect) +
                           " exceeds " + std::to_string(max_norm_defect),
                       pr.norm_defect);
  }
  PayoffPair out;
  out.alice = pay.r() * pr.p_cc + pay.p() * pr.p_dd + pay.t() * pr.p_dc + pay.s() * pr.p_cd;
  out.bob = pay.r() * pr.p_cc + pay.p() * pr.p_dd + pay.s() * pr.p_dc + pay.t() * pr.p_cd;
  return out;
}

Bimatrix classical_table(const PayoffParams& pay) {
  Bimatrix m;
  m[0][0] = {pay.r(), pay.r()};
  m[0][1] = {pay.s(), pay.t()};
  m[1][0] = {pay.t(), pay.s()};
  m[1][1] = {pay.p(), pay.p()};
  return m;
}

}  // namespace rqpd
