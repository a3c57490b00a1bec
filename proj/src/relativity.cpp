#include "rqpd/relativity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "rqpd/detail/trig.hpp"
#include "rqpd/errors.hpp"

namespace rqpd {

using detail::half_cos;
using detail::half_sin;

namespace {

Mat2 rotation(double omega) {
  Mat2 r;
  r(0, 0) = half_cos(omega);
  r(0, 1) = -half_sin(omega);
  r(1, 0) = half_sin(omega);
  r(1, 1) = half_cos(omega);
  return r;
}

}  // namespace

Rapidity::Rapidity(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError("rapidity must be finite and non-negative, got " + std::to_string(value));
  }
}

Rapidity rapidity_from_speed(double v) {
  if (!std::isfinite(v) || v < 0.0 || v >= 1.0) {
    throw DomainError("speed must lie in [0, 1) (fraction of c), got " + std::to_string(v));
  }
  return Rapidity(std::atanh(v));
}

double speed_from_rapidity(Rapidity r) { return std::tanh(r.value()); }

WignerAngle::WignerAngle(double omega) : omega_(omega) {
  if (!std::isfinite(omega) || omega < 0.0 || omega > kHalfPi) {
    throw DomainError("Wigner angle " + std::to_string(omega) + " outside [0, pi/2]");
  }
}

WignerAngle wigner_angle(Rapidity alpha, Rapidity delta) {
  const double a = alpha.value();
  const double d = delta.value();
  // Symmetric in (a, d) term by term, so swapping arguments is bit-identical.
  const double num = std::sinh(a) * std::sinh(d);
  const double den = std::cosh(a) + std::cosh(d);
  return WignerAngle(std::atan(num / den));
}

std::string_view to_string(Backend b) {
  return b == Backend::Printed ? "PAPER_EQ14" : "UNITARY";
}

Backend parse_backend(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "paper" || lower == "paper_eq14") return Backend::Printed;
  if (lower == "unitary") return Backend::Unitary;
  throw DomainError("unknown backend '" + std::string(text) + "' (expected paper or unitary)");
}

std::pair<Mat2, Mat2> spin_rotation_pair(WignerAngle omega_a, WignerAngle omega_b) {
  return {rotation(omega_a.omega()), transpose2(rotation(omega_b.omega()))};
}

GameInstance::GameInstance(double gamma_, WignerAngle omega_a_, WignerAngle omega_b_,
                           Backend backend_, PayoffParams pay_)
    : gamma(gamma_), omega_a(omega_a_), omega_b(omega_b_), backend(backend_), pay(pay_) {
  check_gamma(gamma);
}

std::array<Complex, 4> omega_terms(double gamma, double omega_a, double omega_b) {
  const double cg = half_cos(gamma);
  const double sg = half_sin(gamma);
  const double ca = half_cos(omega_a);
  const double sa = half_sin(omega_a);
  const double cb = half_cos(omega_b);
  const double sb = half_sin(omega_b);
  return {Complex(cg * ca * cb, sg * sa * sb), Complex(cg * ca * sb, sg * sa * cb),
          Complex(cg * sa * cb, sg * ca * sb), Complex(cg * sa * sb, sg * ca * cb)};
}

Mat4 coefficient_matrix(Backend backend, double gamma, double omega_a, double omega_b) {
  for (double v : {gamma, omega_a, omega_b}) {
    if (!std::isfinite(v)) throw DomainError("coefficient map angles must be finite");
  }
  if (backend == Backend::Unitary) {
    // entangler() range-checks γ; build J directly so any finite γ works here.
    const Mat2 d = strategy_unitary(to_params(NamedStrategy::D));
    const Mat4 j = Complex(half_cos(gamma)) * Mat4::identity() +
                   Complex(0.0, half_sin(gamma)) * tensor2(d, d);
    return adjoint(j) * tensor2(rotation(omega_a), transpose2(rotation(omega_b)));
  }

  const auto [w1, w2, w3, w4] = omega_terms(gamma, omega_a, omega_b);
  const auto c = [](Complex z) { return std::conj(z); };
  Mat4 m;
  m.e = {w1,     c(w2), -c(w3), -w4,  //
         -c(w2), w1,    w4,     -w3,  //
         c(w3),  w4,    w1,     -w2,  //
         -w4,    c(w3), -c(w2), w1};
  return m;
}

CoefficientMap coefficient_map(const GameInstance& g) {
  return {coefficient_matrix(g.backend, g.gamma, g.omega_a.omega(), g.omega_b.omega()), g.backend,
          g.omega_a.omega(), g.omega_b.omega(), g.gamma};
}

TaggedProbabilities joint_probabilities(const GameInstance& g, const StrategyParams& a,
                                        const StrategyParams& b) {
  const CoefficientMap map = coefficient_map(g);
  const State4 final_state = apply(map.matrix, k_coefficients(a, b, g.gamma));
  return {JointProbabilities::from_amplitudes(final_state), map.backend};
}

PayoffPair payoffs(const GameInstance& g, const StrategyParams& a, const StrategyParams& b) {
  return payoff_from_probabilities(joint_probabilities(g, a, b).joint, g.pay);
}

}  // namespace rqpd
