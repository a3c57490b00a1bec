#pragma once

#include <array>
#include <numbers>
#include <string_view>

#include "rqpd/qmat.hpp"

namespace rqpd {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// A point of the two-parameter strategy family, θ ∈ [0, π], φ ∈ [0, π/2].
class StrategyParams {
 public:
  StrategyParams(double theta, double phi);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;

 private:
  double theta_;
  double phi_;
};

enum class NamedStrategy { C, D, Q };

StrategyParams to_params(NamedStrategy s);
std::string_view to_string(NamedStrategy s);
// Parses "C", "D" or "Q" (case-insensitive); throws DomainError otherwise.
NamedStrategy parse_named_strategy(std::string_view text);

// Payoff constants t (temptation), r (reward), p (punishment), s (sucker).
class PayoffParams {
 public:
  // The standard table (5, 3, 1, 0).
  PayoffParams() = default;
  // Throws DomainError unless t > r > p > s, or allow_non_dilemma is set.
  PayoffParams(double t, double r, double p, double s, bool allow_non_dilemma = false);

  double t() const noexcept { return t_; }
  double r() const noexcept { return r_; }
  double p() const noexcept { return p_; }
  double s() const noexcept { return s_; }

 private:
  double t_ = 5.0;
  double r_ = 3.0;
  double p_ = 1.0;
  double s_ = 0.0;
};

// Amplitudes k_ab of (U_A ⊗ U_B) J(γ) |CC⟩ in (CC, CD, DC, DD) order.
using KVector = State4;

struct JointProbabilities {
  double p_cc = 0.0;
  double p_cd = 0.0;
  double p_dc = 0.0;
  double p_dd = 0.0;
  double norm_defect = 0.0;  // |Σ − 1| before clamping

  // Squared magnitudes of a final state. Values within 1e-12 outside [0, 1]
  // are clamped after the defect is recorded; larger excursions are kept.
  static JointProbabilities from_amplitudes(const State4& psi);

  double sum() const noexcept { return p_cc + p_cd + p_dc + p_dd; }
};

struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;
};

inline constexpr double kDefaultMaxNormDefect = 1e-6;

Mat2 strategy_unitary(const StrategyParams& s);

// exp(iγ D⊗D / 2) = cos(γ/2) I + i sin(γ/2) D⊗D, γ ∈ [0, π/2].
Mat4 entangler(double gamma);

// Closed-form amplitudes; equals apply(tensor2(U_A, U_B) * entangler(γ), |CC⟩).
KVector k_coefficients(const StrategyParams& a, const StrategyParams& b, double gamma);

// Expected payoffs. Throws NumericError (carrying the defect) when
// pr.norm_defect exceeds max_norm_defect.
PayoffPair payoff_from_probabilities(const JointProbabilities& pr, const PayoffParams& pay,
                                     double max_norm_defect = kDefaultMaxNormDefect);

// Classical bimatrix over {C, D}; index [alice][bob] with 0 = C, 1 = D.
using Bimatrix = std::array<std::array<PayoffPair, 2>, 2>;
Bimatrix classical_table(const PayoffParams& pay);

// Throws DomainError unless γ ∈ [0, π/2] and finite.
void check_gamma(double gamma);

}  // namespace rqpd
