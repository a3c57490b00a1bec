#pragma once

#include <string_view>
#include <utility>

#include "rqpd/game_core.hpp"
#include "rqpd/qmat.hpp"

namespace rqpd {

// Boost rapidity (dimensionless, ≥ 0).
class Rapidity {
 public:
  explicit Rapidity(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// v in units of c, 0 ≤ v < 1. Throws DomainError otherwise.
Rapidity rapidity_from_speed(double v);
double speed_from_rapidity(Rapidity r);

// Wigner rotation angle Ω ∈ [0, π/2].
class WignerAngle {
 public:
  explicit WignerAngle(double omega);
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

// Ω = arctan(sinh α sinh δ / (cosh α + cosh δ)) for arbiter rapidity α and
// particle rapidity δ.
WignerAngle wigner_angle(Rapidity alpha, Rapidity delta);

// How the arbiter-frame coefficient map is realized.
//   Printed: the ω-array with entries (2,4) = −ω₃ and (3,4) = −ω₂. Not unitary
//            in general, but norm-preserving on {D, Q} profiles, and the
//            closed-form thresholds follow from it. Labelled "PAPER_EQ14".
//   Unitary: J(γ)† (R_A ⊗ R_B), which has −ω₃* and +ω₂* at those entries.
enum class Backend { Printed, Unitary };

std::string_view to_string(Backend b);  // "PAPER_EQ14" / "UNITARY"
// Accepts "paper", "paper_eq14", "unitary" (case-insensitive).
Backend parse_backend(std::string_view text);

// R_A rotates with sense +, R_B = R_A(Ω_B)ᵀ (Bob's particle moves along −z).
// With these senses J†(R_A ⊗ R_B) matches the ω-array in rows 1 and 4.
std::pair<Mat2, Mat2> spin_rotation_pair(WignerAngle omega_a, WignerAngle omega_b);

struct GameInstance {
  GameInstance(double gamma, WignerAngle omega_a, WignerAngle omega_b, Backend backend,
               PayoffParams pay = {});

  double gamma;
  WignerAngle omega_a;
  WignerAngle omega_b;
  Backend backend;
  PayoffParams pay;
};

struct CoefficientMap {
  Mat4 matrix;
  Backend backend;
  double omega_a;
  double omega_b;
  double gamma;
};

// ω₁..ω₄ built from half-angle cosines and sines of γ, Ω_A, Ω_B.
std::array<Complex, 4> omega_terms(double gamma, double omega_a, double omega_b);

// The map for arbitrary finite rotation angles. Finite rapidities never give
// Ω ≥ π/2, but the matrix is defined for any angle and diagnostics probe it there.
Mat4 coefficient_matrix(Backend backend, double gamma, double omega_a, double omega_b);

CoefficientMap coefficient_map(const GameInstance& g);

struct TaggedProbabilities {
  JointProbabilities joint;
  Backend backend;

  // True when the norm defect exceeds the payoff integrity limit.
  bool flagged(double limit = kDefaultMaxNormDefect) const { return joint.norm_defect > limit; }
};

// P_ab = |(M k)_ab|² with M the instance's coefficient map.
TaggedProbabilities joint_probabilities(const GameInstance& g, const StrategyParams& a,
                                        const StrategyParams& b);

// Throws NumericError when the backend leaks norm beyond kDefaultMaxNormDefect.
PayoffPair payoffs(const GameInstance& g, const StrategyParams& a, const StrategyParams& b);

}  // namespace rqpd
