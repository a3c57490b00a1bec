#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rqpd/game_core.hpp"
#include "rqpd/relativity.hpp"

namespace rqpd {

inline constexpr double kTieTolerance = 1e-9;

// Profiles over S = {D, Q}, named Alice-first. Index order is G1..G4.
enum class Profile : std::size_t { DD = 0, QD = 1, DQ = 2, QQ = 3 };
inline constexpr std::array<Profile, 4> kProfiles{Profile::DD, Profile::QD, Profile::DQ,
                                                  Profile::QQ};

std::string_view to_string(Profile p);
NamedStrategy alice_move(Profile p);
NamedStrategy bob_move(Profile p);

enum class Player { Alice, Bob };

struct ProfileTable {
  std::array<PayoffPair, 4> payoff{};

  const PayoffPair& operator[](Profile p) const { return payoff[static_cast<std::size_t>(p)]; }
  PayoffPair& operator[](Profile p) { return payoff[static_cast<std::size_t>(p)]; }

  // G_k for k = 1..4.
  double alice(int k) const { return payoff.at(static_cast<std::size_t>(k - 1)).alice; }
  double bob(int k) const { return payoff.at(static_cast<std::size_t>(k - 1)).bob; }
};

ProfileTable profile_table(const GameInstance& g);

enum class Sds { D, Q, None };
std::string_view to_string(Sds s);

struct SdsReport {
  Sds alice = Sds::None;
  Sds bob = Sds::None;
  // G1_A − G2_A, G3_A − G4_A, G1_B − G3_B, G2_B − G4_B.
  std::array<double, 4> margins{};
};

SdsReport sds_of(const ProfileTable& t, double tie_tol = kTieTolerance);

struct NashReport {
  std::vector<Profile> equilibria;  // ascending profile order
  double tie_tolerance = kTieTolerance;

  bool contains(Profile p) const;
};

// Pure-strategy equilibria of the 2×2 bimatrix; a difference within tie_tol
// counts as a best response for both alternatives.
NashReport nash_set(const ProfileTable& t, double tie_tol = kTieTolerance);

struct ThresholdSet {
  std::optional<double> gA12;
  std::optional<double> gA34;
  std::optional<double> gB13;
  std::optional<double> gB24;

  std::array<std::optional<double>, 4> as_array() const { return {gA12, gA34, gB13, gB24}; }
};

// Closed forms arcsin√(num/den) in the half-angle squares of Ω_A, Ω_B (valid
// for the default payoff table). A threshold is
// absent when its ratio falls outside [0, 1] or its denominator is ≤ 0.
ThresholdSet thresholds_closed_form(WignerAngle omega_a, WignerAngle omega_b);

// Bisection on each payoff difference between γ = 0 and γ = π/2.
ThresholdSet thresholds_numeric(WignerAngle omega_a, WignerAngle omega_b, Backend backend,
                                const PayoffParams& pay = {});

enum class Region { Classical, Transition, Quantum };
std::string_view to_string(Region r);

struct RegionLabel {
  Region alice;
  Region bob;
};

RegionLabel region_classify(const GameInstance& g, double tie_tol = kTieTolerance);

struct RegionCell {
  double omega_a;
  double omega_b;
  bool bob_always_d;
  bool alice_always_q;
};

// grid_n × grid_n uniform grid over [0, π/2]², rows ordered by (Ω_A, Ω_B).
// Cells are evaluated on up to `threads` workers; the result does not depend on it.
std::vector<RegionCell> always_classical_scan(std::size_t grid_n, Backend backend,
                                              unsigned threads = 1);

struct SweepRow {
  double gamma;
  ProfileTable table;
};

std::vector<SweepRow> sweep_gamma(WignerAngle omega_a, WignerAngle omega_b, std::size_t n,
                                  Backend backend, const PayoffParams& pay = {});

struct BestResponse {
  StrategyParams strategy;
  double payoff;
};

// Grid argmax of the responder's payoff against a fixed opponent; ties go to
// the smallest θ, then the smallest φ.
BestResponse best_response_scan(const GameInstance& g, const StrategyParams& opponent,
                                Player responder, std::size_t n_theta, std::size_t n_phi);

// Concurrence of J(γ)|CC⟩ (equals sin γ).
double entanglement_degree(double gamma);

// i-th of n points spanning [lo, hi]; the last point is exactly hi.
double grid_point(double lo, double hi, std::size_t i, std::size_t n);

}  // namespace rqpd
