#pragma once

#include <cmath>
#include <numbers>

namespace rqpd::detail {

// cos x evaluated as sin(π/2 − x): returns exactly 0 at x = π/2 (as a double),
// which keeps named strategies and endpoint angles free of 6e-17 residue.
inline double cos_endpoint_exact(double x) { return std::sin(std::numbers::pi / 2.0 - x); }

inline double half_cos(double x) { return cos_endpoint_exact(x / 2.0); }
inline double half_sin(double x) { return std::sin(x / 2.0); }

}  // namespace rqpd::detail
