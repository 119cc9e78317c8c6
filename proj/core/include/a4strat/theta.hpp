#pragma once

#include <span>
#include <vector>

#include "a4strat/characteristic.hpp"
#include "a4strat/siegel.hpp"

namespace a4strat {

inline constexpr int kMaxRadius = 64;
inline constexpr double kMaxImZ = 10.0;

struct ThetaValue {
  Complex value;
  /// Guaranteed bound on the truncation error of `value`.
  double tail_bound = 0.0;
  /// The sum runs over n in [-radius, radius]^g.
  int radius = 0;
};

/// Upper bound on the part of the series outside the box [-R, R]^g:
///
///   sum_{s >= R} (2s+1)^g exp(-pi lambda (s - 1/2)^2 + 2 pi |Im z| (s - 1/2))
///
/// Every n with max_i |n_i| = s has |n + eps/2| >= s - 1/2, and (2s+1)^g over-counts
/// that shell. Returns +inf when R - 1/2 < |Im z| / lambda (the bound is not yet
/// decreasing there). Monotone non-increasing in R and in lambda.
double theta_tail_bound(int genus, double lambda_min, int radius, double im_z_norm = 0.0);

/// Smallest R >= 1 with theta_tail_bound < target. Throws CapExceededError past kMaxRadius.
int truncation_radius(const SiegelPoint& tau, double target, double im_z_norm = 0.0);

/// theta_m(z, tau) with certified truncation error below target.
ThetaValue theta_function(const Characteristic& m, const ComplexVector& z, const SiegelPoint& tau,
                          double target);

ThetaValue theta_constant(const Characteristic& m, const SiegelPoint& tau, double target);

/// Theta constants for many characteristics in one pass over the lattice; the
/// exponentials are shared by all characteristics with the same eps.
std::vector<ThetaValue> theta_constants(std::span<const Characteristic> chars,
                                        const SiegelPoint& tau, double target);

/// Theta constants of all even characteristics, in all_characteristics(g, kEven) order.
std::vector<ThetaValue> even_theta_constants(const SiegelPoint& tau, double target);

}  // namespace a4strat
