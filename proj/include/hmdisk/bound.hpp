#pragma once

#include <vector>

#include "hmdisk/geometry.hpp"
#include "hmdisk/harmonic.hpp"

namespace hmdisk {

/// Psi(x) = log((1 + sin(pi x/2)) / (1 - sin(pi x/2))), strictly increasing on
/// [0, 1) with Psi(0) = 0; x = 1 returns +infinity.
double psi(double x);

/// d/dx Psi(x) = pi / cos(pi x / 2), for x in [0, 1).
double psi_prime(double x);

/// Inverse of psi: (2/pi) arcsin(tanh(y/2)), for y >= 0 (+infinity maps to 1).
double psi_inverse(double y);

enum class Verdict {
    HOLDS,             // margin > 3 sigma
    HOLDS_WITHIN_NOISE,// |margin| <= 3 sigma
    VIOLATION_CANDIDATE// margin < -3 sigma; the bound is proven, so suspect the solver
};

const char* to_string(Verdict v) noexcept;

/// Both sides of the mean-Psi inequality with first-order error propagation.
struct BoundReport {
    std::vector<Estimate> omegas;
    double lhs = 0.0;           // (1/n) sum Psi(mean_k)
    double lhs_std_error = 0.0; // (1/n) sqrt(sum (Psi'(mean_k) stderr_k)^2)
    double rhs = 0.0;           // -n log rho
    double margin = 0.0;        // lhs - rhs
    Verdict verdict = Verdict::HOLDS_WITHIN_NOISE;
};

/// Assemble a report from per-component estimates. Any mean at 1 (within
/// 1e-9) makes the left side +infinity and the verdict HOLDS.
BoundReport bound_report_from_estimates(std::vector<Estimate> omegas, int n, double rho);

/// Estimate all omega_k and check the inequality for the configuration.
BoundReport check_inequality(const Configuration& cfg, const WosParams& params);

/// Lower bound for max_k omega_k over all admissible continua: the measure of
/// the extremal star.
double minmax_lower_bound(int n, double rho);

struct IntegralIdentity {
    double quadrature = 0.0;  // adaptive integral of 1/r(G, w) over [-1, 0]
    double closed_form = 0.0; // (1/4) Psi(theta/pi)
};

/// Numerical check of the inner-radius integral against its closed form,
/// for theta in (0.01, pi - 0.01).
IntegralIdentity integral_identity_check(double theta);

struct My3Chain {
    double radial_integral = 0.0; // integral of n/(4r) over [rho, 1]
    double bound = 0.0;           // -(n/4) log rho
    double psi_side = 0.0;        // (1/n) sum_k (1/4) Psi(omega*) at the star
};

/// Closes the radial-integration chain at the extremal configuration: the
/// sector inner-radius integral, its elementary value, and the Psi side all
/// agree there.
My3Chain my3_chain_check(int n, double rho);

} // namespace hmdisk
