#include "hmdisk/bound.hpp"

#include <cmath>
#include <limits>

#include "hmdisk/conformal.hpp"
#include "hmdisk/error.hpp"
#include "hmdisk/quadrature.hpp"

namespace hmdisk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
// means this close to 1 saturate the transform
constexpr double kSaturation = 1e-9;
} // namespace

double psi(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::DomainError, "psi: argument must lie in [0, 1]");
    if (x == 1.0) return std::numeric_limits<double>::infinity();
    // log((1+s)/(1-s)) with s = sin(pi x/2). The atanh form is exact near 0;
    // near 1 it amplifies the rounding of s by 1/(1-s^2), so switch to the
    // equivalent -2 log tan(pi (1-x)/4), whose error stays at machine scale.
    if (x < 0.5) return 2.0 * std::atanh(std::sin(kPi * x / 2.0));
    return -2.0 * std::log(std::tan(kPi * (1.0 - x) / 4.0));
}

double psi_prime(double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw Error(ErrorCode::DomainError, "psi_prime: argument must lie in [0, 1)");
    return kPi / std::cos(kPi * x / 2.0);
}

double psi_inverse(double y) {
    if (std::isnan(y) || y < 0.0)
        throw Error(ErrorCode::DomainError, "psi_inverse: argument must be >= 0");
    if (std::isinf(y)) return 1.0;
    // mirror psi's branches: asin(tanh) is exact up to x = 1/2, after which
    // tanh saturates and the complementary angle 1 - (4/pi) asin(...) keeps
    // the asin argument small. Branch point is psi(1/2) = 2 log(1 + sqrt 2).
    if (y < 1.7627471740390859)
        return (2.0 / kPi) * std::asin(std::tanh(y / 2.0));
    return 1.0 - (4.0 / kPi) * std::asin(std::sqrt(1.0 / (1.0 + std::exp(y))));
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::HOLDS_WITHIN_NOISE: return "HOLDS_WITHIN_NOISE";
        case Verdict::VIOLATION_CANDIDATE: return "VIOLATION_CANDIDATE";
    }
    return "?";
}

BoundReport bound_report_from_estimates(std::vector<Estimate> omegas, int n, double rho) {
    if (n < 2) throw Error(ErrorCode::DomainError, "bound report: n must be >= 2");
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::DomainError, "bound report: rho must lie in (0, 1)");
    if ((int)omegas.size() != n)
        throw Error(ErrorCode::DomainError, "bound report: need one estimate per component");

    BoundReport rep;
    rep.rhs = -double(n) * std::log(rho);

    bool saturated = false;
    for (const auto& e : omegas)
        if (e.mean >= 1.0 - kSaturation) saturated = true;

    if (saturated) {
        // a component whose measure is (numerically) 1 pushes the average to
        // +infinity; the inequality holds with infinite slack
        rep.lhs = std::numeric_limits<double>::infinity();
        rep.lhs_std_error = 0.0;
        rep.margin = std::numeric_limits<double>::infinity();
        rep.verdict = Verdict::HOLDS;
        rep.omegas = std::move(omegas);
        return rep;
    }

    double sum = 0.0, var = 0.0;
    for (const auto& e : omegas) {
        sum += psi(e.mean);
        const double dp = psi_prime(e.mean) * e.std_error;
        var += dp * dp;
    }
    rep.lhs = sum / n;
    rep.lhs_std_error = std::sqrt(var) / n;
    rep.margin = rep.lhs - rep.rhs;

    const double band = 3.0 * rep.lhs_std_error;
    if (rep.margin > band)
        rep.verdict = Verdict::HOLDS;
    else if (rep.margin < -band)
        rep.verdict = Verdict::VIOLATION_CANDIDATE;
    else
        rep.verdict = Verdict::HOLDS_WITHIN_NOISE;
    rep.omegas = std::move(omegas);
    return rep;
}

BoundReport check_inequality(const Configuration& cfg, const WosParams& params) {
    std::vector<Estimate> omegas;
    omegas.reserve(cfg.n);
    for (int k = 1; k <= cfg.n; ++k)
        omegas.push_back(wos_estimate(cfg, k, params));
    return bound_report_from_estimates(std::move(omegas), cfg.n, cfg.rho);
}

double minmax_lower_bound(int n, double rho) {
    return extremal_measure(n, rho);
}

IntegralIdentity integral_identity_check(double theta) {
    if (!(theta > 0.01 && theta < kPi - 0.01))
        throw Error(ErrorCode::DomainError,
                    "integral identity: theta must lie in (0.01, pi - 0.01)");
    SlitComplementDomain dom{theta};
    IntegralIdentity out;
    out.quadrature = integrate_adaptive(
        [&](double w) { return 1.0 / inner_radius_slit_complement(dom, w); },
        -1.0, 0.0, 1e-12, 1'000'000);
    out.closed_form = 0.25 * psi(theta / kPi);
    return out;
}

My3Chain my3_chain_check(int n, double rho) {
    if (n < 2) throw Error(ErrorCode::DomainError, "my3 chain: n must be >= 2");
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::DomainError, "my3 chain: rho must lie in (0, 1)");
    My3Chain out;
    // every sector contributes the same integral, so the average over k is
    // just one of them; inner_radius_sector(s, r) = 4 r / n independent of
    // the bisector angle
    Sector s{n, 0.0};
    out.radial_integral = integrate_adaptive(
        [&](double r) { return 1.0 / inner_radius_sector(s, r); },
        rho, 1.0, 1e-13, 1'000'000);
    out.bound = -(double(n) / 4.0) * std::log(rho);
    out.psi_side = 0.25 * psi(extremal_measure(n, rho));
    return out;
}

} // namespace hmdisk
