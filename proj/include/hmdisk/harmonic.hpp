#pragma once

#include <cstdint>

#include "hmdisk/geometry.hpp"

namespace hmdisk {

/// Walk-on-spheres controls. epsilon is the absorbing shell width.
struct WosParams {
    double epsilon = 1e-4;
    long max_steps = 1'000'000; // per walk
    long samples = 1'000'000;
    std::uint64_t seed = 0;
};

/// Monte Carlo harmonic-measure estimate. Aborted walks are excluded from
/// the mean; mean = hit_e / (hit_e + hit_circle).
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    long samples = 0;
    long hit_e = 0;
    long hit_circle = 0;
    long aborted = 0;
};

/// Number of concurrent walk workers: HM_THREADS when set, otherwise the
/// machine parallelism. Results never depend on this value.
int worker_count();

/// Harmonic measure, seen from z, of the boundary arc {|w|=1, |arg w| <= theta}
/// in the plain unit disk. theta/pi at the origin; elsewhere by transporting
/// the arc endpoints through the automorphism that sends z to 0.
double exact_arc_measure(Point z, double theta);

/// Harmonic measure of the extremal star seen from any of its marked points:
/// (2/pi) arcsin((1 - rho^n)/(1 + rho^n)).
double extremal_measure(int n, double rho);

/// Core estimator: harmonic measure of `e` relative to the unit circle, seen
/// from `start`, in the component of the disk minus `e` containing `start`.
/// Each sample walk is a deterministic function of (seed, stream_salt, index),
/// so results are bit-identical for a fixed seed regardless of worker count.
Estimate walk_harmonic_measure(const Continuum& e, Point start, const WosParams& params,
                               std::uint64_t stream_salt = 0, int workers = 0);

/// Estimate of omega_k = omega(a_k, E, D_k) for a configuration; k is 1-based.
Estimate wos_estimate(const Configuration& cfg, int k, const WosParams& params);

/// Solver calibration against the closed form: harmonic measure of the arc
/// {|arg w| <= theta} from z in the plain disk, scored by exit angle.
Estimate wos_selfcheck_disk(Point z, double theta, const WosParams& params);

} // namespace hmdisk
