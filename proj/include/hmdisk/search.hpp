#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hmdisk/geometry.hpp"
#include "hmdisk/harmonic.hpp"

namespace hmdisk {

/// Bent-spoke perturbation of the star. Every spoke keeps its foot at the
/// origin and its endpoint on the unit circle; interior joints at the given
/// radii are displaced perpendicular to the spoke axis, and each spoke axis
/// may swing by its own angle offset. The zero vector realizes the plain
/// star at rotation theta.
struct StarPerturbation {
    int n = 2;
    std::vector<double> spoke_angle_offsets;                // n, each in (-pi/(2n), pi/(2n))
    std::vector<double> joint_radii;                        // m ascending values in (0, 1)
    std::vector<std::vector<double>> joint_lateral_offsets; // n rows of m, each in (-0.2, 0.2)
    double theta = 0.0;

    static StarPerturbation zero(int n, int joints = 2);
};

/// Polyline continuum origin -> joint_1 -> ... -> joint_m -> e^{i phi_k} per
/// spoke. Throws InvalidPerturbation when offsets leave their boxes, a vertex
/// leaves the closed disk, or two spokes meet away from the origin.
Continuum realize(const StarPerturbation& p);

enum class Objective {
    MEAN_PSI, // (1/n) sum_k Psi(omega_k)
    MAX_OMEGA // max_k omega_k
};

const char* to_string(Objective o) noexcept;

struct ObjectiveValue {
    double value = 0.0;
    double std_error = 0.0;
};

/// Objective at the perturbed star, marked points a_k = rho e^{2 pi i (k-1)/n} e^{-i theta}.
/// The walk streams are keyed by params.seed alone (common random numbers), so
/// for a fixed seed this is a deterministic function of p.
ObjectiveValue evaluate_objective_detailed(const StarPerturbation& p, double rho,
                                           Objective objective, const WosParams& params);
double evaluate_objective(const StarPerturbation& p, double rho, Objective objective,
                          const WosParams& params);

struct SearchResult {
    StarPerturbation best_params;
    double best_objective = 0.0;
    double best_objective_std_error = 0.0;
    // (evaluation index, objective) recorded whenever the best improves;
    // values are strictly decreasing
    std::vector<std::pair<long, double>> history;
    long evaluations = 0;
};

/// Nelder-Mead over the perturbation coordinates with theta pinned at 0 (the
/// rotation symmetry is quotiented out; a_1 sits on the positive real axis).
/// Starts from a seeded random point with offsets of magnitude <= 0.1 and
/// spends exactly `budget` objective evaluations, penalizing infeasible
/// points. params.seed is ignored: `seed` drives both the starting point and
/// the common-random-number streams, so the result is deterministic in it.
SearchResult minimize(int n, double rho, Objective objective, long budget,
                      std::uint64_t seed, const WosParams& params);

} // namespace hmdisk
