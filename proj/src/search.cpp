#include "hmdisk/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>

#include "hmdisk/bound.hpp"
#include "hmdisk/error.hpp"
#include "hmdisk/rng.hpp"

namespace hmdisk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLateralBox = 0.2;
constexpr double kTouchTol = 1e-12;

[[noreturn]] void bad(const std::string& what) {
    throw Error(ErrorCode::InvalidPerturbation, "perturbation: " + what);
}

void validate(const StarPerturbation& p) {
    if (p.n < 2) bad("n must be >= 2");
    if (!std::isfinite(p.theta)) bad("theta must be finite");
    if ((int)p.spoke_angle_offsets.size() != p.n) bad("need one angle offset per spoke");
    if ((int)p.joint_lateral_offsets.size() != p.n) bad("need one lateral row per spoke");
    const std::size_t m = p.joint_radii.size();
    const double angle_box = kPi / (2.0 * p.n);
    for (double a : p.spoke_angle_offsets)
        if (!(std::fabs(a) < angle_box)) bad("angle offset outside (-pi/2n, pi/2n)");
    double prev = 0.0;
    for (double r : p.joint_radii) {
        if (!(r > prev && r < 1.0)) bad("joint radii must ascend within (0, 1)");
        prev = r;
    }
    for (const auto& row : p.joint_lateral_offsets) {
        if (row.size() != m) bad("lateral row length must match joint count");
        for (double l : row)
            if (!(std::fabs(l) < kLateralBox)) bad("lateral offset outside (-0.2, 0.2)");
    }
}
} // namespace

StarPerturbation StarPerturbation::zero(int n, int joints) {
    if (n < 2) bad("n must be >= 2");
    if (joints < 0) bad("joint count must be >= 0");
    StarPerturbation p;
    p.n = n;
    p.spoke_angle_offsets.assign(n, 0.0);
    p.joint_radii.resize(joints);
    for (int j = 0; j < joints; ++j) p.joint_radii[j] = double(j + 1) / (joints + 1);
    p.joint_lateral_offsets.assign(n, std::vector<double>(joints, 0.0));
    return p;
}

Continuum realize(const StarPerturbation& p) {
    validate(p);
    const std::size_t m = p.joint_radii.size();

    // vertex chains, one per spoke, starting at the origin
    std::vector<std::vector<Point>> chains(p.n);
    for (int k = 0; k < p.n; ++k) {
        const double phi = (kPi + 2.0 * kPi * k) / p.n - p.theta + p.spoke_angle_offsets[k];
        const Complex dir = std::polar(1.0, phi);
        auto& chain = chains[k];
        chain.emplace_back(0.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            const Complex v = Complex(p.joint_radii[j], p.joint_lateral_offsets[k][j]) * dir;
            if (std::abs(v) > 1.0 + 1e-12) bad("joint vertex leaves the closed disk");
            chain.emplace_back(v.real(), v.imag());
        }
        chain.emplace_back(dir.real(), dir.imag());
    }

    std::vector<Segment> segments;
    segments.reserve(std::size_t(p.n) * (m + 1));
    // per-spoke segment lists for the crossing test
    std::vector<std::vector<std::size_t>> of_spoke(p.n);
    for (int k = 0; k < p.n; ++k)
        for (std::size_t j = 0; j + 1 < chains[k].size(); ++j) {
            of_spoke[k].push_back(segments.size());
            segments.emplace_back(chains[k][j], chains[k][j + 1]);
        }

    // spokes may meet only at the shared origin. The two innermost segments
    // both start there, so for that pair only a collinear overlap is an
    // intersection; every other cross-spoke pair must stay strictly apart.
    // (A single spoke cannot self-intersect: its radial coordinate ascends.)
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            for (std::size_t i = 0; i < of_spoke[a].size(); ++i)
                for (std::size_t j = 0; j < of_spoke[b].size(); ++j) {
                    const Segment& sa = segments[of_spoke[a][i]];
                    const Segment& sb = segments[of_spoke[b][j]];
                    if (i == 0 && j == 0) {
                        const Complex da = sa.p1.c(), db = sb.p1.c();
                        const Complex q = std::conj(da) * db;
                        if (std::fabs(q.imag()) <= kTouchTol * std::abs(da) * std::abs(db) &&
                            q.real() > 0.0)
                            bad("two spokes leave the origin in the same direction");
                        continue;
                    }
                    if (piece_distance(sa, sb) <= kTouchTol)
                        bad("spokes intersect away from the origin");
                }

    return Continuum{std::move(segments), {}};
}

const char* to_string(Objective o) noexcept {
    switch (o) {
        case Objective::MEAN_PSI: return "mean_psi";
        case Objective::MAX_OMEGA: return "max_omega";
    }
    return "?";
}

ObjectiveValue evaluate_objective_detailed(const StarPerturbation& p, double rho,
                                           Objective objective, const WosParams& params) {
    Continuum e = realize(p);
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::DomainError, "objective: rho must lie in (0, 1)");
    std::vector<Point> points;
    points.reserve(p.n);
    for (int k = 0; k < p.n; ++k) {
        const Complex a = std::polar(rho, 2.0 * kPi * k / p.n - p.theta);
        points.emplace_back(a.real(), a.imag());
    }
    Configuration cfg(p.n, rho, std::move(points), std::move(e));
    const auto v = verify_configuration(cfg, 0.01);
    if (!v.ok)
        throw Error(ErrorCode::InvalidPerturbation,
                    "perturbation no longer separates the marked points: " + v.reason);

    std::vector<Estimate> est;
    est.reserve(cfg.n);
    for (int k = 1; k <= cfg.n; ++k) est.push_back(wos_estimate(cfg, k, params));

    ObjectiveValue out;
    if (objective == Objective::MAX_OMEGA) {
        std::size_t arg = 0;
        for (std::size_t k = 1; k < est.size(); ++k)
            if (est[k].mean > est[arg].mean) arg = k;
        out.value = est[arg].mean;
        out.std_error = est[arg].std_error;
        return out;
    }
    // mean-Psi; clamp just below 1 so a saturated component stays finite and
    // the optimizer still sees a (huge) ordering instead of infinity
    double sum = 0.0, var = 0.0;
    for (const auto& e_k : est) {
        const double x = std::min(e_k.mean, 1.0 - 1e-9);
        sum += psi(x);
        const double d = psi_prime(x) * e_k.std_error;
        var += d * d;
    }
    out.value = sum / est.size();
    out.std_error = std::sqrt(var) / est.size();
    return out;
}

double evaluate_objective(const StarPerturbation& p, double rho, Objective objective,
                          const WosParams& params) {
    return evaluate_objective_detailed(p, rho, objective, params).value;
}

namespace {

struct BudgetSpent {};

// flat coordinate layout: n angle offsets, then the n*m laterals row-major
struct SearchSpace {
    int n;
    std::vector<double> joint_radii;
    double angle_box;

    std::size_t dim() const { return n + n * joint_radii.size(); }

    double box(std::size_t i) const { return i < std::size_t(n) ? angle_box : kLateralBox; }

    StarPerturbation unpack(const std::vector<double>& x) const {
        StarPerturbation p;
        p.n = n;
        p.theta = 0.0;
        p.joint_radii = joint_radii;
        p.spoke_angle_offsets.assign(x.begin(), x.begin() + n);
        const std::size_t m = joint_radii.size();
        p.joint_lateral_offsets.resize(n);
        for (int k = 0; k < n; ++k)
            p.joint_lateral_offsets[k].assign(x.begin() + n + k * m, x.begin() + n + (k + 1) * m);
        return p;
    }
};

} // namespace

SearchResult minimize(int n, double rho, Objective objective, long budget,
                      std::uint64_t seed, const WosParams& params) {
    if (n < 2) throw Error(ErrorCode::DomainError, "search: n must be >= 2");
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorCode::DomainError, "search: rho must lie in (0, 1)");
    if (budget < 50) throw Error(ErrorCode::DomainError, "search: budget must be >= 50");

    SearchSpace space{n, {1.0 / 3.0, 2.0 / 3.0}, kPi / (2.0 * n)};
    const std::size_t dim = space.dim();

    WosParams crn = params; // common random numbers across every evaluation
    crn.seed = seed;

    SearchResult out;
    out.best_objective = std::numeric_limits<double>::infinity();
    long evals = 0;

    auto eval = [&](const std::vector<double>& x) -> double {
        if (evals >= budget) throw BudgetSpent{};
        ++evals;
        // graded penalty outside the open boxes keeps the simplex pointed home
        double overshoot = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            overshoot += std::max(0.0, std::fabs(x[i]) - 0.98 * space.box(i));
        double value;
        double std_error = 0.0;
        if (overshoot > 0.0) {
            value = 1e6 + overshoot;
        } else {
            try {
                const auto ov = evaluate_objective_detailed(space.unpack(x), rho, objective, crn);
                value = ov.value;
                std_error = ov.std_error;
            } catch (const Error&) {
                // crossing spokes / collapsed components inside the box
                double norm = 0.0;
                for (double c : x) norm += std::fabs(c);
                value = 1e6 + norm;
            }
        }
        if (value < out.best_objective) {
            out.best_objective = value;
            out.best_objective_std_error = std_error;
            out.best_params = space.unpack(x);
            out.history.emplace_back(evals, value);
        }
        return value;
    };

    // seeded start: uniform offsets of magnitude <= 0.1, kept inside the box
    StreamRng init(seed, 0xffff0001ull, 0);
    std::vector<double> x0(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double half = std::min(0.1, 0.8 * space.box(i));
        x0[i] = (2.0 * init.next_double() - 1.0) * half;
    }

    std::vector<std::vector<double>> simplex{x0};
    for (std::size_t i = 0; i < dim; ++i) {
        auto v = x0;
        v[i] += std::min(0.05, 0.4 * space.box(i));
        simplex.push_back(std::move(v));
    }
    std::vector<double> f(simplex.size());

    try {
        for (std::size_t i = 0; i < simplex.size(); ++i) f[i] = eval(simplex[i]);

        std::vector<std::size_t> order(simplex.size());
        for (;;) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
            const std::size_t lo = order.front(), hi = order.back(),
                              nh = order[order.size() - 2];

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t r = 0; r + 1 < order.size(); ++r)
                for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[order[r]][i];
            for (double& c : centroid) c /= double(order.size() - 1);

            auto blend = [&](double t) {
                std::vector<double> v(dim);
                for (std::size_t i = 0; i < dim; ++i)
                    v[i] = centroid[i] + t * (centroid[i] - simplex[hi][i]);
                return v;
            };

            auto xr = blend(1.0);
            const double fr = eval(xr);
            if (fr < f[lo]) {
                auto xe = blend(2.0);
                const double fe = eval(xe);
                if (fe < fr) { simplex[hi] = std::move(xe); f[hi] = fe; }
                else         { simplex[hi] = std::move(xr); f[hi] = fr; }
            } else if (fr < f[nh]) {
                simplex[hi] = std::move(xr);
                f[hi] = fr;
            } else {
                const bool outside = fr < f[hi];
                std::vector<double> xc(dim);
                const auto& toward = outside ? xr : simplex[hi];
                for (std::size_t i = 0; i < dim; ++i)
                    xc[i] = centroid[i] + 0.5 * (toward[i] - centroid[i]);
                const double fc = eval(xc);
                if (fc < (outside ? fr : f[hi])) {
                    simplex[hi] = std::move(xc);
                    f[hi] = fc;
                } else {
                    for (std::size_t r = 1; r < order.size(); ++r) {
                        auto& v = simplex[order[r]];
                        for (std::size_t i = 0; i < dim; ++i)
                            v[i] = simplex[lo][i] + 0.5 * (v[i] - simplex[lo][i]);
                        f[order[r]] = eval(v);
                    }
                }
            }
        }
    } catch (const BudgetSpent&) {
        // budget exhausted: the tracked best is the result
    }

    out.evaluations = evals;
    return out;
}

} // namespace hmdisk
