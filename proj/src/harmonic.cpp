#include "hmdisk/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

#include "hmdisk/conformal.hpp"
#include "hmdisk/rng.hpp"

namespace hmdisk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieTol = 1e-15; // exit ties score toward the continuum

struct SegCache {
    double x0, y0;   // start
    double dx, dy;   // unit direction
    double len;
};

struct ArcCache {
    double cx, cy, r;
    double a0, span;
    double e0x, e0y, e1x, e1y; // endpoints
};

// flat, allocation-free view of a continuum for the walk inner loop
struct WalkDomain {
    std::vector<SegCache> segments;
    std::vector<ArcCache> arcs;

    explicit WalkDomain(const Continuum& e) {
        segments.reserve(e.segments.size());
        for (const Segment& s : e.segments) {
            SegCache c;
            c.x0 = s.p0.re;
            c.y0 = s.p0.im;
            const double vx = s.p1.re - s.p0.re;
            const double vy = s.p1.im - s.p0.im;
            c.len = std::sqrt(vx * vx + vy * vy);
            c.dx = vx / c.len;
            c.dy = vy / c.len;
            segments.push_back(c);
        }
        arcs.reserve(e.arcs.size());
        for (const CircularArc& a : e.arcs) {
            ArcCache c;
            c.cx = a.center.re;
            c.cy = a.center.im;
            c.r = a.radius;
            c.a0 = a.angle0;
            c.span = a.span();
            const Point e0 = a.at(0.0);
            const Point e1 = a.at(1.0);
            c.e0x = e0.re;
            c.e0y = e0.im;
            c.e1x = e1.re;
            c.e1y = e1.im;
            arcs.push_back(c);
        }
    }

    double distance(double x, double y) const noexcept {
        double best = std::numeric_limits<double>::infinity();
        for (const SegCache& s : segments) {
            const double vx = x - s.x0;
            const double vy = y - s.y0;
            double t = vx * s.dx + vy * s.dy;
            t = std::clamp(t, 0.0, s.len);
            const double rx = vx - t * s.dx;
            const double ry = vy - t * s.dy;
            const double d2 = rx * rx + ry * ry;
            if (d2 < best) best = d2;
        }
        for (const ArcCache& a : arcs) {
            const double vx = x - a.cx;
            const double vy = y - a.cy;
            const double d = std::sqrt(vx * vx + vy * vy);
            double dist;
            if (d == 0.0) {
                dist = a.r;
            } else {
                double rel = std::fmod(std::atan2(vy, vx) - a.a0, kTwoPi);
                if (rel < 0.0) rel += kTwoPi;
                if (rel <= a.span) {
                    dist = std::abs(d - a.r);
                } else {
                    const double d0x = x - a.e0x;
                    const double d0y = y - a.e0y;
                    const double d1x = x - a.e1x;
                    const double d1y = y - a.e1y;
                    dist = std::sqrt(std::min(d0x * d0x + d0y * d0y, d1x * d1x + d1y * d1y));
                }
            }
            if (dist * dist < best) best = dist * dist;
        }
        return std::sqrt(best);
    }
};

struct Tally {
    long hit_e = 0;
    long hit_circle = 0;
    long aborted = 0;
};

void validate_params(const WosParams& params) {
    if (!(params.epsilon > 0.0 && params.epsilon < 0.01)) {
        throw Error(ErrorCode::DomainError, "epsilon must lie in (0, 0.01)");
    }
    if (params.samples < 1) {
        throw Error(ErrorCode::DomainError, "samples must be at least 1");
    }
    if (params.max_steps < 1) {
        throw Error(ErrorCode::DomainError, "max_steps must be at least 1");
    }
}

// one walk against a continuum; returns 1 (continuum), 0 (circle), -1 (aborted)
int walk_once(const WalkDomain& domain, double x0, double y0, const WosParams& params,
              StreamRng& rng) {
    double x = x0;
    double y = y0;
    for (long step = 0; step < params.max_steps; ++step) {
        const double de = domain.distance(x, y);
        const double dt = 1.0 - std::sqrt(x * x + y * y);
        const double d = de < dt ? de : dt;
        if (d < params.epsilon) {
            return de <= dt + kTieTol ? 1 : 0;
        }
        const double angle = kTwoPi * rng.next_double();
        x += d * std::cos(angle);
        y += d * std::sin(angle);
    }
    return -1;
}

// one walk in the plain disk; returns the exit angle
double walk_disk_once(double x0, double y0, const WosParams& params, StreamRng& rng, bool& ok) {
    double x = x0;
    double y = y0;
    for (long step = 0; step < params.max_steps; ++step) {
        const double d = 1.0 - std::sqrt(x * x + y * y);
        if (d < params.epsilon) {
            ok = true;
            return std::atan2(y, x);
        }
        const double angle = kTwoPi * rng.next_double();
        x += d * std::cos(angle);
        y += d * std::sin(angle);
    }
    ok = false;
    return 0.0;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    return worker_count();
}

template <typename PerSample>
Tally run_samples(long samples, int workers, PerSample&& per_sample) {
    workers = std::min<long>(workers, samples);
    if (workers <= 1) {
        Tally t;
        for (long i = 0; i < samples; ++i) per_sample(i, t);
        return t;
    }
    std::vector<Tally> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long begin = w * chunk;
        const long end = std::min(samples, begin + chunk);
        pool.emplace_back([&, w, begin, end]() {
            for (long i = begin; i < end; ++i) per_sample(i, partial[w]);
        });
    }
    for (auto& t : pool) t.join();
    Tally total; // integer tallies, so the combine order cannot matter
    for (const Tally& t : partial) {
        total.hit_e += t.hit_e;
        total.hit_circle += t.hit_circle;
        total.aborted += t.aborted;
    }
    return total;
}

Estimate finish(const Tally& tally, long samples) {
    const long usable = tally.hit_e + tally.hit_circle;
    if (usable == 0) {
        throw Error(ErrorCode::EstimatorFailure, "every walk exceeded max_steps");
    }
    Estimate est;
    est.samples = samples;
    est.hit_e = tally.hit_e;
    est.hit_circle = tally.hit_circle;
    est.aborted = tally.aborted;
    est.mean = static_cast<double>(tally.hit_e) / static_cast<double>(usable);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(usable));
    return est;
}

} // namespace

int worker_count() {
    if (const char* env = std::getenv("HM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min<long>(v, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

double exact_arc_measure(Point z, double theta) {
    if (z.abs() >= 1.0) {
        throw Error(ErrorCode::OutsideDisk, "viewpoint must lie inside the open disk");
    }
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw Error(ErrorCode::DomainError, "arc half-angle must lie in (0, pi)");
    }
    if (z.re == 0.0 && z.im == 0.0) {
        return theta / std::numbers::pi;
    }
    // send z to the origin; the arc endpoints move, the measure is the image
    // arc length over the full circle
    const MobiusDiskAuto to_center(z, 0.0);
    const Point hi = mobius_apply(to_center, Point(std::cos(theta), std::sin(theta)));
    const Point lo = mobius_apply(to_center, Point(std::cos(theta), -std::sin(theta)));
    const Point mid = mobius_apply(to_center, Point(1.0, 0.0));
    const double a_hi = std::atan2(hi.im, hi.re);
    const double a_lo = std::atan2(lo.im, lo.re);
    const double a_mid = std::atan2(mid.im, mid.re);
    auto wrap = [](double a) {
        double v = std::fmod(a, kTwoPi);
        if (v < 0.0) v += kTwoPi;
        return v;
    };
    const double span = wrap(a_hi - a_lo);
    const bool contains_mid = wrap(a_mid - a_lo) <= span;
    return (contains_mid ? span : kTwoPi - span) / kTwoPi;
}

double extremal_measure(int n, double rho) {
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "requires n >= 2");
    }
    if (!(rho > 0.0 && rho < 1.0)) {
        throw Error(ErrorCode::DomainError, "rho must lie in (0, 1)");
    }
    const double rn = std::pow(rho, n);
    // sin(pi w / 2) = (1 - rn) / (1 + rn), but that argument saturates toward 1
    // where asin sheds digits; the complementary angle keeps the asin argument
    // below 1/sqrt(2) for every rho < 1.
    return 1.0 - (4.0 / std::numbers::pi) * std::asin(std::sqrt(rn / (1.0 + rn)));
}

Estimate walk_harmonic_measure(const Continuum& e, Point start, const WosParams& params,
                               std::uint64_t stream_salt, int workers) {
    validate_params(params);
    if (distance_to_continuum(start, e) <= params.epsilon) {
        throw Error(ErrorCode::InvalidStart, "start point is within epsilon of the continuum");
    }
    if (1.0 - start.abs() <= params.epsilon) {
        throw Error(ErrorCode::InvalidStart, "start point is within epsilon of the unit circle");
    }
    const WalkDomain domain(e);
    const Tally tally = run_samples(
        params.samples, resolve_workers(workers), [&](long index, Tally& t) {
            StreamRng rng(params.seed, stream_salt, static_cast<std::uint64_t>(index));
            const int outcome = walk_once(domain, start.re, start.im, params, rng);
            if (outcome == 1) {
                ++t.hit_e;
            } else if (outcome == 0) {
                ++t.hit_circle;
            } else {
                ++t.aborted;
            }
        });
    return finish(tally, params.samples);
}

Estimate wos_estimate(const Configuration& cfg, int k, const WosParams& params) {
    if (k < 1 || k > cfg.n) {
        throw Error(ErrorCode::DomainError, "component index k out of range");
    }
    return walk_harmonic_measure(cfg.continuum, cfg.points[k - 1], params,
                                 static_cast<std::uint64_t>(k));
}

Estimate wos_selfcheck_disk(Point z, double theta, const WosParams& params) {
    validate_params(params);
    if (z.abs() >= 1.0) {
        throw Error(ErrorCode::OutsideDisk, "viewpoint must lie inside the open disk");
    }
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw Error(ErrorCode::DomainError, "arc half-angle must lie in (0, pi)");
    }
    if (1.0 - z.abs() <= params.epsilon && z.abs() != 0.0) {
        throw Error(ErrorCode::InvalidStart, "start point is within epsilon of the unit circle");
    }
    const Tally tally = run_samples(
        params.samples, resolve_workers(0), [&](long index, Tally& t) {
            StreamRng rng(params.seed, 0, static_cast<std::uint64_t>(index));
            bool ok = false;
            const double exit_angle = walk_disk_once(z.re, z.im, params, rng, ok);
            if (!ok) {
                ++t.aborted;
            } else if (std::abs(exit_angle) <= theta) {
                ++t.hit_e;
            } else {
                ++t.hit_circle;
            }
        });
    return finish(tally, params.samples);
}

} // namespace hmdisk
