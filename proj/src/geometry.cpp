#include "hmdisk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hmdisk {

namespace {

constexpr double kDiskSlack = 1e-12;       // tolerated overshoot of the closed disk
constexpr double kConnectTol = 1e-9;       // piece adjacency tolerance
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_nonneg(double angle) noexcept {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw Error(ErrorCode::DomainError, std::string(what) + " must be finite");
    }
}

} // namespace

Point::Point(double re_, double im_) : re(re_), im(im_) {
    require_finite(re, "point coordinate");
    require_finite(im, "point coordinate");
}

Segment::Segment(Point p0_, Point p1_) : p0(p0_), p1(p1_) {
    if (p0 == p1) {
        throw Error(ErrorCode::DomainError, "segment endpoints must be distinct");
    }
    if (p0.abs() > 1.0 + kDiskSlack || p1.abs() > 1.0 + kDiskSlack) {
        throw Error(ErrorCode::DomainError, "segment leaves the closed unit disk");
    }
}

double Segment::length() const noexcept {
    return std::hypot(p1.re - p0.re, p1.im - p0.im);
}

Point Segment::at(double t) const {
    return Point(p0.re + t * (p1.re - p0.re), p0.im + t * (p1.im - p0.im));
}

CircularArc::CircularArc(Point center_, double radius_, double angle0_, double angle1_)
    : center(center_), radius(radius_), angle0(angle0_), angle1(angle1_) {
    require_finite(radius, "arc radius");
    require_finite(angle0, "arc angle");
    require_finite(angle1, "arc angle");
    if (radius <= 0.0) {
        throw Error(ErrorCode::DomainError, "arc radius must be positive");
    }
    if (!(angle0 < angle1)) {
        throw Error(ErrorCode::DomainError, "arc requires angle0 < angle1");
    }
    if (angle1 - angle0 > kTwoPi + 1e-12) {
        throw Error(ErrorCode::DomainError, "arc span exceeds a full turn");
    }
    if (max_modulus() > 1.0 + kDiskSlack) {
        throw Error(ErrorCode::DomainError, "arc leaves the closed unit disk");
    }
}

Point CircularArc::at(double t) const {
    const double a = angle0 + t * (angle1 - angle0);
    return Point(center.re + radius * std::cos(a), center.im + radius * std::sin(a));
}

bool CircularArc::contains_angle(double phi) const noexcept {
    return wrap_nonneg(phi - angle0) <= angle1 - angle0;
}

double CircularArc::max_modulus() const noexcept {
    const double d = center.abs();
    if (d == 0.0) return radius;
    // modulus along the arc peaks in the direction of the center
    if (contains_angle(std::atan2(center.im, center.re))) {
        return d + radius;
    }
    return std::max(at(0.0).abs(), at(1.0).abs());
}

double distance_to_segment(Point z, const Segment& s) noexcept {
    const double dx = s.p1.re - s.p0.re;
    const double dy = s.p1.im - s.p0.im;
    const double vx = z.re - s.p0.re;
    const double vy = z.im - s.p0.im;
    const double len2 = dx * dx + dy * dy;
    double t = (vx * dx + vy * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(vx - t * dx, vy - t * dy);
}

double distance_to_arc(Point z, const CircularArc& a) noexcept {
    const double vx = z.re - a.center.re;
    const double vy = z.im - a.center.im;
    const double d = std::hypot(vx, vy);
    if (d == 0.0) return a.radius;
    // the chord distance is monotone in angular distance, so the nearest arc
    // point is either the radial projection or an endpoint
    if (a.contains_angle(std::atan2(vy, vx))) {
        return std::abs(d - a.radius);
    }
    const Point e0 = a.at(0.0);
    const Point e1 = a.at(1.0);
    return std::min(std::hypot(z.re - e0.re, z.im - e0.im),
                    std::hypot(z.re - e1.re, z.im - e1.im));
}

double distance_to_continuum(Point z, const Continuum& e) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : e.segments) best = std::min(best, distance_to_segment(z, s));
    for (const CircularArc& a : e.arcs) best = std::min(best, distance_to_arc(z, a));
    return best;
}

namespace {

int orientation_sign(Point p, Point q, Point r) noexcept {
    const double v = (q.im - p.im) * (r.re - q.re) - (q.re - p.re) * (r.im - q.im);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool segments_properly_intersect(const Segment& a, const Segment& b) noexcept {
    const int o1 = orientation_sign(a.p0, a.p1, b.p0);
    const int o2 = orientation_sign(a.p0, a.p1, b.p1);
    const int o3 = orientation_sign(b.p0, b.p1, a.p0);
    const int o4 = orientation_sign(b.p0, b.p1, a.p1);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

// 1-D minimum of f over [0,1]: coarse scan, then golden-section refinement
// around every sampled local minimum. Plenty for the 1e-9 adjacency test.
template <typename F>
double scan_minimize(F f) {
    constexpr int kSamples = 129;
    constexpr double kGolden = 0.6180339887498949;
    double vals[kSamples];
    for (int i = 0; i < kSamples; ++i) {
        vals[i] = f(static_cast<double>(i) / (kSamples - 1));
    }
    double best = vals[0];
    for (int i = 0; i < kSamples; ++i) best = std::min(best, vals[i]);
    for (int i = 0; i < kSamples; ++i) {
        const bool local_min = (i == 0 || vals[i] <= vals[i - 1]) &&
                               (i == kSamples - 1 || vals[i] <= vals[i + 1]);
        if (!local_min) continue;
        double lo = static_cast<double>(std::max(0, i - 1)) / (kSamples - 1);
        double hi = static_cast<double>(std::min(kSamples - 1, i + 1)) / (kSamples - 1);
        double x1 = hi - kGolden * (hi - lo);
        double x2 = lo + kGolden * (hi - lo);
        double f1 = f(x1);
        double f2 = f(x2);
        while (hi - lo > 1e-13) {
            if (f1 <= f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - kGolden * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + kGolden * (hi - lo);
                f2 = f(x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

} // namespace

double piece_distance(const Segment& a, const Segment& b) {
    if (segments_properly_intersect(a, b)) return 0.0;
    return std::min(std::min(distance_to_segment(a.p0, b), distance_to_segment(a.p1, b)),
                    std::min(distance_to_segment(b.p0, a), distance_to_segment(b.p1, a)));
}

double piece_distance(const Segment& a, const CircularArc& b) {
    return scan_minimize([&](double t) { return distance_to_arc(a.at(t), b); });
}

double piece_distance(const CircularArc& a, const CircularArc& b) {
    return scan_minimize([&](double t) { return distance_to_arc(a.at(t), b); });
}

namespace {

double piece_pair_distance(const Continuum& e, std::size_t i, std::size_t j) {
    const std::size_t ns = e.segments.size();
    const bool i_seg = i < ns;
    const bool j_seg = j < ns;
    if (i_seg && j_seg) return piece_distance(e.segments[i], e.segments[j]);
    if (i_seg) return piece_distance(e.segments[i], e.arcs[j - ns]);
    if (j_seg) return piece_distance(e.segments[j], e.arcs[i - ns]);
    return piece_distance(e.arcs[i - ns], e.arcs[j - ns]);
}

} // namespace

Continuum::Continuum(std::vector<Segment> segments_, std::vector<CircularArc> arcs_)
    : segments(std::move(segments_)), arcs(std::move(arcs_)) {
    const std::size_t count = piece_count();
    if (count == 0) {
        throw Error(ErrorCode::DomainError, "continuum must contain at least one piece");
    }
    if (count == 1) return;
    std::vector<std::vector<std::size_t>> adj(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            if (piece_pair_distance(*this, i, j) <= kConnectTol) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<char> seen(count, 0);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    if (reached != count) {
        throw Error(ErrorCode::DomainError, "continuum pieces are not connected");
    }
}

Configuration::Configuration(int n_, double rho_, std::vector<Point> points_, Continuum continuum_)
    : n(n_), rho(rho_), points(std::move(points_)), continuum(std::move(continuum_)) {
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "configuration requires n >= 2");
    }
    if (!(rho > 0.0 && rho < 1.0)) {
        throw Error(ErrorCode::DomainError, "rho must lie in (0, 1)");
    }
    if (points.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::DomainError, "expected exactly n marked points");
    }
    for (int k = 0; k < n; ++k) {
        if (std::abs(points[k].abs() - rho) > 1e-12) {
            throw Error(ErrorCode::DomainError,
                        "marked point " + std::to_string(k + 1) + " is not on the circle |z| = rho");
        }
        if (distance_to_continuum(points[k], continuum) <= 0.0) {
            throw Error(ErrorCode::PointOnContinuum,
                        "marked point " + std::to_string(k + 1) + " lies on the continuum");
        }
    }
}

Continuum star_continuum(int n, double theta) {
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "star requires n >= 2");
    }
    require_finite(theta, "theta");
    std::vector<Segment> spokes;
    spokes.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double angle = (std::numbers::pi + kTwoPi * j) / n - theta;
        spokes.emplace_back(Point(0.0, 0.0), Point(std::cos(angle), std::sin(angle)));
    }
    return Continuum(std::move(spokes), {});
}

VerifyResult verify_configuration(const Configuration& cfg, double resolution) {
    if (!(resolution > 0.0 && resolution <= 0.05)) {
        throw Error(ErrorCode::DomainError, "resolution must lie in (0, 0.05]");
    }
    if (resolution < 5e-4) {
        throw Error(ErrorCode::DomainError, "resolution below 5e-4 is not supported");
    }
    for (int k = 0; k < cfg.n; ++k) {
        if (cfg.points[k].abs() >= 1.0) {
            throw Error(ErrorCode::OutsideDisk,
                        "marked point " + std::to_string(k + 1) + " is not inside the open disk");
        }
        if (distance_to_continuum(cfg.points[k], cfg.continuum) <= 2.0 * resolution) {
            throw Error(ErrorCode::PointOnContinuum,
                        "marked point " + std::to_string(k + 1) +
                            " is within 2*resolution of the continuum");
        }
    }

    const int cells = static_cast<int>(std::ceil(2.0 / resolution));
    const double block_radius = resolution * std::numbers::sqrt2 / 2.0;
    // -2 outside disk or blocked, -1 free and unlabeled, >= 0 component id
    std::vector<int> label(static_cast<std::size_t>(cells) * cells, -2);
    auto index = [cells](int i, int j) { return static_cast<std::size_t>(j) * cells + i; };
    for (int j = 0; j < cells; ++j) {
        for (int i = 0; i < cells; ++i) {
            const Point c(-1.0 + (i + 0.5) * resolution, -1.0 + (j + 0.5) * resolution);
            if (c.abs() >= 1.0) continue;
            if (distance_to_continuum(c, cfg.continuum) <= block_radius) continue;
            label[index(i, j)] = -1;
        }
    }

    int next_component = 0;
    std::queue<std::pair<int, int>> queue;
    for (int j = 0; j < cells; ++j) {
        for (int i = 0; i < cells; ++i) {
            if (label[index(i, j)] != -1) continue;
            const int id = next_component++;
            label[index(i, j)] = id;
            queue.emplace(i, j);
            while (!queue.empty()) {
                const auto [ci, cj] = queue.front();
                queue.pop();
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int ni = ci + di[d];
                    const int nj = cj + dj[d];
                    if (ni < 0 || nj < 0 || ni >= cells || nj >= cells) continue;
                    if (label[index(ni, nj)] != -1) continue;
                    label[index(ni, nj)] = id;
                    queue.emplace(ni, nj);
                }
            }
        }
    }

    VerifyResult result;
    result.component_of_point.resize(cfg.n, -1);
    for (int k = 0; k < cfg.n; ++k) {
        const int i = static_cast<int>((cfg.points[k].re + 1.0) / resolution);
        const int j = static_cast<int>((cfg.points[k].im + 1.0) / resolution);
        const int id = label[index(std::clamp(i, 0, cells - 1), std::clamp(j, 0, cells - 1))];
        if (id < 0) {
            result.ok = false;
            result.reason = "marked point " + std::to_string(k + 1) + " falls in a blocked cell";
            return result;
        }
        result.component_of_point[k] = id;
    }
    for (int k = 0; k < cfg.n; ++k) {
        for (int l = k + 1; l < cfg.n; ++l) {
            if (result.component_of_point[k] == result.component_of_point[l]) {
                result.ok = false;
                result.reason = "marked points " + std::to_string(k + 1) + " and " +
                                std::to_string(l + 1) + " share a component";
                return result;
            }
        }
    }
    result.ok = true;
    return result;
}

double hyperbolic_distance(Point z, Point w) {
    if (z.abs() >= 1.0 || w.abs() >= 1.0) {
        throw Error(ErrorCode::OutsideDisk, "hyperbolic distance requires points inside the open disk");
    }
    const Complex zc = z.c();
    const Complex wc = w.c();
    const double t = std::abs(zc - wc) / std::abs(1.0 - std::conj(zc) * wc);
    return 2.0 * std::atanh(t);
}

} // namespace hmdisk
