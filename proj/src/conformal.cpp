#include "hmdisk/conformal.hpp"

#include <cmath>
#include <numbers>

namespace hmdisk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_nonneg(double angle) noexcept {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

} // namespace

MobiusDiskAuto::MobiusDiskAuto(Point a_, double phi_) : a(a_), phi(phi_) {
    if (a.abs() >= 1.0) {
        throw Error(ErrorCode::DomainError, "automorphism center must lie inside the open disk");
    }
    if (!std::isfinite(phi)) {
        throw Error(ErrorCode::DomainError, "rotation angle must be finite");
    }
}

Point mobius_apply(const MobiusDiskAuto& m, Point z) {
    if (z.abs() > 1.0 + 1e-9) {
        throw Error(ErrorCode::OutsideDisk, "automorphism input must lie in the closed disk");
    }
    const Complex zc = z.c();
    const Complex ac = m.a.c();
    const Complex rot = std::polar(1.0, m.phi);
    return Point(rot * (zc - ac) / (1.0 - std::conj(ac) * zc));
}

MobiusDiskAuto mobius_inverse(const MobiusDiskAuto& m) {
    const Complex b = -m.a.c() * std::polar(1.0, m.phi);
    return MobiusDiskAuto(Point(b), -m.phi);
}

namespace {

// Build the arc from pa to pb passing through pm, all on one circle.
std::variant<Segment, CircularArc> arc_through(Point pa, Point pm, Point pb) {
    const double abx = pb.re - pa.re;
    const double aby = pb.im - pa.im;
    const double chord = std::hypot(abx, aby);
    const double cross = abx * (pm.im - pa.im) - aby * (pm.re - pa.re);
    // deviation of pm from the chord; below 1e-9 the arc is flat enough that
    // a segment is indistinguishable at the tolerances used downstream
    if (std::abs(cross) / chord <= 1e-9) {
        return Segment(pa, pb);
    }
    const double a2 = pa.re * pa.re + pa.im * pa.im;
    const double m2 = pm.re * pm.re + pm.im * pm.im;
    const double b2 = pb.re * pb.re + pb.im * pb.im;
    const double d = 2.0 * (pa.re * (pm.im - pb.im) + pm.re * (pb.im - pa.im) +
                            pb.re * (pa.im - pm.im));
    const double ux = (a2 * (pm.im - pb.im) + m2 * (pb.im - pa.im) + b2 * (pa.im - pm.im)) / d;
    const double uy = (a2 * (pb.re - pm.re) + m2 * (pa.re - pb.re) + b2 * (pm.re - pa.re)) / d;
    const double radius = std::hypot(pa.re - ux, pa.im - uy);
    if (radius > 1e7) {
        return Segment(pa, pb);
    }
    const double phi_a = std::atan2(pa.im - uy, pa.re - ux);
    const double phi_b = std::atan2(pb.im - uy, pb.re - ux);
    const double phi_m = std::atan2(pm.im - uy, pm.re - ux);
    const double span_ab = wrap_nonneg(phi_b - phi_a);
    const double span_am = wrap_nonneg(phi_m - phi_a);
    const Point center(ux, uy);
    if (span_am <= span_ab) {
        return CircularArc(center, radius, phi_a, phi_a + span_ab);
    }
    return CircularArc(center, radius, phi_b, phi_b + (kTwoPi - span_ab));
}

} // namespace

std::variant<Segment, CircularArc> mobius_map_segment(const MobiusDiskAuto& m, const Segment& s) {
    return arc_through(mobius_apply(m, s.p0), mobius_apply(m, s.at(0.5)), mobius_apply(m, s.p1));
}

std::variant<Segment, CircularArc> mobius_map_arc(const MobiusDiskAuto& m, const CircularArc& a) {
    if (a.span() >= kTwoPi - 1e-12) {
        // full circle: endpoints coincide, so build the image circle from
        // three spread points instead
        const Point q0 = mobius_apply(m, a.at(0.0));
        const Point q1 = mobius_apply(m, a.at(1.0 / 3.0));
        const Point q2 = mobius_apply(m, a.at(2.0 / 3.0));
        auto img = arc_through(q0, q1, q2);
        const auto& arc = std::get<CircularArc>(img);
        return CircularArc(arc.center, arc.radius, 0.0, kTwoPi);
    }
    return arc_through(mobius_apply(m, a.at(0.0)), mobius_apply(m, a.at(0.5)),
                       mobius_apply(m, a.at(1.0)));
}

Continuum mobius_map_continuum(const MobiusDiskAuto& m, const Continuum& e) {
    std::vector<Segment> segments;
    std::vector<CircularArc> arcs;
    auto collect = [&](std::variant<Segment, CircularArc>&& piece) {
        if (std::holds_alternative<Segment>(piece)) {
            segments.push_back(std::get<Segment>(piece));
        } else {
            arcs.push_back(std::get<CircularArc>(piece));
        }
    };
    for (const Segment& s : e.segments) collect(mobius_map_segment(m, s));
    for (const CircularArc& a : e.arcs) collect(mobius_map_arc(m, a));
    return Continuum(std::move(segments), std::move(arcs));
}

SlitComplementDomain::SlitComplementDomain(double theta_) : theta(theta_) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw Error(ErrorCode::DomainError, "slit half-angle must lie in (0, pi)");
    }
}

Point slit_map_chain(const SlitComplementDomain& d, SpherePoint w) {
    Complex w1;
    if (w.at_infinity) {
        w1 = 1.0;
    } else {
        const Complex wc = w.value.c();
        if (std::abs(std::abs(wc) - 1.0) <= 1e-12 &&
            std::abs(std::arg(wc)) <= d.theta + 1e-12) {
            throw Error(ErrorCode::OnSlit, "input lies on the boundary arc");
        }
        if (wc == Complex(-1.0, 0.0)) {
            // pole of w1; the composite is analytic here with value 0
            return Point(0.0, 0.0);
        }
        w1 = (wc - 1.0) / (wc + 1.0);
    }
    const double cot_half = std::cos(d.theta / 2.0) / std::sin(d.theta / 2.0);
    const Complex w2 = Complex(0.0, -1.0) * w1 * cot_half;
    // inside root of zeta^2 - 2 w2 zeta + 1 = 0, evaluated as 1/(w2 + s)
    // with s the square root aligned with w2 (no cancellation for large w2)
    Complex s = std::sqrt(w2 * w2 - 1.0);
    if (w2.real() * s.real() + w2.imag() * s.imag() < 0.0) {
        s = -s;
    }
    return Point(1.0 / (w2 + s));
}

double inner_radius_slit_complement(const SlitComplementDomain& d, double w) {
    if (!(w >= -1.0 && w <= 0.0)) {
        throw Error(ErrorCode::DomainError, "inner radius is tabulated for w in [-1, 0]");
    }
    return (1.0 - w) * std::sqrt(w * w - 2.0 * w * std::cos(d.theta) + 1.0) /
           std::sin(d.theta / 2.0);
}

Sector::Sector(int n_, double bisector_angle_) : n(n_), bisector_angle(bisector_angle_) {
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "sector requires n >= 2");
    }
    if (!std::isfinite(bisector_angle)) {
        throw Error(ErrorCode::DomainError, "bisector angle must be finite");
    }
}

double inner_radius_sector(const Sector& s, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorCode::DomainError, "bisector point modulus must be positive");
    }
    return 4.0 * r / s.n;
}

std::pair<double, double> sector_product_check(int n, double r) {
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "requires n >= 2");
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw Error(ErrorCode::DomainError, "requires r in (0, 1)");
    }
    double log_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const Sector sector(n, kTwoPi * k / n);
        log_sum += std::log(inner_radius_sector(sector, r));
    }
    return {std::exp(log_sum / n), 4.0 * r / n};
}

} // namespace hmdisk
