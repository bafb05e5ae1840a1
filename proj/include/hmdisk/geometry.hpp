#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hmdisk/error.hpp"

namespace hmdisk {

using Complex = std::complex<double>;

/// A point of the plane. Constructors reject non-finite coordinates.
struct Point {
    double re = 0.0;
    double im = 0.0;

    Point() = default;
    Point(double re_, double im_);
    explicit Point(Complex z) : Point(z.real(), z.imag()) {}

    Complex c() const noexcept { return {re, im}; }
    double abs() const noexcept { return std::hypot(re, im); }
};

inline bool operator==(const Point& a, const Point& b) noexcept {
    return a.re == b.re && a.im == b.im;
}

/// Straight segment with distinct endpoints inside the closed unit disk
/// (modulus at most 1 + 1e-12).
struct Segment {
    Point p0;
    Point p1;

    Segment(Point p0_, Point p1_);

    double length() const noexcept;
    Point at(double t) const; // t in [0, 1]
};

/// Circular arc center + radius, traversed from angle0 to angle1
/// (angle0 < angle1, span at most 2*pi). Must stay inside the closed disk.
struct CircularArc {
    Point center;
    double radius;
    double angle0;
    double angle1;

    CircularArc(Point center_, double radius_, double angle0_, double angle1_);

    double span() const noexcept { return angle1 - angle0; }
    Point at(double t) const; // t in [0, 1]
    // whether the ray at absolute angle phi meets the arc
    bool contains_angle(double phi) const noexcept;
    double max_modulus() const noexcept;
};

/// A connected union of segments and arcs in the closed unit disk.
/// Connectivity is metric: the piece adjacency graph, with pieces adjacent
/// when their minimum distance is at most 1e-9, must be connected.
struct Continuum {
    std::vector<Segment> segments;
    std::vector<CircularArc> arcs;

    Continuum(std::vector<Segment> segments_, std::vector<CircularArc> arcs_);

    std::size_t piece_count() const noexcept { return segments.size() + arcs.size(); }
};

/// A full problem instance: n marked points on the circle |z| = rho, one per
/// component of the disk minus the continuum.
struct Configuration {
    int n;
    double rho;
    std::vector<Point> points;
    Continuum continuum;

    Configuration(int n_, double rho_, std::vector<Point> points_, Continuum continuum_);
};

double distance_to_segment(Point z, const Segment& s) noexcept;
double distance_to_arc(Point z, const CircularArc& a) noexcept;

/// Euclidean distance from z to the continuum (exact per piece).
double distance_to_continuum(Point z, const Continuum& e);

/// Minimum distance between two pieces; used by the connectivity check.
double piece_distance(const Segment& a, const Segment& b);
double piece_distance(const Segment& a, const CircularArc& b);
double piece_distance(const CircularArc& a, const CircularArc& b);

/// The n-spoke star: unit radial segments at angles (pi + 2*pi*j)/n - theta,
/// i.e. the set of z whose n-th power of e^{i theta} z lies in [-1, 0].
Continuum star_continuum(int n, double theta);

struct VerifyResult {
    bool ok = false;
    std::string reason;
    // grid component label per marked point (diagnostics)
    std::vector<int> component_of_point;

    explicit operator bool() const noexcept { return ok; }
};

/// Grid flood-fill check that the marked points fall in distinct components
/// of the disk minus the continuum. Cells within half a cell diagonal of the
/// continuum are blocked, so a positive answer is reliable at the given
/// resolution. Throws PointOnContinuum / OutsideDisk for bad marked points.
VerifyResult verify_configuration(const Configuration& cfg, double resolution);

/// log((1+t)/(1-t)) with t = |z-w| / |1 - conj(z) w|; both points inside U.
double hyperbolic_distance(Point z, Point w);

} // namespace hmdisk
