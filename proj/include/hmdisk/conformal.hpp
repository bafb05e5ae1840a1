#pragma once

#include <utility>
#include <variant>

#include "hmdisk/geometry.hpp"

namespace hmdisk {

/// Disk automorphism z -> e^{i phi} (z - a) / (1 - conj(a) z), |a| < 1.
struct MobiusDiskAuto {
    Point a;
    double phi = 0.0;

    MobiusDiskAuto(Point a_, double phi_);
};

Point mobius_apply(const MobiusDiskAuto& m, Point z);
MobiusDiskAuto mobius_inverse(const MobiusDiskAuto& m);

/// Exact image of a piece under a disk automorphism: segments and arcs map
/// to segments or circular arcs, never anything else.
std::variant<Segment, CircularArc> mobius_map_segment(const MobiusDiskAuto& m, const Segment& s);
std::variant<Segment, CircularArc> mobius_map_arc(const MobiusDiskAuto& m, const CircularArc& a);
Continuum mobius_map_continuum(const MobiusDiskAuto& m, const Continuum& e);

/// Complement (on the sphere) of the boundary arc {|w| = 1, |arg w| <= theta},
/// theta in (0, pi).
struct SlitComplementDomain {
    double theta;

    explicit SlitComplementDomain(double theta_);
};

/// Point of the Riemann sphere: a finite point or the point at infinity.
struct SpherePoint {
    Point value;
    bool at_infinity = false;

    SpherePoint(Point p) : value(p) {}
    static SpherePoint infinity() {
        SpherePoint p{Point(0.0, 0.0)};
        p.at_infinity = true;
        return p;
    }
};

/// Conformal map of the slit complement onto the unit disk, the composite
///   w1 = (w-1)/(w+1),  w2 = -i w1 cot(theta/2),  zeta = w2 - sqrt(w2^2 - 1)
/// with the inverse-Joukowski branch that sends w2 = infinity to zero
/// (equivalently, the root of zeta^2 - 2 w2 zeta + 1 = 0 inside the disk).
/// w = -1 passes through the pole of w1 and is special-cased to its limit 0.
Point slit_map_chain(const SlitComplementDomain& d, SpherePoint w);

/// Conformal (inner) radius of the slit complement at a real point
/// w in [-1, 0]:  (1 - w) sqrt(w^2 - 2 w cos(theta) + 1) / sin(theta/2).
double inner_radius_slit_complement(const SlitComplementDomain& d, double w);

/// Unbounded sector of opening 2*pi/n about the given bisector direction.
struct Sector {
    int n;
    double bisector_angle = 0.0;

    Sector(int n_, double bisector_angle_);
};

/// Inner radius of the sector at the bisector point of modulus r: 4 r / n.
double inner_radius_sector(const Sector& s, double r);

/// Geometric mean of the sector inner radii over the equal decomposition of
/// the disk into n sectors, paired with the bound 4 r / n it must meet.
std::pair<double, double> sector_product_check(int n, double r);

} // namespace hmdisk
