#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hmdisk/geometry.hpp"

using namespace hmdisk;

namespace {
constexpr double kPi = 3.14159265358979323846;

// brute-force distance oracle: densely sample every piece
double sampled_distance(Point z, const Continuum& e, int per_piece) {
    double best = 1e300;
    for (const auto& s : e.segments)
        for (int i = 0; i <= per_piece; ++i) {
            const Point p = s.at(double(i) / per_piece);
            best = std::min(best, std::abs(z.c() - p.c()));
        }
    for (const auto& a : e.arcs)
        for (int i = 0; i <= per_piece; ++i) {
            const Point p = a.at(double(i) / per_piece);
            best = std::min(best, std::abs(z.c() - p.c()));
        }
    return best;
}
} // namespace

TEST_CASE("point rejects non-finite coordinates") {
    CHECK_THROWS_AS(Point(std::nan(""), 0.0), Error);
    CHECK_THROWS_AS(Point(0.0, INFINITY), Error);
    CHECK_NOTHROW(Point(0.3, -0.7));
}

TEST_CASE("segment basics") {
    CHECK_THROWS_AS(Segment(Point(0.1, 0.1), Point(0.1, 0.1)), Error); // degenerate
    CHECK_THROWS_AS(Segment(Point(0, 0), Point(1.5, 0)), Error);      // leaves the disk
    Segment s(Point(0, 0), Point(1, 0));
    CHECK(s.length() == doctest::Approx(1.0));
    CHECK(s.at(0.25).re == doctest::Approx(0.25));
}

TEST_CASE("arc basics") {
    CHECK_THROWS_AS(CircularArc(Point(0, 0), 0.5, 1.0, 0.5), Error);        // reversed
    CHECK_THROWS_AS(CircularArc(Point(0, 0), 0.5, 0.0, 7.0), Error);        // span > 2 pi
    CHECK_THROWS_AS(CircularArc(Point(0.9, 0), 0.5, 0.0, kPi / 2), Error);  // leaves the disk
    CircularArc a(Point(0, 0), 0.5, 0.0, kPi);
    CHECK(a.span() == doctest::Approx(kPi));
    CHECK(a.at(0.5).im == doctest::Approx(0.5));
    CHECK(a.contains_angle(0.3));
    CHECK(!a.contains_angle(-0.3));
    CHECK(a.max_modulus() == doctest::Approx(0.5));
    // wrapped arc: angles may exceed pi and contains_angle reduces mod 2 pi
    CircularArc b(Point(0, 0), 0.5, kPi / 2, 2 * kPi);
    CHECK(b.contains_angle(-kPi / 2));
    CHECK(!b.contains_angle(kPi / 4));
}

TEST_CASE("segment distance matches dense sampling") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int trial = 0; trial < 40; ++trial) {
        Point p0(u(rng) / 2, u(rng) / 2), p1(u(rng) / 2, u(rng) / 2);
        if (std::abs(p0.c() - p1.c()) < 1e-3) continue;
        Segment s(p0, p1);
        Point z(u(rng), u(rng));
        double exact = distance_to_segment(z, s);
        double best = 1e300;
        for (int i = 0; i <= 20000; ++i)
            best = std::min(best, std::abs(z.c() - s.at(i / 20000.0).c()));
        CHECK(std::fabs(exact - best) < 1e-7);
        CHECK(exact <= best + 1e-12); // the true distance never exceeds a sample
    }
}

TEST_CASE("arc distance matches dense sampling") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        Point c(u(rng), u(rng));
        double r = 0.05 + 0.3 * std::abs(u(rng));
        if (c.abs() + r > 0.999) continue;
        double a0 = ang(rng);
        double a1 = a0 + 0.3 + 2.0 * std::abs(u(rng));
        CircularArc arc(c, r, a0, a1);
        Point z(u(rng) * 2, u(rng) * 2);
        double exact = distance_to_arc(z, arc);
        double best = 1e300;
        for (int i = 0; i <= 20000; ++i)
            best = std::min(best, std::abs(z.c() - arc.at(i / 20000.0).c()));
        CHECK(std::fabs(exact - best) < 1e-7);
        CHECK(exact <= best + 1e-12);
    }
}

TEST_CASE("continuum distance on the three-spoke star") {
    const Continuum star = star_continuum(3, 0.0);
    const Point z(0.3, 0.4);
    const double exact = distance_to_continuum(z, star);
    CHECK(std::fabs(exact - sampled_distance(z, star, 1000000)) < 1e-7);

    // 1-Lipschitz in the point argument
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int i = 0; i < 200; ++i) {
        Point a(u(rng), u(rng)), b(u(rng), u(rng));
        double da = distance_to_continuum(a, star);
        double db = distance_to_continuum(b, star);
        CHECK(std::fabs(da - db) <= std::abs(a.c() - b.c()) + 1e-12);
    }
}

TEST_CASE("continuum requires connectivity") {
    // two parallel segments 0.1 apart are not connected
    std::vector<Segment> far{Segment(Point(-0.5, 0), Point(0.5, 0)),
                             Segment(Point(-0.5, 0.1), Point(0.5, 0.1))};
    CHECK_THROWS_AS(Continuum(far, {}), Error);
    // touching at an endpoint is fine
    std::vector<Segment> chain{Segment(Point(-0.5, 0), Point(0, 0)),
                               Segment(Point(0, 0), Point(0, 0.5))};
    CHECK_NOTHROW(Continuum(chain, {}));
    CHECK_THROWS_AS(Continuum({}, {}), Error); // empty
}

TEST_CASE("star continuum is n-fold symmetric") {
    for (int n : {2, 3, 5}) {
        const Continuum star = star_continuum(n, 0.0);
        REQUIRE(star.segments.size() == std::size_t(n));
        const Complex rot = std::polar(1.0, 2.0 * kPi / n);
        // rotating dense samples by 2 pi / n stays on the star, both ways
        for (const auto& s : star.segments)
            for (int i = 0; i <= 50; ++i) {
                const Complex p = s.at(i / 50.0).c();
                CHECK(distance_to_continuum(Point(p * rot), star) < 1e-12);
                CHECK(distance_to_continuum(Point(p / rot), star) < 1e-12);
            }
    }
    // spokes sit at (pi + 2 pi k)/n - theta: for n = 2, theta = 0 that is the
    // vertical diameter, and theta = pi/2 rotates it onto the horizontal one
    const Continuum vertical = star_continuum(2, 0.0);
    CHECK(distance_to_continuum(Point(0.0, 0.7), vertical) < 1e-12);
    CHECK(distance_to_continuum(Point(0.7, 0.0), vertical) > 0.5);
    const Continuum horizontal = star_continuum(2, kPi / 2);
    CHECK(distance_to_continuum(Point(0.7, 0.0), horizontal) < 1e-12);
}

TEST_CASE("configuration constructor validates the marked points") {
    auto star = [&](int n) { return star_continuum(n, 0.0); };
    std::vector<Point> pts{Point(0.5, 0), Point(-0.25, 0.4330127018922193),
                           Point(-0.25, -0.4330127018922193)};
    CHECK_NOTHROW(Configuration(3, 0.5, pts, star(3)));
    CHECK_THROWS_AS(Configuration(3, 0.6, pts, star(3)), Error);   // |a_k| != rho
    CHECK_THROWS_AS(Configuration(2, 0.5, pts, star(2)), Error);   // wrong count
    CHECK_THROWS_AS(Configuration(1, 0.5, {Point(0.5, 0)}, star(2)), Error); // n < 2
    // a marked point exactly on the continuum (horizontal diameter)
    Continuum diameter({Segment(Point(-1, 0), Point(1, 0))}, {});
    CHECK_THROWS_AS(Configuration(2, 0.5, {Point(0.5, 0), Point(-0.5, 0)}, diameter), Error);
    CHECK_NOTHROW(Configuration(2, 0.5, {Point(0, 0.5), Point(0, -0.5)}, diameter));
}

TEST_CASE("verify_configuration separates and identifies components") {
    // extremal three-star: all marked points in distinct sectors
    {
        std::vector<Point> pts;
        for (int k = 0; k < 3; ++k) pts.emplace_back(0.5 * std::polar(1.0, 2 * kPi * k / 3));
        Configuration cfg(3, 0.5, pts, star_continuum(3, 0.0));
        const auto v = verify_configuration(cfg, 0.005);
        CHECK(v.ok);
        CHECK(bool(v));
        std::vector<int> labels = v.component_of_point;
        std::sort(labels.begin(), labels.end());
        CHECK(std::unique(labels.begin(), labels.end()) == labels.end());
    }
    // two points in the same sector must fail
    {
        std::vector<Point> pts{Point(0.5 * std::cos(0.2), 0.5 * std::sin(0.2)),
                               Point(0.5 * std::cos(-0.2), 0.5 * std::sin(-0.2)),
                               Point(-0.25, 0.4330127018922193)};
        Configuration cfg(3, 0.5, pts, star_continuum(3, 0.0));
        const auto v = verify_configuration(cfg, 0.005);
        CHECK(!v.ok);
        CHECK(!v.reason.empty());
    }
    // vertical diameter splits the disk left/right
    {
        std::vector<Point> pts{Point(0.5, 0.0), Point(-0.5, 0.0)};
        Configuration cfg(2, 0.5, pts, star_continuum(2, 0.0));
        CHECK(verify_configuration(cfg, 0.01).ok);
    }
    // resolution floor
    {
        std::vector<Point> pts{Point(0.5, 0.0), Point(-0.5, 0.0)};
        Configuration cfg(2, 0.5, pts, star_continuum(2, 0.0));
        CHECK_THROWS_AS(verify_configuration(cfg, 1e-6), Error);
    }
}

TEST_CASE("hyperbolic distance") {
    CHECK(hyperbolic_distance(Point(0, 0), Point(0.5, 0)) == doctest::Approx(std::log(3.0)));
    CHECK(hyperbolic_distance(Point(0.3, 0.2), Point(0.3, 0.2)) == doctest::Approx(0.0));
    // symmetric and invariant under rotation
    Point a(0.1, 0.4), b(-0.3, 0.2);
    CHECK(hyperbolic_distance(a, b) == doctest::Approx(hyperbolic_distance(b, a)));
    const Complex rot = std::polar(1.0, 0.73);
    CHECK(hyperbolic_distance(Point(a.c() * rot), Point(b.c() * rot)) ==
          doctest::Approx(hyperbolic_distance(a, b)));
    CHECK_THROWS_AS(hyperbolic_distance(Point(1.0, 0.0), Point(0, 0)), Error);
}
