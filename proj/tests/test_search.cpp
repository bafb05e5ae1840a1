#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>

#include "hmdisk/bound.hpp"
#include "hmdisk/search.hpp"

using namespace hmdisk;

namespace {
constexpr double kPi = 3.14159265358979323846;

// one-sided sampled Hausdorff distance
double hausdorff_from(const Continuum& a, const Continuum& b) {
    double worst = 0.0;
    auto probe = [&](Point p) { worst = std::max(worst, distance_to_continuum(p, b)); };
    for (const auto& s : a.segments)
        for (int i = 0; i <= 200; ++i) probe(s.at(i / 200.0));
    for (const auto& arc : a.arcs)
        for (int i = 0; i <= 200; ++i) probe(arc.at(i / 200.0));
    return worst;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::DomainError; // placeholder meaning "did not throw"
}
} // namespace

TEST_CASE("zero perturbation realizes the plain star") {
    for (int n : {2, 3, 5}) {
        const Continuum bent = realize(StarPerturbation::zero(n));
        const Continuum star = star_continuum(n, 0.0);
        CHECK(bent.segments.size() == std::size_t(3 * n)); // two joints split each spoke
        CHECK(hausdorff_from(bent, star) < 1e-12);
        CHECK(hausdorff_from(star, bent) < 1e-12);
    }
}

TEST_CASE("theta rotates the realized continuum rigidly") {
    StarPerturbation p = StarPerturbation::zero(3);
    p.joint_lateral_offsets[0] = {0.1, -0.05};
    p.spoke_angle_offsets[1] = 0.2;
    const Continuum base = realize(p);
    p.theta = 0.4;
    const Continuum turned = realize(p);
    const std::complex<double> rot = std::polar(1.0, -0.4);
    double worst = 0.0;
    for (const auto& s : base.segments)
        for (int i = 0; i <= 50; ++i) {
            const Point moved(s.at(i / 50.0).c() * rot);
            worst = std::max(worst, distance_to_continuum(moved, turned));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("perturbation validation") {
    StarPerturbation p = StarPerturbation::zero(3);
    SUBCASE("offset box is open") {
        p.spoke_angle_offsets[0] = kPi / 6.0; // exactly the box edge
        CHECK(code_of([&] { realize(p); }) == ErrorCode::InvalidPerturbation);
    }
    SUBCASE("lateral box is open") {
        p.joint_lateral_offsets[2][1] = 0.2;
        CHECK(code_of([&] { realize(p); }) == ErrorCode::InvalidPerturbation);
    }
    SUBCASE("offset count") {
        p.spoke_angle_offsets.pop_back();
        CHECK_THROWS_AS(realize(p), Error);
    }
    SUBCASE("lateral row shape") {
        p.joint_lateral_offsets[1].push_back(0.0);
        CHECK_THROWS_AS(realize(p), Error);
    }
    SUBCASE("radii ascend inside the open interval") {
        p.joint_radii = {0.5, 0.4};
        CHECK_THROWS_AS(realize(p), Error);
        p.joint_radii = {0.5, 1.0};
        p.joint_lateral_offsets.assign(3, {0.0, 0.0});
        CHECK_THROWS_AS(realize(p), Error);
    }
}

TEST_CASE("joint vertices must stay in the closed disk") {
    StarPerturbation p = StarPerturbation::zero(3);
    p.joint_radii = {0.5, 0.99};
    p.joint_lateral_offsets[1] = {0.0, 0.18}; // |0.99 + 0.18 i| > 1
    CHECK(code_of([&] { realize(p); }) == ErrorCode::InvalidPerturbation);
}

TEST_CASE("crossing spokes are rejected") {
    // two spokes leaning across the positive real axis, with laterals that
    // swing their inner joints past each other: the mid segments form an X
    StarPerturbation p = StarPerturbation::zero(2);
    p.joint_radii = {0.1, 0.3};
    p.spoke_angle_offsets = {-0.78, 0.78};
    p.joint_lateral_offsets = {{-0.19, -0.19}, {0.19, 0.19}};
    CHECK(code_of([&] { realize(p); }) == ErrorCode::InvalidPerturbation);
    // backing the laterals off resolves the crossing
    p.joint_lateral_offsets = {{-0.02, -0.02}, {0.02, 0.02}};
    CHECK_NOTHROW(realize(p));
}

TEST_CASE("objective at the zero perturbation matches the closed forms") {
    WosParams params;
    params.samples = 20'000;
    const double w = extremal_measure(3, 0.5);
    {
        const auto v =
            evaluate_objective_detailed(StarPerturbation::zero(3), 0.5, Objective::MAX_OMEGA, params);
        // max of three near-equal estimates rides a little above the mean
        CHECK(std::fabs(v.value - w) <= 5.0 * v.std_error);
    }
    {
        const auto v =
            evaluate_objective_detailed(StarPerturbation::zero(3), 0.5, Objective::MEAN_PSI, params);
        CHECK(std::fabs(v.value - 3.0 * std::log(2.0)) <= 5.0 * v.std_error);
        CHECK(v.std_error < 0.05);
    }
    CHECK_THROWS_AS(evaluate_objective(StarPerturbation::zero(3), 1.0, Objective::MAX_OMEGA, params),
                    Error);
}

TEST_CASE("search went downhill and stayed honest") {
    WosParams params;
    params.samples = 4'000;
    const SearchResult res = minimize(2, 0.5, Objective::MAX_OMEGA, 60, 1, params);
    CHECK(res.evaluations == 60);
    REQUIRE(!res.history.empty());
    for (std::size_t i = 1; i < res.history.size(); ++i) {
        CHECK(res.history[i].second < res.history[i - 1].second);
        CHECK(res.history[i].first > res.history[i - 1].first);
    }
    CHECK(res.best_objective == res.history.back().second);
    // sharpness floor: no admissible continuum beats the star by more than noise
    CHECK(res.best_objective >= extremal_measure(2, 0.5) - 0.04);
    CHECK(res.best_params.n == 2);

    // bit-for-bit reproducible
    const SearchResult again = minimize(2, 0.5, Objective::MAX_OMEGA, 60, 1, params);
    CHECK(again.best_objective == res.best_objective);
    CHECK(again.history == res.history);

    CHECK_THROWS_AS(minimize(2, 0.5, Objective::MAX_OMEGA, 10, 1, params), Error);
}
