#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "hmdisk/scene.hpp"

using namespace hmdisk;

namespace {
std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kStarScene = R"({
  "schema_version": 1,
  "n": 3,
  "rho": 0.5,
  "generator": {"kind": "star", "n": 3, "theta": 0.25}
})";
} // namespace

TEST_CASE("explicit continuum survives a json round trip exactly") {
    std::vector<Segment> segs{Segment(Point(0.0, 0.0), Point(0.5, 0.0))};
    std::vector<CircularArc> arcs{
        CircularArc(Point(0.5, 0.25), 0.25, -1.5707963267948966, 1.5707963267948966)};
    Configuration cfg(2, 0.3, {Point(0.0, 0.3), Point(0.0, -0.3)}, Continuum(segs, arcs));

    const std::string text = scene_to_json(configuration_to_scene(cfg));
    const SceneFile parsed = parse_scene(text);
    const Configuration back = scene_to_configuration(parsed);

    CHECK(back.n == cfg.n);
    CHECK(back.rho == cfg.rho);
    REQUIRE(back.points.size() == cfg.points.size());
    for (std::size_t i = 0; i < cfg.points.size(); ++i) CHECK(back.points[i] == cfg.points[i]);
    REQUIRE(back.continuum.segments.size() == 1);
    CHECK(back.continuum.segments[0].p0 == segs[0].p0);
    CHECK(back.continuum.segments[0].p1 == segs[0].p1);
    REQUIRE(back.continuum.arcs.size() == 1);
    CHECK(back.continuum.arcs[0].center == arcs[0].center);
    CHECK(back.continuum.arcs[0].radius == arcs[0].radius);
    CHECK(back.continuum.arcs[0].angle0 == arcs[0].angle0);
    CHECK(back.continuum.arcs[0].angle1 == arcs[0].angle1);

    // serializing again reproduces the same bytes
    CHECK(scene_to_json(configuration_to_scene(back)) == text);
}

TEST_CASE("star generator expands to the star and default points") {
    const SceneFile s = parse_scene(kStarScene);
    const Configuration cfg = scene_to_configuration(s);
    CHECK(cfg.n == 3);
    const Continuum expect = star_continuum(3, 0.25);
    REQUIRE(cfg.continuum.segments.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(cfg.continuum.segments[i].p0 == expect.segments[i].p0);
        CHECK(cfg.continuum.segments[i].p1 == expect.segments[i].p1);
    }
    // marked points default to rho e^{i(2 pi k/n - theta)}
    for (int k = 0; k < 3; ++k) {
        const auto a = std::polar(0.5, 2.0 * 3.14159265358979323846 * k / 3 - 0.25);
        CHECK(cfg.points[k] == Point(a.real(), a.imag()));
    }
}

TEST_CASE("perturbed star generator honours defaults") {
    const char* text = R"({
      "schema_version": 1, "n": 2, "rho": 0.4,
      "generator": {"kind": "perturbed_star", "n": 2,
                    "spoke_angle_offsets": [0.1, -0.1]}
    })";
    const SceneFile s = parse_scene(text);
    REQUIRE(s.perturbed_star.has_value());
    CHECK(s.perturbed_star->joint_radii == std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
    CHECK(s.perturbed_star->joint_lateral_offsets ==
          std::vector<std::vector<double>>{{0.0, 0.0}, {0.0, 0.0}});
    const Configuration cfg = scene_to_configuration(s);
    CHECK(cfg.continuum.segments.size() == 6); // two joints split each spoke
}

TEST_CASE("scene parse errors name the offending field") {
    CHECK(message_of([] { parse_scene("this is not json"); }).find("invalid JSON") !=
          std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5,
                              "generator": {"kind": "star", "n": 2}, "bogus": 3})");
          }).find("bogus") != std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 2, "n": 2, "rho": 0.5,
                              "generator": {"kind": "star", "n": 2}})");
          }).find("schema_version") != std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 1, "rho": 0.5,
                              "generator": {"kind": "star", "n": 1}})");
          }).find("'n'") != std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 1.5,
                              "generator": {"kind": "star", "n": 2}})");
          }).find("rho") != std::string::npos);
    // exactly one source of geometry
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5})");
          }).find("exactly one") != std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5,
                              "generator": {"kind": "star", "n": 2},
                              "continuum": {"segments": [[[0,0],[0,1]]]}})");
          }).find("exactly one") != std::string::npos);
    // generator n must agree
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 3, "rho": 0.5,
                              "generator": {"kind": "star", "n": 2}})");
          }).find("generator.n") != std::string::npos);
    // malformed pieces keep their path
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5,
                              "continuum": {"segments": [[[0,0],[0,0]]]}})");
          }).find("segments[0]") != std::string::npos);
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5,
                              "continuum": {"arcs": [{"center": [0,0], "radius": 0.5,
                                                      "angle0": 0}]}})");
          }).find("angle1") != std::string::npos);
    // wrong point count
    CHECK(message_of([] {
              parse_scene(R"({"schema_version": 1, "n": 2, "rho": 0.5,
                              "points": [[0.5, 0]],
                              "generator": {"kind": "star", "n": 2}})");
          }).find("points") != std::string::npos);
}

TEST_CASE("missing scene files are reported as parse errors") {
    try {
        load_scene("/nonexistent/path/scene.json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}
