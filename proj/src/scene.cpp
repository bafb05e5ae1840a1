#include "hmdisk/scene.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hmdisk/error.hpp"

namespace hmdisk {

namespace {
using Json = nlohmann::ordered_json;
constexpr double kPi = 3.141592653589793238462643383279502884;

[[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, "scene: " + msg);
}

void expect_keys(const Json& obj, const std::string& prefix,
                 std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            fail("unknown field '" + (prefix.empty() ? it.key() : prefix + "." + it.key()) + "'");
    }
}

double num_at(const Json& j, const std::string& path) {
    if (!j.is_number()) fail("field '" + path + "' must be a number");
    return j.get<double>();
}

long int_at(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail("field '" + path + "' must be an integer");
    return j.get<long>();
}

Point point_at(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail("field '" + path + "' must be [re, im]");
    const double re = num_at(j[0], path + "[0]");
    const double im = num_at(j[1], path + "[1]");
    try {
        return Point(re, im);
    } catch (const Error& e) {
        fail("field '" + path + "': " + e.what());
    }
}

std::vector<double> reals_at(const Json& j, const std::string& path) {
    if (!j.is_array()) fail("field '" + path + "' must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(num_at(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

SceneFile::ExplicitContinuum continuum_at(const Json& j) {
    if (!j.is_object()) fail("field 'continuum' must be an object");
    expect_keys(j, "continuum", {"segments", "arcs"});
    SceneFile::ExplicitContinuum out;
    if (j.contains("segments")) {
        const Json& segs = j["segments"];
        if (!segs.is_array()) fail("field 'continuum.segments' must be an array");
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const std::string path = "continuum.segments[" + std::to_string(i) + "]";
            const Json& s = segs[i];
            if (!s.is_array() || s.size() != 2) fail("field '" + path + "' must be [[re,im],[re,im]]");
            try {
                out.segments.emplace_back(point_at(s[0], path + "[0]"), point_at(s[1], path + "[1]"));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::ParseError) throw;
                fail("field '" + path + "': " + e.what());
            }
        }
    }
    if (j.contains("arcs")) {
        const Json& arcs = j["arcs"];
        if (!arcs.is_array()) fail("field 'continuum.arcs' must be an array");
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const std::string path = "continuum.arcs[" + std::to_string(i) + "]";
            const Json& a = arcs[i];
            if (!a.is_object()) fail("field '" + path + "' must be an object");
            expect_keys(a, path, {"center", "radius", "angle0", "angle1"});
            for (const char* req : {"center", "radius", "angle0", "angle1"})
                if (!a.contains(req)) fail("field '" + path + "' is missing '" + req + "'");
            try {
                out.arcs.emplace_back(point_at(a["center"], path + ".center"),
                                      num_at(a["radius"], path + ".radius"),
                                      num_at(a["angle0"], path + ".angle0"),
                                      num_at(a["angle1"], path + ".angle1"));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::ParseError) throw;
                fail("field '" + path + "': " + e.what());
            }
        }
    }
    return out;
}

StarPerturbation perturbed_star_at(const Json& g, int scene_n) {
    expect_keys(g, "generator",
                {"kind", "n", "theta", "spoke_angle_offsets", "joint_radii",
                 "joint_lateral_offsets"});
    if (!g.contains("n")) fail("field 'generator.n' is required");
    const long n = int_at(g["n"], "generator.n");
    if (n != scene_n) fail("field 'generator.n' must match the scene's n");
    std::vector<double> radii{1.0 / 3.0, 2.0 / 3.0};
    if (g.contains("joint_radii")) radii = reals_at(g["joint_radii"], "generator.joint_radii");

    StarPerturbation p;
    p.n = static_cast<int>(n);
    p.joint_radii = std::move(radii);
    p.theta = g.contains("theta") ? num_at(g["theta"], "generator.theta") : 0.0;
    p.spoke_angle_offsets.assign(p.n, 0.0);
    if (g.contains("spoke_angle_offsets")) {
        p.spoke_angle_offsets = reals_at(g["spoke_angle_offsets"], "generator.spoke_angle_offsets");
        if ((long)p.spoke_angle_offsets.size() != n)
            fail("field 'generator.spoke_angle_offsets' must have n entries");
    }
    p.joint_lateral_offsets.assign(p.n, std::vector<double>(p.joint_radii.size(), 0.0));
    if (g.contains("joint_lateral_offsets")) {
        const Json& rows = g["joint_lateral_offsets"];
        if (!rows.is_array() || (long)rows.size() != n)
            fail("field 'generator.joint_lateral_offsets' must have n rows");
        for (std::size_t k = 0; k < rows.size(); ++k) {
            auto row = reals_at(rows[k],
                                "generator.joint_lateral_offsets[" + std::to_string(k) + "]");
            if (row.size() != p.joint_radii.size())
                fail("field 'generator.joint_lateral_offsets[" + std::to_string(k) +
                     "]' must have one entry per joint radius");
            p.joint_lateral_offsets[k] = std::move(row);
        }
    }
    return p;
}
} // namespace

SceneFile parse_scene(const std::string& json_text) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    expect_keys(root, "", {"schema_version", "n", "rho", "theta", "points", "continuum", "generator"});

    SceneFile s;
    if (!root.contains("schema_version")) fail("missing field 'schema_version'");
    const long ver = int_at(root["schema_version"], "schema_version");
    if (ver != 1) fail("unsupported schema_version " + std::to_string(ver) + " (this build reads 1)");
    s.schema_version = 1;

    if (!root.contains("n")) fail("missing field 'n'");
    const long n = int_at(root["n"], "n");
    if (n < 2 || n > 1000) fail("field 'n' must be an integer in [2, 1000]");
    s.n = static_cast<int>(n);

    if (!root.contains("rho")) fail("missing field 'rho'");
    s.rho = num_at(root["rho"], "rho");
    if (!(s.rho > 0.0 && s.rho < 1.0)) fail("field 'rho' must lie in (0, 1)");

    if (root.contains("theta")) s.theta = num_at(root["theta"], "theta");

    if (root.contains("points")) {
        const Json& pts = root["points"];
        if (!pts.is_array() || (long)pts.size() != n)
            fail("field 'points' must be an array of n [re, im] pairs");
        std::vector<Point> points;
        points.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            points.push_back(point_at(pts[i], "points[" + std::to_string(i) + "]"));
        s.points = std::move(points);
    }

    const bool has_continuum = root.contains("continuum");
    const bool has_generator = root.contains("generator");
    if (has_continuum == has_generator)
        fail("exactly one of 'continuum' and 'generator' is required");

    if (has_continuum) {
        s.continuum = continuum_at(root["continuum"]);
    } else {
        const Json& g = root["generator"];
        if (!g.is_object()) fail("field 'generator' must be an object");
        if (!g.contains("kind")) fail("field 'generator.kind' is required");
        if (!g["kind"].is_string()) fail("field 'generator.kind' must be a string");
        const std::string kind = g["kind"].get<std::string>();
        if (kind == "star") {
            expect_keys(g, "generator", {"kind", "n", "theta"});
            if (!g.contains("n")) fail("field 'generator.n' is required");
            const long gn = int_at(g["n"], "generator.n");
            if (gn != n) fail("field 'generator.n' must match the scene's n");
            SceneFile::StarGenerator gen;
            gen.n = static_cast<int>(gn);
            gen.theta = g.contains("theta") ? num_at(g["theta"], "generator.theta") : 0.0;
            s.star = gen;
        } else if (kind == "perturbed_star") {
            s.perturbed_star = perturbed_star_at(g, s.n);
        } else {
            fail("field 'generator.kind' must be \"star\" or \"perturbed_star\"");
        }
    }
    return s;
}

SceneFile load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

Configuration scene_to_configuration(const SceneFile& s) {
    const int forms = int(s.continuum.has_value()) + int(s.star.has_value()) +
                      int(s.perturbed_star.has_value());
    if (forms != 1) fail("exactly one of 'continuum' and 'generator' is required");

    Continuum e = [&]() -> Continuum {
        if (s.continuum) return Continuum(s.continuum->segments, s.continuum->arcs);
        if (s.star) return star_continuum(s.star->n, s.star->theta);
        return realize(*s.perturbed_star);
    }();

    std::vector<Point> points;
    if (s.points) {
        points = *s.points;
    } else {
        const double theta = s.theta     ? *s.theta
                             : s.star    ? s.star->theta
                             : s.perturbed_star ? s.perturbed_star->theta
                                          : 0.0;
        points.reserve(s.n);
        for (int k = 0; k < s.n; ++k) {
            const auto a = std::polar(s.rho, 2.0 * kPi * k / s.n - theta);
            points.emplace_back(a.real(), a.imag());
        }
    }
    return Configuration(s.n, s.rho, std::move(points), std::move(e));
}

SceneFile configuration_to_scene(const Configuration& cfg) {
    SceneFile s;
    s.schema_version = 1;
    s.n = cfg.n;
    s.rho = cfg.rho;
    s.points = cfg.points;
    SceneFile::ExplicitContinuum ec;
    ec.segments = cfg.continuum.segments;
    ec.arcs = cfg.continuum.arcs;
    s.continuum = std::move(ec);
    return s;
}

std::string scene_to_json(const SceneFile& s) {
    Json root;
    root["schema_version"] = s.schema_version;
    root["n"] = s.n;
    root["rho"] = s.rho;
    if (s.theta) root["theta"] = *s.theta;
    if (s.points) {
        Json pts = Json::array();
        for (const Point& p : *s.points) pts.push_back(Json::array({p.re, p.im}));
        root["points"] = std::move(pts);
    }
    if (s.continuum) {
        Json c = Json::object();
        Json segs = Json::array();
        for (const Segment& seg : s.continuum->segments)
            segs.push_back(Json::array({Json::array({seg.p0.re, seg.p0.im}),
                                        Json::array({seg.p1.re, seg.p1.im})}));
        Json arcs = Json::array();
        for (const CircularArc& a : s.continuum->arcs)
            arcs.push_back(Json{{"center", Json::array({a.center.re, a.center.im})},
                                {"radius", a.radius},
                                {"angle0", a.angle0},
                                {"angle1", a.angle1}});
        c["segments"] = std::move(segs);
        c["arcs"] = std::move(arcs);
        root["continuum"] = std::move(c);
    } else if (s.star) {
        root["generator"] = Json{{"kind", "star"}, {"n", s.star->n}, {"theta", s.star->theta}};
    } else if (s.perturbed_star) {
        const StarPerturbation& p = *s.perturbed_star;
        Json lat = Json::array();
        for (const auto& row : p.joint_lateral_offsets) lat.push_back(row);
        root["generator"] = Json{{"kind", "perturbed_star"},
                                 {"n", p.n},
                                 {"theta", p.theta},
                                 {"spoke_angle_offsets", p.spoke_angle_offsets},
                                 {"joint_radii", p.joint_radii},
                                 {"joint_lateral_offsets", std::move(lat)}};
    }
    return root.dump(2) + "\n";
}

} // namespace hmdisk
