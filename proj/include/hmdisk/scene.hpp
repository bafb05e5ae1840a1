#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmdisk/geometry.hpp"
#include "hmdisk/search.hpp"

namespace hmdisk {

/// On-disk problem description (JSON, schema_version 1). The continuum is
/// either written out piece by piece or produced by a generator; marked
/// points default to rho e^{i(2 pi (k-1)/n - theta)} when omitted.
struct SceneFile {
    int schema_version = 1;
    int n = 0;
    double rho = 0.0;
    std::optional<double> theta;
    std::optional<std::vector<Point>> points;

    struct ExplicitContinuum {
        std::vector<Segment> segments;
        std::vector<CircularArc> arcs;
    };
    struct StarGenerator {
        int n = 0;
        double theta = 0.0;
    };
    // exactly one of these three is set
    std::optional<ExplicitContinuum> continuum;
    std::optional<StarGenerator> star;
    std::optional<StarPerturbation> perturbed_star;
};

/// Parse a scene from JSON text. Unknown or ill-typed fields raise ParseError
/// naming the offending field.
SceneFile parse_scene(const std::string& json_text);

/// Read and parse a scene file; a missing/unreadable file is a ParseError.
SceneFile load_scene(const std::string& path);

/// Expand generators, default the marked points, and build the validated
/// Configuration. Geometry errors (disconnected continuum, point on the
/// continuum, ...) propagate with their own codes.
Configuration scene_to_configuration(const SceneFile& s);

/// Explicit-form scene (pieces and points written out) for a configuration.
SceneFile configuration_to_scene(const Configuration& cfg);

/// Deterministic serialization; round-trips bit-exactly through parse_scene.
std::string scene_to_json(const SceneFile& s);

} // namespace hmdisk
