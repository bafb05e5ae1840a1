#pragma once

#include <string>

#include "hmdisk/geometry.hpp"

namespace hmdisk {

/// Standalone SVG drawing of a configuration: unit circle, continuum pieces,
/// marked points. Byte output is a pure function of the configuration.
std::string render_scene_svg(const Configuration& cfg);

} // namespace hmdisk
