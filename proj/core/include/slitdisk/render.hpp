#pragma once

#include <string>
#include <vector>

#include "slitdisk/config.hpp"

namespace slitdisk {

// Domain-coloring raster: hue follows the argument, brightness the modulus
// (through m / (1 + m) so unbounded legs stay in range), pixels outside the
// target's domain are black.  Output is plain-text PPM ("P3"), one pixel per
// line, so identical invocations produce byte-identical files.

std::vector<std::string> render_targets(); // phi1, phi2, g, h, B, phi

// Regions a target accepts; the first entry is its default viewport.
std::vector<std::string> render_regions(const std::string& target);

bool render_region_ok(const std::string& target, const std::string& region);

// Renders target on region at res x res.  Throws a domain error on an
// unknown target or a region the target does not accept.
std::string render_ppm(const std::string& target, const std::string& region,
                       int res, const RunConfig& cfg);

} // namespace slitdisk
