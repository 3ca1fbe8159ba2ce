#pragma once

#include "crossgeo/geography.hpp"

#include <optional>
#include <string>

namespace crossgeo {

// Deterministic SVG of a wedge-union region in the (e, b) plane: axes, the
// realizable lattice points, solid apex dots, open dots for notable
// non-apex surfaces, and the signature wedge boundary when sigma is given.
std::string region_svg(const GeographyRegion& region,
                       const std::vector<SurfacePoint>& open_dots,
                       std::optional<long long> sigma,
                       const std::string& title);

} // namespace crossgeo
