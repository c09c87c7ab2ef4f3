// Geometry renderings: SVG for 2D scenes (regions colored by label hash),
// OBJ for 3D scenes (region boundary shells and obstacle meshes).
#pragma once

#include <string>
#include <vector>

#include "pathclass/planner.hpp"

namespace pathclass {

std::string to_svg(const Decomposition& d,
                   const std::vector<std::vector<Position>>& overlay_paths = {});

std::string to_obj(const Decomposition& d);

}  // namespace pathclass
