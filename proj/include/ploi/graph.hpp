#pragma once

// Breakpoint polylines of maps, superimposed on the unit square.

#include <string>
#include <utility>
#include <vector>

#include "ploi/plmap.hpp"

namespace ploi {

using NamedMap = std::pair<std::string, PLMap>;

// "map,x,y" rows with exact fractions, one per breakpoint.
std::string graph_csv(const std::vector<NamedMap>& maps);

// Static SVG with the diagonal and one polyline per map. Pixel coordinates
// are decimals; the breakpoints are also listed exactly in <title> elements.
std::string graph_svg(const std::vector<NamedMap>& maps, int size = 480);

}  // namespace ploi
