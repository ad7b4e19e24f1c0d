#pragma once

// Deterministic region renderers.  ASCII prints one glyph pair per cell
// ("[]" for squares, "^"/"v" for triangles) on the region's own grid; SVG
// draws the exact cell polygons (unit = 24 px so every coordinate is an
// integer), marks weighted cell pairs, and can overlay one tiling as
// segments between matched cell centers.

#include "tilecount/region.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tilecount {

std::string render_ascii(const Region& region);

// `tiling` holds matched cell-index pairs (indices into region.cells, the
// same numbering dual_graph uses); pass {} for no overlay.
std::string render_svg(const Region& region, const std::vector<std::pair<int, int>>& tiling = {});

}  // namespace tilecount
