#pragma once

#include <string>

#include "loccw/tiles.hpp"

namespace loccw {

/// m lines of n cells ('B' black-double square, 'G' grey-double square,
/// 'S' single, '.' uncovered), then one "<kind> <color> row=<r> col=<c>"
/// line per tile. Byte-deterministic.
std::string render_ascii(const TileDiagram& d);

/// Standalone SVG: grid lines, one rounded <rect> per tile (dark fill for
/// black, light for grey), ket labels on rows and columns.
std::string render_svg(const TileDiagram& d);

}  // namespace loccw
