#pragma once

#include <compare>
#include <string>
#include <vector>

#include "loccw/states.hpp"

namespace loccw {

enum class TileKind { HorizontalDouble, VerticalDouble, Single };
enum class TileColor { Black, Grey };

/// A rectangle on the grid; (row, col) is its top-left square, 1-based.
/// A horizontal double also covers (row, col+1); a vertical double also
/// covers (row+1, col). Singles are always grey.
struct Tile {
  TileKind kind = TileKind::Single;
  std::size_t row = 1;
  std::size_t col = 1;
  TileColor color = TileColor::Grey;
};

struct GridSquare {
  std::size_t row = 1;
  std::size_t col = 1;
  auto operator<=>(const GridSquare&) const = default;
};

/// Rows index party A, columns party B, both 1-based.
struct TileDiagram {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Tile> tiles;
};

std::vector<GridSquare> tile_squares(const Tile& t);

/// Bounds, pairwise non-overlap, singles grey. Throws MalformedInput.
void check_diagram(const TileDiagram& d);

/// Grid squares covered by no tile, in row-major order.
std::vector<GridSquare> uncovered_squares(const TileDiagram& d);

/// Decodes the diagram: a double at row i, cols (j, j+1) stands for
/// |i>(|j>+-|j+1>); black keeps both signs, grey only the plus one;
/// a single square (i, j) stands for |i>|j>.
StateSet states_from_tiles(const TileDiagram& d);

TileDiagram transpose(const TileDiagram& d);

std::string to_string(TileKind k);
std::string to_string(TileColor c);
TileKind tile_kind_from_string(const std::string& s);
TileColor tile_color_from_string(const std::string& s);

}  // namespace loccw
