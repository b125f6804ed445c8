#include "loccw/render.hpp"

#include <sstream>

namespace loccw {

std::string render_ascii(const TileDiagram& d) {
  check_diagram(d);
  std::vector<std::string> grid(d.m, std::string(d.n, '.'));
  for (const Tile& t : d.tiles) {
    char glyph = 'S';
    if (t.kind != TileKind::Single) {
      glyph = t.color == TileColor::Black ? 'B' : 'G';
    }
    for (const GridSquare& sq : tile_squares(t)) {
      grid[sq.row - 1][sq.col - 1] = glyph;
    }
  }
  std::string out;
  for (const auto& line : grid) {
    out += line;
    out += '\n';
  }
  for (const Tile& t : d.tiles) {
    out += to_string(t.kind) + " " + to_string(t.color) +
           " row=" + std::to_string(t.row) + " col=" + std::to_string(t.col) +
           "\n";
  }
  return out;
}

namespace {

constexpr int kCell = 20;
constexpr int kMarginLeft = 30;
constexpr int kMarginTop = 26;
constexpr int kPad = 2;  // tile inset inside its cell block
constexpr const char* kBlackFill = "#303030";
constexpr const char* kGreyFill = "#c8c8c8";

}  // namespace

std::string render_svg(const TileDiagram& d) {
  check_diagram(d);
  const int width = kMarginLeft + static_cast<int>(d.n) * kCell + kPad * 2;
  const int height = kMarginTop + static_cast<int>(d.m) * kCell + kPad * 2;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";

  for (std::size_t r = 0; r <= d.m; ++r) {
    const int y = kMarginTop + static_cast<int>(r) * kCell;
    svg << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
        << kMarginLeft + static_cast<int>(d.n) * kCell << "\" y2=\"" << y
        << "\" stroke=\"#cc6666\" stroke-width=\"0.5\"/>\n";
  }
  for (std::size_t c = 0; c <= d.n; ++c) {
    const int x = kMarginLeft + static_cast<int>(c) * kCell;
    svg << "  <line x1=\"" << x << "\" y1=\"" << kMarginTop << "\" x2=\"" << x
        << "\" y2=\"" << kMarginTop + static_cast<int>(d.m) * kCell
        << "\" stroke=\"#cc6666\" stroke-width=\"0.5\"/>\n";
  }

  for (std::size_t c = 1; c <= d.n; ++c) {
    const int x = kMarginLeft + (static_cast<int>(c) - 1) * kCell + kCell / 2;
    svg << "  <text x=\"" << x << "\" y=\"" << kMarginTop - 8
        << "\" font-size=\"9\" text-anchor=\"middle\">|" << c << "&gt;</text>\n";
  }
  for (std::size_t r = 1; r <= d.m; ++r) {
    const int y = kMarginTop + (static_cast<int>(r) - 1) * kCell + kCell / 2 + 3;
    svg << "  <text x=\"" << kMarginLeft - 4 << "\" y=\"" << y
        << "\" font-size=\"9\" text-anchor=\"end\">|" << r << "&gt;</text>\n";
  }

  for (const Tile& t : d.tiles) {
    std::size_t rows = 1;
    std::size_t cols = 1;
    if (t.kind == TileKind::HorizontalDouble) cols = 2;
    if (t.kind == TileKind::VerticalDouble) rows = 2;
    const int x = kMarginLeft + (static_cast<int>(t.col) - 1) * kCell + kPad;
    const int y = kMarginTop + (static_cast<int>(t.row) - 1) * kCell + kPad;
    const int w = static_cast<int>(cols) * kCell - 2 * kPad;
    const int h = static_cast<int>(rows) * kCell - 2 * kPad;
    svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
        << "\" height=\"" << h << "\" rx=\"2\" fill=\""
        << (t.color == TileColor::Black ? kBlackFill : kGreyFill)
        << "\" stroke=\"#000000\" stroke-width=\"0.75\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace loccw
