#include "loccw/tiles.hpp"

#include <set>

namespace loccw {

std::vector<GridSquare> tile_squares(const Tile& t) {
  switch (t.kind) {
    case TileKind::HorizontalDouble:
      return {{t.row, t.col}, {t.row, t.col + 1}};
    case TileKind::VerticalDouble:
      return {{t.row, t.col}, {t.row + 1, t.col}};
    case TileKind::Single:
      return {{t.row, t.col}};
  }
  return {};
}

void check_diagram(const TileDiagram& d) {
  if (d.m == 0 || d.n == 0) {
    throw MalformedInput("diagram dims must be positive");
  }
  std::set<GridSquare> occupied;
  for (std::size_t k = 0; k < d.tiles.size(); ++k) {
    const Tile& t = d.tiles[k];
    const std::string where = "tiles[" + std::to_string(k) + "]";
    if (t.kind == TileKind::Single && t.color != TileColor::Grey) {
      throw MalformedInput(where + ": single tiles must be grey");
    }
    if (t.row < 1 || t.col < 1) {
      throw MalformedInput(where + ": coordinates are 1-based");
    }
    for (const GridSquare& sq : tile_squares(t)) {
      if (sq.row > d.m || sq.col > d.n) {
        throw MalformedInput(where + ": square (" + std::to_string(sq.row) +
                             "," + std::to_string(sq.col) + ") outside the " +
                             std::to_string(d.m) + "x" + std::to_string(d.n) +
                             " grid");
      }
      if (!occupied.insert(sq).second) {
        throw MalformedInput(where + ": square (" + std::to_string(sq.row) +
                             "," + std::to_string(sq.col) +
                             ") covered by two tiles");
      }
    }
  }
}

std::vector<GridSquare> uncovered_squares(const TileDiagram& d) {
  std::set<GridSquare> occupied;
  for (const Tile& t : d.tiles) {
    for (const GridSquare& sq : tile_squares(t)) occupied.insert(sq);
  }
  std::vector<GridSquare> out;
  for (std::size_t r = 1; r <= d.m; ++r) {
    for (std::size_t c = 1; c <= d.n; ++c) {
      if (!occupied.contains({r, c})) out.push_back({r, c});
    }
  }
  return out;
}

namespace {

GaussianVector basis_vector(std::size_t dim, std::size_t index1) {
  GaussianVector v(dim);
  v[index1 - 1] = GaussianRational(1);
  return v;
}

GaussianVector pair_vector(std::size_t dim, std::size_t index1, int sign) {
  GaussianVector v(dim);
  v[index1 - 1] = GaussianRational(1);
  v[index1] = GaussianRational(sign);
  return v;
}

void push_state(StateSet& set, GaussianVector a, GaussianVector b) {
  ProductState s;
  s.label = state_label(a, b);
  s.a = std::move(a);
  s.b = std::move(b);
  set.states.push_back(std::move(s));
}

}  // namespace

StateSet states_from_tiles(const TileDiagram& d) {
  check_diagram(d);
  StateSet set;
  set.dim_a = d.m;
  set.dim_b = d.n;
  for (const Tile& t : d.tiles) {
    switch (t.kind) {
      case TileKind::HorizontalDouble:
        push_state(set, basis_vector(d.m, t.row), pair_vector(d.n, t.col, +1));
        if (t.color == TileColor::Black) {
          push_state(set, basis_vector(d.m, t.row), pair_vector(d.n, t.col, -1));
        }
        break;
      case TileKind::VerticalDouble:
        push_state(set, pair_vector(d.m, t.row, +1), basis_vector(d.n, t.col));
        if (t.color == TileColor::Black) {
          push_state(set, pair_vector(d.m, t.row, -1), basis_vector(d.n, t.col));
        }
        break;
      case TileKind::Single:
        push_state(set, basis_vector(d.m, t.row), basis_vector(d.n, t.col));
        break;
    }
  }
  return set;
}

TileDiagram transpose(const TileDiagram& d) {
  TileDiagram out;
  out.m = d.n;
  out.n = d.m;
  out.tiles.reserve(d.tiles.size());
  for (const Tile& t : d.tiles) {
    Tile tt = t;
    tt.row = t.col;
    tt.col = t.row;
    if (t.kind == TileKind::HorizontalDouble) tt.kind = TileKind::VerticalDouble;
    else if (t.kind == TileKind::VerticalDouble) tt.kind = TileKind::HorizontalDouble;
    out.tiles.push_back(tt);
  }
  return out;
}

std::string to_string(TileKind k) {
  switch (k) {
    case TileKind::HorizontalDouble: return "horizontal-double";
    case TileKind::VerticalDouble: return "vertical-double";
    case TileKind::Single: return "single";
  }
  return "?";
}

std::string to_string(TileColor c) {
  return c == TileColor::Black ? "black" : "grey";
}

TileKind tile_kind_from_string(const std::string& s) {
  if (s == "horizontal-double") return TileKind::HorizontalDouble;
  if (s == "vertical-double") return TileKind::VerticalDouble;
  if (s == "single") return TileKind::Single;
  throw MalformedInput("unknown tile kind '" + s + "'");
}

TileColor tile_color_from_string(const std::string& s) {
  if (s == "black") return TileColor::Black;
  if (s == "grey") return TileColor::Grey;
  throw MalformedInput("unknown tile color '" + s + "'");
}

}  // namespace loccw
