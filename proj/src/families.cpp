#include "loccw/families.hpp"

#include <string>

namespace loccw {

namespace {

Tile horizontal(std::size_t row, std::size_t col, TileColor color) {
  return {TileKind::HorizontalDouble, row, col, color};
}

Tile vertical(std::size_t row, std::size_t col, TileColor color) {
  return {TileKind::VerticalDouble, row, col, color};
}

Tile single(std::size_t row, std::size_t col) {
  return {TileKind::Single, row, col, TileColor::Grey};
}

Family family_from_tiles(TileDiagram diagram) {
  StateSet states = states_from_tiles(diagram);
  return {std::move(diagram), std::move(states)};
}

// m = 2k+1, n = 2l+1, k,l >= 1. For m = n = 3 this is the nine-state set
// of Bennett et al.
Family build_odd_odd(std::size_t m, std::size_t n) {
  const std::size_t k = (m - 1) / 2;
  const std::size_t l = (n - 1) / 2;
  TileDiagram d{m, n, {}};
  for (std::size_t i = 1; i + 1 <= 2 * l; i += 2) {
    d.tiles.push_back(horizontal(1, i, TileColor::Black));
  }
  for (std::size_t i = 2; i + 1 <= 2 * l + 1; i += 2) {
    d.tiles.push_back(horizontal(m, i, TileColor::Black));
  }
  for (std::size_t j = 1; j + 1 <= 2 * k; j += 2) {
    d.tiles.push_back(vertical(j, n, TileColor::Black));
  }
  for (std::size_t j = 2; j + 1 <= 2 * k + 1; j += 2) {
    d.tiles.push_back(vertical(j, 1, TileColor::Black));
  }
  for (std::size_t i = 2; i <= 2 * l; ++i) {
    d.tiles.push_back(single(k + 1, i));
  }
  for (std::size_t j = 2; j <= 2 * k; ++j) {
    if (j == k + 1) continue;  // |k+1>|l+1> already emitted above
    d.tiles.push_back(single(j, l + 1));
  }
  return family_from_tiles(std::move(d));
}

// m = 2k (k >= 3), n = 2l+1 (l >= 2).
Family build_even_odd(std::size_t m, std::size_t n) {
  const std::size_t k = m / 2;
  const std::size_t l = (n - 1) / 2;
  TileDiagram d{m, n, {}};
  for (std::size_t i = 1; i + 1 <= 2 * l; i += 2) {
    d.tiles.push_back(horizontal(1, i, TileColor::Black));
  }
  for (std::size_t i = 2; i + 1 <= 2 * l + 1; i += 2) {
    d.tiles.push_back(horizontal(m, i, TileColor::Black));
  }
  for (std::size_t j = 1; j <= 2 * k - 3; j += 2) {
    d.tiles.push_back(vertical(j, n, TileColor::Black));
  }
  for (std::size_t j = 2; j <= 2 * k - 4; j += 2) {
    d.tiles.push_back(vertical(j, 1, TileColor::Black));
  }
  d.tiles.push_back(vertical(2 * k - 2, 2, TileColor::Black));
  d.tiles.push_back(vertical(2 * k - 1, 1, TileColor::Black));
  for (std::size_t i = 2; i <= 2 * k - 1; ++i) {
    d.tiles.push_back(single(i, 3));
  }
  for (std::size_t j = 2; j <= 2 * l; ++j) {
    if (j == 3) continue;  // (i, 3) column of singles already covers it
    d.tiles.push_back(single(2, j));
  }
  return family_from_tiles(std::move(d));
}

// m = 2k, n = 2l, k,l >= 3.
Family build_even_even(std::size_t m, std::size_t n) {
  const std::size_t k = m / 2;
  const std::size_t l = n / 2;
  TileDiagram d{m, n, {}};
  for (std::size_t i = 1; i <= 2 * l - 3; i += 2) {
    d.tiles.push_back(horizontal(1, i, TileColor::Black));
  }
  for (std::size_t i = 2; i <= 2 * l - 4; i += 2) {
    d.tiles.push_back(horizontal(m, i, TileColor::Black));
  }
  d.tiles.push_back(horizontal(2 * k - 1, 2 * l - 2, TileColor::Black));
  d.tiles.push_back(horizontal(2 * k, 2 * l - 1, TileColor::Black));
  for (std::size_t j = 1; j <= 2 * k - 3; j += 2) {
    d.tiles.push_back(vertical(j, n, TileColor::Black));
  }
  for (std::size_t j = 2; j <= 2 * k - 4; j += 2) {
    d.tiles.push_back(vertical(j, 1, TileColor::Black));
  }
  d.tiles.push_back(vertical(2 * k - 2, 2, TileColor::Black));
  d.tiles.push_back(vertical(2 * k - 1, 1, TileColor::Black));
  for (std::size_t j = 3; j <= 2 * k - 1; ++j) {
    d.tiles.push_back(single(j, 3));
  }
  for (std::size_t i = 2; i <= 2 * l - 1; ++i) {
    d.tiles.push_back(single(2, i));
  }
  return family_from_tiles(std::move(d));
}

Family transpose(const Family& f) {
  Family out;
  out.diagram = transpose(f.diagram);
  out.states = states_from_tiles(out.diagram);
  return out;
}

}  // namespace

Family build_odd_square(std::size_t d) {
  if (d < 5 || d % 2 == 0) {
    throw UnsupportedDimensions(
        "odd-square family needs odd d >= 5 (got " + std::to_string(d) +
        "); the 3x3 set is build_general(3, 3)");
  }
  const std::size_t n = (d - 1) / 2;
  TileDiagram diagram{d, d, {}};
  auto& tiles = diagram.tiles;
  for (std::size_t i = 1; i <= n; ++i) tiles.push_back(horizontal(i, i, TileColor::Black));
  for (std::size_t i = n + 2; i <= d; ++i) tiles.push_back(horizontal(i, i - 1, TileColor::Black));
  for (std::size_t j = n + 2; j <= d; ++j) tiles.push_back(vertical(d + 1 - j, j, TileColor::Black));
  for (std::size_t j = 1; j <= n; ++j) tiles.push_back(vertical(d - j, j, TileColor::Black));
  // Grey doubles sit on the middle band {n, n+1, n+2}; the exact alternation
  // is orthogonality-neutral as long as each one contains column/row n+1.
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    tiles.push_back(horizontal(i, i == n - 1 ? n + 1 : n, TileColor::Grey));
  }
  for (std::size_t i = n + 3; i <= d; ++i) {
    tiles.push_back(horizontal(i, i == n + 3 ? n : n + 1, TileColor::Grey));
  }
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    tiles.push_back(vertical(j == n - 1 ? n : n + 1, j, TileColor::Grey));
  }
  for (std::size_t j = n + 3; j <= d; ++j) {
    tiles.push_back(vertical(j == n + 3 ? n + 1 : n, j, TileColor::Grey));
  }
  tiles.push_back(single(n + 1, n + 1));
  return family_from_tiles(std::move(diagram));
}

bool general_supported(std::size_t m, std::size_t n) {
  const bool m_odd = m % 2 == 1;
  const bool n_odd = n % 2 == 1;
  if (m_odd && n_odd) return m >= 3 && n >= 3;
  if (!m_odd && n_odd) return m >= 6 && n >= 5;
  if (m_odd && !n_odd) return m >= 5 && n >= 6;
  return m >= 6 && n >= 6;
}

Family build_general(std::size_t m, std::size_t n) {
  if (!general_supported(m, n)) {
    throw UnsupportedDimensions("no supported construction for " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
  const bool m_odd = m % 2 == 1;
  const bool n_odd = n % 2 == 1;
  if (m_odd && n_odd) return build_odd_odd(m, n);
  if (!m_odd && n_odd) return build_even_odd(m, n);
  if (m_odd && !n_odd) return transpose(build_even_odd(n, m));
  return build_even_even(m, n);
}

StateSet complete_to_basis(const TileDiagram& d) {
  StateSet out = states_from_tiles(d);
  for (const Tile& t : d.tiles) {
    if (t.color != TileColor::Grey || t.kind == TileKind::Single) continue;
    GaussianVector a(d.m);
    GaussianVector b(d.n);
    if (t.kind == TileKind::HorizontalDouble) {
      a[t.row - 1] = GaussianRational(1);
      b[t.col - 1] = GaussianRational(1);
      b[t.col] = GaussianRational(-1);
    } else {
      a[t.row - 1] = GaussianRational(1);
      a[t.row] = GaussianRational(-1);
      b[t.col - 1] = GaussianRational(1);
    }
    out.states.push_back({state_label(a, b), std::move(a), std::move(b)});
  }
  for (const GridSquare& sq : uncovered_squares(d)) {
    GaussianVector a(d.m);
    GaussianVector b(d.n);
    a[sq.row - 1] = GaussianRational(1);
    b[sq.col - 1] = GaussianRational(1);
    out.states.push_back({state_label(a, b), std::move(a), std::move(b)});
  }

  if (out.states.size() != d.m * d.n) {
    throw CompletionFailure("completion produced " +
                            std::to_string(out.states.size()) + " states for a " +
                            std::to_string(d.m) + "x" + std::to_string(d.n) +
                            " grid");
  }
  if (!validate_orthogonality(out).ok) {
    throw CompletionFailure("completed set is not mutually orthogonal");
  }
  if (normalized_projector_sum(out) != GaussianMatrix::identity(d.m * d.n)) {
    throw CompletionFailure("completed set does not resolve the identity");
  }
  return out;
}

}  // namespace loccw
