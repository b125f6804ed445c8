#pragma once

#include "loccw/tiles.hpp"

namespace loccw {

struct Family {
  TileDiagram diagram;
  StateSet states;
};

/// The odd d x d construction: 6d-9 mutually orthogonal product states
/// (33 at d = 7). Requires d odd, d >= 5; the 3x3 set comes from
/// build_general.
Family build_odd_square(std::size_t d);

/// The general m x n construction: 3(m+n)-9 mutually orthogonal product
/// states. Supported dimensions: both odd (m, n >= 3); m even >= 6 with
/// n odd >= 5; m odd >= 5 with n even >= 6 (transposed even x odd); both
/// even >= 6. At smaller even dimensions the listed states collide, so the
/// generator refuses instead of emitting a non-orthogonal set.
Family build_general(std::size_t m, std::size_t n);

bool general_supported(std::size_t m, std::size_t n);

/// Extends the diagram's state set to a full orthogonal product basis of
/// exactly m*n states: one |i>|j> per uncovered square plus the minus-sign
/// partner of every grey double. Verifies orthogonality and the exact
/// resolution of the identity before returning.
StateSet complete_to_basis(const TileDiagram& d);

}  // namespace loccw
