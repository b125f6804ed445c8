#pragma once

#include "loccw/states.hpp"

namespace loccw {

/// Floating-point nullity estimate via singular values: converts the matrix
/// to doubles and counts sigma <= tol * sigma_max, plus cols - #sigma.
/// Approximate by nature; used only to cross-check the exact solver.
std::size_t float_nullity(const RationalMatrix& m, double tol = 1e-8);

/// Pairwise orthogonality re-checked by direct expansion of the full
/// mn-dimensional joint vectors, no product factorization. Exact; must
/// agree with validate_orthogonality.
bool brute_force_orthogonality(const StateSet& set);

}  // namespace loccw
