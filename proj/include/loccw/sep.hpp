#pragma once

#include "loccw/states.hpp"

namespace loccw {

/// Projective separable measurement: one rank-1 product operator
/// |a><a| (x) |b><b| / (<a|a><b|b>) per basis state. Separability is
/// structural (product form); completeness is verified exactly on
/// construction.
struct SeparableMeasurement {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<ProductState> outcomes;
};

/// Builds the measurement from a full orthogonal product basis of exactly
/// dim_a * dim_b states. Throws NotABasis on wrong count or non-orthogonal
/// input.
SeparableMeasurement projective_measurement(const StateSet& basis);

/// Sum of all operators, expanded on the joint space. Identity for every
/// measurement this module constructs.
GaussianMatrix expand_sum(const SeparableMeasurement& meas);

struct Distribution {
  std::vector<Rational> probabilities;  // one per outcome, sums to 1 exactly
  std::size_t argmax = 0;               // first index attaining the maximum
};

/// Exact outcome statistics for a product-state probe:
/// p_i = |<psi_i|probe>|^2 / (<psi_i|psi_i> <probe|probe>).
Distribution distinguish(const SeparableMeasurement& meas,
                         const ProductState& probe);

}  // namespace loccw
