#pragma once

#include <string>
#include <vector>

#include "loccw/matrix.hpp"

namespace loccw {

/// Unnormalized bipartite product state |a> (x) |b>. Normalization is
/// deferred to probability computations so every stored scalar stays exact.
struct ProductState {
  std::string label;
  GaussianVector a;
  GaussianVector b;
};

struct StateSet {
  std::size_t dim_a = 0;  // party A local dimension m
  std::size_t dim_b = 0;  // party B local dimension n
  std::vector<ProductState> states;
};

/// <a_s|a_t> * <b_s|b_t>, first argument conjugated.
GaussianRational tensor_inner(const ProductState& s, const ProductState& t);

struct OrthogonalityViolation {
  std::string label_s;
  std::string label_t;
  GaussianRational value;
};

struct OrthogonalityReport {
  bool ok = true;
  std::vector<OrthogonalityViolation> violations;
};

/// ok iff tensor_inner vanishes for every unordered pair.
OrthogonalityReport validate_orthogonality(const StateSet& set);

/// Structural invariants: positive dims, vector lengths match the dims, no
/// zero local vector, labels unique. Throws MalformedInput.
void check_state_set(const StateSet& set);

/// Swaps the two parties of every state.
StateSet transpose(const StateSet& set);

/// "|3>" for a unit basis vector, "(|3>+|4>)" style otherwise. 1-based kets.
std::string ket_label(const GaussianVector& v);
std::string state_label(const GaussianVector& a, const GaussianVector& b);

/// The state as a dense vector on the mn-dimensional joint space,
/// joint index = (i-1)*n + (j-1) for |i>|j>.
GaussianVector joint_vector(const ProductState& s);

/// Sum of |psi><psi| / <psi|psi> over the set, expanded on the joint space.
/// Equals the identity exactly iff the set is an orthogonal product basis.
GaussianMatrix normalized_projector_sum(const StateSet& set);

}  // namespace loccw
