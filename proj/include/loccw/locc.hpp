#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loccw/states.hpp"

namespace loccw {

enum class Party { A, B };

inline Party other(Party p) { return p == Party::A ? Party::B : Party::A; }
std::string to_string(Party p);

/// Real coordinates for p x p Hermitian matrices H = H^dagger: p diagonal
/// entries first, then (re, im) of H[i][j] for each pair i < j in
/// lexicographic order. count() = p^2.
class HermitianParam {
 public:
  explicit HermitianParam(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return dim_ * dim_; }

  std::size_t diag_index(std::size_t i) const { return i; }
  std::size_t real_index(std::size_t i, std::size_t j) const {
    return dim_ + 2 * pair_rank(i, j);
  }
  std::size_t imag_index(std::size_t i, std::size_t j) const {
    return dim_ + 2 * pair_rank(i, j) + 1;
  }

  GaussianMatrix to_matrix(const RationalVector& coords) const;
  RationalVector from_matrix(const GaussianMatrix& h) const;
  RationalVector identity_coords() const;

 private:
  std::size_t pair_rank(std::size_t i, std::size_t j) const {
    // pairs (0,1), (0,2), ..., (0,p-1), (1,2), ... ; requires i < j
    return i * (dim_ - 1) - i * (i - 1) / 2 + (j - i - 1);
  }
  std::size_t dim_;
};

/// Exact solution space of the orthogonality-preservation constraints on
/// H = M^dagger M for one party. Always contains the identity, so
/// dimension >= 1; dimension 1 means only trivial measurements survive.
struct SolutionSpace {
  Party party = Party::A;
  std::size_t party_dim = 0;
  std::vector<GaussianMatrix> basis;
  std::size_t dimension = 0;
};

/// Two-outcome local POVM witnessing a nontrivial orthogonality-preserving
/// measurement; elements are the H = M^dagger M operators (I +- eps K)/2.
struct LocalMeasurement {
  Party party = Party::A;
  Rational epsilon;
  GaussianMatrix direction;  // K, Hermitian, not proportional to I
  std::vector<GaussianMatrix> elements;
};

enum class VerdictStatus { CertifiedIndistinguishable, InconclusiveNontrivialExists };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t state_count = 0;
  std::size_t dim_a = 0;  // solution-space dimension, party A
  std::size_t dim_b = 0;  // solution-space dimension, party B
  VerdictStatus status = VerdictStatus::InconclusiveNontrivialExists;
  std::optional<LocalMeasurement> witness;
};

/// One pair of real rows (real/imaginary part of <a_s|H|a_t> = 0, party A;
/// b-parts for party B) per unordered state pair whose other-party inner
/// product is nonzero. All-zero rows are dropped. Columns follow
/// HermitianParam. Throws NonOrthogonalInput if the set is not orthogonal.
RationalMatrix assemble_constraints(const StateSet& set, Party party);

/// Exact nullspace of assemble_constraints mapped back to Hermitian
/// matrices.
SolutionSpace solution_space(const StateSet& set, Party party);

/// Runs solution_space for both parties. Certified-indistinguishable iff
/// both dimensions are 1; otherwise attaches a nontrivial witness. A
/// dimension >= 2 outcome only means one nontrivial first measurement
/// exists, not that a full LOCC protocol does.
Verdict verdict(const StateSet& set);

/// From a space of dimension >= 2, builds {(I + eps K)/2, (I - eps K)/2}
/// with K a basis element independent of I and eps = 1/(2g), g a rational
/// Gershgorin-style bound on |eigenvalues of K|. Both elements are PSD by
/// construction, sum to I exactly, and satisfy every constraint.
LocalMeasurement nontrivial_witness(const SolutionSpace& space);

}  // namespace loccw
