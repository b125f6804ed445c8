#include "loccw/sep.hpp"

namespace loccw {

SeparableMeasurement projective_measurement(const StateSet& basis) {
  check_state_set(basis);
  if (basis.states.size() != basis.dim_a * basis.dim_b) {
    throw NotABasis("need exactly " +
                    std::to_string(basis.dim_a * basis.dim_b) +
                    " states for a " + std::to_string(basis.dim_a) + "x" +
                    std::to_string(basis.dim_b) + " product basis, got " +
                    std::to_string(basis.states.size()));
  }
  const auto report = validate_orthogonality(basis);
  if (!report.ok) {
    throw NotABasis("basis states are not mutually orthogonal ('" +
                    report.violations.front().label_s + "' vs '" +
                    report.violations.front().label_t + "')");
  }
  SeparableMeasurement meas{basis.dim_a, basis.dim_b, basis.states};
  if (expand_sum(meas) != GaussianMatrix::identity(basis.dim_a * basis.dim_b)) {
    throw NotABasis("completeness sum is not the identity");
  }
  return meas;
}

GaussianMatrix expand_sum(const SeparableMeasurement& meas) {
  StateSet as_set{meas.dim_a, meas.dim_b, meas.outcomes};
  return normalized_projector_sum(as_set);
}

Distribution distinguish(const SeparableMeasurement& meas,
                         const ProductState& probe) {
  if (probe.a.size() != meas.dim_a || probe.b.size() != meas.dim_b) {
    throw DimensionMismatch("probe dimensions " + std::to_string(probe.a.size()) +
                            "x" + std::to_string(probe.b.size()) +
                            " do not match measurement dimensions " +
                            std::to_string(meas.dim_a) + "x" +
                            std::to_string(meas.dim_b));
  }
  const Rational probe_norm = vector_norm2(probe.a) * vector_norm2(probe.b);
  if (sgn(probe_norm) == 0) {
    throw MalformedInput("probe state has a zero local vector");
  }

  Distribution dist;
  dist.probabilities.reserve(meas.outcomes.size());
  Rational total(0);
  for (const auto& outcome : meas.outcomes) {
    const GaussianRational amp = tensor_inner(outcome, probe);
    const Rational weight =
        vector_norm2(outcome.a) * vector_norm2(outcome.b) * probe_norm;
    dist.probabilities.push_back(amp.norm2() / weight);
    total += dist.probabilities.back();
  }
  if (total != 1) {
    throw Error("outcome probabilities sum to " + to_string(total) +
                ", measurement is not complete");
  }
  for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
    if (dist.probabilities[i] > dist.probabilities[dist.argmax]) dist.argmax = i;
  }
  return dist;
}

}  // namespace loccw
