#include "loccw/states.hpp"

#include <set>
#include <utility>

namespace loccw {

GaussianRational tensor_inner(const ProductState& s, const ProductState& t) {
  if (s.a.size() != t.a.size() || s.b.size() != t.b.size()) {
    throw DimensionMismatch("tensor_inner: states '" + s.label + "' and '" +
                            t.label + "' have different local dimensions");
  }
  const GaussianRational fa = inner(s.a, t.a);
  if (fa.is_zero()) return {};
  const GaussianRational fb = inner(s.b, t.b);
  return fa * fb;
}

OrthogonalityReport validate_orthogonality(const StateSet& set) {
  OrthogonalityReport report;
  const auto& states = set.states;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const GaussianRational value = tensor_inner(states[i], states[j]);
      if (!value.is_zero()) {
        report.ok = false;
        report.violations.push_back({states[i].label, states[j].label, value});
      }
    }
  }
  return report;
}

void check_state_set(const StateSet& set) {
  if (set.dim_a == 0 || set.dim_b == 0) {
    throw MalformedInput("state set dims must be positive");
  }
  std::set<std::string> labels;
  for (std::size_t k = 0; k < set.states.size(); ++k) {
    const auto& s = set.states[k];
    const std::string where = "states[" + std::to_string(k) + "]";
    if (s.a.size() != set.dim_a) {
      throw MalformedInput(where + ".a has length " + std::to_string(s.a.size()) +
                           ", expected " + std::to_string(set.dim_a));
    }
    if (s.b.size() != set.dim_b) {
      throw MalformedInput(where + ".b has length " + std::to_string(s.b.size()) +
                           ", expected " + std::to_string(set.dim_b));
    }
    if (sgn(vector_norm2(s.a)) == 0) {
      throw MalformedInput(where + ".a is the zero vector");
    }
    if (sgn(vector_norm2(s.b)) == 0) {
      throw MalformedInput(where + ".b is the zero vector");
    }
    if (!labels.insert(s.label).second) {
      throw MalformedInput(where + " duplicates label '" + s.label + "'");
    }
  }
}

StateSet transpose(const StateSet& set) {
  StateSet out;
  out.dim_a = set.dim_b;
  out.dim_b = set.dim_a;
  out.states.reserve(set.states.size());
  for (const auto& s : set.states) {
    out.states.push_back({s.label, s.b, s.a});
  }
  return out;
}

std::string ket_label(const GaussianVector& v) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) support.push_back(i);
  }
  if (support.size() == 1 && v[support[0]] == GaussianRational(1)) {
    return "|" + std::to_string(support[0] + 1) + ">";
  }
  std::string out = "(";
  bool first = true;
  for (std::size_t i : support) {
    const GaussianRational& c = v[i];
    if (c == GaussianRational(1)) {
      if (!first) out += "+";
    } else if (c == GaussianRational(-1)) {
      out += "-";
    } else {
      std::string cs = to_string(c);
      if (sgn(c.im) != 0) cs = "(" + cs + ")";
      if (!first && cs[0] != '-') out += "+";
      out += cs;
    }
    out += "|" + std::to_string(i + 1) + ">";
    first = false;
  }
  return out + ")";
}

std::string state_label(const GaussianVector& a, const GaussianVector& b) {
  return ket_label(a) + ket_label(b);
}

GaussianVector joint_vector(const ProductState& s) {
  const std::size_t n = s.b.size();
  GaussianVector joint(s.a.size() * n);
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    if (s.a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (s.b[j].is_zero()) continue;
      joint[i * n + j] = s.a[i] * s.b[j];
    }
  }
  return joint;
}

GaussianMatrix normalized_projector_sum(const StateSet& set) {
  const std::size_t dim = set.dim_a * set.dim_b;
  GaussianMatrix sum(dim, dim);
  for (const auto& s : set.states) {
    const GaussianVector psi = joint_vector(s);
    const Rational norm = vector_norm2(psi);
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < dim; ++x) {
      if (!psi[x].is_zero()) support.push_back(x);
    }
    for (std::size_t x : support) {
      for (std::size_t y : support) {
        sum.at(x, y) += (psi[x] * psi[y].conjugate()) / norm;
      }
    }
  }
  return sum;
}

}  // namespace loccw
