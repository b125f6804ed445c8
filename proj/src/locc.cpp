#include "loccw/locc.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace loccw {

std::string to_string(Party p) { return p == Party::A ? "a" : "b"; }

std::string to_string(VerdictStatus s) {
  return s == VerdictStatus::CertifiedIndistinguishable
             ? "certified-indistinguishable"
             : "inconclusive-nontrivial-exists";
}

GaussianMatrix HermitianParam::to_matrix(const RationalVector& coords) const {
  GaussianMatrix h(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    h.at(i, i) = GaussianRational(coords[diag_index(i)]);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Rational& x = coords[real_index(i, j)];
      const Rational& y = coords[imag_index(i, j)];
      h.at(i, j) = GaussianRational(x, y);
      h.at(j, i) = GaussianRational(x, Rational(-y));
    }
  }
  return h;
}

RationalVector HermitianParam::from_matrix(const GaussianMatrix& h) const {
  RationalVector coords(count(), Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    coords[diag_index(i)] = h.at(i, i).re;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      coords[real_index(i, j)] = h.at(i, j).re;
      coords[imag_index(i, j)] = h.at(i, j).im;
    }
  }
  return coords;
}

RationalVector HermitianParam::identity_coords() const {
  RationalVector coords(count(), Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) coords[diag_index(i)] = 1;
  return coords;
}

namespace {

std::vector<std::size_t> support(const GaussianVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back(i);
  }
  return out;
}

bool all_zero(const RationalVector& row) {
  return std::all_of(row.begin(), row.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace

RationalMatrix assemble_constraints(const StateSet& set, Party party) {
  const auto report = validate_orthogonality(set);
  if (!report.ok) {
    throw NonOrthogonalInput("input set is not mutually orthogonal ('" +
                             report.violations.front().label_s + "' vs '" +
                             report.violations.front().label_t + "')");
  }
  const std::size_t p = party == Party::A ? set.dim_a : set.dim_b;
  const HermitianParam par(p);
  RationalMatrix mat(0, par.count());

  const auto& states = set.states;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t t = s + 1; t < states.size(); ++t) {
      const GaussianVector& us = party == Party::A ? states[s].a : states[s].b;
      const GaussianVector& ut = party == Party::A ? states[t].a : states[t].b;
      const GaussianVector& vs = party == Party::A ? states[s].b : states[s].a;
      const GaussianVector& vt = party == Party::A ? states[t].b : states[t].a;
      if (inner(vs, vt).is_zero()) continue;  // pair inactive for this party

      // <u_s|H|u_t> = 0 over the real Hermitian coordinates, split into
      // real and imaginary rows.
      RationalVector re_row(par.count(), Rational(0));
      RationalVector im_row(par.count(), Rational(0));
      for (std::size_t i : support(us)) {
        for (std::size_t j : support(ut)) {
          const GaussianRational c = us[i].conjugate() * ut[j];
          if (i == j) {
            re_row[par.diag_index(i)] += c.re;
            im_row[par.diag_index(i)] += c.im;
          } else if (i < j) {
            re_row[par.real_index(i, j)] += c.re;
            im_row[par.real_index(i, j)] += c.im;
            re_row[par.imag_index(i, j)] -= c.im;
            im_row[par.imag_index(i, j)] += c.re;
          } else {
            re_row[par.real_index(j, i)] += c.re;
            im_row[par.real_index(j, i)] += c.im;
            re_row[par.imag_index(j, i)] += c.im;
            im_row[par.imag_index(j, i)] -= c.re;
          }
        }
      }
      if (!all_zero(re_row)) mat.append_row(re_row);
      if (!all_zero(im_row)) mat.append_row(im_row);
    }
  }
  return mat;
}

SolutionSpace solution_space(const StateSet& set, Party party) {
  const std::size_t p = party == Party::A ? set.dim_a : set.dim_b;
  const HermitianParam par(p);
  const RationalMatrix mat = assemble_constraints(set, party);

  // Family sets repeat the same constraint through many pairs; eliminating
  // distinct rows only keeps the nullspace identical and the rref cheap.
  std::set<RationalVector> distinct;
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    RationalVector row = mat.row(r);
    std::size_t lead = 0;
    while (lead < row.size() && sgn(row[lead]) == 0) ++lead;
    if (lead == row.size()) continue;
    const Rational scale = row[lead];
    for (auto& q : row) q /= scale;
    distinct.insert(std::move(row));
  }
  RationalMatrix dedup(0, par.count());
  for (const auto& row : distinct) dedup.append_row(row);

  SolutionSpace space;
  space.party = party;
  space.party_dim = p;
  for (auto& v : nullspace(dedup)) {
    space.basis.push_back(par.to_matrix(v));
  }
  space.dimension = space.basis.size();
  return space;
}

Verdict verdict(const StateSet& set) {
  const SolutionSpace sa = solution_space(set, Party::A);
  const SolutionSpace sb = solution_space(set, Party::B);
  Verdict v;
  v.m = set.dim_a;
  v.n = set.dim_b;
  v.state_count = set.states.size();
  v.dim_a = sa.dimension;
  v.dim_b = sb.dimension;
  if (sa.dimension == 1 && sb.dimension == 1) {
    v.status = VerdictStatus::CertifiedIndistinguishable;
  } else {
    v.status = VerdictStatus::InconclusiveNontrivialExists;
    v.witness = nontrivial_witness(sa.dimension >= 2 ? sa : sb);
  }
  return v;
}

namespace {

bool proportional_to_identity(const GaussianMatrix& h) {
  const GaussianRational& d0 = h.at(0, 0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (i == j ? h.at(i, j) != d0 : !h.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

// max_i sum_j (|Re K_ij| + |Im K_ij|): a rational upper bound on the
// spectral radius (Gershgorin discs with the 1-norm modulus bound).
Rational gershgorin_bound(const GaussianMatrix& k) {
  Rational best(0);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Rational rowsum(0);
    for (std::size_t j = 0; j < k.cols(); ++j) {
      rowsum += rational_abs(k.at(i, j).re) + rational_abs(k.at(i, j).im);
    }
    if (rowsum > best) best = rowsum;
  }
  return best;
}

}  // namespace

LocalMeasurement nontrivial_witness(const SolutionSpace& space) {
  if (space.dimension < 2) {
    throw TrivialSpace("solution space has dimension " +
                       std::to_string(space.dimension) +
                       "; only trivial measurements preserve orthogonality");
  }
  const GaussianMatrix* k = nullptr;
  for (const auto& h : space.basis) {
    if (!proportional_to_identity(h)) {
      k = &h;
      break;
    }
  }
  if (k == nullptr) {
    throw TrivialSpace("basis spans only multiples of the identity");
  }

  const Rational bound = gershgorin_bound(*k);
  const Rational eps = Rational(1) / (2 * bound);
  const GaussianMatrix id = GaussianMatrix::identity(space.party_dim);
  const Rational half(1, 2);
  LocalMeasurement w;
  w.party = space.party;
  w.epsilon = eps;
  w.direction = *k;
  w.elements.push_back(half * (id + eps * *k));
  w.elements.push_back(half * (id - eps * *k));
  return w;
}

}  // namespace loccw
