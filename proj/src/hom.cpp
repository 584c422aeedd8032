#include "gradfrob/hom.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradfrob/linalg.hpp"

namespace gradfrob {

namespace {

void require_compatible(const GradedModule& m, const GradedModule& n) {
  if (m.side() != n.side()) throw ModuleMismatch("modules live on different sides");
  if (!(m.algebra() == n.algebra())) throw ModuleMismatch("modules over different algebras");
}

struct Presentation {
  std::vector<Vector> generators;
  std::vector<GroupElement> generator_degrees;
  std::vector<Vector> relations;  // length s * d, index t * d + i
  Matrix preimages;               // (s * d) x m, column j maps onto x_j
};

// Homogeneous generators: random elements of each component first, basis
// vectors when a random element happens to be redundant. The seed is fixed so
// that results never depend on the caller's random state.
Presentation present(const GradedModule& m) {
  const Field& field = m.algebra().field();
  const std::size_t d = m.algebra().dim();
  Presentation p;
  Span sub(field, m.dim());
  Rng local(0x9e3779b97f4a7c15ULL);

  auto add = [&](Vector v, GroupElement g) {
    for (std::size_t i = 0; i < d; ++i) sub.add(m.action(i) * v);
    p.generators.push_back(std::move(v));
    p.generator_degrees.push_back(g);
  };

  for (GroupElement g = 0; g < m.algebra().group().order(); ++g) {
    const auto idx = m.component(g);
    for (;;) {
      auto missing = std::find_if(idx.begin(), idx.end(), [&](std::size_t j) {
        return !sub.contains(unit_vector(field, m.dim(), j));
      });
      if (missing == idx.end()) break;
      Vector v = zero_vector(field, m.dim());
      for (auto j : idx) v[j] = sample_scalar(field, local, 3);
      if (!sub.contains(v)) {
        add(std::move(v), g);
      } else {
        add(unit_vector(field, m.dim(), *missing), g);
      }
    }
  }

  const std::size_t s = p.generators.size();
  std::vector<Vector> cols;
  cols.reserve(s * d);
  for (std::size_t t = 0; t < s; ++t)
    for (std::size_t i = 0; i < d; ++i) cols.push_back(m.action(i) * p.generators[t]);
  const Matrix pm = Matrix::from_columns(field, cols, m.dim());
  p.relations = kernel_basis(pm);
  auto pre = solve_columns(pm, Matrix::identity(field, m.dim()));
  if (!pre) throw std::logic_error("module generators do not span the module");
  p.preimages = std::move(*pre);
  return p;
}

}  // namespace

std::vector<GradedLinearMap> graded_hom_basis(const GradedModule& m, const GradedModule& n) {
  require_compatible(m, n);
  const Field& field = m.algebra().field();
  const std::size_t d = m.algebra().dim();
  const Presentation p = present(m);
  const std::size_t s = p.generators.size();

  // Unknown y_t: coordinates of n_t on the basis of N_{deg g_t}.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t t = 0; t < s; ++t) {
    blocks.push_back(n.component(p.generator_degrees[t]));
    offset.push_back(unknowns);
    unknowns += blocks.back().size();
  }
  if (unknowns == 0) return {};

  // Relation r imposes sum_t (sum_i r_{t,i} N_i) n_t = 0.
  Matrix eq(field, p.relations.size() * n.dim(), unknowns);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const Vector& rel = p.relations[r];
    for (std::size_t t = 0; t < s; ++t) {
      for (std::size_t i = 0; i < d; ++i) {
        const Scalar& c = rel[t * d + i];
        if (c.is_zero()) continue;
        const Matrix& act = n.action(i);
        for (std::size_t q = 0; q < blocks[t].size(); ++q)
          for (std::size_t row = 0; row < n.dim(); ++row) {
            const Scalar& x = act(row, blocks[t][q]);
            if (!x.is_zero()) eq(r * n.dim() + row, offset[t] + q) += c * x;
          }
      }
    }
  }

  std::vector<GradedLinearMap> out;
  for (const Vector& y : kernel_basis(eq)) {
    // images[t * d + i] = N_i n_t
    std::vector<Vector> images;
    images.reserve(s * d);
    for (std::size_t t = 0; t < s; ++t) {
      Vector nt = zero_vector(field, n.dim());
      for (std::size_t q = 0; q < blocks[t].size(); ++q) nt[blocks[t][q]] = y[offset[t] + q];
      for (std::size_t i = 0; i < d; ++i) images.push_back(n.action(i) * nt);
    }
    Matrix f(field, n.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Vector col = zero_vector(field, n.dim());
      for (std::size_t k = 0; k < s * d; ++k) add_scaled(col, p.preimages(k, j), images[k]);
      for (std::size_t row = 0; row < n.dim(); ++row) f(row, j) = col[row];
    }
    out.push_back(GradedLinearMap{m, n, std::move(f)});
  }
  return out;
}

std::size_t graded_hom_dim(const GradedModule& m, const GradedModule& n) {
  return graded_hom_basis(m, n).size();
}

IsoVerdict graded_iso(const GradedModule& m, const GradedModule& n, const SearchBudget& budget,
                      Rng& rng) {
  require_compatible(m, n);
  IsoVerdict v;
  const auto dm = m.component_dims();
  const auto dn = n.component_dims();
  for (std::size_t g = 0; g < dm.size(); ++g) {
    if (dm[g] != dn[g]) {
      v.reason = "component dimension mismatch at degree " + std::to_string(g) + " (" +
                 std::to_string(dm[g]) + " vs " + std::to_string(dn[g]) + ")";
      v.obstruction = IsoVerdict::Obstruction::component_dims;
      return v;
    }
  }
  const Field& field = m.algebra().field();
  if (m.dim() == 0) {
    v.outcome = IsoVerdict::Outcome::isomorphic;
    v.witness = GradedLinearMap{m, n, Matrix(field, 0, 0)};
    return v;
  }

  const auto homs = graded_hom_basis(m, n);
  if (homs.empty()) {
    v.reason = "no nonzero graded homomorphism";
    v.obstruction = IsoVerdict::Obstruction::no_homomorphism;
    return v;
  }
  const std::size_t self = graded_hom_dim(m, m);
  if (self != homs.size()) {
    v.reason = "hom dimension mismatch (dim Hom(M,N) = " + std::to_string(homs.size()) +
               ", dim Hom(M,M) = " + std::to_string(self) + ")";
    v.obstruction = IsoVerdict::Obstruction::hom_dimension;
    return v;
  }

  std::vector<Matrix> mats;
  for (const auto& h : homs) mats.push_back(h.matrix);
  auto gi = generic_invertible(mats, budget, rng);
  switch (gi.outcome) {
    case GenericInvertibilityVerdict::Outcome::witness_found: {
      GradedLinearMap w{m, n, std::move(*gi.witness)};
      if (!is_module_morphism(w) || !is_degree_preserving(w) || !is_invertible(w.matrix))
        throw std::logic_error("graded_iso produced an invalid witness");
      v.outcome = IsoVerdict::Outcome::isomorphic;
      v.witness = std::move(w);
      return v;
    }
    case GenericInvertibilityVerdict::Outcome::certified_absent:
      v.reason = "determinant vanishes identically on the hom space";
      v.obstruction = IsoVerdict::Obstruction::determinant_zero;
      return v;
    case GenericInvertibilityVerdict::Outcome::probabilistic_absent: {
      // N = M would also force dim Hom(N,M) = dim Hom(N,N); checking that
      // can still turn a randomized miss into a proof.
      const std::size_t back = graded_hom_dim(n, m), nn = graded_hom_dim(n, n);
      if (back != nn) {
        v.reason = "hom dimension mismatch (dim Hom(N,M) = " + std::to_string(back) +
                   ", dim Hom(N,N) = " + std::to_string(nn) + ")";
        v.obstruction = IsoVerdict::Obstruction::hom_dimension;
        return v;
      }
      v.outcome = IsoVerdict::Outcome::probabilistic_absent;
      v.error_bound = gi.error_bound;
      v.reason = "no invertible element found in " + std::to_string(gi.trials_used) + " random trials";
      return v;
    }
  }
  return v;
}

}  // namespace gradfrob
