#include "gradfrob/coinduction.hpp"

#include <map>
#include <stdexcept>

#include "gradfrob/hom.hpp"
#include "gradfrob/linalg.hpp"

namespace gradfrob {

IdentityComponent identity_component(const GradedAlgebra& a) {
  IdentityComponent out;
  out.embedding = a.component(a.group().neutral());
  const std::size_t n = out.embedding.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < n; ++k) local[out.embedding[k]] = k;

  GradedAlgebra::Builder b(a.field(), FiniteGroup(), n);
  Vector unit = zero_vector(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = a.unit()[out.embedding[k]];
  b.unit(std::move(unit));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(out.embedding[i], out.embedding[j]))
        b.product(i, j, local.at(t.index), t.coeff);
  out.algebra = b.build_unchecked();
  return out;
}

GradedModule component_module(const GradedAlgebra& a, const IdentityComponent& ae, GroupElement g,
                              Side side) {
  const auto idx = a.component(g);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
  std::vector<Matrix> action;
  for (auto e : ae.embedding) {
    Matrix m(a.field(), idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto terms = side == Side::left ? a.product(e, idx[c]) : a.product(idx[c], e);
      for (const auto& t : terms) m(local.at(t.index), c) = t.coeff;
    }
    action.push_back(std::move(m));
  }
  return GradedModule(side, ae.algebra, std::vector<GroupElement>(idx.size(), 0), std::move(action));
}

GradedModule module_component(const GradedModule& m, const IdentityComponent& ae, GroupElement g) {
  if (m.side() != Side::left) throw SideMismatch("module_component needs a left module");
  const auto idx = m.component(g);
  std::vector<Matrix> action;
  for (auto e : ae.embedding) {
    Matrix x(m.algebra().field(), idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) x(r, c) = m.action(e)(idx[r], idx[c]);
    action.push_back(std::move(x));
  }
  return GradedModule(Side::left, ae.algebra, std::vector<GroupElement>(idx.size(), 0), std::move(action));
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) v.push_back(x);
  return v;
}

}  // namespace

CoinducedModule coinduce(const GradedAlgebra& a, const GradedModule& n) {
  const IdentityComponent ae = identity_component(a);
  if (n.side() != Side::left || !(n.algebra() == ae.algebra))
    throw std::invalid_argument("coinduce: N must be a left module over the degree-e subalgebra");
  const Field& field = a.field();
  const auto& g = a.group();
  const std::size_t d = a.dim();

  std::vector<Matrix> maps;
  std::vector<GroupElement> deg;
  for (GroupElement x = 0; x < g.order(); ++x) {
    const GroupElement h = g.inv(x);
    const auto idx = a.component(h);
    if (idx.empty()) continue;
    const GradedModule ah = component_module(a, ae, h, Side::left);
    for (const auto& f : graded_hom_basis(ah, n)) {
      Matrix full(field, n.dim(), d);
      for (std::size_t r = 0; r < n.dim(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) full(r, idx[c]) = f.matrix(r, c);
      maps.push_back(std::move(full));
      deg.push_back(x);
    }
  }

  const std::size_t dim = maps.size();
  std::vector<Vector> cols;
  for (const auto& f : maps) cols.push_back(flatten(f));
  const Matrix basis = Matrix::from_columns(field, cols, n.dim() * d);

  // (b_i . f) = f o (right multiplication by b_i), expressed in the basis.
  std::vector<Vector> rhs;
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& f : maps) rhs.push_back(flatten(f * a.right_action(i)));
  std::vector<Matrix> action(d, Matrix(field, dim, dim));
  if (dim > 0) {
    auto coords = solve_columns(basis, Matrix::from_columns(field, rhs, n.dim() * d));
    if (!coords) throw std::logic_error("coinduced module is not closed under the action");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t r = 0; r < dim; ++r) action[i](r, k) = (*coords)(r, i * dim + k);
  }
  return CoinducedModule{GradedModule(Side::left, a, std::move(deg), std::move(action)), std::move(maps)};
}

GradedLinearMap nu_map(const GradedModule& m, GroupElement sigma) {
  if (m.side() != Side::left) throw SideMismatch("nu_map needs a left module");
  const GradedAlgebra& a = m.algebra();
  const auto& g = a.group();
  const Field& field = a.field();
  const std::size_t d = a.dim();
  const IdentityComponent ae = identity_component(a);
  const auto sidx = m.component(sigma);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < sidx.size(); ++k) local[sidx[k]] = k;

  const CoinducedModule coind = coinduce(a, module_component(m, ae, sigma));
  GradedModule target = suspend_left(coind.module, g.inv(sigma));

  Matrix nu(field, target.dim(), m.dim());
  if (target.dim() > 0 && m.dim() > 0) {
    std::vector<Vector> cols;
    for (const auto& f : coind.maps) cols.push_back(flatten(f));
    const Matrix basis = Matrix::from_columns(field, cols, sidx.size() * d);
    std::vector<Vector> rhs;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const GroupElement want = g.mul(sigma, g.inv(m.degree(j)));
      Matrix f(field, sidx.size(), d);
      for (auto i : a.component(want)) {
        for (std::size_t r = 0; r < m.dim(); ++r) {
          const Scalar& x = m.action(i)(r, j);
          if (!x.is_zero()) f(local.at(r), i) = x;
        }
      }
      rhs.push_back(flatten(f));
    }
    auto coords = solve_columns(basis, Matrix::from_columns(field, rhs, sidx.size() * d));
    if (!coords) throw std::logic_error("nu_M lands outside the coinduced module");
    nu = std::move(*coords);
  }
  return GradedLinearMap{m, std::move(target), std::move(nu)};
}

TorsionRadical torsion_radical(const GradedModule& m, GroupElement sigma) {
  const GradedLinearMap nu = nu_map(m, sigma);
  const Field& field = m.algebra().field();
  TorsionRadical out;
  for (GroupElement lambda = 0; lambda < m.algebra().group().order(); ++lambda) {
    const auto idx = m.component(lambda);
    if (idx.empty()) continue;
    Matrix block(field, nu.matrix.rows(), idx.size());
    for (std::size_t r = 0; r < nu.matrix.rows(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = nu.matrix(r, idx[c]);
    for (const auto& k : kernel_basis(block)) {
      Vector v = zero_vector(field, m.dim());
      for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = k[c];
      out.basis.push_back(std::move(v));
      out.degrees.push_back(lambda);
    }
  }
  return out;
}

}  // namespace gradfrob
