#include "gradfrob/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "gradfrob/algebra_ops.hpp"
#include "gradfrob/linalg.hpp"
#include "gradfrob/text_format.hpp"

namespace gradfrob {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) v.push_back(x);
  return v;
}

Scalar minus_one(const Field& f) { return Scalar::from_int(f, -1); }

// R + R^* where the dual of basis vector i sits in degree dual_deg[i].
GradedAlgebra trivial_extension_graded(const GradedAlgebra& r, const FiniteGroup& group,
                                       const std::vector<GroupElement>& dual_deg) {
  if (r.group().order() != 1) throw std::invalid_argument("trivial_extension: R must be trivially graded");
  const std::size_t n = r.dim();
  GradedAlgebra::Builder b(r.field(), group, 2 * n);
  Vector unit = zero_vector(r.field(), 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = r.unit()[i];
    b.degree(n + i, dual_deg[i]);
  }
  b.unit(std::move(unit));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (const auto& t : r.product(i, s)) {
        // r_i r_s
        b.product(i, s, t.index, t.coeff);
        // r_s . delta_j = sum_i c_is^j delta_i  and  delta_j . r_i = sum_s c_is^j delta_s
        b.product(s, n + t.index, n + i, t.coeff);
        b.product(n + t.index, i, n + s, t.coeff);
      }
  return b.build();
}

}  // namespace

GradedAlgebra algebra_from_matrices(const Field& field, const FiniteGroup& group,
                                    const std::vector<Matrix>& mats,
                                    const std::vector<GroupElement>& degrees) {
  const std::size_t d = mats.size();
  if (degrees.size() != d) throw std::invalid_argument("algebra_from_matrices: one degree per matrix");
  if (d == 0) throw std::invalid_argument("algebra_from_matrices: empty basis");
  const std::size_t n = mats[0].rows();
  std::vector<Vector> cols;
  for (const auto& m : mats) cols.push_back(flatten(m));
  const Matrix basis = Matrix::from_columns(field, cols, n * n);
  if (rank(basis) != d) throw std::invalid_argument("algebra_from_matrices: matrices are dependent");

  GradedAlgebra::Builder b(field, group, d);
  for (std::size_t i = 0; i < d; ++i) b.degree(i, degrees[i]);
  auto unit = solve(basis, flatten(Matrix::identity(field, n)));
  if (!unit) throw std::invalid_argument("algebra_from_matrices: identity not in the span");
  b.unit(*unit);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = solve(basis, flatten(mats[i] * mats[j]));
      if (!c) throw std::invalid_argument("algebra_from_matrices: span not closed under products");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) b.product(i, j, k, (*c)[k]);
    }
  return b.build();
}

GradedAlgebra polynomial_quotient(const Field& field, const std::vector<Scalar>& coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw std::invalid_argument("polynomial_quotient: degree must be at least 1");
  // powers[m] = x^m reduced, for m < 2n - 1
  std::vector<Vector> powers;
  powers.push_back(unit_vector(field, n, 0));
  for (std::size_t m = 1; m + 1 < 2 * n; ++m) {
    const Vector& prev = powers.back();
    Vector next = zero_vector(field, n);
    for (std::size_t k = 0; k + 1 < n; ++k) next[k + 1] = prev[k];
    const Scalar top = prev[n - 1];
    if (!top.is_zero())
      for (std::size_t k = 0; k < n; ++k) next[k] -= top * coeffs[k];
    powers.push_back(std::move(next));
  }
  GradedAlgebra::Builder b(field, FiniteGroup(), n);
  b.unit(unit_vector(field, n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!powers[i + j][k].is_zero()) b.product(i, j, k, powers[i + j][k]);
  return b.build();
}

GradedAlgebra truncated_polynomial(const Field& field, std::size_t n, const FiniteGroup& group,
                                   GroupElement g) {
  if (n == 0) throw std::invalid_argument("truncated_polynomial: n must be at least 1");
  GradedAlgebra::Builder b(field, group, n);
  GroupElement deg = group.neutral();
  for (std::size_t i = 0; i < n; ++i) {
    b.degree(i, deg);
    deg = group.mul(deg, g);
  }
  b.unit(unit_vector(field, n, 0));
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) b.product(i, j, i + j, one);
  return b.build();
}

GradedAlgebra group_algebra(const Field& field, const FiniteGroup& group) {
  const std::size_t n = group.order();
  GradedAlgebra::Builder b(field, group, n);
  const Scalar one = Scalar::one(field);
  for (GroupElement g = 0; g < n; ++g) {
    b.degree(g, g);
    for (GroupElement h = 0; h < n; ++h) b.product(g, h, group.mul(g, h), one);
  }
  b.unit(unit_vector(field, n, group.neutral()));
  return b.build();
}

GradedAlgebra trivial_extension(const GradedAlgebra& r) {
  return trivial_extension(r, FiniteGroup::cyclic(2), 1);
}

GradedAlgebra trivial_extension(const GradedAlgebra& r, const FiniteGroup& group, GroupElement element) {
  if (element >= group.order()) throw std::invalid_argument("trivial_extension: element out of range");
  return trivial_extension_graded(r, group, std::vector<GroupElement>(r.dim(), element));
}

GradedAlgebra trivial_extension_split(const GradedAlgebra& r1, const GradedAlgebra& r2) {
  return trivial_extension_split(r1, r2, FiniteGroup::cyclic(3), 1, 2);
}

GradedAlgebra trivial_extension_split(const GradedAlgebra& r1, const GradedAlgebra& r2,
                                      const FiniteGroup& group, GroupElement u, GroupElement v) {
  if (u >= group.order() || v >= group.order())
    throw std::invalid_argument("trivial_extension_split: element out of range");
  std::vector<GroupElement> deg(r1.dim(), u);
  deg.insert(deg.end(), r2.dim(), v);
  return trivial_extension_graded(direct_product(r1, r2), group, deg);
}

GradedAlgebra nakayama_nesbitt(const Scalar& u, const Scalar& v) {
  return nakayama_nesbitt(u, v, FiniteGroup::cyclic(4), 1, 2);
}

GradedAlgebra nakayama_nesbitt(const Scalar& u, const Scalar& v, const FiniteGroup& group,
                               GroupElement x, GroupElement y) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("nakayama_nesbitt: u and v must be nonzero");
  if (!(u.field() == v.field())) throw FieldMismatch("nakayama_nesbitt: u and v in different fields");
  if (!group.commute(x, y)) throw std::invalid_argument("nakayama_nesbitt: degrees of X and Y must commute");
  const Field f = u.field();
  Matrix mx(f, 4, 4), my(f, 4, 4), mz(f, 4, 4);
  mx(0, 1) = Scalar::one(f);
  mx(2, 3) = v;
  my(0, 2) = Scalar::one(f);
  my(1, 3) = u;
  mz(0, 3) = Scalar::one(f);
  return algebra_from_matrices(f, group, {Matrix::identity(f, 4), mx, my, mz},
                               {group.neutral(), x, y, group.mul(x, y)});
}

GradedAlgebra matrix_good_grading(const Field& field, const FiniteGroup& group,
                                  const std::vector<GroupElement>& degrees) {
  const std::size_t n = degrees.size();
  if (n == 0) throw std::invalid_argument("matrix_good_grading: n must be at least 1");
  GradedAlgebra::Builder b(field, group, n * n);
  const Scalar one = Scalar::one(field);
  Vector unit = zero_vector(field, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = one;
    for (std::size_t j = 0; j < n; ++j) {
      b.degree(i * n + j, group.mul(group.inv(degrees.at(i)), degrees.at(j)));
      for (std::size_t l = 0; l < n; ++l) b.product(i * n + j, j * n + l, i * n + l, one);
    }
  }
  b.unit(std::move(unit));
  return b.build();
}

std::optional<Scalar> primitive_root_of_unity(const Field& field, std::size_t n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return Scalar::one(field);
  const std::uint64_t p = field.characteristic();
  if (p == 0) {
    if (n == 2) return minus_one(field);
    return std::nullopt;
  }
  if ((p - 1) % n != 0) return std::nullopt;
  std::vector<std::size_t> primes;
  for (std::size_t m = n, q = 2; m > 1; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  auto power = [&](Scalar x, std::size_t e) {
    Scalar r = Scalar::one(field);
    for (; e; e >>= 1, x *= x)
      if (e & 1) r *= x;
    return r;
  };
  for (std::uint64_t c = 2; c < p; ++c) {
    const Scalar w = power(Scalar::from_int(field, static_cast<long long>(c)), (p - 1) / n);
    if (std::all_of(primes.begin(), primes.end(), [&](std::size_t q) { return !power(w, n / q).is_one(); }))
      return w;
  }
  return std::nullopt;
}

GradedAlgebra matrix_fine_grading(const Field& field, std::size_t n) {
  const auto w = primitive_root_of_unity(field, n);
  if (!w) throw std::invalid_argument("matrix_fine_grading: no primitive " + std::to_string(n) +
                                      "-th root of unity in " + field.to_string());
  Matrix x(field, n, n), y(field, n, n);
  Scalar wi = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, i) = wi;
    wi *= *w;
    y((i + 1) % n, i) = Scalar::one(field);
  }
  std::vector<Matrix> xp{Matrix::identity(field, n)}, yp{Matrix::identity(field, n)};
  for (std::size_t k = 1; k < n; ++k) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  const FiniteGroup zn = FiniteGroup::cyclic(n);
  const FiniteGroup g = FiniteGroup::product(zn, zn);
  std::vector<Matrix> mats;
  std::vector<GroupElement> deg;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      mats.push_back(xp[a] * yp[b]);
      deg.push_back(a * n + b);
    }
  return algebra_from_matrices(field, g, mats, deg);
}

GradedAlgebra skew_group_algebra(const GradedAlgebra& r, const FiniteGroup& group,
                                 const std::vector<Matrix>& action) {
  if (r.group().order() != 1) throw std::invalid_argument("skew_group_algebra: R must be trivially graded");
  const std::size_t n = r.dim();
  const Field& f = r.field();
  if (action.size() != group.order()) throw std::invalid_argument("skew_group_algebra: one matrix per element");
  for (const auto& m : action)
    if (m.rows() != n || m.cols() != n || !(m.field() == f))
      throw std::invalid_argument("skew_group_algebra: action matrices must be dim R x dim R");
  if (!(action[group.neutral()] == Matrix::identity(f, n)))
    throw std::invalid_argument("skew_group_algebra: e must act trivially");
  for (GroupElement g = 0; g < group.order(); ++g) {
    const Matrix& a = action[g];
    if (!(a * r.unit() == r.unit())) throw std::invalid_argument("skew_group_algebra: action is not unital");
    for (GroupElement h = 0; h < group.order(); ++h)
      if (!(a * action[h] == action[group.mul(g, h)]))
        throw std::invalid_argument("skew_group_algebra: action is not a homomorphism");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector lhs = a * r.multiply(basis_vector(r, i), basis_vector(r, j));
        const Vector rhs = r.multiply(a.column(i), a.column(j));
        if (!(lhs == rhs)) throw std::invalid_argument("skew_group_algebra: action is not multiplicative");
      }
  }
  GradedAlgebra::Builder b(f, group, n * group.order());
  Vector unit = zero_vector(f, n * group.order());
  for (std::size_t i = 0; i < n; ++i) unit[group.neutral() * n + i] = r.unit()[i];
  b.unit(std::move(unit));
  for (GroupElement g = 0; g < group.order(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      b.degree(g * n + i, g);
      for (GroupElement h = 0; h < group.order(); ++h)
        for (std::size_t j = 0; j < n; ++j) {
          // r_i g(r_j)
          const Vector prod = r.multiply(basis_vector(r, i), action[g].column(j));
          const GroupElement gh = group.mul(g, h);
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) b.product(g * n + i, h * n + j, gh * n + k, prod[k]);
        }
    }
  return b.build();
}

GradedAlgebra matrix_over(const GradedAlgebra& a, std::size_t n) {
  const std::vector<GroupElement> deg(n, a.group().neutral());
  return tensor_product(a, matrix_good_grading(a.field(), a.group(), deg));
}

GradedAlgebra upper_triangular(const Field& field) {
  Matrix e11(field, 2, 2), e12(field, 2, 2), e22(field, 2, 2);
  e11(0, 0) = e12(0, 1) = e22(1, 1) = Scalar::one(field);
  return algebra_from_matrices(field, FiniteGroup(), {e11, e12, e22}, {0, 0, 0});
}

GradedAlgebra square_zero_plane(const Field& field) {
  GradedAlgebra::Builder b(field, FiniteGroup(), 3);
  const Scalar one = Scalar::one(field);
  b.unit(unit_vector(field, 3, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    b.product(0, i, i, one);
    if (i) b.product(i, 0, i, one);
  }
  return b.build();
}

GradedAlgebra swap_skew_algebra(const Field& field) {
  GradedAlgebra::Builder r(field, FiniteGroup(), 2);
  r.unit(Vector{Scalar::one(field), Scalar::one(field)});
  r.product(0, 0, 0, Scalar::one(field)).product(1, 1, 1, Scalar::one(field));
  Matrix swap(field, 2, 2);
  swap(0, 1) = swap(1, 0) = Scalar::one(field);
  return skew_group_algebra(r.build(), FiniteGroup::cyclic(2), {Matrix::identity(field, 2), swap});
}

GradedAlgebra sign_skew_algebra(const Field& field) {
  Matrix sign = Matrix::identity(field, 2);
  sign(1, 1) = minus_one(field);
  return skew_group_algebra(truncated_polynomial(field, 2), FiniteGroup::cyclic(2),
                            {Matrix::identity(field, 2), sign});
}

GradedAlgebra quaternion_dual_numbers(const Field& field) {
  // 1, i, j, k with i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik
  GradedAlgebra::Builder h(field, FiniteGroup(), 4);
  const Scalar one = Scalar::one(field), neg = minus_one(field);
  h.unit(unit_vector(field, 4, 0));
  for (std::size_t i = 0; i < 4; ++i) {
    h.product(0, i, i, one);
    if (i) h.product(i, 0, i, one).product(i, i, 0, neg);
  }
  const std::size_t cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cyc) {
    h.product(c[0], c[1], c[2], one);
    h.product(c[1], c[0], c[2], neg);
  }
  return tensor_product(h.build(), truncated_polynomial(field, 2));
}

// ---------------------------------------------------------------------------
// Random generation

namespace {


struct Generator {
  Field field;
  RandomLimits limits;
  Rng rng;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  Scalar small_scalar(bool nonzero) {
    for (;;) {
      Scalar s = Scalar::from_int(field, static_cast<long long>(pick(5)) - 2);
      if (!nonzero || !s.is_zero()) return s;
    }
  }

  FiniteGroup group() {
    std::vector<FiniteGroup> pool;
    for (std::size_t n = 1; n <= limits.max_group_order; ++n) pool.push_back(FiniteGroup::cyclic(n));
    if (limits.max_group_order >= 4)
      pool.push_back(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    if (limits.max_group_order >= 6) pool.push_back(symmetric_group_3());
    return pool[pick(pool.size())];
  }

  GroupElement element(const FiniteGroup& g) { return pick(g.order()); }

  // Random trivially graded k[x]/(f) with 1 <= deg f <= max_degree.
  GradedAlgebra small_ring(std::size_t max_degree) {
    const std::size_t n = 1 + pick(std::max<std::size_t>(max_degree, 1));
    if (coin(0.4)) return truncated_polynomial(field, n);
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(small_scalar(false));
    return polynomial_quotient(field, c);
  }

  std::optional<GradedAlgebra> base(const FiniteGroup& g) {
    const std::size_t max = limits.max_dim;
    switch (pick(11)) {
      case 0:
        if (g.order() > max) return std::nullopt;
        return group_algebra(field, g);
      case 1:
        return trivial_extension(small_ring(max / 2), g, element(g));
      case 2:
        return truncated_polynomial(field, 1 + pick(max), g, element(g));
      case 3: {
        const GroupElement x = element(g), y = element(g);
        if (!g.commute(x, y)) return std::nullopt;
        return nakayama_nesbitt(small_scalar(true), small_scalar(true), g, x, y);
      }
      case 4: {
        const std::size_t n = max >= 4 ? 1 + pick(2) : 1;
        std::vector<GroupElement> deg;
        for (std::size_t i = 0; i < n; ++i) deg.push_back(element(g));
        return matrix_good_grading(field, g, deg);
      }
      case 5: {
        // k x k with an index-2 subgroup acting trivially and its complement swapping.
        if (2 * g.order() > max) return std::nullopt;
        std::vector<std::vector<GroupElement>> halves;
        for (auto& h : g.subgroups())
          if (2 * h.size() == g.order()) halves.push_back(h);
        GradedAlgebra::Builder r(field, FiniteGroup(), 2);
        r.unit(Vector{Scalar::one(field), Scalar::one(field)});
        r.product(0, 0, 0, Scalar::one(field)).product(1, 1, 1, Scalar::one(field));
        Matrix swap(field, 2, 2);
        swap(0, 1) = swap(1, 0) = Scalar::one(field);
        std::vector<Matrix> action(g.order(), Matrix::identity(field, 2));
        if (!halves.empty()) {
          const auto& h = halves[pick(halves.size())];
          for (GroupElement x = 0; x < g.order(); ++x)
            if (!std::binary_search(h.begin(), h.end(), x)) action[x] = swap;
        }
        return skew_group_algebra(r.build(), g, action);
      }
      case 6: {
        if (g.order() < 3 || max < 4) return std::nullopt;
        GroupElement u = element(g), v = element(g);
        if (u == g.neutral() || v == g.neutral() || u == v) return std::nullopt;
        const GradedAlgebra r1 = small_ring(std::max<std::size_t>(1, max / 4));
        const GradedAlgebra r2 = small_ring(std::max<std::size_t>(1, max / 4));
        return trivial_extension_split(r1, r2, g, u, v);
      }
      case 7:
        if (field.characteristic() == 2 || max < 4) return std::nullopt;
        return matrix_fine_grading(field, 2);
      case 8: {
        const std::size_t n = 1 + pick(std::max<std::size_t>(1, max / 2));
        const auto a = truncated_polynomial(field, n, g, element(g));
        const auto b = truncated_polynomial(field, 1 + pick(std::max<std::size_t>(1, max - n)), g, element(g));
        if (a.dim() + b.dim() > max) return std::nullopt;
        return direct_product(a, b);
      }
      case 9: {
        // Upper triangular 2x2 with e12 in a chosen degree; not Frobenius.
        if (max < 3) return std::nullopt;
        const Scalar one = Scalar::one(field);
        GradedAlgebra::Builder b(field, g, 3);
        b.degree(1, element(g));
        b.unit(Vector{one, Scalar::zero(field), one});
        b.product(0, 0, 0, one).product(0, 1, 1, one).product(1, 2, 1, one).product(2, 2, 2, one);
        return b.build();
      }
      case 10: {
        // k + kx + ky with every product of x, y zero; not Frobenius.
        if (max < 3) return std::nullopt;
        const Scalar one = Scalar::one(field);
        GradedAlgebra::Builder b(field, g, 3);
        b.degree(1, element(g)).degree(2, element(g));
        b.unit(unit_vector(field, 3, 0));
        for (std::size_t i = 0; i < 3; ++i) {
          b.product(0, i, i, one);
          if (i) b.product(i, 0, i, one);
        }
        return b.build();
      }
    }
    return std::nullopt;
  }

  GradedAlgebra modify(GradedAlgebra a) {
    if (coin(0.3)) {
      const auto& g = a.group();
      const std::size_t room = limits.max_dim / std::max<std::size_t>(a.dim(), 1);
      if (room >= 2) {
        const GradedAlgebra b = truncated_polynomial(field, 2 + pick(room - 1), g, element(g));
        try {
          a = tensor_product(a, b);
        } catch (const std::invalid_argument&) {
          // supports do not commute; keep A
        }
      }
    }
    if (coin(0.25)) {
      const auto subs = a.group().subgroups();
      a = restrict_to_subgroup(a, subs[pick(subs.size())]);
    }
    if (coin(0.25)) {
      std::vector<std::vector<GroupElement>> normal;
      for (auto& h : a.group().subgroups())
        if (a.group().is_normal(h)) normal.push_back(h);
      a = coarsen_grading(a, normal[pick(normal.size())]);
    }
    return a;
  }
};

}  // namespace

GradedAlgebra random_graded_algebra(std::uint64_t seed, const Field& field, RandomLimits limits) {
  if (limits.max_dim == 0 || limits.max_group_order == 0)
    throw std::invalid_argument("random_graded_algebra: limits must be positive");
  Generator gen{field, limits, Rng(seed)};
  for (;;) {
    const FiniteGroup g = gen.group();
    auto a = gen.base(g);
    if (!a || a->dim() > limits.max_dim) continue;
    GradedAlgebra out = gen.modify(std::move(*a));
    if (out.dim() == 0 || out.dim() > limits.max_dim) continue;
    auto violations = validate_algebra(out);
    if (!violations.empty()) throw std::logic_error("random_graded_algebra built an invalid algebra: " + violations[0]);
    return out;
  }
}

// ---------------------------------------------------------------------------
// Named construction

namespace {

class Params {
 public:
  explicit Params(const ConstructionSpec& spec) : name_(spec.name), p_(spec.params) {}

  std::string str(const std::string& key, const std::string& fallback) {
    used_.push_back(key);
    auto it = p_.find(key);
    return it == p_.end() ? fallback : it->second;
  }

  std::uint64_t uint(const std::string& key, std::uint64_t fallback) {
    const std::string s = str(key, std::to_string(fallback));
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      bad(key, "expected a nonnegative integer");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      bad(key, "integer out of range");
    }
  }

  Field field() {
    try {
      return Field::parse(str("field", "Q"));
    } catch (const std::exception& e) {
      bad("field", e.what());
    }
  }

  FiniteGroup group(const std::string& fallback) {
    try {
      return parse_group_shorthand(str("group", fallback));
    } catch (const std::exception& e) {
      bad("group", e.what());
    }
  }

  Scalar scalar(const std::string& key, const std::string& fallback, const Field& f) {
    try {
      return parse_scalar(str(key, fallback), f);
    } catch (const std::exception& e) {
      bad(key, e.what());
    }
  }

  std::vector<std::string> list(const std::string& key, const std::string& fallback) {
    std::vector<std::string> out;
    std::string s = str(key, fallback);
    for (std::size_t pos = 0; pos <= s.size();) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(s.substr(pos, next - pos));
      pos = next + 1;
    }
    return out;
  }

  // "k", "trunc:n" or "poly:c0,c1,..".
  GradedAlgebra ring(const std::string& key, const std::string& fallback, const Field& f) {
    const std::string s = str(key, fallback);
    try {
      if (s == "k") return truncated_polynomial(f, 1);
      if (s.rfind("trunc:", 0) == 0) return truncated_polynomial(f, std::stoull(s.substr(6)));
      if (s.rfind("poly:", 0) == 0) {
        std::vector<Scalar> c;
        std::string rest = s.substr(5);
        for (std::size_t pos = 0; pos <= rest.size();) {
          auto next = rest.find(',', pos);
          if (next == std::string::npos) next = rest.size();
          c.push_back(parse_scalar(rest.substr(pos, next - pos), f));
          pos = next + 1;
        }
        return polynomial_quotient(f, c);
      }
    } catch (const std::exception& e) {
      bad(key, e.what());
    }
    bad(key, "expected k, trunc:<n> or poly:<c0>,<c1>,..");
  }

  void finish() const {
    for (const auto& [k, v] : p_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw std::invalid_argument(name_ + ": unknown parameter '" + k + "'");
  }

  [[noreturn]] void bad(const std::string& key, const std::string& why) const {
    throw std::invalid_argument(name_ + ": parameter " + key + ": " + why);
  }

 private:
  std::string name_;
  std::map<std::string, std::string> p_;
  std::vector<std::string> used_;
};

GradedAlgebra build_named(const std::string& name, Params& p) {
  if (name == "group_algebra") {
    const Field f = p.field();
    return group_algebra(f, p.group("Z2"));
  }
  if (name == "polynomial_quotient") {
    const Field f = p.field();
    return p.ring("f", "poly:0,0", f);
  }
  if (name == "truncated_polynomial") {
    const Field f = p.field();
    const FiniteGroup g = p.group("Z1");
    return truncated_polynomial(f, p.uint("n", 2), g, p.uint("element", g.neutral()));
  }
  if (name == "trivial_extension") {
    const Field f = p.field();
    const GradedAlgebra r = p.ring("r", "trunc:2", f);
    const FiniteGroup g = p.group("Z2");
    return trivial_extension(r, g, p.uint("element", 1 % g.order()));
  }
  if (name == "trivial_extension_split") {
    const Field f = p.field();
    const GradedAlgebra r1 = p.ring("r1", "k", f);
    const GradedAlgebra r2 = p.ring("r2", "k", f);
    const FiniteGroup g = p.group("Z3");
    return trivial_extension_split(r1, r2, g, p.uint("u", 1), p.uint("v", 2));
  }
  if (name == "nakayama_nesbitt") {
    const Field f = p.field();
    const Scalar u = p.scalar("u", "1", f), v = p.scalar("v", "2", f);
    const FiniteGroup g = p.group("Z4");
    return nakayama_nesbitt(u, v, g, p.uint("x", 1), p.uint("y", 2));
  }
  if (name == "matrix_good_grading") {
    const Field f = p.field();
    const FiniteGroup g = p.group("Z2");
    std::vector<GroupElement> deg;
    for (const auto& s : p.list("degrees", "0,1")) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        p.bad("degrees", "expected comma-separated group elements");
      deg.push_back(std::stoull(s));
    }
    return matrix_good_grading(f, g, deg);
  }
  if (name == "matrix_fine_grading") {
    const Field f = p.field();
    return matrix_fine_grading(f, p.uint("n", 2));
  }
  if (name == "upper_triangular") return upper_triangular(p.field());
  if (name == "square_zero_plane") return square_zero_plane(p.field());
  if (name == "swap_skew_algebra") return swap_skew_algebra(p.field());
  if (name == "sign_skew_algebra") return sign_skew_algebra(p.field());
  if (name == "quaternion_dual_numbers") return quaternion_dual_numbers(p.field());
  if (name == "random") {
    const Field f = p.field();
    RandomLimits lim;
    lim.max_dim = p.uint("max_dim", 8);
    lim.max_group_order = p.uint("max_group", 6);
    return random_graded_algebra(p.uint("seed", 0), f, lim);
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace

std::vector<std::string> construction_names() {
  return {"group_algebra",       "polynomial_quotient", "truncated_polynomial",   "trivial_extension",
          "trivial_extension_split", "nakayama_nesbitt", "matrix_good_grading",  "matrix_fine_grading",
          "matrix_over",         "upper_triangular",    "square_zero_plane",      "swap_skew_algebra",
          "sign_skew_algebra",   "quaternion_dual_numbers", "random"};
}

GradedAlgebra build_construction(const ConstructionSpec& spec) {
  Params p(spec);
  GradedAlgebra out;
  if (spec.name == "matrix_over") {
    // matrix_over base=<name> n=<n>, remaining parameters go to the base.
    const std::string base = p.str("base", "nakayama_nesbitt");
    const std::size_t n = p.uint("n", 2);
    ConstructionSpec inner{base, spec.params};
    inner.params.erase("base");
    inner.params.erase("n");
    out = matrix_over(build_construction(inner), n);
    return out;
  }
  out = build_named(spec.name, p);
  p.finish();
  return out;
}

}  // namespace gradfrob
