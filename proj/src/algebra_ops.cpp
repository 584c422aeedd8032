#include "gradfrob/algebra_ops.hpp"

#include <map>
#include <stdexcept>

#include "gradfrob/linalg.hpp"

namespace gradfrob {

namespace {

GradedAlgebra regrade(const GradedAlgebra& a, const FiniteGroup& g,
                      const std::vector<GroupElement>& deg) {
  GradedAlgebra::Builder b(a.field(), g, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    b.degree(i, deg[i]);
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) b.product(i, j, t.index, t.coeff);
  }
  b.unit(a.unit());
  return b.build_unchecked();
}

}  // namespace

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("tensor_product: different fields");
  if (!(a.group() == b.group())) throw std::invalid_argument("tensor_product: different groups");
  const auto& g = a.group();
  for (auto s : a.support())
    for (auto t : b.support())
      if (!g.commute(s, t))
        throw std::invalid_argument("tensor_product: supports do not commute (" + std::to_string(s) +
                                    ", " + std::to_string(t) + ")");
  const std::size_t da = a.dim(), db = b.dim();
  GradedAlgebra::Builder out(a.field(), g, da * db);
  Vector unit = zero_vector(a.field(), da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      out.degree(i * db + j, g.mul(a.degree(i), b.degree(j)));
      unit[i * db + j] = a.unit()[i] * b.unit()[j];
    }
  out.unit(std::move(unit));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      const auto ta = a.product(i, k);
      if (ta.empty()) continue;
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l)
          for (const auto& s : ta)
            for (const auto& t : b.product(j, l))
              out.product(i * db + j, k * db + l, s.index * db + t.index, s.coeff * t.coeff);
    }
  return out.build_unchecked();
}

GradedAlgebra direct_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct_product: different fields");
  if (!(a.group() == b.group())) throw std::invalid_argument("direct_product: different groups");
  const std::size_t da = a.dim(), db = b.dim();
  GradedAlgebra::Builder out(a.field(), a.group(), da + db);
  Vector unit = zero_vector(a.field(), da + db);
  for (std::size_t i = 0; i < da; ++i) {
    out.degree(i, a.degree(i));
    unit[i] = a.unit()[i];
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& t : a.product(i, j)) out.product(i, j, t.index, t.coeff);
  }
  for (std::size_t i = 0; i < db; ++i) {
    out.degree(da + i, b.degree(i));
    unit[da + i] = b.unit()[i];
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& t : b.product(i, j)) out.product(da + i, da + j, da + t.index, t.coeff);
  }
  out.unit(std::move(unit));
  return out.build_unchecked();
}

std::vector<std::size_t> restricted_basis(const GradedAlgebra& a, std::span<const GroupElement> h) {
  std::vector<bool> in(a.group().order(), false);
  for (auto x : h) in.at(x) = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (in[a.degree(i)]) out.push_back(i);
  return out;
}

GradedAlgebra restrict_to_subgroup(const GradedAlgebra& a, std::span<const GroupElement> h) {
  const Subgroup sub = make_subgroup(a.group(), h);
  std::map<GroupElement, GroupElement> local_elem;
  for (std::size_t k = 0; k < sub.embedding.size(); ++k) local_elem[sub.embedding[k]] = k;
  const auto idx = restricted_basis(a, sub.embedding);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;

  GradedAlgebra::Builder b(a.field(), sub.group, idx.size());
  Vector unit = zero_vector(a.field(), idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    b.degree(k, local_elem.at(a.degree(idx[k])));
    unit[k] = a.unit()[idx[k]];
    for (std::size_t l = 0; l < idx.size(); ++l)
      for (const auto& t : a.product(idx[k], idx[l])) b.product(k, l, local.at(t.index), t.coeff);
  }
  b.unit(std::move(unit));
  return b.build_unchecked();
}

GradedAlgebra coarsen_grading(const GradedAlgebra& a, std::span<const GroupElement> normal) {
  const Quotient q = make_quotient(a.group(), normal);
  std::vector<GroupElement> deg;
  for (auto d : a.degrees()) deg.push_back(q.coset_of[d]);
  return regrade(a, q.group, deg);
}

GradedAlgebra forget_grading(const GradedAlgebra& a) {
  return regrade(a, FiniteGroup(), std::vector<GroupElement>(a.dim(), 0));
}

GradedAlgebra push_grading(const GradedAlgebra& a, const FiniteGroup& h,
                           std::span<const GroupElement> f) {
  if (!is_homomorphism(a.group(), h, f)) throw std::invalid_argument("push_grading: not a homomorphism");
  std::vector<GroupElement> deg;
  for (auto d : a.degrees()) deg.push_back(f[d]);
  return regrade(a, h, deg);
}

std::vector<Vector> centralizer(const GradedAlgebra& a, std::span<const Vector> s) {
  const std::size_t d = a.dim();
  Matrix stacked(a.field(), s.size() * d, d);
  for (std::size_t k = 0; k < s.size(); ++k) {
    // x s - s x as a function of x
    Matrix c = a.right_multiplication(s[k]);
    Matrix l = a.left_multiplication(s[k]);
    l *= Scalar::from_int(a.field(), -1);
    c += l;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < d; ++col) stacked(k * d + r, col) = c(r, col);
  }
  return kernel_basis(stacked);
}

std::vector<Vector> center(const GradedAlgebra& a) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(basis_vector(a, i));
  return centralizer(a, basis);
}

bool is_unit(const GradedAlgebra& a, const Vector& y) {
  // In finite dimension a one-sided inverse is two-sided; both are checked
  // anyway since it costs one product.
  auto z = solve(a.left_multiplication(y), a.unit());
  return z && a.multiply(*z, y) == a.unit();
}

GradedDivisionResult is_graded_division(const GradedAlgebra& a) {
  GradedDivisionResult out;
  if (a.dim() == 0) {
    out.outcome = GradedDivisionResult::Outcome::no;
    out.note = "zero algebra";
    return out;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector b = basis_vector(a, i);
    if (!is_unit(a, b)) {
      out.outcome = GradedDivisionResult::Outcome::no;
      out.witness = b;
      out.witness_degree = a.degree(i);
      out.note = "basis vector b" + std::to_string(i) + " is not invertible";
      return out;
    }
  }
  const auto dims = a.component_dims();
  bool small = true;
  for (auto n : dims) small = small && n <= 1;
  if (small) {
    out.outcome = GradedDivisionResult::Outcome::yes;
    out.note = "every component has dimension at most 1";
    return out;
  }
  const std::uint64_t p = a.field().characteristic();
  if (p == 0) {
    out.note = "component of dimension > 1 over Q";
    return out;
  }
  constexpr std::uint64_t kLimit = 1'000'000;
  std::uint64_t total = 0;
  for (auto n : dims) {
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n && c <= kLimit; ++k) c *= p;
    total += c - 1;
    if (total > kLimit) {
      out.note = "too many homogeneous elements to enumerate";
      return out;
    }
  }
  for (GroupElement g = 0; g < dims.size(); ++g) {
    const auto idx = a.component(g);
    if (idx.size() <= 1) continue;
    std::vector<std::uint32_t> digits(idx.size(), 0);
    for (;;) {
      std::size_t k = 0;
      while (k < digits.size() && digits[k] + 1 == p) digits[k++] = 0;
      if (k == digits.size()) break;
      ++digits[k];
      Vector x = zero_vector(a.field(), a.dim());
      for (std::size_t q = 0; q < idx.size(); ++q) x[idx[q]] = Scalar::from_int(a.field(), digits[q]);
      if (!is_invertible(a.left_multiplication(x))) {
        out.outcome = GradedDivisionResult::Outcome::no;
        out.witness = std::move(x);
        out.witness_degree = g;
        out.note = "non-invertible element in degree " + std::to_string(g);
        return out;
      }
    }
  }
  out.outcome = GradedDivisionResult::Outcome::yes;
  out.note = "enumerated every nonzero homogeneous element";
  return out;
}

}  // namespace gradfrob
