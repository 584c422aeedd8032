#include "gradfrob/algebra.hpp"

#include <sstream>

namespace gradfrob {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string msg = "invalid algebra";
  for (const auto& s : v) msg += "; " + s;
  return msg;
}

}  // namespace

AlgebraError::AlgebraError(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

struct GradedAlgebra::Impl {
  Field field;
  FiniteGroup group;
  std::size_t dim = 0;
  std::vector<GroupElement> deg;
  Vector unit;
  std::vector<std::vector<Term>> products;  // i * dim + j
  std::vector<Matrix> left, right;
};

GradedAlgebra::Builder::Builder(const Field& field, const FiniteGroup& group, std::size_t dim)
    : field_(field),
      group_(group),
      dim_(dim),
      deg_(dim, group.neutral()),
      unit_(zero_vector(field, dim)),
      products_(dim * dim) {}

GradedAlgebra::Builder& GradedAlgebra::Builder::degree(std::size_t i, GroupElement g) {
  if (i >= dim_) throw std::out_of_range("degree: basis index out of range");
  if (g >= group_.order()) throw std::out_of_range("degree: group element out of range");
  deg_[i] = g;
  return *this;
}

GradedAlgebra::Builder& GradedAlgebra::Builder::unit(Vector u) {
  if (u.size() != dim_) throw std::out_of_range("unit: wrong length");
  for (const auto& x : u) {
    if (!(x.field() == field_)) throw FieldMismatch("unit: scalar from another field");
  }
  unit_ = std::move(u);
  has_unit_ = true;
  return *this;
}

GradedAlgebra::Builder& GradedAlgebra::Builder::product(std::size_t i, std::size_t j,
                                                        std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("product: basis index out of range");
  if (!(c.field() == field_)) throw FieldMismatch("product: scalar from another field");
  auto& v = products_[i * dim_ + j];
  if (v.empty()) v = zero_vector(field_, dim_);
  v[k] += c;
  return *this;
}

GradedAlgebra GradedAlgebra::Builder::build_unchecked() const {
  auto impl = std::make_shared<Impl>();
  impl->field = field_;
  impl->group = group_;
  impl->dim = dim_;
  impl->deg = deg_;
  impl->unit = unit_;
  impl->products.resize(dim_ * dim_);
  for (std::size_t p = 0; p < products_.size(); ++p) {
    for (std::size_t k = 0; k < products_[p].size(); ++k) {
      if (!products_[p][k].is_zero()) impl->products[p].push_back(Term{k, products_[p][k]});
    }
  }
  impl->left.assign(dim_, Matrix(field_, dim_, dim_));
  impl->right.assign(dim_, Matrix(field_, dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : impl->products[i * dim_ + j]) {
        impl->left[i](t.index, j) = t.coeff;
        impl->right[j](t.index, i) = t.coeff;
      }
  return GradedAlgebra(std::move(impl));
}

GradedAlgebra GradedAlgebra::Builder::build() const {
  auto a = build_unchecked();
  auto violations = validate_algebra(a);
  if (!has_unit_ && dim_ > 0) violations.insert(violations.begin(), "missing unit");
  if (!violations.empty()) throw AlgebraError(std::move(violations));
  return a;
}

GradedAlgebra::GradedAlgebra() : GradedAlgebra(Builder(Field::rationals(), FiniteGroup(), 0).build_unchecked()) {}

const Field& GradedAlgebra::field() const noexcept { return impl_->field; }
const FiniteGroup& GradedAlgebra::group() const noexcept { return impl_->group; }
std::size_t GradedAlgebra::dim() const noexcept { return impl_->dim; }
GroupElement GradedAlgebra::degree(std::size_t i) const { return impl_->deg.at(i); }
const std::vector<GroupElement>& GradedAlgebra::degrees() const noexcept { return impl_->deg; }
const Vector& GradedAlgebra::unit() const noexcept { return impl_->unit; }

std::span<const Term> GradedAlgebra::product(std::size_t i, std::size_t j) const {
  return impl_->products.at(i * impl_->dim + j);
}

Vector GradedAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("multiply: wrong length");
  Vector out = zero_vector(field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : product(i, j)) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

const Matrix& GradedAlgebra::left_action(std::size_t i) const { return impl_->left.at(i); }
const Matrix& GradedAlgebra::right_action(std::size_t i) const { return impl_->right.at(i); }

Matrix GradedAlgebra::left_multiplication(const Vector& x) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.at(i).is_zero()) continue;
    Matrix t = left_action(i);
    t *= x[i];
    m += t;
  }
  return m;
}

Matrix GradedAlgebra::right_multiplication(const Vector& x) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.at(i).is_zero()) continue;
    Matrix t = right_action(i);
    t *= x[i];
    m += t;
  }
  return m;
}

std::vector<std::size_t> GradedAlgebra::component(GroupElement g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (impl_->deg[i] == g) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedAlgebra::component_dims() const {
  std::vector<std::size_t> out(group().order(), 0);
  for (auto g : impl_->deg) ++out[g];
  return out;
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::vector<GroupElement> out;
  const auto dims = component_dims();
  for (std::size_t g = 0; g < dims.size(); ++g)
    if (dims[g] > 0) out.push_back(g);
  return out;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (!(x.field == y.field) || !(x.group == y.group) || x.dim != y.dim || x.deg != y.deg ||
      x.unit != y.unit)
    return false;
  for (std::size_t p = 0; p < x.products.size(); ++p) {
    const auto& s = x.products[p];
    const auto& t = y.products[p];
    if (s.size() != t.size()) return false;
    for (std::size_t q = 0; q < s.size(); ++q)
      if (s[q].index != t[q].index || !(s[q].coeff == t[q].coeff)) return false;
  }
  return true;
}

std::vector<std::string> validate_algebra(const GradedAlgebra& a) {
  std::vector<std::string> out;
  const std::size_t d = a.dim();
  const auto& g = a.group();
  const Field& f = a.field();

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(i, j)) {
        if (a.degree(t.index) != g.mul(a.degree(i), a.degree(j))) {
          std::ostringstream s;
          s << "grading violated: b" << i << "*b" << j << " has a component on b" << t.index
            << " of degree " << a.degree(t.index) << ", expected " << g.mul(a.degree(i), a.degree(j));
          out.push_back(s.str());
        }
      }

  for (std::size_t i = 0; i < d; ++i) {
    if (!a.unit()[i].is_zero() && a.degree(i) != g.neutral()) {
      out.push_back("unit has a component on b" + std::to_string(i) + " outside degree e");
    }
  }

  for (std::size_t j = 0; j < d; ++j) {
    const Vector bj = basis_vector(a, j);
    if (a.multiply(a.unit(), bj) != bj) {
      out.push_back("unit is not a left identity on b" + std::to_string(j));
      break;
    }
    if (a.multiply(bj, a.unit()) != bj) {
      out.push_back("unit is not a right identity on b" + std::to_string(j));
      break;
    }
  }

  // (b_i b_j) b_k == b_i (b_j b_k), using the sparse products.
  Vector lhs = zero_vector(f, d), rhs = zero_vector(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& t : a.product(i, j))
          for (const auto& s : a.product(t.index, k)) lhs[s.index] += t.coeff * s.coeff;
        for (const auto& t : a.product(j, k))
          for (const auto& s : a.product(i, t.index)) rhs[s.index] += t.coeff * s.coeff;
        const bool ok = lhs == rhs;
        for (std::size_t q = 0; q < d; ++q) lhs[q] = rhs[q] = Scalar::zero(f);
        if (!ok) {
          out.push_back("associativity violated at triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
          return out;
        }
      }
  return out;
}

}  // namespace gradfrob
