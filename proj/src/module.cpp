#include "gradfrob/module.hpp"

namespace gradfrob {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

struct GradedModule::Impl {
  Side side;
  GradedAlgebra algebra;
  std::vector<GroupElement> deg;
  std::vector<Matrix> action;
};

GradedModule::GradedModule(Side side, GradedAlgebra algebra, std::vector<GroupElement> degrees,
                           std::vector<Matrix> action) {
  if (action.size() != algebra.dim()) {
    throw std::invalid_argument("module: one action matrix per algebra basis vector required");
  }
  for (const auto& m : action) {
    if (m.rows() != degrees.size() || m.cols() != degrees.size())
      throw std::invalid_argument("module: action matrix has the wrong shape");
    if (!(m.field() == algebra.field())) throw FieldMismatch("module: action over another field");
  }
  for (auto g : degrees) {
    if (g >= algebra.group().order()) throw std::out_of_range("module: degree out of range");
  }
  impl_ = std::make_shared<Impl>(Impl{side, std::move(algebra), std::move(degrees), std::move(action)});
}

Side GradedModule::side() const noexcept { return impl_->side; }
const GradedAlgebra& GradedModule::algebra() const noexcept { return impl_->algebra; }
std::size_t GradedModule::dim() const noexcept { return impl_->deg.size(); }
GroupElement GradedModule::degree(std::size_t j) const { return impl_->deg.at(j); }
const std::vector<GroupElement>& GradedModule::degrees() const noexcept { return impl_->deg; }
const Matrix& GradedModule::action(std::size_t i) const { return impl_->action.at(i); }

Matrix GradedModule::action_of(const Vector& a) const {
  Matrix out(algebra().field(), dim(), dim());
  for (std::size_t i = 0; i < algebra().dim(); ++i) {
    if (a.at(i).is_zero()) continue;
    Matrix t = action(i);
    t *= a[i];
    out += t;
  }
  return out;
}

std::vector<std::size_t> GradedModule::component(GroupElement g) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim(); ++j)
    if (impl_->deg[j] == g) out.push_back(j);
  return out;
}

std::vector<std::size_t> GradedModule::component_dims() const {
  std::vector<std::size_t> out(algebra().group().order(), 0);
  for (auto g : impl_->deg) ++out[g];
  return out;
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->side == b.impl_->side && a.impl_->algebra == b.impl_->algebra &&
         a.impl_->deg == b.impl_->deg && a.impl_->action == b.impl_->action;
}

std::vector<std::string> validate_module(const GradedModule& m) {
  std::vector<std::string> out;
  const auto& a = m.algebra();
  const auto& g = a.group();
  const Field& f = a.field();

  if (!(m.action_of(a.unit()) == Matrix::identity(f, m.dim()))) out.push_back("unit does not act as the identity");

  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix composite = m.side() == Side::left ? m.action(i) * m.action(j) : m.action(j) * m.action(i);
      Matrix expected(f, m.dim(), m.dim());
      for (const auto& t : a.product(i, j)) {
        Matrix s = m.action(t.index);
        s *= t.coeff;
        expected += s;
      }
      if (!(composite == expected)) {
        out.push_back("action not associative for b" + std::to_string(i) + ", b" + std::to_string(j));
        return out;
      }
    }

  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (std::size_t k = 0; k < m.dim(); ++k) {
        if (m.action(i)(k, j).is_zero()) continue;
        const GroupElement want = m.side() == Side::left ? g.mul(a.degree(i), m.degree(j))
                                                         : g.mul(m.degree(j), a.degree(i));
        if (m.degree(k) != want) {
          out.push_back("grading violated: b" + std::to_string(i) + " sends x" + std::to_string(j) +
                        " onto x" + std::to_string(k));
          return out;
        }
      }
  return out;
}

GradedModule regular_module(const GradedAlgebra& a, Side side) {
  std::vector<Matrix> action;
  action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    action.push_back(side == Side::left ? a.left_action(i) : a.right_action(i));
  return GradedModule(side, a, a.degrees(), std::move(action));
}

GradedModule dual_module(const GradedModule& m) {
  const auto& g = m.algebra().group();
  std::vector<GroupElement> deg;
  for (auto d : m.degrees()) deg.push_back(g.inv(d));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) action.push_back(m.action(i).transpose());
  return GradedModule(m.side() == Side::left ? Side::right : Side::left, m.algebra(), std::move(deg),
                      std::move(action));
}

namespace {

std::vector<Matrix> actions(const GradedModule& m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) out.push_back(m.action(i));
  return out;
}

}  // namespace

GradedModule suspend_left(const GradedModule& m, GroupElement sigma) {
  if (m.side() != Side::left) throw SideMismatch("suspend_left needs a left module");
  const auto& g = m.algebra().group();
  std::vector<GroupElement> deg;
  for (auto d : m.degrees()) deg.push_back(g.mul(d, g.inv(sigma)));
  return GradedModule(Side::left, m.algebra(), std::move(deg), actions(m));
}

GradedModule suspend_right(const GradedModule& m, GroupElement sigma) {
  if (m.side() != Side::right) throw SideMismatch("suspend_right needs a right module");
  const auto& g = m.algebra().group();
  std::vector<GroupElement> deg;
  for (auto d : m.degrees()) deg.push_back(g.mul(g.inv(sigma), d));
  return GradedModule(Side::right, m.algebra(), std::move(deg), actions(m));
}

GradedModule forget_module_grading(const GradedModule& m, const GradedAlgebra& trivial) {
  if (trivial.group().order() != 1 || trivial.dim() != m.algebra().dim())
    throw std::invalid_argument("forget_module_grading: not a trivial regrading of the algebra");
  return GradedModule(m.side(), trivial, std::vector<GroupElement>(m.dim(), 0), actions(m));
}

bool is_module_morphism(const GradedLinearMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (s.side() != t.side() || !(s.algebra() == t.algebra())) return false;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) return false;
  for (std::size_t i = 0; i < s.algebra().dim(); ++i)
    if (!(t.action(i) * f.matrix == f.matrix * s.action(i))) return false;
  return true;
}

bool is_degree_preserving(const GradedLinearMap& f) {
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    for (std::size_t c = 0; c < f.matrix.cols(); ++c)
      if (!f.matrix(r, c).is_zero() && f.target.degree(r) != f.source.degree(c)) return false;
  return true;
}

}  // namespace gradfrob
