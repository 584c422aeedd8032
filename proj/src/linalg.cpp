#include "gradfrob/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "gradfrob/kernels.hpp"

namespace gradfrob {

namespace {

struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::optional<Matrix> rref;
  Scalar det;  // only for square inputs with want_det
};

// ---- F_p: packed Gauss-Jordan --------------------------------------------

Elimination eliminate_prime(const Matrix& m, bool reduced, bool want_det) {
  const std::uint32_t p = m.field().characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();

  const auto& k = kernels::active();
  auto row = [&](std::size_t r, std::size_t from) {
    return std::span<std::uint32_t>(a.data() + r * cols + from, cols - from);
  };

  Elimination out;
  std::uint64_t det = 1;
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
      negate = !negate;
    }
    const std::uint32_t lead = a[r * cols + c];
    det = det * lead % p;
    const std::uint32_t inv = Scalar::from_int(m.field(), lead).inverse().residue();
    k.scale_mod(row(r, c), inv, p);
    const std::size_t first = reduced ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = a[i * cols + c];
      if (f == 0) continue;
      k.axpy_mod(row(i, c), row(r, c), p - f, p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  if (want_det) {
    if (r < rows) {
      out.det = Scalar::zero(m.field());
    } else {
      out.det = Scalar::from_int(m.field(), static_cast<long long>(det));
      if (negate) out.det = -out.det;
    }
  }
  if (reduced) {
    Matrix rref(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < cols; ++c)
        rref(i, c) = Scalar::from_int(m.field(), a[i * cols + c]);
    out.rref = std::move(rref);
  }
  return out;
}

// ---- Q: Bareiss on integer rows, then rational back substitution ----------

Elimination eliminate_rational(const Matrix& m, bool reduced, bool want_det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  mpq_class row_scale_product = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m(r, c).rational().get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (sgn(q) == 0) continue;
      a[r * cols + c] = q.get_num() * (l / q.get_den());
    }
    row_scale_product *= l;
  }

  Elimination out;
  mpz_class prev = 1;
  mpz_class tmp;
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a[piv * cols + j], a[r * cols + j]);
      negate = !negate;
    }
    const mpz_class& lead = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = a[i * cols + j];
        // x <- (lead * x - f * a[r][j]) / prev, exact.
        x *= lead;
        if (sgn(f) != 0 && sgn(a[r * cols + j]) != 0) {
          mpz_mul(tmp.get_mpz_t(), f.get_mpz_t(), a[r * cols + j].get_mpz_t());
          x -= tmp;
        }
        if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      f = 0;
    }
    prev = lead;
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  if (want_det) {
    if (r < rows || rows == 0) {
      out.det = rows == 0 ? Scalar::one(m.field()) : Scalar::zero(m.field());
    } else {
      mpq_class d(prev);
      d /= row_scale_product;
      if (negate) d = -d;
      out.det = Scalar::from_rational(d);
    }
  }

  if (reduced) {
    std::vector<std::vector<mpq_class>> e(r, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < r; ++i) {
      const mpz_class& lead = a[i * cols + out.pivots[i]];
      for (std::size_t j = out.pivots[i]; j < cols; ++j) {
        if (sgn(a[i * cols + j]) != 0) {
          e[i][j] = mpq_class(a[i * cols + j], lead);
          e[i][j].canonicalize();
        }
      }
    }
    mpq_class t;
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t pc = out.pivots[k];
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(e[i][pc]) == 0) continue;
        const mpq_class f = e[i][pc];
        for (std::size_t j = pc; j < cols; ++j) {
          if (sgn(e[k][j]) == 0) continue;
          t = f * e[k][j];
          e[i][j] -= t;
        }
      }
    }
    Matrix rref(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(e[i][j]) != 0) rref(i, j) = Scalar::from_rational(e[i][j]);
    out.rref = std::move(rref);
  }
  return out;
}

Elimination eliminate(const Matrix& m, bool reduced, bool want_det) {
  if (m.field().is_prime_field()) return eliminate_prime(m, reduced, want_det);
  return eliminate_rational(m, reduced, want_det);
}

Matrix augment(const Matrix& m, const Matrix& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + b.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, m.cols() + c) = b(r, c);
  }
  return aug;
}

}  // namespace

RowEchelon row_echelon(const Matrix& m) {
  auto e = eliminate(m, true, false);
  return RowEchelon{std::move(*e.rref), std::move(e.pivots)};
}

std::size_t rank(const Matrix& m) { return eliminate(m, false, false).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.field(), m.cols(), f);
    for (std::size_t k = 0; k < e.rank(); ++k) {
      if (!e.rref(k, f).is_zero()) v[e.pivots[k]] = -e.rref(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const RowEchelon e = row_echelon(augment(m, b));
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    const std::size_t pc = e.pivots[k];
    if (pc >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = e.rref(k, m.cols() + j);
  }
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const Vector* cols = &b;
  auto x = solve_columns(m, Matrix::from_columns(m.field(), std::span(cols, 1), m.rows()));
  if (!x) return std::nullopt;
  return x->column(0);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return eliminate(m, false, true).det;
}

Span::Span(const Field& field, std::size_t ambient_dim) : field_(field), n_(ambient_dim) {}

Vector Span::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar f = v[pivots_[k]];
    if (!f.is_zero()) add_scaled(v, -f, rows_[k]);
  }
  return v;
}

bool Span::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Span::add(const Vector& v) {
  if (v.size() != n_) throw std::invalid_argument("Span::add: length mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  const Scalar inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace gradfrob
