#include "gradfrob/radical.hpp"

#include <algorithm>

#include "gradfrob/linalg.hpp"

namespace gradfrob {

std::vector<Vector> jacobson_radical(const GradedAlgebra& b) {
  const std::size_t d = b.dim();
  const std::uint32_t p = b.field().characteristic();
  if (p != 0 && p <= d)
    throw UnsupportedCharacteristic("trace-form radical needs characteristic 0 or p > " + std::to_string(d));
  Vector tr = zero_vector(b.field(), d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : b.product(k, j))
        if (t.index == j) tr[k] += t.coeff;
  Matrix form(b.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : b.product(i, j)) form(i, j) += t.coeff * tr[t.index];
  return kernel_basis(form);
}

namespace {

// B/J on the basis vectors left over after extending a basis of J.
struct QuotientAlgebra {
  std::size_t dim = 0;
  std::vector<Matrix> left;  // left multiplication by the k-th quotient basis vector
};

QuotientAlgebra quotient_by(const GradedAlgebra& b, const std::vector<Vector>& radical) {
  const Field& f = b.field();
  const std::size_t d = b.dim();
  Span span(f, d);
  for (const auto& v : radical) span.add(v);
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < d; ++i)
    if (span.add(unit_vector(f, d, i))) complement.push_back(i);
  const std::size_t q = complement.size();

  // Columns: complement basis vectors, then the radical basis.
  std::vector<Vector> cols;
  for (auto i : complement) cols.push_back(unit_vector(f, d, i));
  for (const auto& v : radical) cols.push_back(v);
  const Matrix change = Matrix::from_columns(f, cols, d);

  QuotientAlgebra out;
  out.dim = q;
  for (std::size_t a = 0; a < q; ++a) {
    Matrix products(f, d, q);
    for (std::size_t c = 0; c < q; ++c)
      for (const auto& t : b.product(complement[a], complement[c])) products(t.index, c) += t.coeff;
    const auto coords = solve_columns(change, products);
    if (!coords) throw std::logic_error("radical and complement do not span the algebra");
    Matrix m(f, q, q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c) m(r, c) = (*coords)(r, c);
    out.left.push_back(std::move(m));
  }
  return out;
}

Matrix left_of(const QuotientAlgebra& q, const Field& f, const std::vector<long long>& coords) {
  Matrix m(f, q.dim, q.dim);
  for (std::size_t k = 0; k < q.dim; ++k) {
    if (coords[k] == 0) continue;
    Matrix term = q.left[k];
    term *= Scalar::from_int(f, coords[k]);
    m += term;
  }
  return m;
}

// Odometer over coordinates in [lo, hi]; false once every point was seen.
bool advance(std::vector<long long>& x, long long lo, long long hi) {
  for (auto& c : x) {
    if (c < hi) {
      ++c;
      return true;
    }
    c = lo;
  }
  return false;
}

}  // namespace

LocalResult is_local(const GradedAlgebra& b) {
  LocalResult out;
  if (b.dim() == 0) {
    out.outcome = LocalResult::Outcome::no;
    out.note = "zero algebra";
    return out;
  }
  const auto radical = jacobson_radical(b);
  const QuotientAlgebra q = quotient_by(b, radical);
  out.quotient_dim = q.dim;
  if (q.dim == 1) {
    out.outcome = LocalResult::Outcome::yes;
    out.note = "B/J(B) is the ground field";
    return out;
  }
  const Field& f = b.field();
  const std::uint32_t p = f.characteristic();
  constexpr std::uint64_t kLimit = 1'000'000;

  std::uint64_t count = 1;
  bool enumerable = p != 0;
  for (std::size_t k = 0; enumerable && k < q.dim; ++k) {
    count *= p;
    enumerable = count <= kLimit;
  }

  std::vector<long long> x(q.dim, 0);
  const long long lo = enumerable ? 0 : -1;
  const long long hi = enumerable ? static_cast<long long>(p) - 1 : 1;
  std::fill(x.begin(), x.end(), lo);
  do {
    if (std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; })) continue;
    if (!is_invertible(left_of(q, f, x))) {
      out.outcome = LocalResult::Outcome::no;
      out.note = "B/J(B) has a nonzero non-invertible element";
      return out;
    }
  } while (advance(x, lo, hi));
  if (enumerable) {
    out.outcome = LocalResult::Outcome::yes;
    out.note = "every nonzero element of B/J(B) is invertible";
  } else {
    out.note = "B/J(B) of dimension " + std::to_string(q.dim) + " over Q is not decided";
  }
  return out;
}

}  // namespace gradfrob
