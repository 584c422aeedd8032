#include "gradfrob/generic_invertible.hpp"

#include <stdexcept>

#include "gradfrob/linalg.hpp"

namespace gradfrob {

namespace {

using Outcome = GenericInvertibilityVerdict::Outcome;

Matrix combine(std::span<const Matrix> basis, const std::vector<std::size_t>& selected,
               const Vector& coeffs, const Field& field, std::size_t d) {
  Matrix out(field, d, d);
  for (std::size_t k = 0; k < selected.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Matrix term = basis[selected[k]];
    term *= coeffs[k];
    out += term;
  }
  return out;
}

// (d+1)^m, saturating at limit + 1.
std::uint64_t grid_size(std::size_t d, std::size_t m, std::uint64_t limit) {
  std::uint64_t g = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (g > limit / (d + 1)) return limit + 1;
    g *= d + 1;
  }
  return g;
}

// Advances y over {0..bound}^k with sum(y) <= max_sum; false when exhausted.
bool next_point(std::vector<std::uint64_t>& y, std::uint64_t bound, std::uint64_t max_sum) {
  for (;;) {
    std::size_t i = 0;
    while (i < y.size() && y[i] == bound) y[i++] = 0;
    if (i == y.size()) return false;
    ++y[i];
    std::uint64_t s = 0;
    for (auto v : y) s += v;
    if (s <= max_sum) return true;
  }
}

}  // namespace

GenericInvertibilityVerdict generic_invertible(std::span<const Matrix> basis,
                                               const SearchBudget& budget, Rng& rng) {
  if (basis.empty()) throw std::invalid_argument("generic_invertible: empty basis");
  const Field field = basis[0].field();
  const std::size_t d = basis[0].rows();
  for (const auto& b : basis) {
    if (!(b.field() == field)) throw std::invalid_argument("generic_invertible: mixed fields");
    if (b.rows() != d || b.cols() != d) {
      throw std::invalid_argument("generic_invertible: mixed or non-square shapes");
    }
  }

  GenericInvertibilityVerdict verdict;
  verdict.coefficients = zero_vector(field, basis.size());
  if (d == 0) {
    verdict.outcome = Outcome::witness_found;
    verdict.witness = Matrix(field, 0, 0);
    return verdict;
  }

  // Linearly independent subset spanning the same space.
  std::vector<std::size_t> selected;
  {
    Span span(field, d * d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Vector flat;
      flat.reserve(d * d);
      for (std::size_t r = 0; r < d; ++r)
        for (const auto& x : basis[i].row(r)) flat.push_back(x);
      if (span.add(flat)) selected.push_back(i);
    }
  }

  auto found = [&](const Vector& coeffs, Matrix witness) {
    verdict.outcome = Outcome::witness_found;
    for (std::size_t k = 0; k < selected.size(); ++k) verdict.coefficients[selected[k]] = coeffs[k];
    verdict.witness = std::move(witness);
    return verdict;
  };

  const std::size_t m = selected.size();
  if (m == 0) {
    verdict.outcome = Outcome::certified_absent;
    return verdict;
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (is_invertible(basis[selected[k]])) {
      Vector c = zero_vector(field, m);
      c[k] = Scalar::one(field);
      return found(c, basis[selected[k]]);
    }
  }

  if (grid_size(d, m, budget.exhaustive_limit) <= budget.exhaustive_limit) {
    const std::uint32_t p = field.characteristic();
    if (p == 0 || p > d) {
      std::vector<std::uint64_t> y(m - 1, 0);
      do {
        Vector c = zero_vector(field, m);
        for (std::size_t k = 0; k + 1 < m; ++k) c[k] = Scalar::from_int(field, static_cast<long long>(y[k]));
        c[m - 1] = Scalar::one(field);
        Matrix w = combine(basis, selected, c, field, d);
        if (is_invertible(w)) return found(c, std::move(w));
      } while (next_point(y, d, d));
    } else {
      for (std::size_t lead = 0; lead < m; ++lead) {
        std::vector<std::uint64_t> tail(m - 1 - lead, 0);
        do {
          Vector c = zero_vector(field, m);
          c[lead] = Scalar::one(field);
          for (std::size_t k = 0; k < tail.size(); ++k)
            c[lead + 1 + k] = Scalar::from_int(field, static_cast<long long>(tail[k]));
          Matrix w = combine(basis, selected, c, field, d);
          if (is_invertible(w)) return found(c, std::move(w));
        } while (next_point(tail, p - 1, tail.size() * (p - 1)));
      }
    }
    verdict.outcome = Outcome::certified_absent;
    return verdict;
  }

  const std::uint64_t bound = budget.sample_bound != 0 ? budget.sample_bound : 4 * d;
  for (std::size_t t = 1; t <= budget.trials; ++t) {
    Vector c;
    c.reserve(m);
    for (std::size_t k = 0; k < m; ++k) c.push_back(sample_scalar(field, rng, bound));
    Matrix w = combine(basis, selected, c, field, d);
    if (is_invertible(w)) {
      verdict.trials_used = t;
      return found(c, std::move(w));
    }
  }
  verdict.outcome = Outcome::probabilistic_absent;
  verdict.trials_used = budget.trials;
  mpq_class ratio(static_cast<unsigned long>(d),
                  static_cast<unsigned long>(sample_set_size(field, bound)));
  ratio.canonicalize();
  if (ratio >= 1) {
    verdict.error_bound = mpq_class(1);
  } else {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), ratio.get_num_mpz_t(), budget.trials);
    mpz_pow_ui(den.get_mpz_t(), ratio.get_den_mpz_t(), budget.trials);
    verdict.error_bound = mpq_class(num, den);
  }
  return verdict;
}

}  // namespace gradfrob
