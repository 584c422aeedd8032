#include "gradfrob/frobenius.hpp"

#include <algorithm>

#include "gradfrob/algebra_ops.hpp"
#include "gradfrob/linalg.hpp"

namespace gradfrob {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::iso: return "iso";
    case Method::form: return "form";
    case Method::component: return "component";
    case Method::all: return "all";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "iso") return Method::iso;
  if (name == "form") return Method::form;
  if (name == "component") return Method::component;
  if (name == "all") return Method::all;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string to_string(RefutationKind k) {
  switch (k) {
    case RefutationKind::component_dimension_mismatch: return "component_dimension_mismatch";
    case RefutationKind::hom_dimension_mismatch: return "hom_dimension_mismatch";
    case RefutationKind::faithfulness_witness: return "faithfulness_witness";
    case RefutationKind::torsion_witness: return "torsion_witness";
    case RefutationKind::certified_determinant_zero: return "certified_determinant_zero";
    case RefutationKind::probabilistic: return "probabilistic";
  }
  return "?";
}

namespace {

Matrix form_from_functional(const GradedAlgebra& a, const Vector& lambda) {
  const std::size_t d = a.dim();
  Matrix b(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(i, j))
        if (!lambda[t.index].is_zero()) b(i, j) += t.coeff * lambda[t.index];
  return b;
}

Verdict yes_with(const GradedAlgebra& a, std::string method, Certificate cert) {
  const auto check = verify_certificate(a, cert);
  if (!check.accepted)
    throw InconsistencyError(method + " method produced a certificate the verifier rejects: " + check.reason);
  Verdict v;
  v.outcome = Outcome::yes;
  v.method = std::move(method);
  v.certificate = std::move(cert);
  return v;
}

Verdict certified_no(std::string method, RefutationKind kind, std::string detail) {
  Verdict v;
  v.outcome = Outcome::no;
  v.method = std::move(method);
  v.refutation = Refutation{kind, std::move(detail), std::nullopt, std::nullopt};
  return v;
}

// A failed randomized search is a "no" carrying its error bound, unless the
// bound is vacuous.
Verdict uncertified(std::string method, const mpq_class& bound, std::string detail) {
  Verdict v;
  v.outcome = bound < 1 ? Outcome::no : Outcome::inconclusive;
  v.method = std::move(method);
  v.error_bound = bound;
  v.refutation = Refutation{RefutationKind::probabilistic, std::move(detail), std::nullopt, std::nullopt};
  return v;
}

RefutationKind kind_of(IsoVerdict::Obstruction o) {
  switch (o) {
    case IsoVerdict::Obstruction::component_dims: return RefutationKind::component_dimension_mismatch;
    case IsoVerdict::Obstruction::hom_dimension: return RefutationKind::hom_dimension_mismatch;
    default: return RefutationKind::certified_determinant_zero;
  }
}

Certificate form_certificate(const GradedAlgebra& a, GroupElement sigma, Matrix b) {
  return Certificate{CertificateKind::bilinear_form, sigma, a.field(), Scope::graded, std::move(b)};
}

Verdict by_iso(const GradedAlgebra& a, GroupElement sigma, const SearchBudget& budget, Rng& rng) {
  const GradedModule src = suspend_left(regular_module(a, Side::left), sigma);
  const GradedModule dst = dual_module(regular_module(a, Side::right));
  auto iv = graded_iso(src, dst, budget, rng);
  switch (iv.outcome) {
    case IsoVerdict::Outcome::isomorphic:
      // B(x, y) = theta(y)(x) is exactly the witness matrix.
      return yes_with(a, "iso", form_certificate(a, sigma, std::move(iv.witness->matrix)));
    case IsoVerdict::Outcome::certified_absent:
      return certified_no("iso", kind_of(iv.obstruction), iv.reason);
    case IsoVerdict::Outcome::probabilistic_absent:
      return uncertified("iso", *iv.error_bound, iv.reason);
  }
  return {};
}

// Associative forms on a unital algebra are exactly B(x, y) = lambda(xy),
// and graded orthogonality for sigma forces lambda to vanish off A_sigma.
// The candidate Gram matrices are therefore one per basis vector of A_sigma.
Verdict by_form(const GradedAlgebra& a, GroupElement sigma, const SearchBudget& budget, Rng& rng) {
  const std::size_t d = a.dim();
  const auto idx = a.component(sigma);
  if (d == 0) return yes_with(a, "form", form_certificate(a, sigma, Matrix(a.field(), 0, 0)));
  if (idx.empty())
    return certified_no("form", RefutationKind::component_dimension_mismatch,
                        "A_sigma = 0, so every admissible form vanishes");
  std::vector<Matrix> grams;
  for (auto t : idx) grams.push_back(form_from_functional(a, basis_vector(a, t)));
  auto gi = generic_invertible(grams, budget, rng);
  switch (gi.outcome) {
    case GenericInvertibilityVerdict::Outcome::witness_found:
      return yes_with(a, "form", form_certificate(a, sigma, std::move(*gi.witness)));
    case GenericInvertibilityVerdict::Outcome::certified_absent:
      return certified_no("form", RefutationKind::certified_determinant_zero,
                          "every admissible form is degenerate (determinant vanishes identically)");
    case GenericInvertibilityVerdict::Outcome::probabilistic_absent:
      return uncertified("form", *gi.error_bound,
                         "no non-degenerate form in " + std::to_string(gi.trials_used) + " random trials");
  }
  return {};
}

Verdict by_component(const GradedAlgebra& a, GroupElement sigma, const SearchBudget& budget, Rng& rng) {
  const auto faithful = left_sigma_faithful(a, sigma);
  if (!faithful.faithful) {
    Verdict v = certified_no("component", RefutationKind::faithfulness_witness,
                             "not left sigma-faithful: a homogeneous element of degree " +
                                 std::to_string(*faithful.witness_degree) + " is annihilated");
    v.refutation->witness = faithful.witness;
    v.refutation->witness_degree = faithful.witness_degree;
    return v;
  }
  const IdentityComponent ae = identity_component(a);
  const GradedModule as = component_module(a, ae, sigma, Side::left);
  const GradedModule ae_dual = dual_module(regular_module(ae.algebra, Side::right));
  auto iv = graded_iso(as, ae_dual, budget, rng);
  switch (iv.outcome) {
    case IsoVerdict::Outcome::isomorphic: {
      // lambda(w) = theta(w_sigma)(1) with theta: A_sigma -> A_e^*.
      const auto idx = a.component(sigma);
      const Matrix& theta = iv.witness->matrix;
      Vector lambda = zero_vector(a.field(), a.dim());
      for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t q = 0; q < ae.embedding.size(); ++q)
          if (!theta(q, k).is_zero()) lambda[idx[k]] += theta(q, k) * ae.algebra.unit()[q];
      return yes_with(a, "component", form_certificate(a, sigma, form_from_functional(a, lambda)));
    }
    case IsoVerdict::Outcome::certified_absent:
      return certified_no("component", kind_of(iv.obstruction), "A_sigma is not isomorphic to A_e^*: " + iv.reason);
    case IsoVerdict::Outcome::probabilistic_absent:
      return uncertified("component", *iv.error_bound, iv.reason);
  }
  return {};
}

Verdict combine(std::vector<Verdict> vs) {
  const Verdict* yes = nullptr;
  const Verdict* no = nullptr;
  for (const auto& v : vs) {
    if (v.outcome == Outcome::yes && !yes) yes = &v;
    // Prefer a refutation that comes with a concrete witness vector.
    if (v.outcome == Outcome::no && v.certified() && (!no || (!no->refutation->witness && v.refutation->witness)))
      no = &v;
  }
  if (yes && no)
    throw InconsistencyError("criteria disagree: " + yes->method + " says yes, " + no->method +
                             " says no (" + no->refutation->detail + ")");
  const Verdict* pick = yes ? yes : no;
  if (!pick) {
    for (const auto& v : vs)
      if (!pick || (v.error_bound && pick->error_bound && *v.error_bound < *pick->error_bound)) pick = &v;
  }
  Verdict out = *pick;
  out.method = "all:" + pick->method;
  return out;
}

FaithfulnessResult faithful(const GradedAlgebra& a, GroupElement sigma, bool left) {
  const auto& g = a.group();
  const std::size_t d = a.dim();
  FaithfulnessResult out;
  for (auto x : a.support()) {
    const auto idx = a.component(x);
    const GroupElement h = left ? g.mul(sigma, g.inv(x)) : g.mul(g.inv(x), sigma);
    const auto others = a.component(h);
    Matrix stacked(a.field(), others.size() * d, idx.size());
    for (std::size_t k = 0; k < others.size(); ++k) {
      const Matrix& act = left ? a.left_action(others[k]) : a.right_action(others[k]);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) stacked(k * d + r, c) = act(r, idx[c]);
    }
    const auto ker = kernel_basis(stacked);
    if (!ker.empty()) {
      Vector w = zero_vector(a.field(), d);
      for (std::size_t c = 0; c < idx.size(); ++c) w[idx[c]] = ker[0][c];
      out.faithful = false;
      out.witness = std::move(w);
      out.witness_degree = x;
      return out;
    }
  }
  return out;
}

Verdict as_ungraded(Verdict v) {
  if (v.certificate) v.certificate->scope = Scope::ungraded;
  return v;
}

}  // namespace

FaithfulnessResult left_sigma_faithful(const GradedAlgebra& a, GroupElement sigma) {
  return faithful(a, sigma, true);
}

FaithfulnessResult right_sigma_faithful(const GradedAlgebra& a, GroupElement sigma) {
  return faithful(a, sigma, false);
}

Verdict is_sigma_graded_frobenius(const GradedAlgebra& a, GroupElement sigma, Method method,
                                  const SearchBudget& budget, Rng& rng) {
  if (sigma >= a.group().order()) throw std::out_of_range("sigma is not a group element");
  switch (method) {
    case Method::iso: return by_iso(a, sigma, budget, rng);
    case Method::form: return by_form(a, sigma, budget, rng);
    case Method::component: return by_component(a, sigma, budget, rng);
    case Method::all: {
      std::vector<Verdict> vs;
      vs.push_back(by_form(a, sigma, budget, rng));
      vs.push_back(by_iso(a, sigma, budget, rng));
      vs.push_back(by_component(a, sigma, budget, rng));
      return combine(std::move(vs));
    }
  }
  return {};
}

Verdict is_sigma_graded_frobenius_right(const GradedAlgebra& a, GroupElement sigma,
                                        const SearchBudget& budget, Rng& rng) {
  const GradedModule src = suspend_right(regular_module(a, Side::right), sigma);
  const GradedModule dst = dual_module(regular_module(a, Side::left));
  auto iv = graded_iso(src, dst, budget, rng);
  switch (iv.outcome) {
    case IsoVerdict::Outcome::isomorphic:
      // phi: (sigma)A -> A^* gives B(x, y) = phi(x)(y), the transposed witness.
      return yes_with(a, "iso-right", form_certificate(a, sigma, iv.witness->matrix.transpose()));
    case IsoVerdict::Outcome::certified_absent:
      return certified_no("iso-right", kind_of(iv.obstruction), iv.reason);
    case IsoVerdict::Outcome::probabilistic_absent:
      return uncertified("iso-right", *iv.error_bound, iv.reason);
  }
  return {};
}

InertiaResult inertia_group(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng) {
  InertiaResult out;
  const GradedModule reg = regular_module(a, Side::left);
  for (GroupElement g = 0; g < a.group().order(); ++g) {
    auto iv = graded_iso(suspend_left(reg, g), reg, budget, rng);
    if (iv.outcome == IsoVerdict::Outcome::isomorphic) {
      out.elements.push_back(g);
      out.witnesses.emplace(g, std::move(*iv.witness));
    } else if (iv.outcome == IsoVerdict::Outcome::probabilistic_absent) {
      out.uncertain.push_back(g);
    }
  }
  if (out.uncertain.empty() && !a.group().is_subgroup(out.elements))
    throw InconsistencyError("inertia group is not a subgroup");
  return out;
}

ScanResult scan_sigma(const GradedAlgebra& a, Method method, const SearchBudget& budget, Rng& rng) {
  ScanResult out;
  bool all_certified = true;
  for (GroupElement s = 0; s < a.group().order(); ++s) {
    out.verdicts.push_back(is_sigma_graded_frobenius(a, s, method, budget, rng));
    if (out.verdicts.back().outcome == Outcome::yes) out.yes_set.push_back(s);
    all_certified = all_certified && out.verdicts.back().certified();
  }
  out.inertia = inertia_group(a, budget, rng);
  if (all_certified && out.inertia.uncertain.empty()) {
    out.coset_checked = true;
    if (!out.yes_set.empty() && a.group().left_coset(out.yes_set[0], out.inertia.elements) != out.yes_set)
      throw InconsistencyError("sigma-graded Frobenius elements do not form a coset of the inertia group");
  }
  return out;
}

Verdict is_graded_symmetric(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  if (d == 0) {
    return yes_with(a, "trace", Certificate{CertificateKind::trace_functional, a.group().neutral(), f,
                                            Scope::graded, Matrix(f, 1, 0)});
  }
  // Rows: lambda(b_i b_j - b_j b_i) = 0 and lambda(b_t) = 0 off degree e.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector r = zero_vector(f, d);
      for (const auto& t : a.product(i, j)) r[t.index] += t.coeff;
      for (const auto& t : a.product(j, i)) r[t.index] -= t.coeff;
      if (!is_zero_vector(r)) rows.push_back(std::move(r));
    }
  for (std::size_t t = 0; t < d; ++t)
    if (a.degree(t) != a.group().neutral()) rows.push_back(unit_vector(f, d, t));
  const auto lambdas = kernel_basis(Matrix::from_rows(f, rows, d));
  if (lambdas.empty())
    return certified_no("trace", RefutationKind::certified_determinant_zero, "only the zero functional qualifies");

  std::vector<Matrix> grams;
  for (const auto& l : lambdas) grams.push_back(form_from_functional(a, l));
  auto gi = generic_invertible(grams, budget, rng);
  switch (gi.outcome) {
    case GenericInvertibilityVerdict::Outcome::witness_found: {
      Matrix lambda(f, 1, d);
      for (std::size_t k = 0; k < lambdas.size(); ++k)
        for (std::size_t t = 0; t < d; ++t) lambda(0, t) += gi.coefficients[k] * lambdas[k][t];
      return yes_with(a, "trace", Certificate{CertificateKind::trace_functional, a.group().neutral(), f,
                                              Scope::graded, std::move(lambda)});
    }
    case GenericInvertibilityVerdict::Outcome::certified_absent:
      return certified_no("trace", RefutationKind::certified_determinant_zero,
                          "every admissible functional induces a degenerate form");
    case GenericInvertibilityVerdict::Outcome::probabilistic_absent:
      return uncertified("trace", *gi.error_bound,
                         "no admissible functional with a non-degenerate form in " +
                             std::to_string(gi.trials_used) + " random trials");
  }
  return {};
}

Verdict is_frobenius(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng, Method method) {
  const GradedAlgebra u = forget_grading(a);
  return as_ungraded(is_sigma_graded_frobenius(u, u.group().neutral(), method, budget, rng));
}

Verdict is_symmetric(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng) {
  return as_ungraded(is_graded_symmetric(forget_grading(a), budget, rng));
}

StrongGradingResult is_strongly_graded(const GradedAlgebra& a) {
  const auto& g = a.group();
  StrongGradingResult out;
  for (GroupElement x = 0; x < g.order(); ++x) {
    Span span(a.field(), a.dim());
    for (auto i : a.component(x))
      for (auto j : a.component(g.inv(x))) {
        Vector v = zero_vector(a.field(), a.dim());
        for (const auto& t : a.product(i, j)) v[t.index] += t.coeff;
        span.add(v);
      }
    if (!span.contains(a.unit())) {
      out.strongly_graded = false;
      out.witness = x;
      return out;
    }
  }
  return out;
}

Vector hyperplane_functional(const GradedAlgebra& a, const Matrix& form) {
  Vector lambda = zero_vector(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.unit()[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) lambda[j] += a.unit()[i] * form(i, j);
  }
  return lambda;
}

bool hyperplane_criterion_holds(const GradedAlgebra& a, const Vector& lambda, GroupElement sigma) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    if (a.degree(i) != sigma && !lambda[i].is_zero()) return false;
  const Matrix gram = form_from_functional(a, lambda);
  for (GroupElement g = 0; g < a.group().order(); ++g) {
    const auto idx = a.component(g);
    if (idx.empty()) continue;
    // Homogeneous y of degree g with lambda(A y) = 0 spans a graded left
    // ideal inside ker lambda.
    Matrix block(a.field(), d, idx.size());
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = gram(r, idx[c]);
    if (!kernel_basis(block).empty()) return false;
  }
  return true;
}

}  // namespace gradfrob
