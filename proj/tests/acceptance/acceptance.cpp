// Acceptance run: fixture verdicts, then the property suites over a random
// corpus. One PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>

#include "property_checks.hpp"

using namespace gradfrob;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail = "") {
  std::printf("criterion %d: %s  %s%s%s\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

bool is(const Verdict& v, Outcome o) { return v.outcome == o && v.certified(); }

bool verified(const GradedAlgebra& a, const Verdict& v) {
  return v.outcome != Outcome::yes || (v.certificate && verify_certificate(a, *v.certificate).accepted);
}

using Yes = std::vector<GroupElement>;

bool fixture_nakayama_nesbitt() {
  Rng rng(1);
  const Field q = Field::rationals();
  const GradedAlgebra a = nakayama_nesbitt(Scalar::from_int(q, 1), Scalar::from_int(q, 2));
  const GradedAlgebra b = nakayama_nesbitt(Scalar::from_int(q, 1), Scalar::from_int(q, 1));
  const ScanResult s = scan_sigma(a, Method::all, {}, rng);
  const Verdict f = is_frobenius(a, {}, rng), sym = is_symmetric(a, {}, rng);
  const Verdict sym11 = is_symmetric(b, {}, rng), gs11 = is_graded_symmetric(b, {}, rng);
  return s.yes_set == Yes{3} && is(f, Outcome::yes) && is(sym, Outcome::no) && is(sym11, Outcome::yes) &&
         is(gs11, Outcome::no) && verified(a, f) && verified(b, sym11);
}

bool fixture_trivial_extension() {
  Rng rng(2);
  const GradedAlgebra a = trivial_extension(truncated_polynomial(Field::rationals(), 2));
  const ScanResult s = scan_sigma(a, Method::all, {}, rng);
  const Verdict sym = is_symmetric(a, {}, rng), gs = is_graded_symmetric(a, {}, rng);
  return !left_sigma_faithful(a, 0).faithful && left_sigma_faithful(a, 1).faithful && s.yes_set == Yes{1} &&
         is(sym, Outcome::yes) && is(gs, Outcome::no) && verified(a, sym);
}

bool fixture_split() {
  Rng rng(3);
  const GradedAlgebra k = truncated_polynomial(Field::rationals(), 1);
  const GradedAlgebra a = trivial_extension_split(k, k);
  const ScanResult s = scan_sigma(a, Method::all, {}, rng);
  const Verdict f = is_frobenius(a, {}, rng);
  return s.yes_set.empty() && is(f, Outcome::yes) && verified(a, f);
}

bool fixture_good_gradings() {
  Rng rng(4);
  const Field q = Field::rationals();
  bool ok = true;
  for (const auto& a : {matrix_good_grading(q, FiniteGroup::cyclic(2), {0, 1}),
                        matrix_good_grading(q, FiniteGroup::cyclic(3), {0, 1, 2})}) {
    const Verdict v = is_graded_symmetric(a, {}, rng);
    ok = ok && is(v, Outcome::yes) && v.certificate && v.certificate->kind == CertificateKind::trace_functional &&
         verified(a, v);
    // The literal trace is accepted too.
    const std::size_t n = a.dim() == 4 ? 2 : 3;
    Certificate tr{CertificateKind::trace_functional, 0, q, Scope::graded, Matrix(q, 1, a.dim())};
    for (std::size_t i = 0; i < n; ++i) tr.payload(0, i * n + i) = Scalar::one(q);
    ok = ok && verify_certificate(a, tr).accepted;
  }
  return ok;
}

bool fixture_fine_gradings() {
  Rng rng(5);
  bool ok = true;
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    const GradedAlgebra a = matrix_fine_grading(f, 2);
    const Verdict v = is_graded_symmetric(a, {}, rng);
    ok = ok && is_graded_division(a).outcome == GradedDivisionResult::Outcome::yes && is(v, Outcome::yes) &&
         verified(a, v);
  }
  return ok;
}

bool guarded_fixture(bool (*f)()) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::printf("  error: %s\n", e.what());
    return false;
  }
}

std::string summary(const props::Report& r, const std::vector<std::string>& names) {
  std::size_t checks = 0, bad = 0;
  for (const auto& n : names)
    if (auto it = r.by_name.find(n); it != r.by_name.end()) {
      checks += it->second.checks;
      bad += it->second.violations;
    }
  return std::to_string(checks) + " checks, " + std::to_string(bad) + " violations";
}

void examples(const props::Report& r, const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (auto it = r.by_name.find(n); it != r.by_name.end())
      for (const auto& e : it->second.examples) std::printf("  %s: %s\n", n.c_str(), e.c_str());
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  line(1, guarded_fixture(fixture_nakayama_nesbitt), "Nakayama-Nesbitt fixture");
  line(2, guarded_fixture(fixture_trivial_extension), "trivial extension of k[x]/(x^2)");
  line(3, guarded_fixture(fixture_split), "split trivial extension");
  line(4, guarded_fixture(fixture_good_gradings), "good gradings of M_2 and M_3");
  line(5, guarded_fixture(fixture_fine_gradings), "fine gradings of M_2 over F5 and Q");

  props::Report r;
  std::vector<props::Analysis> corpus;
  const std::uint64_t n = 240;
  for (std::uint64_t s = 0; s < n; ++s) {
    const Field f = s % 2 ? Field::prime(7) : Field::rationals();
    const GradedAlgebra a = random_graded_algebra(s, f);
    corpus.push_back(props::analyze(a, "random " + std::to_string(s), r, s));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& an = corpus[i];
    props::check_criterion_equivalence(an, r);
    props::check_randomized_path(an, r, i);
    props::check_certificates(an, r);
    props::check_structure(an, r, i);
    props::check_local_theorem(an, r);
  }
  // Tensor closure: corpus pairs over the same group and field, plus
  // trivially graded and group algebra partners.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& x = corpus[i];
    for (std::size_t j = i + 1; j < corpus.size() && j < i + 12; ++j)
      if (x.a.dim() * corpus[j].a.dim() <= 24) props::check_tensor(x, corpus[j], r, i * 1000 + j);
    if (x.a.dim() <= 4) {
      props::Analysis k2 = props::analyze(truncated_polynomial(x.a.field(), 2, x.a.group(), 0), "k[x]/x^2", r, i);
      props::check_tensor(x, k2, r, i);
      if (x.a.group().is_abelian() && x.a.dim() * x.a.group().order() <= 24) {
        props::Analysis kg = props::analyze(group_algebra(x.a.field(), x.a.group()), "group algebra", r, i + 1);
        props::check_tensor(x, kg, r, i + 1);
      }
    }
  }

  std::size_t max_dim = 0, max_order = 0, with_yes = 0, frobenius = 0;
  for (const auto& an : corpus) {
    max_dim = std::max(max_dim, an.a.dim());
    max_order = std::max(max_order, an.a.group().order());
    if (!props::yes_set(an).empty()) ++with_yes;
    if (an.frobenius && an.frobenius->outcome == Outcome::yes) ++frobenius;
  }
  std::printf("corpus: %zu algebras, dim <= %zu, |G| <= %zu, %zu with nonempty yes-set, %zu Frobenius\n",
              corpus.size(), max_dim, max_order, with_yes, frobenius);

  const std::vector<std::string> c6{"criterion equivalence", "error bound"};
  const bool ok6 = r.violations(c6) == 0 && r.inconsistency_events == 0 && corpus.size() >= 200;
  line(6, ok6, "criterion equivalence",
       std::to_string(corpus.size()) + " algebras, " + summary(r, c6) + ", " + std::to_string(r.inconsistency_events) +
           " inconsistency events");
  std::printf("  %zu randomized negatives over Q checked for the error bound\n", r["error bound"].checks);
  examples(r, c6);

  const std::vector<std::string> c7{"remark: graded implies ungraded Frobenius",
                                    "remark: subgroup restriction",
                                    "remark: coset structure",
                                    "remark: quotient grading",
                                    "left/right agreement",
                                    "strongly graded corollary",
                                    "graded division corollary",
                                    "graded division symmetric theorem",
                                    "graded symmetric implications",
                                    "tensor closure",
                                    "dual identities",
                                    "matrix closure"};
  line(7, r.violations(c7) == 0, "structural theorems", summary(r, c7));
  for (const auto& name : c7) {
    const auto& t = r[name];
    std::printf("  %-42s %6zu checks %4zu violations %4zu skipped\n", name.c_str(), t.checks, t.violations, t.skipped);
  }
  examples(r, c7);

  const std::vector<std::string> c8{"local ring theorem"};
  line(8, r.violations(c8) == 0, "local identity component",
       summary(r, c8) + ", " + std::to_string(r["local ring theorem"].skipped) + " undecided locality skipped");
  examples(r, c8);

  const std::vector<std::string> c9{"certificate round trip", "tamper rejection"};
  line(9, r.violations(c9) == 0 && r.certificates > 0, "certificate round trip",
       std::to_string(r.certificates) + " certificates, " + std::to_string(r.tampers) + " tampers (" +
           std::to_string(r.tampers_still_valid) + " still valid by the oracle), " + summary(r, c9));
  examples(r, c9);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1f s\n", failures ? "FAILED" : "all criteria passed", secs);
  return failures ? 1 : 0;
}
