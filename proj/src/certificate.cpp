#include "gradfrob/certificate.hpp"

#include <sstream>

#include "gradfrob/algebra_ops.hpp"
#include "gradfrob/linalg.hpp"
#include "gradfrob/module.hpp"

namespace gradfrob {

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::iso_matrix: return "iso_matrix";
    case CertificateKind::bilinear_form: return "bilinear_form";
    case CertificateKind::trace_functional: return "trace_functional";
  }
  return "?";
}

std::string to_string(Scope s) { return s == Scope::graded ? "graded" : "ungraded"; }

std::string serialize_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "kind " << to_string(c.kind) << '\n'
      << "sigma " << c.sigma << '\n'
      << "field " << c.field.to_string() << '\n'
      << "scope " << to_string(c.scope) << '\n'
      << "dim " << c.payload.cols() << '\n';
  for (std::size_t r = 0; r < c.payload.rows(); ++r) {
    out << "row";
    for (const auto& x : c.payload.row(r)) out << ' ' << x.to_string();
    out << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw CertificateParseError("certificate line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a nonnegative integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    fail(line, "integer out of range: " + tok);
  }
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
  }
  const char* keys[] = {"kind", "sigma", "field", "scope", "dim"};
  if (lines.size() < 5) fail(line_no, "truncated certificate header");
  for (std::size_t k = 0; k < 5; ++k) {
    if (lines[k].second[0] != keys[k]) fail(lines[k].first, std::string("expected '") + keys[k] + "'");
    if (lines[k].second.size() != 2) fail(lines[k].first, "expected exactly one value");
  }
  Certificate c;
  const auto& kind = lines[0].second[1];
  if (kind == "bilinear_form") c.kind = CertificateKind::bilinear_form;
  else if (kind == "trace_functional") c.kind = CertificateKind::trace_functional;
  else if (kind == "iso_matrix") c.kind = CertificateKind::iso_matrix;
  else fail(lines[0].first, "unknown certificate kind '" + kind + "'");
  c.sigma = parse_index(lines[1].second[1], lines[1].first);
  try {
    c.field = Field::parse(lines[2].second[1]);
  } catch (const std::exception& e) {
    fail(lines[2].first, e.what());
  }
  const auto& scope = lines[3].second[1];
  if (scope == "graded") c.scope = Scope::graded;
  else if (scope == "ungraded") c.scope = Scope::ungraded;
  else fail(lines[3].first, "unknown scope '" + scope + "'");
  const std::size_t d = parse_index(lines[4].second[1], lines[4].first);
  const std::size_t rows = c.kind == CertificateKind::trace_functional ? 1 : d;
  if (lines.size() != 5 + rows)
    fail(lines.back().first, "expected " + std::to_string(rows) + " payload rows, found " +
                                 std::to_string(lines.size() - 5));
  c.payload = Matrix(c.field, rows, d);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& [ln, toks] = lines[5 + r];
    if (toks[0] != "row") fail(ln, "expected 'row'");
    if (toks.size() != d + 1) fail(ln, "row has " + std::to_string(toks.size() - 1) + " entries, expected " + std::to_string(d));
    for (std::size_t j = 0; j < d; ++j) {
      try {
        c.payload(r, j) = parse_scalar(toks[j + 1], c.field);
      } catch (const std::exception& e) {
        fail(ln, e.what());
      }
    }
  }
  return c;
}

namespace {

VerificationResult reject(std::string reason) { return {false, std::move(reason)}; }

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// B(u, v) for sparse u given as terms and basis vector index v.
Scalar form_on_terms(const Matrix& b, std::span<const Term> u, std::size_t v, bool left) {
  Scalar s = Scalar::zero(b.field());
  for (const auto& t : u) s += t.coeff * (left ? b(t.index, v) : b(v, t.index));
  return s;
}

VerificationResult verify_form(const GradedAlgebra& a, const Matrix& b, GroupElement sigma) {
  const std::size_t d = a.dim();
  if (rank(b) != d) return reject("form is degenerate (rank " + std::to_string(rank(b)) + " < " + std::to_string(d) + ")");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar lhs = form_on_terms(b, a.product(i, j), k, true);
        const Scalar rhs = form_on_terms(b, a.product(j, k), i, false);
        if (!(lhs == rhs)) return reject("associativity violated at triple " + triple(i, j, k));
      }
  const auto& g = a.group();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (g.mul(a.degree(i), a.degree(j)) != sigma && !b(i, j).is_zero())
        return reject("graded orthogonality violated at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return {true, {}};
}

VerificationResult verify_functional(const GradedAlgebra& a, const Matrix& lambda) {
  const std::size_t d = a.dim();
  auto value = [&](std::span<const Term> terms) {
    Scalar s = Scalar::zero(a.field());
    for (const auto& t : terms) s += t.coeff * lambda(0, t.index);
    return s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!(value(a.product(i, j)) == value(a.product(j, i))))
        return reject("commutator not annihilated at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (std::size_t i = 0; i < d; ++i)
    if (a.degree(i) != a.group().neutral() && !lambda(0, i).is_zero())
      return reject("functional nonzero on b" + std::to_string(i) + " outside degree e");
  Matrix gram(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = value(a.product(i, j));
  if (rank(gram) != d) return reject("induced form is degenerate");
  return {true, {}};
}

VerificationResult verify_iso(const GradedAlgebra& a, const Matrix& theta, GroupElement sigma) {
  const GradedModule src = suspend_left(regular_module(a, Side::left), sigma);
  const GradedModule dst = dual_module(regular_module(a, Side::right));
  const GradedLinearMap f{src, dst, theta};
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(dst.action(i) * theta == theta * src.action(i)))
      return reject("not a module map: fails to commute with b" + std::to_string(i));
  if (!is_degree_preserving(f)) return reject("not degree-preserving");
  if (rank(theta) != a.dim()) return reject("map is not invertible");
  return {true, {}};
}

}  // namespace

VerificationResult verify_certificate(const GradedAlgebra& algebra, const Certificate& c) {
  const GradedAlgebra a = c.scope == Scope::ungraded ? forget_grading(algebra) : algebra;
  if (!(c.field == a.field())) return reject("certificate field " + c.field.to_string() + " differs from algebra field " + a.field().to_string());
  if (c.sigma >= a.group().order()) return reject("sigma " + std::to_string(c.sigma) + " is not a group element");
  const std::size_t d = a.dim();
  const std::size_t rows = c.kind == CertificateKind::trace_functional ? 1 : d;
  if (c.payload.rows() != rows || c.payload.cols() != d || !(c.payload.field() == a.field()))
    return reject("malformed payload: expected " + std::to_string(rows) + "x" + std::to_string(d));
  switch (c.kind) {
    case CertificateKind::bilinear_form: return verify_form(a, c.payload, c.sigma);
    case CertificateKind::trace_functional:
      if (c.sigma != a.group().neutral()) return reject("trace functional certificates are for sigma = e");
      return verify_functional(a, c.payload);
    case CertificateKind::iso_matrix: return verify_iso(a, c.payload, c.sigma);
  }
  return reject("unknown certificate kind");
}

}  // namespace gradfrob
