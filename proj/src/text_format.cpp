#include "gradfrob/text_format.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace gradfrob {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t to_index(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string("expected ") + what + ", got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " out of range: " + tok);
  }
}

FiniteGroup parse_group_at(const std::vector<std::string>& w, std::size_t& pos) {
  if (pos >= w.size()) throw std::invalid_argument("truncated group specification");
  const std::string kind = w[pos++];
  if (kind == "cyclic") {
    if (pos >= w.size()) throw std::invalid_argument("cyclic: missing order");
    return FiniteGroup::cyclic(to_index(w[pos++], "group order"));
  }
  if (kind == "product") {
    FiniteGroup g = parse_group_at(w, pos);
    if (pos >= w.size() || w[pos] != "x") throw std::invalid_argument("product: expected 'x'");
    ++pos;
    FiniteGroup h = parse_group_at(w, pos);
    return FiniteGroup::product(g, h);
  }
  if (kind == "table") {
    if (pos >= w.size()) throw std::invalid_argument("table: missing order");
    const std::size_t n = to_index(w[pos++], "group order");
    if (n == 0 || n > 4096) throw std::invalid_argument("table: order must be between 1 and 4096");
    std::vector<std::size_t> table;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (pos >= w.size())
        throw std::invalid_argument("table: expected " + std::to_string(n * n) + " entries, found " +
                                    std::to_string(k));
      table.push_back(to_index(w[pos++], "table entry"));
    }
    return FiniteGroup::from_table(n, std::move(table), 0);
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  const auto w = words(spec);
  std::size_t pos = 0;
  FiniteGroup g = parse_group_at(w, pos);
  if (pos != w.size()) throw std::invalid_argument("trailing words after group specification");
  return g;
}

FiniteGroup parse_group_shorthand(std::string_view text) {
  if (text.find(' ') != std::string_view::npos) return parse_group_spec(text);
  std::vector<FiniteGroup> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('x', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string part(text.substr(pos, next - pos));
    if (part == "S3") {
      factors.push_back(symmetric_group_3());
    } else if (part == "1") {
      factors.push_back(FiniteGroup());
    } else if (part.size() > 1 && (part[0] == 'Z' || part[0] == 'C')) {
      factors.push_back(FiniteGroup::cyclic(to_index(part.substr(1), "group order")));
    } else {
      throw std::invalid_argument("unknown group '" + std::string(text) + "' (try Z4, Z2xZ2, S3)");
    }
    pos = next + 1;
  }
  FiniteGroup g = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) g = FiniteGroup::product(g, factors[k]);
  return g;
}

namespace {

GradedAlgebra parse_algebra(std::string_view text, bool validate) {
  std::istringstream in{std::string(text)};
  std::optional<Field> field;
  std::optional<FiniteGroup> group;
  std::optional<std::size_t> dim;
  std::optional<GradedAlgebra::Builder> builder;
  std::size_t unit_line = 0;
  std::vector<std::optional<std::size_t>> deg_line;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> sc_line;
  std::vector<GroupElement> deg;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto w = words(raw);
    if (w.empty()) continue;
    const std::string& key = w[0];
    auto need = [&](std::size_t n) {
      if (w.size() != n + 1)
        throw ParseError(line, "'" + key + "' takes " + std::to_string(n) + " value(s), found " +
                                   std::to_string(w.size() - 1));
    };
    auto header_done = [&] {
      if (!field || !group || !dim) throw ParseError(line, "'" + key + "' before field, group and dim");
      if (!builder) {
        builder.emplace(*field, *group, *dim);
        deg.assign(*dim, group->neutral());
        deg_line.assign(*dim, std::nullopt);
      }
    };
    auto index = [&](const std::string& tok, const char* what, std::size_t bound) {
      std::size_t v;
      try {
        v = to_index(tok, what);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      if (v >= bound)
        throw ParseError(line, std::string(what) + " " + tok + " out of range (must be < " + std::to_string(bound) + ")");
      return v;
    };
    auto scalar = [&](const std::string& tok) {
      try {
        return parse_scalar(tok, *field);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
    };

    try {
      if (key == "field") {
        need(1);
        if (field) throw ParseError(line, "duplicate 'field'");
        if (builder) throw ParseError(line, "'field' after basis data");
        try {
          field = Field::parse(w[1]);
        } catch (const std::exception& e) {
          throw ParseError(line, e.what());
        }
      } else if (key == "group") {
        if (group) throw ParseError(line, "duplicate 'group'");
        if (builder) throw ParseError(line, "'group' after basis data");
        try {
          std::size_t pos = 1;
          group = parse_group_at(w, pos);
          if (pos != w.size()) throw std::invalid_argument("trailing words after group specification");
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(line, e.what());
        }
      } else if (key == "dim") {
        need(1);
        if (dim) throw ParseError(line, "duplicate 'dim'");
        const std::size_t d = index(w[1], "dimension", 4097);
        dim = d;
      } else if (key == "deg") {
        need(2);
        header_done();
        const std::size_t i = index(w[1], "basis index", *dim);
        if (deg_line[i]) throw ParseError(line, "degree of b" + w[1] + " already set on line " + std::to_string(*deg_line[i]));
        deg[i] = index(w[2], "group element", group->order());
        deg_line[i] = line;
        builder->degree(i, deg[i]);
      } else if (key == "unit") {
        header_done();
        need(*dim);
        if (unit_line) throw ParseError(line, "duplicate 'unit'");
        Vector u;
        for (std::size_t k = 1; k < w.size(); ++k) u.push_back(scalar(w[k]));
        builder->unit(std::move(u));
        unit_line = line;
      } else if (key == "sc") {
        need(4);
        header_done();
        const std::size_t i = index(w[1], "basis index", *dim);
        const std::size_t j = index(w[2], "basis index", *dim);
        const std::size_t k = index(w[3], "basis index", *dim);
        builder->product(i, j, k, scalar(w[4]));
        sc_line.emplace(std::make_tuple(i, j, k), line);
      } else {
        throw ParseError(line, "unknown keyword '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  }

  if (!field) throw ParseError(0, "missing 'field' line");
  if (!group) throw ParseError(0, "missing 'group' line");
  if (!dim) throw ParseError(0, "missing 'dim' line");
  if (!builder) {
    builder.emplace(*field, *group, *dim);
    deg.assign(*dim, group->neutral());
  }
  if (!unit_line && *dim > 0) throw ParseError(0, "missing 'unit' line");

  GradedAlgebra a = builder->build_unchecked();
  if (!validate) return a;
  // Grading violations can be pinned to the sc line that introduced them.
  for (std::size_t i = 0; i < *dim; ++i)
    for (std::size_t j = 0; j < *dim; ++j)
      for (const auto& t : a.product(i, j)) {
        const GroupElement want = group->mul(deg[i], deg[j]);
        if (deg[t.index] != want) {
          auto it = sc_line.find({i, j, t.index});
          throw ParseError(it == sc_line.end() ? 0 : it->second,
                           "grading violated: b" + std::to_string(i) + "*b" + std::to_string(j) +
                               " has a component on b" + std::to_string(t.index) + " of degree " +
                               std::to_string(deg[t.index]) + ", expected " + std::to_string(want));
        }
      }
  auto violations = validate_algebra(a);
  if (!violations.empty()) {
    std::string msg = "invalid algebra: " + violations[0];
    if (violations.size() > 1) msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    const bool about_unit = violations[0].find("unit") != std::string::npos;
    throw ParseError(about_unit ? unit_line : 0, msg);
  }
  return a;
}

}  // namespace

GradedAlgebra parse_algebra_file(std::string_view text) { return parse_algebra(text, true); }

GradedAlgebra parse_algebra_unvalidated(std::string_view text) { return parse_algebra(text, false); }

std::string render_algebra(const GradedAlgebra& a) {
  std::ostringstream out;
  out << "field " << a.field().to_string() << '\n'
      << "group " << a.group().spec() << '\n'
      << "dim " << a.dim() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) out << "deg " << i << ' ' << a.degree(i) << '\n';
  out << "unit";
  for (const auto& x : a.unit()) out << ' ' << x.to_string();
  out << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j))
        out << "sc " << i << ' ' << j << ' ' << t.index << ' ' << t.coeff.to_string() << '\n';
  return out.str();
}

}  // namespace gradfrob
