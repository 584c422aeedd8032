#include "gradfrob/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace gradfrob {

struct FiniteGroup::Impl {
  std::size_t n = 1;
  std::vector<std::size_t> table{0};
  std::size_t neutral = 0;
  std::vector<std::size_t> inverse{0};
  std::string spec = "cyclic 1";
};

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

}  // namespace

std::vector<std::string> group_table_violations(std::size_t n, std::span<const std::size_t> table,
                                                std::size_t neutral) {
  std::vector<std::string> out;
  if (n == 0) return {"group order must be positive"};
  if (table.size() != n * n) {
    return {"table has " + std::to_string(table.size()) + " entries, expected " +
            std::to_string(n * n)};
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      return {"entry " + std::to_string(table[i]) + " at position " + std::to_string(i) +
              " is out of range"};
    }
  }
  if (neutral >= n) return {"neutral element out of range"};
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[at(a, b)]) {
        out.push_back("not a Latin square: row " + std::to_string(a) + " repeats " +
                      std::to_string(at(a, b)));
        break;
      }
      row[at(a, b)] = true;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (col[at(b, a)]) {
        out.push_back("not a Latin square: column " + std::to_string(a) + " repeats " +
                      std::to_string(at(b, a)));
        break;
      }
      col[at(b, a)] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (at(neutral, a) != a || at(a, neutral) != a) {
      out.push_back("no identity: " + std::to_string(neutral) + " does not fix " + std::to_string(a));
      break;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == neutral && at(b, a) == neutral;
    if (!found) {
      out.push_back("missing inverse for " + std::to_string(a));
      break;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          out.push_back("non-associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
          return out;
        }
      }
  return out;
}

FiniteGroup::FiniteGroup() : impl_(std::make_shared<Impl>()) {}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group of order 0");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->table.resize(n * n);
  impl->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) impl->table[a * n + b] = (a + b) % n;
    impl->inverse[a] = (n - a) % n;
  }
  impl->spec = "cyclic " + std::to_string(n);
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->table.resize(n * n);
  impl->inverse.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      impl->table[x * n + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
    }
    impl->inverse[x] = g.inv(x / nh) * nh + h.inv(x % nh);
  }
  impl->neutral = g.neutral() * nh + h.neutral();
  impl->spec = "product " + g.spec() + " x " + h.spec();
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<std::size_t> table,
                                    std::size_t neutral) {
  const auto violations = group_table_violations(n, table, neutral);
  if (!violations.empty()) {
    std::string msg = "invalid group table";
    for (const auto& v : violations) msg += "; " + v;
    throw GroupError(msg);
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->neutral = neutral;
  impl->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == neutral) impl->inverse[a] = b;

  // Relabel so that the neutral element is 0 when rendering as a table.
  if (neutral == 0) {
    impl->spec = "table " + std::to_string(n) + " " + join(table);
  } else {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i == 0 ? neutral : (i == neutral ? 0 : i);
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = perm[table[perm[a] * n + perm[b]]];
    impl->spec = "table " + std::to_string(n) + " " + join(t);
  }
  impl->table = std::move(table);
  return FiniteGroup(std::move(impl));
}

std::size_t FiniteGroup::order() const noexcept { return impl_->n; }
GroupElement FiniteGroup::neutral() const noexcept { return impl_->neutral; }

GroupElement FiniteGroup::mul(GroupElement a, GroupElement b) const {
  if (a >= impl_->n || b >= impl_->n) throw GroupError("group element out of range");
  return impl_->table[a * impl_->n + b];
}

GroupElement FiniteGroup::inv(GroupElement a) const {
  if (a >= impl_->n) throw GroupError("group element out of range");
  return impl_->inverse[a];
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::string FiniteGroup::spec() const { return impl_->spec; }

std::vector<GroupElement> FiniteGroup::subgroup_closure(
    std::span<const GroupElement> generators) const {
  std::vector<bool> in(order(), false);
  std::vector<GroupElement> members{neutral()};
  in[neutral()] = true;
  for (auto g : generators) {
    if (g >= order()) throw GroupError("generator out of range");
  }
  // Finite group: closure under multiplication by generators suffices.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto g : generators) {
      const auto x = mul(members[k], g);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::is_subgroup(std::span<const GroupElement> subset) const {
  std::vector<bool> in(order(), false);
  for (auto g : subset) {
    if (g >= order()) return false;
    in[g] = true;
  }
  if (subset.empty() || !in[neutral()]) return false;
  for (auto a : subset)
    for (auto b : subset)
      if (!in[mul(a, b)]) return false;
  return true;
}

bool FiniteGroup::is_normal(std::span<const GroupElement> subgroup) const {
  std::vector<bool> in(order(), false);
  for (auto h : subgroup) in[h] = true;
  for (std::size_t g = 0; g < order(); ++g)
    for (auto h : subgroup)
      if (!in[mul(mul(g, h), inv(g))]) return false;
  return true;
}

std::vector<GroupElement> FiniteGroup::left_coset(GroupElement g,
                                                  std::span<const GroupElement> subgroup) const {
  std::vector<GroupElement> out;
  for (auto h : subgroup) out.push_back(mul(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<GroupElement>> FiniteGroup::subgroups() const {
  std::vector<std::vector<GroupElement>> found{subgroup_closure({})};
  // Every subgroup of a group this small is reached by adding generators one
  // at a time to already-found subgroups.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t g = 0; g < order(); ++g) {
      std::vector<GroupElement> gens = found[k];
      gens.push_back(g);
      auto h = subgroup_closure(gens);
      if (std::find(found.begin(), found.end(), h) == found.end()) found.push_back(std::move(h));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return found;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.impl_ == b.impl_ || (a.impl_->n == b.impl_->n && a.impl_->neutral == b.impl_->neutral &&
                                a.impl_->table == b.impl_->table);
}

Subgroup make_subgroup(const FiniteGroup& g, std::span<const GroupElement> elements) {
  std::vector<GroupElement> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!g.is_subgroup(sorted)) throw GroupError("subset is not closed under the group law");
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  const std::size_t n = sorted.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(g.mul(sorted[a], sorted[b]));
  return Subgroup{FiniteGroup::from_table(n, std::move(table), index.at(g.neutral())), sorted};
}

Quotient make_quotient(const FiniteGroup& g, std::span<const GroupElement> normal) {
  if (!g.is_subgroup(normal)) throw GroupError("quotient by a non-subgroup");
  if (!g.is_normal(normal)) throw GroupError("quotient by a subgroup that is not normal");
  std::vector<GroupElement> rep_of(g.order());
  std::vector<GroupElement> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto coset = g.left_coset(x, normal);
    if (coset.front() == x) reps.push_back(x);
    rep_of[x] = coset.front();
  }
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;
  const std::size_t n = reps.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(rep_of[g.mul(reps[a], reps[b])]);
  Quotient q{FiniteGroup::from_table(n, std::move(table), index.at(rep_of[g.neutral()])), {}};
  q.coset_of.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) q.coset_of[x] = index.at(rep_of[x]);
  return q;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const GroupElement> f) {
  if (f.size() != g.order()) return false;
  for (auto x : f)
    if (x >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

FiniteGroup symmetric_group_3() {
  // Permutations of {0,1,2} in a fixed order; identity first.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                 {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::size_t> table;
  for (const auto& p : perms)
    for (const auto& q : perms) {
      std::array<int, 3> pq{p[q[0]], p[q[1]], p[q[2]]};
      table.push_back(std::find(perms.begin(), perms.end(), pq) - perms.begin());
    }
  return FiniteGroup::from_table(6, std::move(table), 0);
}

}  // namespace gradfrob
