#include <doctest.h>

#include <vector>

#include "gradfrob/group.hpp"
#include "gradfrob/text_format.hpp"

using namespace gradfrob;

namespace {

/// S3 built by composing permutations, independent of symmetric_group_3().
FiniteGroup s3_from_permutations() {
  std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::vector<int>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    return std::size_t(99);
  };
  std::vector<std::size_t> table;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = a[b[i]];
      table.push_back(index(c));
    }
  return FiniteGroup::from_table(6, table, 0);
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic groups") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.inv(1) == 3);
  const FiniteGroup z1 = FiniteGroup::cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.neutral() == 0);
  CHECK(FiniteGroup::cyclic(2).mul(1, 1) == 0);
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), GroupError);
  CHECK(z4.spec() == "cyclic 4");
}

TEST_CASE("direct products") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const FiniteGroup v = FiniteGroup::product(z2, z2);
  CHECK(v.order() == 4);
  // (1,0) = 2, (0,1) = 1, (1,1) = 3.
  CHECK(v.mul(2, 1) == 3);
  for (GroupElement g = 0; g < 4; ++g) CHECK(v.mul(g, g) == v.neutral());
  const FiniteGroup g3 = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup());
  for (GroupElement a = 0; a < 3; ++a)
    for (GroupElement b = 0; b < 3; ++b) CHECK(g3.mul(a, b) == (a + b) % 3);
  CHECK(v.spec() == "product cyclic 2 x cyclic 2");
}

TEST_CASE("product order and projections") {
  const FiniteGroup g = FiniteGroup::cyclic(3), h = symmetric_group_3();
  const FiniteGroup p = FiniteGroup::product(g, h);
  CHECK(p.order() == 18);
  std::vector<GroupElement> pg(18), ph(18);
  for (GroupElement x = 0; x < 18; ++x) {
    pg[x] = x / 6;
    ph[x] = x % 6;
  }
  CHECK(is_homomorphism(p, g, pg));
  CHECK(is_homomorphism(p, h, ph));
}

TEST_CASE("tables are validated") {
  CHECK_NOTHROW(FiniteGroup::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0));
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}, 0), GroupError);
  CHECK(!group_table_violations(2, std::vector<std::size_t>{0, 1, 1, 1}, 0).empty());
  // Latin square without associativity: a loop of order 5.
  const std::vector<std::size_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto v = group_table_violations(5, loop, 0);
  REQUIRE(!v.empty());
  bool mentions_assoc = false;
  for (const auto& s : v) mentions_assoc |= s.find("associativ") != std::string::npos;
  CHECK(mentions_assoc);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 2}, 0), GroupError);
}

TEST_CASE("S3 is a non-abelian group") {
  const FiniteGroup s3 = s3_from_permutations();
  CHECK(!s3.is_abelian());
  CHECK(!symmetric_group_3().is_abelian());
  CHECK(symmetric_group_3().order() == 6);
  // The library's S3 satisfies all 216 associativity triples.
  const FiniteGroup lib = symmetric_group_3();
  for (GroupElement a = 0; a < 6; ++a)
    for (GroupElement b = 0; b < 6; ++b)
      for (GroupElement c = 0; c < 6; ++c) CHECK(lib.mul(lib.mul(a, b), c) == lib.mul(a, lib.mul(b, c)));
}

TEST_CASE("inverses") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(6), symmetric_group_3(),
                               FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))}) {
    for (GroupElement x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == g.neutral());
      CHECK(g.mul(g.inv(x), x) == g.neutral());
      CHECK(g.inv(g.inv(x)) == x);
    }
  }
}

TEST_CASE("closure and normality") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const std::vector<GroupElement> two{2};
  CHECK(z4.subgroup_closure(two) == std::vector<GroupElement>{0, 2});
  CHECK(z4.subgroup_closure({}) == std::vector<GroupElement>{0});

  const FiniteGroup s3 = s3_from_permutations();
  // Element 1 is the transposition (1 2).
  const std::vector<GroupElement> t{1};
  const auto h = s3.subgroup_closure(t);
  CHECK(h.size() == 2);
  CHECK(!s3.is_normal(h));
  // A3 = {id, (0 1 2), (0 2 1)} = {0, 3, 4} in this labelling.
  const std::vector<GroupElement> three{3};
  const auto a3 = s3.subgroup_closure(three);
  CHECK(a3 == std::vector<GroupElement>{0, 3, 4});
  CHECK(s3.is_normal(a3));
  CHECK(s3.subgroups().size() == 6);
  CHECK(z4.left_coset(1, std::vector<GroupElement>{0, 2}) == std::vector<GroupElement>{1, 3});
}

TEST_CASE("subgroups and quotients") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  const std::vector<GroupElement> h{0, 2, 4};
  const Subgroup s = make_subgroup(z6, h);
  CHECK(s.group.order() == 3);
  CHECK(s.embedding == h);
  const Quotient q = make_quotient(z6, h);
  CHECK(q.group.order() == 2);
  CHECK(q.coset_of[3] == q.coset_of[1]);
  CHECK(q.coset_of[3] != q.coset_of[0]);
  CHECK_THROWS_AS(make_subgroup(z6, std::vector<GroupElement>{0, 1}), GroupError);
  const FiniteGroup s3 = symmetric_group_3();
  CHECK_THROWS_AS(make_quotient(s3, s3.subgroup_closure(std::vector<GroupElement>{3})), GroupError);
}

TEST_CASE("group spec parsing round trips") {
  for (const char* spec : {"cyclic 5", "product cyclic 2 x cyclic 3", "product cyclic 2 x product cyclic 2 x cyclic 2"}) {
    const FiniteGroup g = parse_group_spec(spec);
    CHECK(g.spec() == spec);
  }
  const FiniteGroup t = parse_group_spec(symmetric_group_3().spec());
  CHECK(t == symmetric_group_3());
  CHECK(parse_group_shorthand("Z2xZ2") == FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  CHECK(parse_group_shorthand("C4") == FiniteGroup::cyclic(4));
  CHECK_THROWS(parse_group_spec("cyclic"));
  CHECK_THROWS(parse_group_spec("dihedral 4"));
  CHECK_THROWS(parse_group_shorthand("Q8"));
}

}
