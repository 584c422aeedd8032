#pragma once

// Finite grading groups given by explicit multiplication tables.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradfrob {

using GroupElement = std::size_t;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated group axioms of an n x n table (row-major, entries are indices).
/// Empty iff the table with the given neutral element is a group.
std::vector<std::string> group_table_violations(std::size_t n, std::span<const std::size_t> table,
                                                std::size_t neutral);

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Z_n with i.j = (i + j) mod n. Throws GroupError for n = 0.
  static FiniteGroup cyclic(std::size_t n);
  /// Direct product; the pair (a, b) has index a * order(h) + b.
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
  /// Throws GroupError listing every violated axiom.
  static FiniteGroup from_table(std::size_t n, std::vector<std::size_t> table, std::size_t neutral);

  std::size_t order() const noexcept;
  GroupElement neutral() const noexcept;
  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inv(GroupElement a) const;
  bool is_abelian() const;
  bool commute(GroupElement a, GroupElement b) const { return mul(a, b) == mul(b, a); }

  /// Text-format spelling: "cyclic 4", "product cyclic 2 x cyclic 2",
  /// or "table n <entries>" (neutral element must then be 0).
  std::string spec() const;

  /// Sorted elements of the subgroup generated; {e} for no generators.
  std::vector<GroupElement> subgroup_closure(std::span<const GroupElement> generators) const;
  bool is_subgroup(std::span<const GroupElement> subset) const;
  /// Requires a subgroup.
  bool is_normal(std::span<const GroupElement> subgroup) const;
  /// g * H, sorted.
  std::vector<GroupElement> left_coset(GroupElement g, std::span<const GroupElement> subgroup) const;
  /// Every subgroup, each sorted. Fine for the small groups used here.
  std::vector<std::vector<GroupElement>> subgroups() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A subgroup H <= G realized as a group in its own right.
struct Subgroup {
  FiniteGroup group;
  /// embedding[i] is the element of G represented by element i of H.
  std::vector<GroupElement> embedding;
};

/// Throws GroupError when `elements` is not a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::span<const GroupElement> elements);

/// G/N with cosets numbered by their smallest element.
struct Quotient {
  FiniteGroup group;
  /// coset_of[g] is the quotient element containing g.
  std::vector<GroupElement> coset_of;
};

/// Throws GroupError unless `normal` is a normal subgroup.
Quotient make_quotient(const FiniteGroup& g, std::span<const GroupElement> normal);

/// True when f: G -> H (f[g] = image) is a homomorphism.
bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const GroupElement> f);

/// S3 as permutations of {0, 1, 2}: e, the two 3-cycles, then the three
/// transpositions.
FiniteGroup symmetric_group_3();

}  // namespace gradfrob
