#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tpp {

/// A finite group held as a dense multiplication table.
///
/// Element 0 is always the identity; every constructor relabels its input
/// so this holds. Construction validates the full group axioms (Latin
/// square, two-sided identity and inverses, associativity), so an instance
/// that exists is a group. Instances are immutable and safe to share
/// between threads.
class Group {
public:
  static constexpr int kMaxOrder = 2048;

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  bool abelian() const { return abelian_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// Row of the multiplication table, for tight inner loops.
  const std::uint16_t* row(int a) const { return table_.data() + static_cast<std::size_t>(a) * n_; }

  int element_order(int a) const;
  /// Sorted multiset of element orders; equal profiles are a cheap
  /// necessary condition for isomorphism.
  std::vector<int> order_profile() const;

private:
  Group() = default;
  friend Group group_from_table(const std::vector<std::vector<int>>& rows, std::string name);

  std::string name_;
  int n_ = 0;
  std::vector<std::uint16_t> table_;  // n*n, row-major
  std::vector<std::uint16_t> inv_;
  bool abelian_ = false;
};

/// Builds a group from explicit table rows (table[i][j] = i*j). The identity
/// is relocated to index 0 if needed. Throws NotAGroup with a reason when
/// any axiom fails.
Group group_from_table(const std::vector<std::vector<int>>& rows, std::string name);

/// Closes a set of permutations (given as image arrays over the same point
/// set) under composition and returns the generated group, identity first.
Group group_from_permutations(const std::vector<std::vector<int>>& generators,
                              std::string name, int closure_cap = Group::kMaxOrder);

/// Catalog constructors: cyclic(n), dihedral(2m), symmetric(k<=6).
/// direct_product is only reachable through group_from_constructor since it
/// takes sub-specs, not integers.
Group named_group(const std::string& constructor, const std::vector<int>& params);

Group direct_product(const Group& a, const Group& b, std::string name = "");

/// Parses and builds a possibly nested constructor expression, e.g.
/// "dihedral(10)" or "direct_product(cyclic(2),cyclic(2))".
Group group_from_constructor(const std::string& expr);

}  // namespace tpp
