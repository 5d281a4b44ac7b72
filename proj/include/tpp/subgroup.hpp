#pragma once

#include <vector>

#include "tpp/triple.hpp"

namespace tpp {

/// The complete subgroup lattice, sorted by descending cardinality (ties by
/// bit pattern). Always contains the trivial subgroup and the whole group.
struct SubgroupList {
  std::vector<GSet> subgroups;
};

SubgroupList enumerate_subgroups(const Group& g, int order_cap = 512);

/// Outcome of a capacity search. `exhaustive` is false when a cap stopped
/// the search before the space was covered.
struct CapacityResult {
  long long value;
  Triple witness;
  bool exhaustive;
};

/// Largest |S||T||U| over subgroup triples with the triple product
/// property, |S| >= |T| >= |U|. At least |G| (witness (G,1,1)). Ties are
/// broken toward the smallest canonical witness.
CapacityResult beta_g(const Group& g, const SubgroupList& subs);

/// Exact subset capacity by exhaustive search over basic triples. Right
/// translation invariance of Q makes the basic restriction lossless.
/// Practical only for very small groups.
CapacityResult beta_oracle(const Group& g, int order_cap = 12);

inline constexpr int kBetaOracleHardCap = 16;

}  // namespace tpp
