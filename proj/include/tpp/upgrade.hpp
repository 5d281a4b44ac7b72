#pragma once

#include <optional>

#include "tpp/subgroup.hpp"
#include "tpp/triple.hpp"

namespace tpp {

enum class Place { S = 0, T = 1, U = 2 };

struct PlaceSet {
  bool s = false, t = false, u = false;

  bool contains(Place p) const { return p == Place::S ? s : p == Place::T ? t : u; }
  bool empty() const { return !s && !t && !u; }
  bool operator==(const PlaceSet&) const = default;
};

/// xi = |G| + 2 - |S| - |T| - |U|. Recomputed from the triple every time it
/// is needed; never cached across upgrades.
int xi(const Triple& tr);

/// Upgrade candidates for a subgroup triple: G \ (S u T u U).
GSet candidates_group(const Triple& tr);

/// Upgrade candidates at one place of a basic subset triple, e.g.
/// C(S) = G \ (S u Q(T) u Q(U)) and the rotated analogues for T and U.
GSet candidates_set(const Triple& tr, Place place);

/// Feasible upgrade places for a sorted subgroup triple. Combines the
/// quotient-sum bound (via xi) with the size bounds the upgraded triple
/// would have to satisfy:
///   S: (|S|+1)(|T|+|U|-1) <= |G|  and  |S| <= xi
///   T: |S|(|T|+|U|) <= |G|        and  |T| <= xi
///   U: |S|(|T|+|U|) <= |G|        and  |U| <= xi
/// Throws NotSorted when |S| >= |T| >= |U| fails.
PlaceSet is_group_upgrade_possible(const Triple& tr);

/// Feasible upgrade places for a sorted basic subset triple. Only the size
/// bounds apply; nothing as strong as the subgroup xi test exists here.
PlaceSet is_set_upgrade_possible(const Triple& tr);

/// Whether adjoining c to the subgroup X keeps the TPP, given P = product
/// of the other two subgroups: cX n P = {} and Xc^-1 n P = {}.
bool special_tpp_test_group(const GSet& x, int c, const GSet& p);

/// Subset analogue, with P = product of the other two quotient sets:
/// cX^-1 n P = {} and Xc^-1 n P = {}.
bool special_tpp_test_set(const GSet& x, int c, const GSet& p);

/// All one-element upgrades of a triple. Members keep the upgraded element
/// in place, so one factor of the size is incremented. `exhausted` is true
/// when every candidate was tested (always, for single steps).
struct UpgradeBatch {
  std::vector<Triple> triples;
  bool exhausted = true;
};

/// Every upgrade of a sorted subgroup TPP triple, scanning places S, T, U
/// and candidates in ascending element order. Each emitted triple is
/// re-verified against the definitional test.
UpgradeBatch upgrade_step_group(const Triple& tr);

/// First upgrade found probing places U, then T, then S (largest size gain
/// first under the sort order); candidates in ascending element order.
std::optional<Triple> upgrade_step_group_biggest(const Triple& tr);

UpgradeBatch upgrade_step_set(const Triple& tr);
std::optional<Triple> upgrade_step_set_biggest(const Triple& tr);

struct IterateCaps {
  std::size_t max_frontier = 1'000'000;
  std::size_t max_store = 1'000'000;
  std::optional<double> time_limit_s;  // off by default; breaks determinism
};

/// Breadth-first closure of upgrade_step_set over canonical forms starting
/// from the given TPP triples. Returns the largest size reached and its
/// witness; exhaustive is false when a cap cut the search short.
CapacityResult iterate_upgrades(const std::vector<Triple>& seeds, const IterateCaps& caps = {});

}  // namespace tpp
