#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tpp/gset.hpp"

namespace tpp {

/// An ordered triple of nonempty subsets of one group.
class Triple {
public:
  Triple(GSet s, GSet t, GSet u);

  const GSet& s() const { return s_; }
  const GSet& t() const { return t_; }
  const GSet& u() const { return u_; }
  const GSet& part(int i) const { return i == 0 ? s_ : i == 1 ? t_ : u_; }
  GSet& part(int i) { return i == 0 ? s_ : i == 1 ? t_ : u_; }

  const Group& group() const { return s_.group(); }
  long long size() const {
    return static_cast<long long>(s_.card()) * t_.card() * u_.card();
  }
  std::array<int, 3> shape() const { return {s_.card(), t_.card(), u_.card()}; }

  bool operator==(const Triple& o) const { return s_ == o.s_ && t_ == o.t_ && u_ == o.u_; }

private:
  GSet s_, t_, u_;
};

std::string shape_to_string(const std::array<int, 3>& shape);

/// The triple product property, straight from the definition: for
/// s in Q(S), t in Q(T), u in Q(U), s*t*u = 1 only for s = t = u = 1.
bool tpp_test_naive(const Triple& tr);

/// Right-translates each part by the inverse of its smallest element so the
/// identity lands in all three parts. Quotient sets, and with them the TPP
/// status and the size, are unchanged.
Triple make_basic(const Triple& tr);

/// TPP test for basic triples: Q(T) n Q(U) = 1 and Q(S) n Q(T)Q(U) = 1.
/// Throws NotBasic when some part misses the identity.
bool tpp_test_basic(const Triple& tr);

/// Necessary condition |Q(S)| + |Q(T)| + |Q(U)| <= |G| + 2.
bool check_quotient_bound(const Triple& tr);

/// Necessary conditions |S|(|T|+|U|-1) <= |G| and the two analogues.
bool check_neumann(const Triple& tr);

/// Permutes the parts so cardinalities are non-increasing; equal
/// cardinalities are ordered by bit pattern so the result is canonical.
/// TPP status is invariant under part permutations.
Triple sort_triple(const Triple& tr);

/// True iff Q(X) = X, which characterizes subgroups among nonempty sets.
bool is_subgroup(const GSet& x);

bool is_basic(const Triple& tr);
bool is_sorted_by_size(const Triple& tr);

/// Canonical form for deduplication: make_basic then sort_triple.
Triple canonical_form(const Triple& tr);

/// Value key of a canonical form; totally ordered (shape first, then bit
/// patterns) and hashable.
struct TripleKey {
  std::array<int, 3> shape;
  std::vector<std::uint64_t> bits;

  auto operator<=>(const TripleKey&) const = default;
  std::size_t hash() const;
};

TripleKey canonical_key(const Triple& tr);

}  // namespace tpp
