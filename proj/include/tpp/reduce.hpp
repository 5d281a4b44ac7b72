#pragma once

#include <cstdint>
#include <optional>

#include "tpp/triple.hpp"

namespace tpp {

enum class ReduceTag {
  RandomDelete,
  RandomWithRestrictionDelete,
  MaxTripleDelete,
  MaxQuotientDelete,
};

const char* strategy_name(ReduceTag tag);
std::optional<ReduceTag> parse_strategy(const std::string& name);

/// How to pick the element to delete from a stuck triple. `restriction`
/// (elements that must not be deleted) is required exactly for
/// RandomWithRestrictionDelete. For MaxQuotientDelete the two modes exist
/// because maximizing and minimizing the quotient drop are both defensible
/// readings of the heuristic; MaxDrop is the default.
struct ReductionStrategy {
  ReduceTag tag = ReduceTag::MaxTripleDelete;
  std::optional<GSet> restriction;

  enum class QuotientMode { MaxDrop, MinDrop };
  QuotientMode quotient_mode = QuotientMode::MaxDrop;
};

/// |Q(X_d)| - |Q(X_d \ {d})| where X_d is the part containing d. Always
/// non-negative since Q is monotone under subsets. Throws
/// ElementNotInTriple unless d != 1 lies in exactly one part.
int score_quotient_drop(const Triple& tr, int d);

/// True when some element may legally be deleted under the strategy:
/// d != 1, the part keeps >= 2 elements, and d is not restricted.
bool reduction_possible(const Triple& tr, const ReductionStrategy& strategy);

/// Deletes one non-identity element from a basic TPP triple according to
/// the strategy. The result is again a TPP triple (quotients only shrink),
/// keeps the identity everywhere, and the reduced part keeps >= 2 elements.
/// Identical (triple, strategy, seed) gives identical output.
Triple reduce(const Triple& tr, const ReductionStrategy& strategy, std::uint64_t rng_seed);

}  // namespace tpp
