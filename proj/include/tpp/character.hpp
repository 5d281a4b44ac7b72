#pragma once

#include <vector>

#include "tpp/errors.hpp"

namespace tpp {

/// Multiset of irreducible character degrees. Degrees are external input;
/// this library never computes them from the group structure.
struct CharacterData {
  std::vector<int> degrees;
};

/// Throws InvalidDegrees unless every degree is positive and the degree
/// squares sum to the group order.
void validate_degrees(const CharacterData& cd, int group_order);

/// D_r = sum of d_i^r.
double d_r(const CharacterData& cd, double r);

struct OmegaBound {
  double value;    // reported bound, always in [2, 3]
  double root;     // solution x of D_x = beta^(x/3); equals value when unclamped
  bool clamped;    // true when the root fell below 2 and value was clamped
};

/// Upper bound for the matrix multiplication exponent from a capacity lower
/// bound and character degrees: the unique x with beta^(x/3) = D_x when
/// beta > D_3, else the trivial 3.0. Roots below 2 (possible only for
/// synthetic inputs) are reported but the bound is clamped to 2.0.
/// Bisection to 1e-10 absolute tolerance in x.
OmegaBound omega_bound(long long beta, const CharacterData& cd);

}  // namespace tpp
