#include "tpp/character.hpp"

#include <cmath>
#include <string>

namespace tpp {

void validate_degrees(const CharacterData& cd, int group_order) {
  if (cd.degrees.empty()) throw InvalidDegrees("no character degrees");
  long long sum = 0;
  for (int d : cd.degrees) {
    if (d < 1) throw InvalidDegrees("character degrees must be positive");
    sum += static_cast<long long>(d) * d;
  }
  if (sum != group_order)
    throw InvalidDegrees("degree squares sum to " + std::to_string(sum) + ", expected group order " +
                         std::to_string(group_order));
}

double d_r(const CharacterData& cd, double r) {
  if (cd.degrees.empty()) throw InvalidDegrees("no character degrees");
  if (r < 0) throw InvalidDegrees("d_r requires r >= 0");
  double sum = 0;
  for (int d : cd.degrees) sum += std::pow(static_cast<double>(d), r);
  return sum;
}

OmegaBound omega_bound(long long beta, const CharacterData& cd) {
  if (beta < 1) throw InvalidDegrees("omega_bound requires beta >= 1");
  for (int d : cd.degrees)
    if (d < 1) throw InvalidDegrees("character degrees must be positive");
  if (cd.degrees.empty()) throw InvalidDegrees("no character degrees");

  const double b = static_cast<double>(beta);
  auto f = [&](double x) { return d_r(cd, x) - std::pow(b, x / 3.0); };

  // No bound sharper than the trivial one unless beta exceeds D_3.
  if (f(3.0) >= 0.0) return {3.0, 3.0, false};

  double lo, hi;
  bool clamped;
  if (f(2.0) >= 0.0) {
    lo = 2.0;
    hi = 3.0;
    clamped = false;
  } else {
    // Root lies below 2; locate it anyway, report it, clamp the bound.
    lo = 0.0;
    hi = 2.0;
    clamped = true;
    if (f(lo) < 0.0) return {2.0, 0.0, true};  // single-degree degenerate input
  }
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? lo : hi) = mid;
  }
  double root = 0.5 * (lo + hi);
  return {clamped ? 2.0 : root, root, clamped};
}

}  // namespace tpp
