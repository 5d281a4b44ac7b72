#include "tpp/upgrade.hpp"

#include <chrono>
#include <deque>
#include <set>

namespace tpp {

int xi(const Triple& tr) {
  return tr.group().order() + 2 - tr.s().card() - tr.t().card() - tr.u().card();
}

GSet candidates_group(const Triple& tr) { return (tr.s() | tr.t() | tr.u()).complement(); }

GSet candidates_set(const Triple& tr, Place place) {
  switch (place) {
    case Place::S:
      return (tr.s() | right_quotient(tr.t()) | right_quotient(tr.u())).complement();
    case Place::T:
      return (tr.t() | right_quotient(tr.s()) | right_quotient(tr.u())).complement();
    default:
      return (tr.u() | right_quotient(tr.s()) | right_quotient(tr.t())).complement();
  }
}

namespace {

void require_sorted(const Triple& tr, const char* who) {
  if (!is_sorted_by_size(tr)) throw NotSorted(std::string(who) + ": parts not sorted by size");
}

}  // namespace

PlaceSet is_group_upgrade_possible(const Triple& tr) {
  require_sorted(tr, "is_group_upgrade_possible");
  const long long n = tr.group().order();
  const long long a = tr.s().card(), b = tr.t().card(), c = tr.u().card();
  const long long x = xi(tr);

  PlaceSet out;
  if ((a + 1) * (b + c - 1) <= n && a <= x) out.s = true;
  if (a * (b + c) <= n) {
    if (b <= x) out.t = true;
    if (c <= x) out.u = true;
  }
  return out;
}

PlaceSet is_set_upgrade_possible(const Triple& tr) {
  require_sorted(tr, "is_set_upgrade_possible");
  if (!is_basic(tr)) throw NotBasic("is_set_upgrade_possible: triple is not basic");
  const long long n = tr.group().order();
  const long long a = tr.s().card(), b = tr.t().card(), c = tr.u().card();

  PlaceSet out;
  if ((a + 1) * (b + c - 1) <= n) out.s = true;
  if (a * (b + c) <= n) out.t = out.u = true;
  return out;
}

bool special_tpp_test_group(const GSet& x, int c, const GSet& p) {
  if (left_translate(c, x).intersects(p)) return false;
  return !right_translate(x, x.group().inv(c)).intersects(p);
}

bool special_tpp_test_set(const GSet& x, int c, const GSet& p) {
  if (left_translate(c, inverse_set(x)).intersects(p)) return false;
  return !right_translate(x, x.group().inv(c)).intersects(p);
}

namespace {

Triple upgraded(const Triple& tr, Place place, int c) {
  Triple out = tr;
  out.part(static_cast<int>(place)).set(c);
  return out;
}

// Every emitted upgrade must still satisfy the definitional test; the
// special tests are exactly equivalent, so a mismatch is a library bug.
void verify_upgrade(const Triple& up) {
  if (!tpp_test_naive(up))
    throw InternalError("upgrade produced a non-TPP triple " + shape_to_string(up.shape()));
}

// P for the subgroup step is the plain product of the other two parts.
GSet group_partner_product(const Triple& tr, Place place) {
  switch (place) {
    case Place::S: return product_set(tr.t(), tr.u());
    case Place::T: return product_set(tr.s(), tr.u());
    default: return product_set(tr.s(), tr.t());
  }
}

// P for the subset step is the product of the other two quotient sets.
GSet set_partner_product(const Triple& tr, Place place) {
  switch (place) {
    case Place::S: return product_set(right_quotient(tr.t()), right_quotient(tr.u()));
    case Place::T: return product_set(right_quotient(tr.s()), right_quotient(tr.u()));
    default: return product_set(right_quotient(tr.s()), right_quotient(tr.t()));
  }
}

constexpr Place kBatchOrder[3] = {Place::S, Place::T, Place::U};
constexpr Place kBiggestOrder[3] = {Place::U, Place::T, Place::S};

}  // namespace

UpgradeBatch upgrade_step_group(const Triple& tr) {
  PlaceSet feasible = is_group_upgrade_possible(tr);
  UpgradeBatch batch;
  if (feasible.empty()) return batch;
  GSet cands = candidates_group(tr);
  for (Place place : kBatchOrder) {
    if (!feasible.contains(place)) continue;
    const GSet& x = tr.part(static_cast<int>(place));
    GSet p = group_partner_product(tr, place);
    cands.for_each([&](int c) {
      if (!special_tpp_test_group(x, c, p)) return;
      Triple up = upgraded(tr, place, c);
      verify_upgrade(up);
      batch.triples.push_back(std::move(up));
    });
  }
  return batch;
}

std::optional<Triple> upgrade_step_group_biggest(const Triple& tr) {
  PlaceSet feasible = is_group_upgrade_possible(tr);
  if (feasible.empty()) return std::nullopt;
  GSet cands = candidates_group(tr);
  for (Place place : kBiggestOrder) {
    if (!feasible.contains(place)) continue;
    const GSet& x = tr.part(static_cast<int>(place));
    GSet p = group_partner_product(tr, place);
    for (int c : cands.elements()) {
      if (!special_tpp_test_group(x, c, p)) continue;
      Triple up = upgraded(tr, place, c);
      verify_upgrade(up);
      return up;
    }
  }
  return std::nullopt;
}

UpgradeBatch upgrade_step_set(const Triple& tr) {
  PlaceSet feasible = is_set_upgrade_possible(tr);
  UpgradeBatch batch;
  if (feasible.empty()) return batch;
  for (Place place : kBatchOrder) {
    if (!feasible.contains(place)) continue;
    const GSet& x = tr.part(static_cast<int>(place));
    GSet p = set_partner_product(tr, place);
    candidates_set(tr, place).for_each([&](int c) {
      if (!special_tpp_test_set(x, c, p)) return;
      Triple up = upgraded(tr, place, c);
      verify_upgrade(up);
      batch.triples.push_back(std::move(up));
    });
  }
  return batch;
}

std::optional<Triple> upgrade_step_set_biggest(const Triple& tr) {
  PlaceSet feasible = is_set_upgrade_possible(tr);
  if (feasible.empty()) return std::nullopt;
  for (Place place : kBiggestOrder) {
    if (!feasible.contains(place)) continue;
    const GSet& x = tr.part(static_cast<int>(place));
    GSet p = set_partner_product(tr, place);
    for (int c : candidates_set(tr, place).elements()) {
      if (!special_tpp_test_set(x, c, p)) continue;
      Triple up = upgraded(tr, place, c);
      verify_upgrade(up);
      return up;
    }
  }
  return std::nullopt;
}

CapacityResult iterate_upgrades(const std::vector<Triple>& seeds, const IterateCaps& caps) {
  if (seeds.empty()) throw EmptySet("iterate_upgrades: no seed triples");
  const auto start = std::chrono::steady_clock::now();

  std::set<TripleKey> store;
  std::deque<Triple> frontier;
  long long best_value = 0;
  std::optional<Triple> best_witness;
  std::optional<TripleKey> best_key;
  bool exhausted = true;

  auto offer = [&](const Triple& canon, const TripleKey& key) {
    long long v = canon.size();
    if (v < best_value) return;
    if (v > best_value || !best_key || key < *best_key) {
      best_value = v;
      best_witness = canon;
      best_key = key;
    }
  };
  auto admit = [&](const Triple& tr) -> bool {
    // Returns false when a cap blocks further growth.
    Triple canon = canonical_form(tr);
    TripleKey key = canonical_key(canon);
    if (store.contains(key)) return true;
    if (store.size() >= caps.max_store || frontier.size() >= caps.max_frontier) {
      exhausted = false;
      return false;
    }
    offer(canon, key);
    store.insert(std::move(key));
    frontier.push_back(std::move(canon));
    return true;
  };

  for (const Triple& seed : seeds)
    if (!admit(seed)) break;

  while (!frontier.empty()) {
    if (caps.time_limit_s) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > *caps.time_limit_s) {
        exhausted = false;
        break;
      }
    }
    Triple cur = std::move(frontier.front());
    frontier.pop_front();
    UpgradeBatch batch = upgrade_step_set(cur);
    bool blocked = false;
    for (const Triple& up : batch.triples)
      if (!admit(up)) { blocked = true; break; }
    if (blocked) break;
  }
  return {best_value, *best_witness, exhausted};
}

}  // namespace tpp
