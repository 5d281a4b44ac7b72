#include "tpp/subgroup.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tpp {

namespace {

std::vector<std::uint64_t> raw_words(const GSet& x) {
  return {x.words(), x.words() + x.word_count()};
}

// Closure of a subset under multiplication; for a finite group this is the
// generated subgroup.
GSet generated_subgroup(const Group& g, const GSet& seed) {
  GSet h = seed;
  h.set(0);
  std::vector<int> worklist = h.elements();
  while (!worklist.empty()) {
    int a = worklist.back();
    worklist.pop_back();
    auto elems = h.elements();
    for (int b : elems) {
      for (int p : {g.mul(a, b), g.mul(b, a)}) {
        if (!h.test(p)) {
          h.set(p);
          worklist.push_back(p);
        }
      }
    }
  }
  return h;
}

}  // namespace

SubgroupList enumerate_subgroups(const Group& g, int order_cap) {
  if (g.order() > order_cap)
    throw CapExceeded("enumerate_subgroups: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(order_cap));

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<GSet> subs;
  auto add = [&](const GSet& h) {
    if (seen.insert(raw_words(h)).second) {
      subs.push_back(h);
      return true;
    }
    return false;
  };

  // All cyclic subgroups, then close the collection under pairwise join.
  for (int a = 0; a < g.order(); ++a) {
    GSet h(g);
    int x = 0;
    do {
      h.set(x);
      x = g.mul(x, a);
    } while (x != 0);
    add(h);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = subs.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        if (subs[i].is_subset_of(subs[j]) || subs[j].is_subset_of(subs[i])) continue;
        if (add(generated_subgroup(g, subs[i] | subs[j]))) grew = true;
      }
  }

  std::sort(subs.begin(), subs.end(), [](const GSet& a, const GSet& b) {
    if (a.card() != b.card()) return a.card() > b.card();
    return raw_words(a) < raw_words(b);
  });
  return SubgroupList{std::move(subs)};
}

namespace {

struct Best {
  long long value = 0;
  std::optional<Triple> witness;
  std::optional<TripleKey> key;

  void offer(long long v, const Triple& tr) {
    if (v < value) return;
    TripleKey k = canonical_key(tr);
    if (v > value || !key || k < *key) {
      value = v;
      witness = tr;
      key = std::move(k);
    }
  }
};

}  // namespace

CapacityResult beta_g(const Group& g, const SubgroupList& subs) {
  const long long n = g.order();
  Best best;
  best.offer(n, Triple(GSet::full(g), GSet::single(g, 0), GSet::single(g, 0)));

  const auto& list = subs.subgroups;
  for (const GSet& s : list) {
    const long long a = s.card();
    if (a * a * a < best.value) continue;
    for (const GSet& t : list) {
      const long long b = t.card();
      if (b > a) continue;
      if (a * b * b < best.value) continue;
      // Pairwise necessary condition; cheaper than the full test.
      if ((s & t).card() != 1) continue;
      for (const GSet& u : list) {
        const long long c = u.card();
        if (c > b) continue;
        const long long product = a * b * c;
        if (product < best.value) continue;
        if (a * (b + c - 1) > n || b * (a + c - 1) > n || c * (a + b - 1) > n) continue;
        if (a + b + c > n + 2) continue;
        Triple tr(s, t, u);
        if (!tpp_test_basic(tr)) continue;
        best.offer(product, tr);
      }
    }
  }
  return {best.value, *best.witness, true};
}

CapacityResult beta_oracle(const Group& g, int order_cap) {
  const int n = g.order();
  const int cap = std::min(order_cap, kBetaOracleHardCap);
  if (n > cap)
    throw CapExceeded("beta_oracle: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));

  Best best;
  best.offer(n, Triple(GSet::full(g), GSet::single(g, 0), GSet::single(g, 0)));

  // Basic subsets grouped by cardinality, with their quotients.
  std::vector<std::vector<GSet>> by_card(n + 1);
  std::vector<std::vector<GSet>> q_by_card(n + 1);
  const std::uint64_t total = 1ull << (n - 1);
  for (std::uint64_t m = 0; m < total; ++m) {
    GSet x(g);
    x.set(0);
    std::uint64_t rest = m;
    while (rest) {
      x.set(std::countr_zero(rest) + 1);
      rest &= rest - 1;
    }
    by_card[x.card()].push_back(x);
    q_by_card[x.card()].push_back(right_quotient(x));
  }

  struct Shape {
    int a, b, c;
    long long product;
  };
  std::vector<Shape> shapes;
  for (int a = n; a >= 1; --a)
    for (int b = a; b >= 1; --b)
      for (int c = b; c >= 1; --c) {
        long long aa = a, bb = b, cc = c;
        if (aa * (bb + cc - 1) > n || bb * (aa + cc - 1) > n || cc * (aa + bb - 1) > n) continue;
        shapes.push_back({a, b, c, aa * bb * cc});
      }
  std::sort(shapes.begin(), shapes.end(), [](const Shape& x, const Shape& y) {
    if (x.product != y.product) return x.product > y.product;
    return std::array<int, 3>{x.a, x.b, x.c} < std::array<int, 3>{y.a, y.b, y.c};
  });

  for (const Shape& sh : shapes) {
    if (sh.product < best.value) break;
    const auto& ts = by_card[sh.b];
    const auto& us = by_card[sh.c];
    const auto& ss = by_card[sh.a];
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const GSet& qt = q_by_card[sh.b][ti];
      for (std::size_t ui = 0; ui < us.size(); ++ui) {
        const GSet& qu = q_by_card[sh.c][ui];
        if ((qt & qu).card() != 1) continue;
        GSet p = product_set(qt, qu);
        for (std::size_t si = 0; si < ss.size(); ++si) {
          const GSet& qs = q_by_card[sh.a][si];
          if (qs.card() + qt.card() + qu.card() > n + 2) continue;
          if ((qs & p).card() != 1) continue;
          best.offer(sh.product, Triple(ss[si], ts[ti], us[ui]));
        }
      }
    }
  }
  return {best.value, *best.witness, true};
}

}  // namespace tpp
