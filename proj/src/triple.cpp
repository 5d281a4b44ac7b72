#include "tpp/triple.hpp"

#include <algorithm>

namespace tpp {

Triple::Triple(GSet s, GSet t, GSet u) : s_(std::move(s)), t_(std::move(t)), u_(std::move(u)) {
  if (&s_.group() != &t_.group() || &s_.group() != &u_.group())
    throw GroupMismatch("triple parts belong to different groups");
  if (s_.empty() || t_.empty() || u_.empty()) throw EmptySet("triple parts must be nonempty");
}

std::string shape_to_string(const std::array<int, 3>& shape) {
  return std::to_string(shape[0]) + "x" + std::to_string(shape[1]) + "x" + std::to_string(shape[2]);
}

bool tpp_test_naive(const Triple& tr) {
  const Group& g = tr.group();
  GSet qs = right_quotient(tr.s());
  GSet qt = right_quotient(tr.t());
  GSet qu = right_quotient(tr.u());
  // s*t*u = 1 has a nontrivial solution iff some (s,t) != (1,1) puts
  // (s*t)^-1 inside Q(U); Q(U) always contains 1, so the only pair to
  // exempt is s = t = 1.
  auto ss = qs.elements();
  auto ts = qt.elements();
  for (int s : ss) {
    const std::uint16_t* row = g.row(s);
    for (int t : ts) {
      if ((s | t) == 0) continue;
      if (qu.test(g.inv(row[t]))) return false;
    }
  }
  return true;
}

Triple make_basic(const Triple& tr) {
  const Group& g = tr.group();
  auto shift = [&](const GSet& x) { return right_translate(x, g.inv(x.min_element())); };
  return Triple(shift(tr.s()), shift(tr.t()), shift(tr.u()));
}

bool tpp_test_basic(const Triple& tr) {
  if (!is_basic(tr)) throw NotBasic("tpp_test_basic requires the identity in all parts");
  GSet qt = right_quotient(tr.t());
  GSet qu = right_quotient(tr.u());
  if ((qt & qu).card() != 1) return false;
  GSet qs = right_quotient(tr.s());
  return (qs & product_set(qt, qu)).card() == 1;
}

bool check_quotient_bound(const Triple& tr) {
  long long sum = right_quotient(tr.s()).card() + right_quotient(tr.t()).card() +
                  right_quotient(tr.u()).card();
  return sum <= tr.group().order() + 2;
}

bool check_neumann(const Triple& tr) {
  const long long n = tr.group().order();
  const long long a = tr.s().card(), b = tr.t().card(), c = tr.u().card();
  return a * (b + c - 1) <= n && b * (a + c - 1) <= n && c * (a + b - 1) <= n;
}

namespace {

// Orders sets by (cardinality desc, words asc); ties on both mean equality.
bool part_before(const GSet& a, const GSet& b) {
  if (a.card() != b.card()) return a.card() > b.card();
  for (int i = 0; i < a.word_count(); ++i)
    if (a.words()[i] != b.words()[i]) return a.words()[i] < b.words()[i];
  return false;
}

}  // namespace

Triple sort_triple(const Triple& tr) {
  std::array<const GSet*, 3> p{&tr.s(), &tr.t(), &tr.u()};
  std::stable_sort(p.begin(), p.end(), [](const GSet* a, const GSet* b) { return part_before(*a, *b); });
  return Triple(*p[0], *p[1], *p[2]);
}

bool is_subgroup(const GSet& x) {
  if (x.empty()) throw EmptySet("is_subgroup of empty set");
  return right_quotient(x) == x;
}

bool is_basic(const Triple& tr) {
  return tr.s().contains_identity() && tr.t().contains_identity() && tr.u().contains_identity();
}

bool is_sorted_by_size(const Triple& tr) {
  return tr.s().card() >= tr.t().card() && tr.t().card() >= tr.u().card();
}

Triple canonical_form(const Triple& tr) { return sort_triple(make_basic(tr)); }

std::size_t TripleKey::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (int s : shape) mix(static_cast<std::uint64_t>(s));
  for (std::uint64_t w : bits) mix(w);
  return h;
}

TripleKey canonical_key(const Triple& tr) {
  Triple c = canonical_form(tr);
  TripleKey k;
  k.shape = c.shape();
  const int nw = c.s().word_count();
  k.bits.reserve(3 * static_cast<std::size_t>(nw));
  for (int i = 0; i < 3; ++i) {
    const GSet& x = c.part(i);
    k.bits.insert(k.bits.end(), x.words(), x.words() + nw);
  }
  return k;
}

}  // namespace tpp
