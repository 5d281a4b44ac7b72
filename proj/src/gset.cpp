#include "tpp/gset.hpp"

namespace tpp {

GSet right_quotient(const GSet& x) {
  if (x.empty()) throw EmptySet("right_quotient of empty set");
  const Group& g = x.group();
  GSet q(g);
  auto elems = x.elements();
  for (int a : elems) {
    const std::uint16_t* row = g.row(a);
    for (int b : elems) q.set(row[g.inv(b)]);
  }
  return q;
}

GSet product_set(const GSet& x, const GSet& y) {
  if (&x.group() != &y.group()) throw GroupMismatch("product_set: different groups");
  const Group& g = x.group();
  GSet p(g);
  x.for_each([&](int a) {
    const std::uint16_t* row = g.row(a);
    y.for_each([&](int b) { p.set(row[b]); });
  });
  return p;
}

GSet inverse_set(const GSet& x) {
  const Group& g = x.group();
  GSet r(g);
  x.for_each([&](int a) { r.set(g.inv(a)); });
  return r;
}

GSet left_translate(int c, const GSet& x) {
  const Group& g = x.group();
  GSet r(g);
  const std::uint16_t* row = g.row(c);
  x.for_each([&](int a) { r.set(row[a]); });
  return r;
}

GSet right_translate(const GSet& x, int c) {
  const Group& g = x.group();
  GSet r(g);
  x.for_each([&](int a) { r.set(g.mul(a, c)); });
  return r;
}

GSet quotient_after_insert(const GSet& x, int c, const GSet& qx, bool x_is_subgroup) {
  if (x.empty()) throw EmptySet("quotient_after_insert: empty set");
  if (x.test(c)) throw CandidateInsideSet("quotient_after_insert: candidate already in set");
  const Group& g = x.group();
  int cinv = g.inv(c);
  GSet r = x_is_subgroup ? (x | left_translate(c, x)) : (qx | left_translate(c, inverse_set(x)));
  right_translate(x, cinv).for_each([&](int a) { r.set(a); });
  return r;
}

}  // namespace tpp
