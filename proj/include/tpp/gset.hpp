#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "tpp/errors.hpp"
#include "tpp/group.hpp"

namespace tpp {

/// A subset of a group, stored as a fixed-width bit vector with a cached
/// population count. Sets never own their group; the group must outlive
/// every set built over it. All operations are pure, so sets are safe to
/// use from multiple threads.
class GSet {
public:
  static constexpr int kWords = Group::kMaxOrder / 64;

  explicit GSet(const Group& g) : g_(&g), nw_((g.order() + 63) / 64) {
    for (int i = 0; i < nw_; ++i) w_[i] = 0;
  }

  GSet(const GSet& o) : g_(o.g_), nw_(o.nw_), card_(o.card_) {
    for (int i = 0; i < nw_; ++i) w_[i] = o.w_[i];
  }
  GSet& operator=(const GSet& o) {
    g_ = o.g_;
    nw_ = o.nw_;
    card_ = o.card_;
    for (int i = 0; i < nw_; ++i) w_[i] = o.w_[i];
    return *this;
  }

  static GSet single(const Group& g, int e) {
    GSet x(g);
    x.set(e);
    return x;
  }
  static GSet full(const Group& g) {
    GSet x(g);
    for (int i = 0; i < g.order(); ++i) x.w_[i >> 6] |= 1ull << (i & 63);
    x.card_ = g.order();
    return x;
  }
  template <typename It>
  static GSet from_indices(const Group& g, It first, It last) {
    GSet x(g);
    for (; first != last; ++first) x.set(*first);
    return x;
  }
  static GSet from_indices(const Group& g, std::initializer_list<int> xs) {
    return from_indices(g, xs.begin(), xs.end());
  }

  const Group& group() const { return *g_; }
  int card() const { return card_; }
  bool empty() const { return card_ == 0; }
  bool test(int e) const { return (w_[e >> 6] >> (e & 63)) & 1; }
  bool contains_identity() const { return w_[0] & 1; }

  void set(int e) {
    std::uint64_t bit = 1ull << (e & 63);
    if (!(w_[e >> 6] & bit)) {
      w_[e >> 6] |= bit;
      ++card_;
    }
  }
  void reset(int e) {
    std::uint64_t bit = 1ull << (e & 63);
    if (w_[e >> 6] & bit) {
      w_[e >> 6] &= ~bit;
      --card_;
    }
  }

  /// Calls fn(e) for every element, in ascending index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < nw_; ++w) {
      std::uint64_t m = w_[w];
      while (m) {
        fn((w << 6) + std::countr_zero(m));
        m &= m - 1;
      }
    }
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(card_);
    for_each([&](int e) { out.push_back(e); });
    return out;
  }
  /// Smallest element index; the set must be nonempty.
  int min_element() const {
    for (int w = 0; w < nw_; ++w)
      if (w_[w]) return (w << 6) + std::countr_zero(w_[w]);
    throw EmptySet("min_element of empty set");
  }

  bool operator==(const GSet& o) const {
    if (g_ != o.g_) return false;
    for (int i = 0; i < nw_; ++i)
      if (w_[i] != o.w_[i]) return false;
    return true;
  }
  bool operator!=(const GSet& o) const { return !(*this == o); }

  bool intersects(const GSet& o) const {
    check_same(o);
    for (int i = 0; i < nw_; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const GSet& o) const {
    check_same(o);
    for (int i = 0; i < nw_; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  friend GSet operator|(const GSet& a, const GSet& b) {
    a.check_same(b);
    GSet r(*a.g_);
    for (int i = 0; i < a.nw_; ++i) r.w_[i] = a.w_[i] | b.w_[i];
    r.recount();
    return r;
  }
  friend GSet operator&(const GSet& a, const GSet& b) {
    a.check_same(b);
    GSet r(*a.g_);
    for (int i = 0; i < a.nw_; ++i) r.w_[i] = a.w_[i] & b.w_[i];
    r.recount();
    return r;
  }
  /// Set difference a \ b.
  friend GSet operator-(const GSet& a, const GSet& b) {
    a.check_same(b);
    GSet r(*a.g_);
    for (int i = 0; i < a.nw_; ++i) r.w_[i] = a.w_[i] & ~b.w_[i];
    r.recount();
    return r;
  }
  GSet complement() const {
    GSet r = full(*g_);
    for (int i = 0; i < nw_; ++i) r.w_[i] &= ~w_[i];
    r.recount();
    return r;
  }

  /// Raw words for hashing / canonical keys; only words()[0..word_count())
  /// are meaningful.
  const std::uint64_t* words() const { return w_.data(); }
  int word_count() const { return nw_; }

private:
  void recount() {
    card_ = 0;
    for (int i = 0; i < nw_; ++i) card_ += std::popcount(w_[i]);
  }
  void check_same(const GSet& o) const {
    if (g_ != o.g_) throw GroupMismatch("sets belong to different groups");
  }

  const Group* g_;
  int nw_;
  int card_ = 0;
  std::array<std::uint64_t, kWords> w_;
};

/// Right quotient {x * y^-1 : x, y in X}. Contains the identity and is
/// closed under inversion; equals X exactly when X is a subgroup.
GSet right_quotient(const GSet& x);

/// {x * y : x in X, y in Y}, computed as a union of left translates of Y.
GSet product_set(const GSet& x, const GSet& y);

GSet inverse_set(const GSet& x);
GSet left_translate(int c, const GSet& x);
GSet right_translate(const GSet& x, int c);

/// Q(X u {c}) computed incrementally from Q(X):
///   Q(X u {c}) = Q(X) u cX^-1 u Xc^-1,  or  X u cX u Xc^-1 when X is a
/// subgroup. Requires c outside X and qx == right_quotient(x).
GSet quotient_after_insert(const GSet& x, int c, const GSet& qx, bool x_is_subgroup);

}  // namespace tpp
