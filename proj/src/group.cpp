#include "tpp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "tpp/errors.hpp"

namespace tpp {

namespace {

std::string at(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

// Full axiom check on a square table whose identity is already at index 0.
void validate_table(const std::vector<std::uint16_t>& t, int n, const std::string& name) {
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = t[idx(i, j)];
      if (seen[v]) throw NotAGroup(name + ": row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = t[idx(i, j)];
      if (seen[v]) throw NotAGroup(name + ": column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j)
    if (t[idx(0, j)] != j || t[idx(j, 0)] != j)
      throw NotAGroup(name + ": element 0 is not a two-sided identity");
  for (int i = 0; i < n; ++i) {
    int r = -1;
    for (int j = 0; j < n; ++j)
      if (t[idx(i, j)] == 0) { r = j; break; }
    if (r < 0 || t[idx(r, i)] != 0)
      throw NotAGroup(name + ": element " + std::to_string(i) + " has no two-sided inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = t[idx(i, j)];
      for (int k = 0; k < n; ++k)
        if (t[idx(ij, k)] != t[idx(i, t[idx(j, k)])])
          throw NotAGroup(name + ": associativity fails at " + at(i, j) + "," + std::to_string(k));
    }
}

}  // namespace

int Group::element_order(int a) const {
  int x = a, ord = 1;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<int> Group::order_profile() const {
  std::vector<int> p(n_);
  for (int i = 0; i < n_; ++i) p[i] = element_order(i);
  std::sort(p.begin(), p.end());
  return p;
}

Group group_from_table(const std::vector<std::vector<int>>& rows, std::string name) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw NotAGroup(name + ": empty table");
  if (n > Group::kMaxOrder)
    throw NotAGroup(name + ": order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(Group::kMaxOrder));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw NotAGroup(name + ": table is not square");
    for (int v : r)
      if (v < 0 || v >= n) throw NotAGroup(name + ": entry out of range");
  }

  // Find the identity, then relabel by swapping it with index 0.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = rows[i][j] == j && rows[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw NotAGroup(name + ": no identity element");

  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);

  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(relabel[i]) * n + relabel[j]] =
          static_cast<std::uint16_t>(relabel[rows[i][j]]);

  validate_table(table, n, name);

  Group g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.table_ = std::move(table);
  g.inv_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) == 0) { g.inv_[i] = static_cast<std::uint16_t>(j); break; }
  g.abelian_ = true;
  for (int i = 0; i < n && g.abelian_; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mul(i, j) != g.mul(j, i)) { g.abelian_ = false; break; }
  return g;
}

Group group_from_permutations(const std::vector<std::vector<int>>& generators,
                              std::string name, int closure_cap) {
  if (generators.empty()) throw EmptyGeneratorList(name + ": no generators");
  const int deg = static_cast<int>(generators.front().size());
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != deg)
      throw NotAGroup(name + ": generators act on different point sets");
    std::vector<char> seen(deg);
    for (int v : p) {
      if (v < 0 || v >= deg || seen[v])
        throw NotAGroup(name + ": generator is not a permutation");
      seen[v] = 1;
    }
  }

  auto compose = [deg](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(deg);
    for (int x = 0; x < deg; ++x) c[x] = a[b[x]];
    return c;
  };

  // Breadth-first closure from the identity; element order is discovery
  // order, so the identity lands at index 0.
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      auto q = compose(elems[head], g);
      if (index.emplace(q, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(q));
        if (static_cast<int>(elems.size()) > closure_cap)
          throw ClosureCapExceeded(name + ": closure exceeds cap " + std::to_string(closure_cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = index.at(compose(elems[i], elems[j]));
  return group_from_table(rows, std::move(name));
}

namespace {

Group make_cyclic(int n) {
  if (n < 1 || n > Group::kMaxOrder) throw ParamOutOfRange("cyclic: order out of range");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return group_from_table(rows, "cyclic(" + std::to_string(n) + ")");
}

Group make_dihedral(int order) {
  if (order < 2 || order % 2 != 0 || order > Group::kMaxOrder)
    throw ParamOutOfRange("dihedral: order must be even and within cap");
  const int m = order / 2;
  // Index e*m + i stands for s^e r^i, with s r^i s = r^-i.
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < m; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < m; ++j) {
          int e = a ^ b;
          int k = b ? (j - i + m) % m : (i + j) % m;
          rows[a * m + i][b * m + j] = e * m + k;
        }
  return group_from_table(rows, "dihedral(" + std::to_string(order) + ")");
}

Group make_symmetric(int k) {
  if (k < 1 || k > 6) throw ParamOutOfRange("symmetric: degree must be in 1..6");
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<int> c(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < k; ++x) c[x] = perms[i][perms[j][x]];
      rows[i][j] = index.at(c);
    }
  return group_from_table(rows, "symmetric(" + std::to_string(k) + ")");
}

}  // namespace

Group direct_product(const Group& a, const Group& b, std::string name) {
  const int na = a.order(), nb = b.order();
  if (static_cast<long long>(na) * nb > Group::kMaxOrder)
    throw ParamOutOfRange("direct_product: order exceeds cap");
  const int n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
      rows[i][j] = a.mul(ai, aj) * nb + b.mul(bi, bj);
    }
  if (name.empty()) name = "direct_product(" + a.name() + "," + b.name() + ")";
  return group_from_table(rows, std::move(name));
}

Group named_group(const std::string& constructor, const std::vector<int>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw ParamOutOfRange(constructor + ": expected " + std::to_string(k) + " parameter(s)");
  };
  if (constructor == "cyclic") { want(1); return make_cyclic(params[0]); }
  if (constructor == "dihedral") { want(1); return make_dihedral(params[0]); }
  if (constructor == "symmetric") { want(1); return make_symmetric(params[0]); }
  if (constructor == "direct_product")
    throw UnknownConstructor("direct_product takes sub-specs; use a constructor expression");
  throw UnknownConstructor("unknown constructor: " + constructor);
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() { while (pos < s.size() && s[pos] == ' ') ++pos; }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (b == pos) throw UnknownConstructor("bad constructor expression: " + s);
    return s.substr(b, pos - b);
  }

  Group expr() {
    std::string name = ident();
    if (!eat('(')) throw UnknownConstructor("expected '(' in: " + s);
    if (name == "direct_product") {
      Group a = expr();
      if (!eat(',')) throw UnknownConstructor("direct_product needs two operands: " + s);
      Group b = expr();
      if (!eat(')')) throw UnknownConstructor("expected ')' in: " + s);
      return direct_product(a, b);
    }
    std::vector<int> params;
    do {
      skip_ws();
      std::size_t b = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-')) ++pos;
      if (b == pos) throw UnknownConstructor("expected integer parameter in: " + s);
      params.push_back(std::stoi(s.substr(b, pos - b)));
    } while (eat(','));
    if (!eat(')')) throw UnknownConstructor("expected ')' in: " + s);
    return named_group(name, params);
  }
};

}  // namespace

Group group_from_constructor(const std::string& expr) {
  Parser p{expr};
  Group g = p.expr();
  p.skip_ws();
  if (p.pos != expr.size())
    throw UnknownConstructor("trailing characters in constructor expression: " + expr);
  return g;
}

}  // namespace tpp
