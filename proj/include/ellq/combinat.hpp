#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactq.hpp"

namespace ellq {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return int(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }

  Partition transpose() const
  {
    std::vector<int> t;
    for (int j = 0; j < (empty() ? 0 : parts[0]); ++j) {
      int c = 0;
      for (int p : parts)
        if (p > j) ++c;
      t.push_back(c);
    }
    return Partition(t);
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

  std::string str() const
  {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

private:
  void normalize()
  {
    for (int p : parts)
      if (p < 0) throw std::invalid_argument("negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.rbegin(), parts.rend());
  }
};

struct Bipartition {
  Partition left, right;
  int size() const { return left.size() + right.size(); }
  friend bool operator==(const Bipartition& a, const Bipartition& b) { return a.left == b.left && a.right == b.right; }
  friend bool operator<(const Bipartition& a, const Bipartition& b)
  {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  }
  std::string str() const { return left.str() + "x" + right.str(); }
};

// All partitions of n, lexicographically decreasing: (n) first.
inline std::vector<Partition> partitionsOf(int n)
{
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::vector<Bipartition> bipartitionsOf(int n)
{
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitionsOf(k))
      for (const auto& b : partitionsOf(n - k)) out.push_back({a, b});
  return out;
}

struct Cell {
  int row, col;
  friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
};

// 1-based cells.
inline std::vector<std::pair<Cell, int>> hookLengths(const Partition& lam)
{
  Partition t = lam.transpose();
  std::vector<std::pair<Cell, int>> out;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.parts[i]; ++j)
      out.push_back({{i + 1, j + 1}, (lam.parts[i] - j - 1) + (t.parts[j] - i - 1) + 1});
  return out;
}

struct ContentData {
  std::vector<std::pair<Cell, int>> contents;
  int n = 0;
};

inline ContentData contentAndN(const Partition& lam)
{
  ContentData d;
  for (int i = 0; i < lam.length(); ++i) {
    d.n += i * lam.parts[i];
    for (int j = 0; j < lam.parts[i]; ++j) d.contents.push_back({{i + 1, j + 1}, j - i});
  }
  return d;
}

// t^{n(lam)} prod(1 + s t^c) / prod(1 - t^h)
inline RationalFunction gPoly(const Partition& lam, const RationalFunction& t, const RationalFunction& s)
{
  ContentData cd = contentAndN(lam);
  RationalFunction num = t.pow(cd.n);
  for (const auto& [cell, c] : cd.contents) {
    if (c < 0 && t.isZero()) throw std::domain_error("pole at specialization");
    num *= RationalFunction(1) + s * t.pow(c);
  }
  RationalFunction den(1);
  for (const auto& [cell, h] : hookLengths(lam)) den *= RationalFunction(1) - t.pow(h);
  if (den.isZero()) throw std::domain_error("pole at specialization");
  return num / den;
}

namespace detail {

// Beta set of length L (distinct decreasing).
inline std::vector<int> betaSet(const Partition& lam, int L)
{
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lam[i] + (L - 1 - i);
  return b;
}

inline Partition fromBeta(std::vector<int> b)
{
  std::sort(b.rbegin(), b.rend());
  int L = int(b.size());
  std::vector<int> p(L);
  for (int i = 0; i < L; ++i) p[i] = b[i] - (L - 1 - i);
  return Partition(p);
}

// Each removable r-rim hook: (remaining partition, (-1)^height).
inline std::vector<std::pair<Partition, int>> rimHooks(const Partition& lam, int r)
{
  std::vector<std::pair<Partition, int>> out;
  int L = lam.length();
  auto b = betaSet(lam, L);
  for (int i = 0; i < L; ++i) {
    int nb = b[i] - r;
    if (nb < 0 || std::find(b.begin(), b.end(), nb) != b.end()) continue;
    int between = 0;
    for (int x : b)
      if (x > nb && x < b[i]) ++between;
    auto c = b;
    c[i] = nb;
    out.push_back({fromBeta(c), between % 2 ? -1 : 1});
  }
  return out;
}

} // namespace detail

// chi^lam on cycle type alpha.
inline long mnCharacter(const Partition& lam, const Partition& alpha)
{
  if (lam.size() != alpha.size()) throw std::invalid_argument("size mismatch");
  std::map<std::pair<std::vector<int>, int>, long> memo;
  std::function<long(const Partition&, int)> rec = [&](const Partition& l, int k) -> long {
    if (k == alpha.length()) return 1;
    auto key = std::make_pair(l.parts, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long v = 0;
    for (const auto& [rest, sg] : detail::rimHooks(l, alpha.parts[k])) v += sg * rec(rest, k + 1);
    memo[key] = v;
    return v;
  };
  return rec(lam, 0);
}

// Signed cycle type of a signed permutation: positive and negative cycle lengths.
struct SignedCycleType {
  Partition positive, negative;
  int size() const { return positive.size() + negative.size(); }
  friend bool operator<(const SignedCycleType& a, const SignedCycleType& b)
  {
    return std::tie(a.positive, a.negative) < std::tie(b.positive, b.negative);
  }
  friend bool operator==(const SignedCycleType& a, const SignedCycleType& b)
  {
    return a.positive == b.positive && a.negative == b.negative;
  }
};

// Character (lam x gam) of W(B_n) on a signed cycle type; (n)x() is trivial, ()x(1^n) is det.
inline long bnCharacter(const Bipartition& lg, const SignedCycleType& ct)
{
  if (lg.size() != ct.size()) throw std::invalid_argument("size mismatch");
  std::vector<std::pair<int, int>> cycles;
  for (int r : ct.positive.parts) cycles.push_back({r, 1});
  for (int r : ct.negative.parts) cycles.push_back({r, -1});
  std::map<std::tuple<std::vector<int>, std::vector<int>, int>, long> memo;
  std::function<long(const Partition&, const Partition&, int)> rec =
      [&](const Partition& l, const Partition& g, int k) -> long {
    if (k == int(cycles.size())) return 1;
    auto key = std::make_tuple(l.parts, g.parts, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto [r, eps] = cycles[k];
    long v = 0;
    for (const auto& [rest, sg] : detail::rimHooks(l, r)) v += sg * rec(rest, g, k + 1);
    for (const auto& [rest, sg] : detail::rimHooks(g, r)) v += eps * sg * rec(l, rest, k + 1);
    memo[key] = v;
    return v;
  };
  return rec(lg.left, lg.right, 0);
}

inline Integer factorial(int n)
{
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// n!/z_alpha
inline Integer cycleClassSize(const Partition& alpha)
{
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : alpha.parts) {
    z *= p;
    ++mult[p];
  }
  for (auto [p, m] : mult) z *= factorial(m);
  return factorial(alpha.size()) / z;
}

// ---- symbols and component groups ----

enum class SymbolKind { B, C, D };

inline std::vector<Partition> distinctPartsPartitions(int total, bool odd)
{
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      if ((p % 2 == 1) != odd) continue;
      cur.push_back(p);
      rec(rem - p, p - 1);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

inline std::vector<Partition> distinguishedPartitions(SymbolKind kind, int n)
{
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (kind) {
  case SymbolKind::C:
    return distinctPartsPartitions(2 * n, false);
  case SymbolKind::B:
    return distinctPartsPartitions(2 * n + 1, true);
  case SymbolKind::D: {
    std::vector<Partition> out;
    for (auto& p : distinctPartsPartitions(2 * n, true))
      if (p.length() % 2 == 0) out.push_back(p);
    return out;
  }
  }
  return {};
}

struct SSymbol {
  std::vector<int> top, bottom;
  SymbolKind kind = SymbolKind::C;
  bool padded = false; // a leading a_1 = 0 was added (type C, m even)

  std::vector<int> entries() const
  {
    std::vector<int> e = top;
    e.insert(e.end(), bottom.begin(), bottom.end());
    std::sort(e.begin(), e.end());
    return e;
  }
  bool rowsStrictlyIncreasing() const
  {
    auto inc = [](const std::vector<int>& r) {
      for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] <= r[i - 1]) return false;
      return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    };
    return inc(top) && inc(bottom);
  }
  friend bool operator==(const SSymbol& a, const SSymbol& b) { return a.top == b.top && a.bottom == b.bottom; }
};

inline bool isDistinguished(SymbolKind kind, const Partition& u)
{
  std::vector<int> p = u.parts;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  for (int x : p) {
    if (kind == SymbolKind::C && x % 2 != 0) return false;
    if (kind != SymbolKind::C && x % 2 != 1) return false;
  }
  if (kind == SymbolKind::B && u.size() % 2 != 1) return false;
  if (kind == SymbolKind::D && p.size() % 2 != 0) return false;
  return !p.empty();
}

// The a_j (increasing) after padding, and whether padding happened.
inline std::pair<std::vector<int>, bool> symbolSequence(SymbolKind kind, const Partition& u)
{
  if (!isDistinguished(kind, u)) throw std::invalid_argument("non-distinguished input " + u.str());
  std::vector<int> a;
  for (int x : u.parts) a.push_back(kind == SymbolKind::C ? x / 2 : (x - 1) / 2);
  std::sort(a.begin(), a.end());
  bool padded = false;
  if (kind == SymbolKind::C && a.size() % 2 == 0) {
    a.insert(a.begin(), 0);
    padded = true;
  }
  return {a, padded};
}

// Type B mirrors type C on the parts (2a_j+1); reconstructed, not quoted.
inline SSymbol trivSymbol(SymbolKind kind, const Partition& u)
{
  auto [a, padded] = symbolSequence(kind, u);
  SSymbol s;
  s.kind = kind;
  s.padded = padded;
  for (std::size_t j = 0; j < a.size(); ++j) {
    int e = a[j] + int(j);
    (j % 2 == 0 ? s.top : s.bottom).push_back(e);
  }
  return s;
}

struct ComponentRep {
  std::vector<bool> sign; // per real part, true = sign representation
  friend bool operator==(const ComponentRep& a, const ComponentRep& b) { return a.sign == b.sign; }
  int signCount() const { return int(std::count(sign.begin(), sign.end(), true)); }
  std::string str() const
  {
    std::string s;
    for (bool b : sign) s += b ? '-' : '+';
    return s;
  }
};

inline SSymbol normalizeRows(SSymbol s)
{
  auto e = s.entries();
  if (s.kind == SymbolKind::D && !e.empty() && std::find(s.top.begin(), s.top.end(), e[0]) == s.top.end())
    std::swap(s.top, s.bottom);
  return s;
}

inline ComponentRep symbolToComponentRep(const SSymbol& sym, const SSymbol& triv)
{
  if (sym.entries() != triv.entries()) throw std::invalid_argument("incompatible symbols");
  SSymbol s = normalizeRows(sym);
  if (!s.rowsStrictlyIncreasing()) throw std::invalid_argument("incompatible symbols");
  auto inTop = [](const SSymbol& x, int v) { return std::find(x.top.begin(), x.top.end(), v) != x.top.end(); };
  auto e = triv.entries();
  ComponentRep r;
  for (std::size_t j = triv.padded ? 1 : 0; j < e.size(); ++j) r.sign.push_back(inTop(s, e[j]) != inTop(triv, e[j]));
  return r;
}

// Swap the consecutive entries at real positions j, j+1 (0-based) between rows.
inline SSymbol flipAdjacent(const SSymbol& triv, int j)
{
  auto e = triv.entries();
  int off = triv.padded ? 1 : 0;
  int x = e.at(j + off), y = e.at(j + 1 + off);
  SSymbol s = triv;
  for (auto* row : {&s.top, &s.bottom})
    for (int& v : *row) {
      if (v == x) v = y;
      else if (v == y) v = x;
    }
  for (auto* row : {&s.top, &s.bottom}) std::sort(row->begin(), row->end());
  return normalizeRows(s);
}

inline std::vector<ComponentRep> adjacentFlipReps(SymbolKind kind, const Partition& u)
{
  SSymbol t = trivSymbol(kind, u);
  std::vector<ComponentRep> out;
  for (int j = 0; j + 1 < u.length(); ++j) out.push_back(symbolToComponentRep(flipAdjacent(t, j), t));
  return out;
}

// Elements of A(u) as sign vectors over the parts, one representative each.
inline std::vector<std::vector<bool>> componentGroupElements(SymbolKind kind, int m)
{
  std::vector<std::vector<bool>> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<bool> g(m);
    int w = 0;
    for (int i = 0; i < m; ++i) w += (g[i] = (mask >> i) & 1);
    if (kind != SymbolKind::C && w % 2) continue;
    if (kind != SymbolKind::B && g[0]) continue; // quotient by the diagonal
    out.push_back(g);
  }
  return out;
}

inline int evalComponentRep(const ComponentRep& r, const std::vector<bool>& g)
{
  int s = 1;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] && r.sign[i]) s = -s;
  return s;
}

// True when the flip representations are well defined on A(u) and separate it.
inline bool flipRepsSeparate(SymbolKind kind, const Partition& u)
{
  auto reps = adjacentFlipReps(kind, u);
  int m = u.length();
  if (kind != SymbolKind::B) {
    std::vector<bool> diag(m, true);
    for (const auto& r : reps)
      if (evalComponentRep(r, diag) != 1) return false;
  }
  for (const auto& g : componentGroupElements(kind, m)) {
    if (std::none_of(g.begin(), g.end(), [](bool b) { return b; })) continue;
    bool seen = false;
    for (const auto& r : reps)
      if (evalComponentRep(r, g) == -1) seen = true;
    if (!seen) return false;
  }
  return true;
}

// ---- JSON ----

inline nlohmann::json toJson(const Partition& p) { return p.parts; }

inline Partition partitionFromJson(const nlohmann::json& j) { return Partition(j.get<std::vector<int>>()); }

inline nlohmann::json toJson(const SSymbol& s) { return {{"top", s.top}, {"bottom", s.bottom}}; }

inline Partition parsePartition(const std::string& s)
{
  std::vector<int> p;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (!tok.empty()) p.push_back(std::stoi(tok));
    i = j + 1;
  }
  return Partition(p);
}

} // namespace ellq
