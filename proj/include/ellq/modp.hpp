#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace ellq::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return u64((u128)a * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { u64 r = a + b; return r >= p ? r - p : r; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow(u64 a, u64 e, u64 p)
{
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p)
{
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p - 2, p);
}

inline u64 fromSigned(long long x, u64 p)
{
  long long r = x % (long long)p;
  return r < 0 ? u64(r + (long long)p) : u64(r);
}

inline bool isPrime(u64 n)
{
  if (n < 2) return false;
  for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (n % s == 0) return n == s;
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < r; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

// Smallest prime p = 1 mod e with p > 2^bits.
inline u64 primeCongruentOne(u64 e, int bits = 50)
{
  u64 k = ((1ULL << bits) / e) + 1;
  for (;; ++k) {
    u64 p = k * e + 1;
    if (isPrime(p)) return p;
  }
}

inline std::vector<u64> primeFactors(u64 n)
{
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// Primitive e-th root of unity mod p (requires e | p-1).
inline u64 primitiveRoot(u64 e, u64 p)
{
  if ((p - 1) % e) throw std::invalid_argument("e does not divide p-1");
  auto fs = primeFactors(e);
  for (u64 a = 2;; ++a) {
    u64 z = pow(a, (p - 1) / e, p);
    bool ok = true;
    for (u64 r : fs)
      if (pow(z, e / r, p) == 1) ok = false;
    if (ok) return z;
  }
}

// ---- polynomials over F_p, lowest degree first ----

using Poly = std::vector<u64>;

inline void trim(Poly& a)
{
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly polyMul(const Poly& a, const Poly& b, u64 p)
{
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  trim(r);
  return r;
}

inline Poly polyMod(Poly a, const Poly& b, u64 p)
{
  trim(a);
  if (b.empty()) throw std::domain_error("mod by zero polynomial");
  u64 li = inv(b.back(), p);
  int db = int(b.size()) - 1;
  for (int i = int(a.size()) - 1; i >= db; --i) {
    u64 f = mul(a[i], li, p);
    if (!f) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j], p), p);
  }
  if ((int)a.size() > db) a.resize(db);
  trim(a);
  return a;
}

inline Poly polyDiv(Poly a, const Poly& b, u64 p)
{
  trim(a);
  int db = int(b.size()) - 1;
  if (int(a.size()) - 1 < db) return {};
  Poly q(a.size() - db, 0);
  u64 li = inv(b.back(), p);
  for (int i = int(a.size()) - 1; i >= db; --i) {
    u64 f = mul(a[i], li, p);
    q[i - db] = f;
    if (!f) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j], p), p);
  }
  trim(q);
  return q;
}

inline Poly polyMonic(Poly a, u64 p)
{
  trim(a);
  if (a.empty()) return a;
  u64 li = inv(a.back(), p);
  for (auto& x : a) x = mul(x, li, p);
  return a;
}

inline Poly polyGcd(Poly a, Poly b, u64 p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = polyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return polyMonic(a, p);
}

inline Poly polyPowMod(Poly base, u64 e, const Poly& f, u64 p)
{
  Poly r{1};
  base = polyMod(base, f, p);
  while (e) {
    if (e & 1) r = polyMod(polyMul(r, base, p), f, p);
    base = polyMod(polyMul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline u64 polyEval(const Poly& a, u64 x, u64 p)
{
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = add(mul(r, x, p), *it, p);
  return r;
}

// Distinct roots in F_p (odd p).
inline std::vector<u64> roots(const Poly& f0, u64 p, std::mt19937_64& rng)
{
  Poly f = polyMonic(f0, p);
  if (f.size() <= 1) return {};
  Poly xp = polyPowMod({0, 1}, p, f, p);
  Poly t = xp;
  if (t.size() < 2) t.resize(2, 0);
  t[1] = sub(t[1], 1, p);
  trim(t);
  Poly g = polyGcd(f, t, p);
  std::vector<u64> out;
  std::vector<Poly> stack{g};
  while (!stack.empty()) {
    Poly h = stack.back();
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      out.push_back(sub(0, h[0], p));
      continue;
    }
    for (;;) {
      u64 a = rng() % p;
      Poly s = polyPowMod({a, 1}, (p - 1) / 2, h, p);
      if (s.empty()) s = {0};
      s[0] = sub(s[0], 1, p);
      trim(s);
      Poly d = polyGcd(h, s, p);
      if (d.size() > 1 && d.size() < h.size()) {
        stack.push_back(d);
        stack.push_back(polyDiv(h, d, p));
        break;
      }
    }
  }
  return out;
}

using Matrix = std::vector<std::vector<u64>>;

// det(xI - M), via Hessenberg reduction.
inline Poly charPoly(Matrix a, u64 p)
{
  int n = int(a.size());
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (a[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
    }
    u64 iv = inv(a[m][m - 1], p);
    for (int i = m + 1; i < n; ++i) {
      u64 f = mul(a[i][m - 1], iv, p);
      if (!f) continue;
      for (int j = 0; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[m][j], p), p);
      for (int j = 0; j < n; ++j) a[j][m] = add(a[j][m], mul(f, a[j][i], p), p);
    }
  }
  std::vector<Poly> c(n + 1);
  c[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // c[m] = (x - a[m-1][m-1]) c[m-1] - sum ...
    Poly r(c[m - 1].size() + 1, 0);
    for (std::size_t i = 0; i < c[m - 1].size(); ++i) {
      r[i + 1] = add(r[i + 1], c[m - 1][i], p);
      r[i] = sub(r[i], mul(a[m - 1][m - 1], c[m - 1][i], p), p);
    }
    u64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = mul(t, a[m - i][m - i - 1], p);
      u64 h = mul(t, a[m - i - 1][m - 1], p);
      for (std::size_t j = 0; j < c[m - i - 1].size(); ++j) r[j] = sub(r[j], mul(h, c[m - i - 1][j], p), p);
    }
    trim(r);
    c[m] = r;
  }
  return c[n];
}

// Basis of the right null space.
inline std::vector<std::vector<u64>> nullSpace(Matrix a, u64 p)
{
  int n = int(a.size()), m = n ? int(a[0].size()) : 0;
  std::vector<int> pivCol;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    u64 iv = inv(a[r][c], p);
    for (auto& x : a[r]) x = mul(x, iv, p);
    for (int i = 0; i < n; ++i) {
      if (i == r || !a[i][c]) continue;
      u64 f = a[i][c];
      for (int j = 0; j < m; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j], p), p);
    }
    pivCol.push_back(c);
    ++r;
  }
  std::vector<bool> isPiv(m, false);
  for (int c : pivCol) isPiv[c] = true;
  std::vector<std::vector<u64>> basis;
  for (int fcol = 0; fcol < m; ++fcol) {
    if (isPiv[fcol]) continue;
    std::vector<u64> v(m, 0);
    v[fcol] = 1;
    for (int i = 0; i < r; ++i) v[pivCol[i]] = sub(0, a[i][fcol], p);
    basis.push_back(v);
  }
  return basis;
}

} // namespace ellq::modp
