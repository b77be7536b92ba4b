#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "exactq.hpp"
#include "modp.hpp"

namespace ellq {

// Small square integer matrix, row-major.
struct IntMatrix {
  int dim = 0;
  std::vector<int> a;

  IntMatrix() = default;
  explicit IntMatrix(int d) : dim(d), a(std::size_t(d) * d, 0) {}
  static IntMatrix identity(int d)
  {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    return m;
  }
  int& operator()(int i, int j) { return a[std::size_t(i) * dim + j]; }
  int operator()(int i, int j) const { return a[std::size_t(i) * dim + j]; }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
  {
    IntMatrix r(x.dim);
    for (int i = 0; i < x.dim; ++i)
      for (int k = 0; k < x.dim; ++k) {
        int v = x(i, k);
        if (!v) continue;
        for (int j = 0; j < x.dim; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  IntMatrix transpose() const
  {
    IntMatrix r(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.a == y.a; }
  int trace() const
  {
    int t = 0;
    for (int i = 0; i < dim; ++i) t += (*this)(i, i);
    return t;
  }
};

// det(1 - q M) via Faddeev-LeVerrier.
inline QPolynomial detOneMinusQ(const IntMatrix& m)
{
  int n = m.dim;
  // c_n = 1, det(xI - M) = sum c_k x^k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, 0)); // M_k
  std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int l = 0; l < n; ++l)
          if (m(i, l)) s += m(i, l) * mk[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = next;
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (m(i, l)) tr += m(i, l) * mk[l][i];
    c[n - k] = -tr / k;
  }
  // det(1 - qM) = q^n det(q^{-1} - M) = sum c_k q^{n-k}
  std::vector<Rational> r(n + 1);
  for (int k = 0; k <= n; ++k) r[n - k] = c[k];
  return QPolynomial(std::move(r));
}

struct ConjClass {
  int rep = 0;          // element index (shortest word)
  long size = 0;
  int order = 1;        // element order
  std::vector<int> members;
};

// Finite group of integer matrices, enumerated by breadth-first closure.
class MatrixGroup {
public:
  MatrixGroup() = default;

  static MatrixGroup generate(int dim, const std::vector<IntMatrix>& gens, long bound = 50000)
  {
    MatrixGroup g;
    g.dim_ = dim;
    g.gens_ = gens;
    g.add(IntMatrix::identity(dim), -1, -1);
    for (std::size_t head = 0; head < g.size_(); ++head) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        IntMatrix p = g.element(int(head)) * gens[s];
        if (g.find(p) < 0) {
          if (long(g.size_()) >= bound) throw std::length_error("enumeration bound exceeded");
          g.add(p, int(head), int(s));
        }
      }
    }
    g.finish();
    return g;
  }

  // Subgroup from an explicit element list; closure is verified.
  static MatrixGroup fromElements(int dim, const std::vector<IntMatrix>& elems)
  {
    MatrixGroup g;
    g.dim_ = dim;
    g.add(IntMatrix::identity(dim), -1, -1);
    for (const auto& e : elems)
      if (g.find(e) < 0) g.add(e, -1, -1);
    for (std::size_t i = 0; i < g.size_(); ++i)
      for (std::size_t j = 0; j < g.size_(); ++j)
        if (g.find(g.element(int(i)) * g.element(int(j))) < 0)
          throw std::invalid_argument("element list is not closed");
    g.finish();
    return g;
  }

  int dim() const { return dim_; }
  long order() const { return long(size_()); }
  const std::vector<IntMatrix>& generators() const { return gens_; }
  IntMatrix element(int i) const
  {
    IntMatrix m(dim_);
    const std::int8_t* p = &data_[std::size_t(i) * dim_ * dim_];
    for (int k = 0; k < dim_ * dim_; ++k) m.a[k] = p[k];
    return m;
  }
  int find(const IntMatrix& m) const
  {
    auto it = index_.find(key(m));
    return it == index_.end() ? -1 : it->second;
  }
  int mul(int i, int j) const
  {
    int r = find(element(i) * element(j));
    if (r < 0) throw std::logic_error("product left the group");
    return r;
  }
  int inverse(int i) const { return inv_[i]; }
  int length(int i) const { return depth_[i]; }
  int elementOrder(int i) const
  {
    int o = 1, x = i;
    while (x != 0) {
      x = mul(x, i);
      ++o;
    }
    return o;
  }
  int power(int i, int k) const
  {
    int r = 0;
    for (int t = 0; t < k; ++t) r = mul(r, i);
    return r;
  }

  // Classes sorted by (size, key(rep), rep index); key is supplied by the caller.
  void computeClasses(const std::function<QPolynomial(const IntMatrix&)>& keyOf)
  {
    long n = order();
    classOf_.assign(n, -1);
    std::vector<ConjClass> cls;
    std::vector<IntMatrix> conj = gens_;
    if (conj.empty())
      for (long i = 0; i < n; ++i) conj.push_back(element(int(i)));
    std::vector<IntMatrix> conjInv;
    for (const auto& g : conj) conjInv.push_back(element(inv_[find(g)]));
    for (long i = 0; i < n; ++i) {
      if (classOf_[i] >= 0) continue;
      ConjClass c;
      int id = int(cls.size());
      std::vector<int> stack{int(i)};
      classOf_[i] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        c.members.push_back(x);
        IntMatrix mx = element(x);
        for (std::size_t s = 0; s < conj.size(); ++s) {
          int y = find(conjInv[s] * mx * conj[s]);
          if (classOf_[y] < 0) {
            classOf_[y] = id;
            stack.push_back(y);
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.rep = c.members.front();
      c.size = long(c.members.size());
      c.order = elementOrder(c.rep);
      cls.push_back(std::move(c));
    }
    std::vector<QPolynomial> keys;
    for (const auto& c : cls) keys.push_back(keyOf(element(c.rep)));
    std::vector<int> perm(cls.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (cls[a].size != cls[b].size) return cls[a].size < cls[b].size;
      if (keys[a] != keys[b]) return keys[a] < keys[b];
      return cls[a].rep < cls[b].rep;
    });
    classes_.clear();
    std::vector<int> newId(cls.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      newId[perm[k]] = int(k);
      classes_.push_back(std::move(cls[perm[k]]));
    }
    for (auto& c : classOf_) c = newId[c];
  }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int classOf(int elem) const { return classOf_[elem]; }
  int numClasses() const { return int(classes_.size()); }

  // Class of rep(c)^k.
  int classPower(int c, int k) const { return classOf_[power(classes_[c].rep, k)]; }
  int inverseClass(int c) const { return classOf_[inv_[classes_[c].rep]]; }

  long exponent() const
  {
    long e = 1;
    for (const auto& c : classes_) e = std::lcm(e, long(c.order));
    return e;
  }

private:
  std::size_t size_() const { return depth_.size(); }
  std::string key(const IntMatrix& m) const
  {
    std::string s(std::size_t(dim_) * dim_, '\0');
    for (std::size_t k = 0; k < s.size(); ++k) {
      int v = m.a[k];
      if (v < -128 || v > 127) throw std::overflow_error("matrix entry out of range");
      s[k] = char(std::int8_t(v));
    }
    return s;
  }
  void add(const IntMatrix& m, int parent, int gen)
  {
    std::string k = key(m);
    int id = int(size_());
    index_.emplace(k, id);
    for (char ch : k) data_.push_back(std::int8_t(ch));
    parent_.push_back(parent);
    gen_.push_back(gen);
    depth_.push_back(parent < 0 ? (id == 0 ? 0 : -1) : depth_[parent] + 1);
  }
  void finish()
  {
    long n = order();
    inv_.assign(n, -1);
    IntMatrix id = IntMatrix::identity(dim_);
    for (long i = 0; i < n; ++i) {
      if (inv_[i] >= 0) continue;
      IntMatrix m = element(int(i));
      // m has finite order; its inverse is the previous power.
      IntMatrix prev = id, cur = m;
      while (!(cur == id)) {
        prev = cur;
        cur = cur * m;
      }
      int j = find(prev);
      if (j < 0) throw std::logic_error("inverse missing");
      inv_[i] = j;
      inv_[j] = int(i);
    }
  }

  int dim_ = 0;
  std::vector<IntMatrix> gens_;
  std::vector<std::int8_t> data_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> parent_, gen_, depth_, inv_;
  std::vector<ConjClass> classes_;
  std::vector<int> classOf_;
};

// Irreducible characters with values in Q(zeta_e); rows sorted, trivial first.
struct CharacterTable {
  long groupOrder = 0;
  int exponent = 1;
  std::vector<long> classSizes;
  std::vector<std::vector<CycloNumber>> values;
  bool rational = false;
  std::vector<std::vector<long>> intValues; // filled when rational

  int size() const { return int(values.size()); }
  long degree(int chi) const { return values[chi][0].toRational().get_num().get_si(); }
};

namespace detail {

struct ModTable {
  modp::u64 p = 0, root = 0;
  std::vector<long> degrees;
  std::vector<std::vector<modp::u64>> values; // chi x class
};

inline ModTable modularTable(const MatrixGroup& g, std::uint64_t seed)
{
  using namespace modp;
  int k = g.numClasses();
  long n = g.order();
  long e = g.exponent();
  ModTable t;
  t.p = primeCongruentOne(u64(e), 50);
  t.root = primitiveRoot(u64(e), t.p);
  u64 p = t.p;

  // a[i][j][l] = #{x in C_i : x^{-1} z_l in C_j}
  std::vector<std::uint32_t> a(std::size_t(k) * k * k, 0);
  for (int l = 0; l < k; ++l) {
    IntMatrix z = g.element(g.classes()[l].rep);
    for (long x = 0; x < n; ++x) {
      int y = g.find(g.element(g.inverse(int(x))) * z);
      ++a[(std::size_t(g.classOf(int(x))) * k + g.classOf(y)) * k + l];
    }
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<u64> c(k);
    for (auto& x : c) x = rng() % p;
    Matrix m(k, std::vector<u64>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
          std::uint32_t v = a[(std::size_t(i) * k + j) * k + l];
          if (v) m[j][l] = add(m[j][l], mul(c[i], v, p), p);
        }
    Poly cp = charPoly(m, p);
    auto ev = roots(cp, p, rng);
    if (int(ev.size()) != k) continue;
    t.values.clear();
    t.degrees.clear();
    bool ok = true;
    for (u64 lam : ev) {
      Matrix s = m;
      for (int i = 0; i < k; ++i) s[i][i] = sub(s[i][i], lam, p);
      auto ns = nullSpace(s, p);
      if (ns.size() != 1 || ns[0][0] == 0) {
        ok = false;
        break;
      }
      std::vector<u64> w = ns[0];
      u64 iw = inv(w[0], p);
      for (auto& x : w) x = mul(x, iw, p);
      // chi(1)^2 = |G| / sum_l w_l w_{l*} / |C_l|
      u64 s2 = 0;
      for (int l = 0; l < k; ++l)
        s2 = add(s2, mul(mul(w[l], w[g.inverseClass(l)], p), inv(u64(g.classes()[l].size), p), p), p);
      u64 d2 = mul(u64(n) % p, inv(s2, p), p);
      long deg = -1;
      for (long d = 1; d * d <= n; ++d)
        if (u64(d * d) % p == d2) {
          deg = d;
          break;
        }
      if (deg < 0) {
        ok = false;
        break;
      }
      std::vector<u64> chi(k);
      for (int l = 0; l < k; ++l) chi[l] = mul(mul(u64(deg), w[l], p), inv(u64(g.classes()[l].size), p), p);
      t.degrees.push_back(deg);
      t.values.push_back(chi);
    }
    if (ok) return t;
  }
  throw std::runtime_error("character table computation failed");
}

} // namespace detail

// Dixon's method: modular central characters lifted through power maps.
inline CharacterTable characterTable(const MatrixGroup& g, std::uint64_t seed = 0x5eed)
{
  using namespace modp;
  int k = g.numClasses();
  detail::ModTable mt = detail::modularTable(g, seed);
  u64 p = mt.p;
  int e = int(g.exponent());
  CharacterTable t;
  t.groupOrder = g.order();
  t.exponent = e;
  for (const auto& c : g.classes()) t.classSizes.push_back(c.size);

  // power maps
  std::vector<std::vector<int>> pw(k);
  for (int l = 0; l < k; ++l) {
    int o = g.classes()[l].order;
    for (int j = 0; j < o; ++j) pw[l].push_back(g.classPower(l, j));
  }

  for (std::size_t r = 0; r < mt.values.size(); ++r) {
    const auto& chi = mt.values[r];
    long deg = mt.degrees[r];
    std::vector<CycloNumber> row;
    for (int l = 0; l < k; ++l) {
      int o = g.classes()[l].order;
      u64 z = pow(mt.root, u64(e / o), p);
      u64 zi = inv(z, p);
      u64 io = inv(u64(o), p);
      QPolynomial val;
      long total = 0;
      for (int kk = 0; kk < o; ++kk) {
        u64 s = 0;
        u64 step = pow(zi, u64(kk), p);
        u64 f = 1;
        for (int j = 0; j < o; ++j) {
          s = add(s, mul(chi[pw[l][j]], f, p), p);
          f = mul(f, step, p);
        }
        s = mul(s, io, p);
        if (s > u64(deg)) throw std::runtime_error("eigenvalue multiplicity out of range");
        total += long(s);
        if (s) val += QPolynomial::monomial(kk * (e / o), Rational(long(s)));
      }
      if (total != deg) throw std::runtime_error("eigenvalue multiplicities inconsistent");
      row.emplace_back(e, val);
    }
    t.values.push_back(std::move(row));
  }

  t.rational = true;
  for (const auto& row : t.values)
    for (const auto& v : row)
      if (!v.isRational()) t.rational = false;

  // Sort: trivial first, then by degree, then by values.
  auto keyOf = [&](const std::vector<CycloNumber>& row) {
    std::vector<std::string> kk;
    for (const auto& v : row) kk.push_back(v.poly().str());
    return kk;
  };
  std::vector<int> perm(t.values.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto isTrivial = [&](int r) {
    for (const auto& v : t.values[r])
      if (!(v == CycloNumber(e, Rational(1)))) return false;
    return true;
  };
  std::vector<std::vector<std::string>> keys;
  for (const auto& row : t.values) keys.push_back(keyOf(row));
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    bool ta = isTrivial(a), tb = isTrivial(b);
    if (ta != tb) return ta;
    Rational da = t.values[a][0].toRational(), db = t.values[b][0].toRational();
    if (da != db) return da < db;
    if (t.rational) {
      for (int l = 0; l < k; ++l) {
        Rational x = t.values[a][l].toRational(), y = t.values[b][l].toRational();
        if (x != y) return x > y;
      }
      return false;
    }
    return keys[a] < keys[b];
  });
  std::vector<std::vector<CycloNumber>> sorted;
  for (int r : perm) sorted.push_back(t.values[r]);
  t.values = std::move(sorted);

  if (t.rational) {
    for (const auto& row : t.values) {
      std::vector<long> ir;
      for (const auto& v : row) {
        Rational x = v.toRational();
        if (x.get_den() != 1) throw std::runtime_error("non-integral rational character value");
        ir.push_back(x.get_num().get_si());
      }
      t.intValues.push_back(ir);
    }
  }

  // Exact certificate: row orthogonality, and for rational tables the class algebra relations.
  long n = g.order();
  if (t.rational) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        __int128 s = 0;
        for (int l = 0; l < k; ++l) s += (__int128)t.classSizes[l] * t.intValues[a][l] * t.intValues[b][l];
        if (s != (a == b ? n : 0)) throw std::runtime_error("character table failed orthogonality");
      }
  } else {
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        CycloNumber s(e, Rational(0));
        for (int l = 0; l < k; ++l) s += CycloNumber(e, Rational(t.classSizes[l])) * t.values[a][l] * t.values[b][l].conj();
        if (!(s == CycloNumber(e, Rational(a == b ? n : 0))))
          throw std::runtime_error("character table failed orthogonality");
      }
  }
  return t;
}

} // namespace ellq
