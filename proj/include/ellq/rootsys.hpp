#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactq.hpp"
#include "group.hpp"

namespace ellq {

using IntVec = std::vector<int>;

// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering.
inline std::vector<IntVec> cartanMatrix(char type, int n)
{
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
  case 'A':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    if (n >= 2) a[n - 2][n - 1] = -2;
    break;
  case 'C':
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    if (n >= 2) a[n - 1][n - 2] = -2;
    break;
  case 'D':
    if (n < 3) throw std::invalid_argument("D_n needs n >= 3 here");
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
    break;
  case 'G':
    if (n != 2) throw std::invalid_argument("G2 only");
    a[0][1] = -1; // alpha_1 short
    a[1][0] = -3;
    break;
  case 'F':
    if (n != 4) throw std::invalid_argument("F4 only");
    link(0, 1);
    link(2, 3);
    a[1][2] = -2;
    a[2][1] = -1;
    break;
  case 'E':
    if (n < 6 || n > 8) throw std::invalid_argument("E6..E8 only");
    link(0, 2);
    link(1, 3);
    for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
    break;
  default:
    throw std::invalid_argument(std::string("unknown type ") + type);
  }
  return a;
}

// Finite root system from a Cartan matrix; roots in simple-root coordinates.
class RootSystem {
public:
  RootSystem() = default;
  explicit RootSystem(std::vector<IntVec> cartan) : a_(std::move(cartan)), n_(int(a_.size()))
  {
    computeLengths();
    computeRoots();
  }
  static RootSystem ofType(char type, int n) { return RootSystem(cartanMatrix(type, n)); }

  int rank() const { return n_; }
  const std::vector<IntVec>& cartan() const { return a_; }
  const std::vector<IntVec>& positiveRoots() const { return pos_; }
  std::vector<IntVec> roots() const
  {
    std::vector<IntVec> r = pos_;
    for (const auto& p : pos_) r.push_back(neg(p));
    return r;
  }
  int numPositive() const { return int(pos_.size()); }

  // (alpha_i, alpha_j)
  Rational form(int i, int j) const { return Rational(a_[i][j]) * len_[j] / 2; }
  Rational inner(const IntVec& x, const IntVec& y) const
  {
    Rational s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (x[i] && y[j]) s += x[i] * y[j] * form(i, j);
    return s;
  }
  Rational normSq(const IntVec& x) const { return inner(x, x); }
  const std::vector<Rational>& simpleLengths() const { return len_; }

  // <x, beta^vee>
  Rational pairing(const IntVec& x, const IntVec& beta) const { return 2 * inner(x, beta) / normSq(beta); }

  // Reflection in beta acting on simple-root coordinates (columns are images).
  IntMatrix reflection(const IntVec& beta) const
  {
    IntMatrix m = IntMatrix::identity(n_);
    for (int i = 0; i < n_; ++i) {
      IntVec e(n_, 0);
      e[i] = 1;
      Rational c = pairing(e, beta);
      if (c.get_den() != 1) throw std::logic_error("non-integral reflection");
      long ci = c.get_num().get_si();
      for (int k = 0; k < n_; ++k) m(k, i) -= int(ci * beta[k]);
    }
    return m;
  }
  std::vector<IntMatrix> simpleReflections() const
  {
    std::vector<IntMatrix> out;
    for (int i = 0; i < n_; ++i) {
      IntVec e(n_, 0);
      e[i] = 1;
      out.push_back(reflection(e));
    }
    return out;
  }

  IntVec highestRoot() const
  {
    return *std::max_element(pos_.begin(), pos_.end(), [](const IntVec& x, const IntVec& y) {
      return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
  }
  // Highest root among the short roots.
  IntVec highestShortRoot() const
  {
    Rational m = normSq(pos_[0]);
    for (const auto& r : pos_) m = std::min(m, normSq(r));
    IntVec best;
    int bh = -1;
    for (const auto& r : pos_) {
      int h = std::accumulate(r.begin(), r.end(), 0);
      if (normSq(r) == m && h > bh) {
        bh = h;
        best = r;
      }
    }
    return best;
  }
  bool isRoot(const IntVec& x) const
  {
    for (const auto& r : pos_)
      if (r == x || neg(r) == x) return true;
    return false;
  }
  static IntVec neg(IntVec v)
  {
    for (auto& x : v) x = -x;
    return v;
  }

private:
  void computeLengths()
  {
    len_.assign(n_, 0);
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      seen[s] = true;
      len_[s] = 1;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        int i = comp[h];
        for (int j = 0; j < n_; ++j)
          if (!seen[j] && a_[i][j] != 0) {
            // a_ij |a_j|^2 = a_ji |a_i|^2
            len_[j] = len_[i] * a_[j][i] / a_[i][j];
            seen[j] = true;
            comp.push_back(j);
          }
      }
      Rational mn = len_[s];
      for (int i : comp) mn = std::min(mn, len_[i]);
      for (int i : comp) len_[i] = len_[i] * 2 / mn;
    }
  }
  void computeRoots()
  {
    std::map<IntVec, bool> have;
    for (int i = 0; i < n_; ++i) {
      IntVec e(n_, 0);
      e[i] = 1;
      pos_.push_back(e);
      have[e] = true;
    }
    for (std::size_t h = 0; h < pos_.size(); ++h) {
      IntVec b = pos_[h];
      for (int i = 0; i < n_; ++i) {
        // p = largest with b - p alpha_i a root
        int p = 0;
        for (;;) {
          IntVec c = b;
          c[i] -= p + 1;
          if (have.count(c)) ++p;
          else break;
        }
        Rational pr = pairing(b, unit(i));
        long qv = p - pr.get_num().get_si();
        if (qv > 0) {
          IntVec c = b;
          c[i] += 1;
          if (!have.count(c)) {
            have[c] = true;
            pos_.push_back(c);
          }
        }
      }
    }
    std::sort(pos_.begin(), pos_.end(), [](const IntVec& x, const IntVec& y) {
      int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
      if (hx != hy) return hx < hy;
      return x > y;
    });
  }
  IntVec unit(int i) const
  {
    IntVec e(n_, 0);
    e[i] = 1;
    return e;
  }

  std::vector<IntVec> a_;
  int n_ = 0;
  std::vector<Rational> len_;
  std::vector<IntVec> pos_;
};

// Standard exponents.
inline std::vector<int> exponentsOf(char type, int n)
{
  std::vector<int> m;
  switch (type) {
  case 'A':
    for (int i = 1; i <= n; ++i) m.push_back(i);
    break;
  case 'B':
  case 'C':
    for (int i = 1; i <= n; ++i) m.push_back(2 * i - 1);
    break;
  case 'D':
    for (int i = 1; i < n; ++i) m.push_back(2 * i - 1);
    m.push_back(n - 1);
    break;
  case 'G':
    m = {1, 5};
    break;
  case 'F':
    m = {1, 5, 7, 11};
    break;
  case 'E':
    if (n == 6) m = {1, 4, 5, 7, 8, 11};
    else if (n == 7) m = {1, 5, 7, 9, 11, 13, 17};
    else if (n == 8) m = {1, 7, 11, 13, 17, 19, 23, 29};
    else throw std::invalid_argument("E6..E8 only");
    break;
  default:
    throw std::invalid_argument("unknown type");
  }
  std::sort(m.begin(), m.end());
  return m;
}

struct ExponentData {
  std::vector<int> exponents;
  QPolynomial poincare;

  static ExponentData of(const std::vector<int>& m)
  {
    ExponentData d;
    d.exponents = m;
    d.poincare = QPolynomial(1);
    for (int e : m) {
      std::vector<Rational> c(e + 1, Rational(1));
      d.poincare *= QPolynomial(c);
    }
    return d;
  }
  Integer order() const
  {
    Integer r = 1;
    for (int e : exponents) r *= e + 1;
    return r;
  }
};

} // namespace ellq
