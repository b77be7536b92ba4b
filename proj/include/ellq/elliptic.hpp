#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "exactq.hpp"
#include "linalg.hpp"
#include "weylgrp.hpp"

namespace ellq {

// <a, b>^el = (1/|W|) sum_w a(w) b(w) det(1-w)
inline Rational ellipticPairing(const WeylGroup& w, const ClassFunction& a, const ClassFunction& b)
{
  Rational s = 0;
  for (int c = 0; c < w.numClasses(); ++c) {
    const auto& cl = w.classes()[c];
    if (!cl.elliptic) continue;
    s += Rational(cl.size) * a[c] * b[c] * cl.det1;
  }
  return s / w.order();
}

inline Rational ellipticPairing(const VirtualCharacter& a, const VirtualCharacter& b)
{
  if (a.group != b.group || !a.group) throw std::invalid_argument("group mismatch");
  const WeylGroup& w = *a.group;
  return ellipticPairing(w, w.classFunction(a), w.classFunction(b));
}

// <pi, S_q E>^el = (1/|W|) sum_w pi(w) det(1-w)/det(1-qw)
inline RationalFunction ellipticSqPairing(const WeylGroup& w, const ClassFunction& pi)
{
  const QPolynomial& L = w.charPolyLcm();
  QPolynomial s;
  for (int c = 0; c < w.numClasses(); ++c) {
    const auto& cl = w.classes()[c];
    if (!cl.elliptic || pi[c] == 0) continue;
    s += (Rational(cl.size) * pi[c] * cl.det1) * L.exactDiv(cl.charPoly);
  }
  return RationalFunction(s, Rational(w.order()) * L);
}

// F_[pi] = (q-1)^l <pi, S_q E>^el
inline RationalFunction ellipticFakeDegree(const WeylGroup& w, const ClassFunction& pi)
{
  RationalFunction qm1(QPolynomial::fromInts({-1, 1}));
  return qm1.pow(w.rank()) * ellipticSqPairing(w, pi);
}

inline RationalFunction ellipticFakeDegree(const VirtualCharacter& v)
{
  return ellipticFakeDegree(*v.group, v.group->classFunction(v));
}

// (1-q)^l prod (1-q^{m_i})/(1-q^{m_i+1})
inline RationalFunction sgnFakeDegree(const std::vector<int>& exponents)
{
  auto oneMinus = [](int k) { return RationalFunction(QPolynomial(1) - QPolynomial::monomial(k)); };
  RationalFunction r = oneMinus(1).pow(int(exponents.size()));
  for (int m : exponents) r *= oneMinus(m) / oneMinus(m + 1);
  return r;
}

inline RationalFunction sgnFakeDegree(const ExponentData& e) { return sgnFakeDegree(e.exponents); }

// Denominator of F_[sgn] in lowest terms.
inline CyclotomicFactorization cycOf(const std::vector<int>& exponents)
{
  return factorCyclotomic(sgnFakeDegree(exponents).den());
}

inline std::string renderCyc(const CyclotomicFactorization& f)
{
  std::string s;
  for (auto [n, m] : f.factors) {
    if (!s.empty()) s += " ";
    s += "Phi" + std::to_string(n);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

// (q-1)^n q^{2n(lam)} prod (1-q^{2c+1})/(1-q^{2h})
inline RationalFunction bnFakeClosed(const Partition& lam)
{
  int n = lam.size();
  RationalFunction q = RationalFunction::q();
  RationalFunction one(1);
  auto cd = contentAndN(lam);
  RationalFunction r = (q - one).pow(n) * q.pow(2 * cd.n);
  for (const auto& [cell, c] : cd.contents) r *= one - q.pow(2 * c + 1);
  for (const auto& [cell, h] : hookLengths(lam)) r /= one - q.pow(2 * h);
  return r;
}

inline RationalFunction dnFakeClosed(const Partition& lam)
{
  int n = lam.size();
  if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
  RationalFunction b = bnFakeClosed(lam), bt = bnFakeClosed(lam.transpose());
  return n % 2 == 0 ? b + bt : b - bt;
}

// Character lam x () of W(B_n), or its restriction to W(D_n), as a class function.
inline ClassFunction lambdaTimesEmpty(const WeylGroup& w, const Partition& lam)
{
  if (w.family() != 'B' && w.family() != 'D') throw std::invalid_argument("needs a B or D group");
  Bipartition b{lam, Partition{}};
  ClassFunction f;
  for (const auto& c : w.classes()) f.push_back(bnCharacter(b, *c.signedType));
  return f;
}

// Partitions of n modulo transpose: the representative with lam >= lam^t.
inline std::vector<Partition> partitionsModTranspose(int n)
{
  std::vector<Partition> out;
  for (const auto& p : partitionsOf(n))
    if (!(p < p.transpose())) out.push_back(p);
  return out;
}

struct EllipticGram {
  std::vector<ClassFunction> basis;
  RatMatrix gram;
};

inline EllipticGram ellipticGram(const WeylGroup& w, std::vector<ClassFunction> basis)
{
  EllipticGram g;
  int n = int(basis.size());
  g.gram = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g.gram[i][j] = g.gram[j][i] = ellipticPairing(w, basis[i], basis[j]);
  g.basis = std::move(basis);
  return g;
}

struct IndependenceReport {
  bool independent = false;
  int rank = 0;
  int ellipticCount = 0;
  std::vector<std::pair<int, int>> coincidentPairs; // class indices
};

// Rank over Q of {1/det(1-qw)} on elliptic classes, after clearing by the lcm.
inline IndependenceReport independenceCheck(const WeylGroup& w)
{
  IndependenceReport r;
  auto ell = w.ellipticClasses();
  r.ellipticCount = int(ell.size());
  QPolynomial L(1);
  for (int c : ell) {
    const QPolynomial& p = w.classes()[c].charPoly;
    L = L * p.exactDiv(QPolynomial::gcd(L, p));
  }
  RatMatrix m;
  for (int c : ell) {
    QPolynomial p = L.exactDiv(w.classes()[c].charPoly);
    std::vector<Rational> row(L.degree() + 1, 0);
    for (int k = 0; k <= p.degree(); ++k) row[k] = p.coeff(k);
    m.push_back(row);
  }
  r.rank = rank(m);
  r.independent = r.rank == r.ellipticCount;
  for (std::size_t i = 0; i < ell.size(); ++i)
    for (std::size_t j = i + 1; j < ell.size(); ++j)
      if (w.classes()[ell[i]].charPoly == w.classes()[ell[j]].charPoly) r.coincidentPairs.push_back({ell[i], ell[j]});
  return r;
}

struct RadicalReport {
  bool inducedAreRadical = true;
  int gramRank = 0;
  int ellipticCount = 0;
  int inducedChecked = 0;
  bool ok() const { return inducedAreRadical && gramRank == ellipticCount; }
};

// Induced characters from maximal standard parabolics pair to zero; the Gram on Irr has full elliptic rank.
inline RadicalReport radicalCheck(const WeylGroup& w)
{
  RadicalReport r;
  int n = int(w.group().generators().size());
  std::vector<ClassFunction> irr;
  for (int i = 0; i < w.numIrreps(); ++i) irr.push_back(w.irreducible(i));
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> J;
    for (int j = 0; j < n; ++j)
      if (j != drop) J.push_back(j);
    auto h = parabolic(w, J);
    for (int i = 0; i < h->numIrreps(); ++i) {
      ClassFunction ind = induce(*h, w, h->irreducible(i));
      ++r.inducedChecked;
      for (const auto& chi : irr)
        if (ellipticPairing(w, ind, chi) != 0) r.inducedAreRadical = false;
    }
  }
  r.gramRank = rank(ellipticGram(w, irr).gram);
  r.ellipticCount = int(w.ellipticClasses().size());
  return r;
}

inline ClassFunction tensor(const ClassFunction& a, const ClassFunction& b)
{
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

} // namespace ellq
