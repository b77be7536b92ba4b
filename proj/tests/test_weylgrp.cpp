#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ellq/weylgrp.hpp"

using namespace ellq;

namespace {

const std::vector<std::string> kRealized{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B1", "B2", "B3", "B4",
                                         "B5", "B6", "D2", "D3", "D4", "D5", "D6", "G2", "F4"};

QPolynomial poly(std::initializer_list<long> c) { return QPolynomial::fromInts(c); }

long classSum(const WeylGroup& w)
{
  long s = 0;
  for (const auto& c : w.classes()) s += c.size;
  return s;
}

} // namespace

TEST(Build, Orders)
{
  EXPECT_EQ(weylGroup("G2")->order(), 12);
  EXPECT_EQ(weylGroup("F4")->order(), 1152);
  EXPECT_EQ(weylGroup("B2")->order(), 8);
  EXPECT_EQ(weylGroup("A4")->order(), 120);
  EXPECT_EQ(weylGroup("D4")->order(), 192);
  EXPECT_EQ(weylGroup("C3")->order(), 48);
}

TEST(Build, BoundExceeded)
{
  EXPECT_THROW(WeylGroup::build(GroupSpec::parse("B4"), 100), std::length_error);
}

TEST(Build, RootBasisMatricesPreserveTheForm)
{
  for (const char* t : {"G2", "F4"}) {
    auto w = weylGroup(t);
    RootSystem rs = RootSystem::ofType(t[0], w->rank());
    int n = w->rank();
    for (long i = 0; i < w->order(); i += 7) {
      IntMatrix m = w->group().element(int(i));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Rational s = 0;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) s += m(x, a) * m(y, b) * rs.form(x, y);
          EXPECT_EQ(s, rs.form(a, b));
        }
    }
  }
}

TEST(Classes, ClassEquation)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    EXPECT_EQ(classSum(*w), w->order()) << t;
    for (const auto& c : w->classes()) EXPECT_EQ(w->order() % c.size, 0) << t;
    EXPECT_EQ(w->classes()[0].size, 1);
    EXPECT_EQ(w->classes()[0].charPoly, poly({1, -1}).pow(w->rank()));
  }
}

TEST(Classes, F4EllipticClasses)
{
  auto w = weylGroup("F4");
  auto ell = w->ellipticClasses();
  EXPECT_EQ(ell.size(), 9u);
  QPolynomial target = poly({1, 0, 0, 1}) * poly({1, 1});
  int pairs = 0;
  for (std::size_t i = 0; i < ell.size(); ++i)
    for (std::size_t j = i + 1; j < ell.size(); ++j)
      if (w->classes()[ell[i]].charPoly == w->classes()[ell[j]].charPoly) {
        ++pairs;
        EXPECT_EQ(w->classes()[ell[i]].charPoly, target);
      }
  EXPECT_EQ(pairs, 1);
}

TEST(Classes, SymmetricGroupsHaveOneEllipticClass)
{
  for (int n = 2; n <= 8; ++n) {
    auto w = weylGroup("A" + std::to_string(n - 1));
    auto ell = w->ellipticClasses();
    ASSERT_EQ(ell.size(), 1u);
    EXPECT_EQ(Integer(w->classes()[ell[0]].size), factorial(n - 1));
    EXPECT_EQ(w->classes()[ell[0]].cycleType->parts, std::vector<int>{n});
  }
}

TEST(Classes, InversePalindromy)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    for (int c = 0; c < w->numClasses(); ++c) {
      const QPolynomial& p = w->classes()[c].charPoly;
      const QPolynomial& pi = w->classes()[w->group().inverseClass(c)].charPoly;
      QPolynomial rev = pi.reversed(w->rank());
      EXPECT_TRUE(rev == p || rev == -p) << t;
    }
  }
}

TEST(Table, S3)
{
  auto w = weylGroup("A2");
  // classes sorted by size: (1^3) size 1, (3) size 2, (2,1) size 3
  int c111 = 0, c21 = -1, c3 = -1;
  for (int c = 0; c < 3; ++c) {
    if (w->classes()[c].cycleType->parts == std::vector<int>{2, 1}) c21 = c;
    if (w->classes()[c].cycleType->parts == std::vector<int>{3}) c3 = c;
  }
  std::set<std::vector<long>> rows;
  for (int i = 0; i < 3; ++i) rows.insert({w->value(i, c111), w->value(i, c21), w->value(i, c3)});
  EXPECT_EQ(rows, (std::set<std::vector<long>>{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}}));
  EXPECT_EQ(w->table().intValues[0], (std::vector<long>{1, 1, 1}));
}

TEST(Table, B1AndG2)
{
  auto b1 = weylGroup("B1");
  EXPECT_EQ(b1->table().intValues, (std::vector<std::vector<long>>{{1, 1}, {1, -1}}));
  auto g2 = weylGroup("G2");
  std::multiset<long> dims;
  for (int i = 0; i < g2->numIrreps(); ++i) dims.insert(g2->table().degree(i));
  EXPECT_EQ(dims, (std::multiset<long>{1, 1, 1, 1, 2, 2}));
}

TEST(Table, OrthogonalityAllRealizedGroups)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    const auto& tb = w->table();
    int k = w->numClasses();
    ASSERT_EQ(tb.size(), k) << t;
    for (int c = 0; c < k; ++c) EXPECT_EQ(tb.intValues[0][c], 1);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        long rows = 0, cols = 0;
        for (int i = 0; i < k; ++i) {
          rows += w->classes()[i].size * tb.intValues[a][i] * tb.intValues[b][i];
          cols += tb.intValues[i][a] * tb.intValues[i][b];
        }
        EXPECT_EQ(rows, a == b ? w->order() : 0) << t;
        EXPECT_EQ(cols, a == b ? w->order() / w->classes()[a].size : 0) << t;
      }
  }
}

TEST(Table, MurnaghanNakayamaAgreement)
{
  for (int n = 2; n <= 6; ++n) {
    auto w = weylGroup("A" + std::to_string(n - 1));
    for (int i = 0; i < w->numIrreps(); ++i) {
      Partition lam = parsePartition(w->labels()[i].substr(1, w->labels()[i].size() - 2));
      for (int c = 0; c < w->numClasses(); ++c)
        EXPECT_EQ(w->value(i, c), mnCharacter(lam, *w->classes()[c].cycleType));
    }
  }
}

TEST(Table, LabelsComplete)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    std::set<std::string> seen;
    for (const auto& l : w->labels()) {
      EXPECT_NE(l.rfind("chi", 0), 0u) << t << " " << l;
      seen.insert(l);
    }
    EXPECT_EQ(int(seen.size()), w->numIrreps()) << t;
  }
  auto g2 = weylGroup("G2");
  std::set<std::string> want{"phi{1,0}", "phi{1,6}", "phi'{1,3}", "phi''{1,3}", "phi{2,1}", "phi{2,2}"};
  EXPECT_EQ(std::set<std::string>(g2->labels().begin(), g2->labels().end()), want);
  EXPECT_EQ(g2->signIndex(), g2->irrIndex("phi{1,6}"));
  EXPECT_EQ(weylGroup("B3")->labels()[0], "(3)x()");
}

TEST(Exponents, PoincareFromLengths)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    ASSERT_TRUE(w->exponents().has_value());
    EXPECT_EQ(w->poincare(), w->exponents()->poincare) << t;
    EXPECT_EQ(w->poincare().eval(1), Rational(w->order()));
  }
}

TEST(FakeDegree, TrivialSignAndSum)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    EXPECT_EQ(fakeDegree(*w, w->irreducible(0)), QPolynomial(1)) << t;
    int N = 0;
    for (int m : w->exponents()->exponents) N += m;
    EXPECT_EQ(fakeDegree(*w, w->irreducible(w->signIndex())), QPolynomial::monomial(N)) << t;
    QPolynomial total;
    for (int i = 0; i < w->numIrreps(); ++i) {
      QPolynomial f = fakeDegree(*w, w->irreducible(i));
      EXPECT_TRUE(f.hasIntegerCoeffs());
      EXPECT_EQ(f.eval(1), Rational(w->table().degree(i)));
      for (const auto& c : f.coeffs()) EXPECT_GE(c, 0);
      total += Rational(w->table().degree(i)) * f;
    }
    EXPECT_EQ(total, w->poincare()) << t;
  }
  EXPECT_EQ(fakeDegree(*weylGroup("G2"), weylGroup("G2")->irreducible(weylGroup("G2")->signIndex())),
            QPolynomial::monomial(6));
}

TEST(Induction, FromTrivialSubgroupIsRegular)
{
  auto w = weylGroup("B3");
  auto h = parabolic(*w, {});
  EXPECT_EQ(h->order(), 1);
  ClassFunction r = induce(*h, *w, ClassFunction{1});
  EXPECT_EQ(r[0], Rational(48));
  for (int c = 1; c < w->numClasses(); ++c) EXPECT_EQ(r[c], 0);
}

TEST(Induction, DnInsideBn)
{
  for (int n = 2; n <= 3; ++n) {
    auto b = weylGroup("B" + std::to_string(n));
    auto d = weylGroup("D" + std::to_string(n));
    for (const auto& lam : partitionsOf(n)) {
      Bipartition l{lam, Partition{}}, r{Partition{}, lam};
      ClassFunction chi = b->irreducible(b->irrIndex(l.str()));
      ClassFunction ind = induce(*d, *b, restrict(*d, *b, chi));
      ClassFunction want = chi;
      ClassFunction other = b->irreducible(b->irrIndex(r.str()));
      for (int c = 0; c < b->numClasses(); ++c) want[c] += other[c];
      EXPECT_EQ(ind, want) << lam.str();
    }
  }
}

TEST(Induction, FrobeniusReciprocity)
{
  auto b = weylGroup("B3");
  auto d = weylGroup("D3");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    ClassFunction chi(d->numClasses(), 0), psi(b->numClasses(), 0);
    for (int i = 0; i < d->numIrreps(); ++i) {
      long c = long(rng() % 5) - 2;
      for (int k = 0; k < d->numClasses(); ++k) chi[k] += c * d->value(i, k);
    }
    for (int i = 0; i < b->numIrreps(); ++i) {
      long c = long(rng() % 5) - 2;
      for (int k = 0; k < b->numClasses(); ++k) psi[k] += c * b->value(i, k);
    }
    EXPECT_EQ(b->inner(induce(*d, *b, chi), psi), d->inner(chi, restrict(*d, *b, psi)));
  }
}

TEST(Induction, InvalidEmbedding)
{
  EXPECT_THROW(classFusion(*weylGroup("B2"), *weylGroup("B3")), std::invalid_argument);
  auto g2 = weylGroup("G2");
  auto b2 = weylGroup("B2");
  EXPECT_THROW(classFusion(*g2, *b2), std::invalid_argument);
}

TEST(Json, ClassesRoundTrip)
{
  auto w = weylGroup("G2");
  auto j = classesJson(*w);
  ASSERT_EQ(int(j.size()), w->numClasses());
  for (int c = 0; c < w->numClasses(); ++c)
    EXPECT_EQ(polynomialFromJson(j[c]["charpoly"]), w->classes()[c].charPoly);
}
