#include <gtest/gtest.h>

#include <random>

#include "ellq/exactq.hpp"

using namespace ellq;

namespace {

QPolynomial poly(std::initializer_list<long> c) { return QPolynomial::fromInts(c); }

RationalFunction rf(std::initializer_list<long> n, std::initializer_list<long> d) { return {poly(n), poly(d)}; }

} // namespace

TEST(Cyclotomic, SmallIndices)
{
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), poly({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, DegreeIsTotient)
{
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(cyclotomic(n).degree(), eulerPhi(n)) << n;
}

TEST(Cyclotomic, DividesQnMinusOne)
{
  for (int n = 1; n <= 30; ++n) {
    QPolynomial qn = QPolynomial::monomial(n) - QPolynomial(1);
    EXPECT_TRUE(cyclotomic(n).divides(qn)) << n;
  }
}

TEST(Cyclotomic, ProductOverDivisors)
{
  // q^n - 1 = prod_{d|n} Phi_d, an independent recomputation
  for (int n = 1; n <= 30; ++n) {
    QPolynomial p(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) p *= cyclotomic(d);
    EXPECT_EQ(p, QPolynomial::monomial(n) - QPolynomial(1)) << n;
  }
}

TEST(FactorCyclotomic, Examples)
{
  auto f = factorCyclotomic(QPolynomial::monomial(6) - QPolynomial(1));
  EXPECT_EQ(f.scalar, Rational(1));
  std::map<int, int> want{{1, 1}, {2, 1}, {3, 1}, {6, 1}};
  EXPECT_EQ(f.factors, want);
  EXPECT_EQ(f.remainder, QPolynomial(1));

  auto g = factorCyclotomic(poly({1, 1}));
  EXPECT_EQ(g.factors, (std::map<int, int>{{2, 1}}));

  auto h = factorCyclotomic(poly({2, 0, 1}));
  EXPECT_TRUE(h.factors.empty());
  EXPECT_EQ(h.remainder, poly({2, 0, 1}));
}

TEST(FactorCyclotomic, ZeroInputThrows)
{
  EXPECT_THROW(factorCyclotomic(QPolynomial()), std::invalid_argument);
}

TEST(FactorCyclotomic, RandomReconstruction)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QPolynomial p = Rational(long(rng() % 7) - 3 == 0 ? 5 : long(rng() % 7) - 3) * QPolynomial::monomial(rng() % 4);
    if (p.isZero()) p = QPolynomial::monomial(1);
    std::map<int, int> want;
    int nf = 1 + rng() % 5;
    for (int k = 0; k < nf; ++k) {
      int n = 1 + rng() % 30;
      p *= cyclotomic(n);
      ++want[n];
    }
    if (trial % 3 == 0) p *= poly({3, 0, 1}); // q^2 + 3 has no cyclotomic factor
    auto f = factorCyclotomic(p);
    EXPECT_EQ(f.expand(), p);
    EXPECT_EQ(f.factors, want);
  }
}

TEST(RationalFunction, EvaluateAndCanonical)
{
  RationalFunction f = rf({1, -1}, {1, 1});
  EXPECT_EQ(f.eval(2), Rational(-1, 3));
  EXPECT_THROW(f.eval(-1), std::domain_error);

  RationalFunction g = rf({1, 0, -1}, {1, -1});
  EXPECT_TRUE(g.isPolynomial());
  EXPECT_EQ(g.asPolynomial(), poly({1, 1}));
  EXPECT_TRUE(g.isCanonical());
}

TEST(RationalFunction, FieldAxioms)
{
  std::mt19937 rng(11);
  auto rnd = [&] {
    std::vector<long> n(1 + rng() % 4), d(1 + rng() % 4);
    for (auto& x : n) x = long(rng() % 9) - 4;
    for (auto& x : d) x = long(rng() % 9) - 4;
    if (std::all_of(d.begin(), d.end(), [](long x) { return x == 0; })) d = {1};
    if (std::all_of(n.begin(), n.end(), [](long x) { return x == 0; })) n = {2};
    return RationalFunction(QPolynomial::fromInts(n), QPolynomial::fromInts(d));
  };
  for (int i = 0; i < 100; ++i) {
    RationalFunction a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_TRUE((a + b).isCanonical());
    EXPECT_TRUE((a * b).isCanonical());
    EXPECT_TRUE((a / b).isCanonical());
  }
}

TEST(RationalFunction, DivisionByZeroThrows)
{
  EXPECT_THROW(RationalFunction(1) / RationalFunction(0), std::domain_error);
}

TEST(Render, SignFakeDegreeOfG2)
{
  // (q-1)^2 Phi5 / (Phi2^2 Phi3 Phi6)
  RationalFunction num = RationalFunction(cyclotomic(1).pow(2) * cyclotomic(5));
  RationalFunction den = RationalFunction(cyclotomic(2).pow(2) * cyclotomic(3) * cyclotomic(6));
  EXPECT_EQ(render(num / den), "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)");
  EXPECT_EQ(render(RationalFunction(0)), "0");
  EXPECT_EQ(render(RationalFunction(Rational(1, 6))), "1/6");
}

TEST(Json, RoundTrip)
{
  RationalFunction f = Rational(3, 7) * rf({1, -2, 1}, {1, 1, 1});
  EXPECT_EQ(rationalFunctionFromJson(toJson(f)), f);
  auto fac = factorCyclotomic(f.num());
  EXPECT_EQ(factorizationFromJson(toJson(fac)).expand(), f.num());
  EXPECT_EQ(toJson(poly({1, 2})).dump(), R"(["1","2"])");
  EXPECT_EQ(rationalFromJson(toJson(Rational(-5, 3))), Rational(-5, 3));
}

TEST(CycloNumber, Arithmetic)
{
  CycloNumber z = CycloNumber::zeta(3, 1);
  CycloNumber one(3, Rational(1));
  // 1 + z + z^2 = 0
  EXPECT_TRUE((one + z + z * z).isZero());
  EXPECT_EQ(z * z.conj(), one);
  EXPECT_TRUE((z + z.conj()).isRational());
  EXPECT_EQ((z + z.conj()).toRational(), Rational(-1));
}
