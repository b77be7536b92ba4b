#include <gtest/gtest.h>

#include "ellq/elliptic.hpp"

using namespace ellq;

namespace {

RationalFunction q() { return RationalFunction::q(); }
RationalFunction phi(int n) { return RationalFunction(cyclotomic(n)); }
RationalFunction one() { return RationalFunction(1); }

const std::vector<std::string> kRealized{"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3", "B4",
                                         "B5", "D2", "D3", "D4", "D5", "D6", "G2", "F4"};

} // namespace

TEST(Pairing, SymmetricGroupS2)
{
  auto w = weylGroup("A1");
  ClassFunction triv = w->irreducible(0), sgn = w->irreducible(w->signIndex());
  EXPECT_EQ(ellipticPairing(*w, sgn, sgn), Rational(1));
  EXPECT_EQ(ellipticPairing(*w, triv, sgn), Rational(-1));
  EXPECT_EQ(ellipticPairing(w->basisVector(1), w->basisVector(1)), Rational(1));
  auto b = weylGroup("B2");
  EXPECT_THROW(ellipticPairing(w->basisVector(0), b->basisVector(0)), std::invalid_argument);
}

TEST(Pairing, BnGramIsIdentity)
{
  for (int n = 1; n <= 5; ++n) {
    auto w = weylGroup("B" + std::to_string(n));
    std::vector<ClassFunction> basis;
    for (const auto& lam : partitionsOf(n)) basis.push_back(lambdaTimesEmpty(*w, lam));
    EXPECT_EQ(ellipticGram(*w, basis).gram, identityMatrix(int(basis.size()))) << n;
  }
}

TEST(Pairing, DnGram)
{
  for (int n = 2; n <= 6; ++n) {
    auto w = weylGroup("D" + std::to_string(n));
    std::vector<Partition> reps;
    for (const auto& lam : partitionsModTranspose(n))
      if (n % 2 == 0 || lam != lam.transpose()) reps.push_back(lam);
    std::vector<ClassFunction> basis;
    for (const auto& lam : reps) basis.push_back(lambdaTimesEmpty(*w, lam));
    RatMatrix g = ellipticGram(*w, basis).gram;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        Rational want = 0;
        if (i == j) want = reps[i] == reps[i].transpose() ? 2 : 1;
        EXPECT_EQ(g[i][j], want) << n << " " << reps[i].str() << " " << reps[j].str();
      }
    EXPECT_EQ(int(reps.size()), int(w->ellipticClasses().size())) << n;
  }
}

TEST(FakeDegree, Examples)
{
  auto a1 = weylGroup("A1");
  EXPECT_EQ(ellipticFakeDegree(*a1, a1->irreducible(a1->signIndex())), (one() - q()).pow(2) / (one() - q().pow(2)));
  auto b1 = weylGroup("B1");
  EXPECT_EQ(ellipticFakeDegree(*b1, b1->irreducible(0)), (q() - one()) / (q() + one()));
  auto g2 = weylGroup("G2");
  RationalFunction want = (q() - one()).pow(2) * phi(5) / (phi(2).pow(2) * phi(3) * phi(6));
  EXPECT_EQ(ellipticFakeDegree(g2->basisVector(g2->signIndex())), want);
  EXPECT_EQ(render(want), "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)");
}

TEST(FakeDegree, SignClosedFormMatchesDefinition)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    EXPECT_EQ(sgnFakeDegree(*w->exponents()), ellipticFakeDegree(*w, w->irreducible(w->signIndex()))) << t;
  }
  for (int n = 2; n <= 8; ++n)
    EXPECT_EQ(sgnFakeDegree(exponentsOf('A', n - 1)), (one() - q()).pow(n) / (one() - q().pow(n)));
  EXPECT_EQ(sgnFakeDegree(std::vector<int>{}), one());
}

TEST(FakeDegree, CycTable)
{
  std::vector<std::pair<std::pair<char, int>, std::string>> rows{
      {{'G', 2}, "Phi2^2 Phi3 Phi6"},
      {{'F', 4}, "Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi8 Phi12"},
      {{'E', 6}, "Phi2^2 Phi3^3 Phi6^2 Phi9 Phi12"},
      {{'E', 7}, "Phi2^7 Phi3^2 Phi4^2 Phi6^3 Phi8 Phi10 Phi12 Phi14 Phi18"},
      {{'E', 8}, "Phi2^8 Phi3^4 Phi4^4 Phi5^2 Phi6^4 Phi8^2 Phi9 Phi10^2 Phi12^2 Phi14 Phi15 Phi18 Phi20 Phi24 Phi30"}};
  for (const auto& [t, want] : rows) {
    auto c = cycOf(exponentsOf(t.first, t.second));
    EXPECT_EQ(renderCyc(c), want);
    EXPECT_EQ(c.remainder, QPolynomial(1));
    EXPECT_EQ(c.qPower, 0);
  }
}

TEST(FakeDegree, BnClosedForm)
{
  EXPECT_EQ(bnFakeClosed(Partition{1}), (q() - one()) / (q() + one()));
  EXPECT_EQ(bnFakeClosed(Partition{1, 1}), -q() * (q() - one()).pow(2) / (phi(2).pow(2) * phi(4)));
  EXPECT_EQ(bnFakeClosed(Partition{2}), (q() - one()).pow(2) * phi(3) / (phi(2).pow(2) * phi(4)));
  for (int n = 1; n <= 5; ++n) {
    auto w = weylGroup("B" + std::to_string(n));
    for (const auto& lam : partitionsOf(n))
      EXPECT_EQ(bnFakeClosed(lam), ellipticFakeDegree(*w, lambdaTimesEmpty(*w, lam))) << lam.str();
  }
}

TEST(FakeDegree, DnClosedForm)
{
  EXPECT_EQ(dnFakeClosed(Partition{2}), (q() - one()).pow(2) / phi(2).pow(2));
  EXPECT_EQ(dnFakeClosed(Partition{2}), ((one() - q()) / (one() + q())).pow(2));
  EXPECT_TRUE(dnFakeClosed(Partition{2, 1}).isZero());
  EXPECT_THROW(dnFakeClosed(Partition{1}), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) {
    auto w = weylGroup("D" + std::to_string(n));
    for (const auto& lam : partitionsOf(n))
      EXPECT_EQ(dnFakeClosed(lam), ellipticFakeDegree(*w, lambdaTimesEmpty(*w, lam))) << n << lam.str();
  }
}

TEST(FakeDegree, HookContentBridge)
{
  for (int n = 1; n <= 5; ++n) {
    auto w = weylGroup("B" + std::to_string(n));
    for (const auto& lam : partitionsOf(n))
      EXPECT_EQ(ellipticSqPairing(*w, lambdaTimesEmpty(*w, lam)), gPoly(lam, q() * q(), -q())) << lam.str();
  }
}

TEST(FakeDegree, InvariantUnderInducedModification)
{
  for (const char* t : {"B3", "G2", "D4"}) {
    auto w = weylGroup(t);
    auto h = parabolic(*w, {0});
    ClassFunction ind = induce(*h, *w, h->irreducible(0));
    for (int i = 0; i < w->numIrreps(); ++i) {
      ClassFunction chi = w->irreducible(i), mod = chi;
      for (int c = 0; c < w->numClasses(); ++c) mod[c] += 3 * ind[c];
      EXPECT_EQ(ellipticFakeDegree(*w, chi), ellipticFakeDegree(*w, mod));
    }
  }
}

TEST(Pairing, SignTwist)
{
  for (const auto& t : kRealized) {
    auto w = weylGroup(t);
    ClassFunction sgn = w->irreducible(w->signIndex());
    int sign = w->rank() % 2 ? -1 : 1;
    for (int i = 0; i < w->numIrreps(); ++i)
      for (int j = 0; j < w->numIrreps(); ++j) {
        ClassFunction a = w->irreducible(i), b = w->irreducible(j);
        EXPECT_EQ(ellipticPairing(*w, tensor(a, sgn), b), sign * ellipticPairing(*w, a, b)) << t;
      }
  }
}

TEST(Independence, ClassicalTypes)
{
  // B_n: full rank only up to n = 4; B5Relation gives the dependency explicitly
  std::map<int, int> bRank{{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 6}, {6, 10}};
  for (int n = 1; n <= 6; ++n) {
    auto b = independenceCheck(*weylGroup("B" + std::to_string(n)));
    EXPECT_EQ(b.ellipticCount, int(partitionsOf(n).size()));
    EXPECT_EQ(b.rank, bRank[n]) << n;
    EXPECT_EQ(b.independent, n <= 4) << n;
    if (n >= 2) {
      auto d = independenceCheck(*weylGroup("D" + std::to_string(n)));
      EXPECT_TRUE(d.independent) << n;
    }
  }
  for (int n = 2; n <= 6; ++n) {
    auto a = independenceCheck(*weylGroup("A" + std::to_string(n - 1)));
    EXPECT_TRUE(a.independent);
    EXPECT_EQ(a.ellipticCount, 1);
  }
}

TEST(Independence, B5Relation)
{
  // 1/((1+q^3)(1+q^2)) - 3/((1+q^3)(1+q)^2) + 2/((1+q^2)(1+q)^3) = 0
  auto w = weylGroup("B5");
  auto f = [&](const Partition& neg) {
    for (const auto& c : w->classes())
      if (c.signedType->positive.empty() && c.signedType->negative == neg) return RationalFunction(1) / RationalFunction(c.charPoly);
    throw std::logic_error("class not found");
  };
  RationalFunction s = f(Partition{3, 2}) - Rational(3) * f(Partition{3, 1, 1}) + Rational(2) * f(Partition{2, 1, 1, 1});
  EXPECT_TRUE(s.isZero());
}

TEST(Independence, F4CoincidentPair)
{
  auto w = weylGroup("F4");
  auto r = independenceCheck(*w);
  EXPECT_EQ(r.ellipticCount, 9);
  ASSERT_EQ(r.coincidentPairs.size(), 1u);
  EXPECT_EQ(w->classes()[r.coincidentPairs[0].first].charPoly,
            QPolynomial::fromInts({1, 0, 0, 1}) * QPolynomial::fromInts({1, 1}));
  EXPECT_FALSE(r.independent);
  EXPECT_EQ(r.rank, 8);
}

TEST(Radical, Examples)
{
  auto b2 = radicalCheck(*weylGroup("B2"));
  EXPECT_TRUE(b2.ok());
  EXPECT_EQ(b2.gramRank, 2);
  auto g2 = radicalCheck(*weylGroup("G2"));
  EXPECT_TRUE(g2.ok());
  EXPECT_EQ(g2.gramRank, 3);
  auto b3 = radicalCheck(*weylGroup("B3"));
  EXPECT_TRUE(b3.inducedAreRadical);
  EXPECT_GT(b3.inducedChecked, 0);
  EXPECT_TRUE(radicalCheck(*weylGroup("F4")).ok());
}
