#include <gtest/gtest.h>

#include "ellq/fourier.hpp"

using namespace ellq;

namespace {

Rational r(long a, long b = 1) { return Rational(a, b); }

QPolynomial poly(std::initializer_list<long> c) { return QPolynomial::fromInts(c); }

RatMatrix square(const RatMatrix& m) { return m * m; }

} // namespace

TEST(MSet, Sizes)
{
  EXPECT_EQ(mSet(*SmallGroup::get("1")).size(), 1u);
  EXPECT_EQ(mSet(*SmallGroup::get("Z2")).size(), 4u);
  EXPECT_EQ(mSet(*SmallGroup::get("S3")).size(), 8u);
  EXPECT_EQ(mSet(*SmallGroup::get("S4")).size(), 21u);
  EXPECT_EQ(mSet(*SmallGroup::get("S5")).size(), 39u);
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(mSet(*SmallGroup::get("Z2^" + std::to_string(k))).size(), std::size_t(1) << (2 * k));
  EXPECT_THROW(SmallGroup::get("A5"), std::invalid_argument);
}

TEST(MSet, S3Labels)
{
  auto l = fourierMatrix("S3").labels();
  std::set<std::string> got(l.begin(), l.end());
  std::set<std::string> want{"(1,1)", "(1,r)", "(1,eps)", "(g2,1)", "(g2,eps)", "(g3,1)", "(g3,theta)", "(g3,theta^2)"};
  EXPECT_EQ(got, want);
}

TEST(FourierMatrix, Z2MatchesPublished)
{
  const auto& fx = fixture("ft-z2").payload;
  const auto& b = fourierMatrix("Z2");
  auto labels = fx["labels"].get<std::vector<std::string>>();
  RatMatrix want = matrixFromJson(fx["matrix"]);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      EXPECT_EQ(b.matrix[b.index(labels[i])][b.index(labels[j])], want[i][j]) << labels[i] << labels[j];
}

TEST(FourierMatrix, S3AgainstStandardTable)
{
  // Lusztig's S3 matrix as tabulated in the standard references.
  std::vector<std::string> order{"(1,1)", "(1,r)", "(1,eps)", "(g2,1)", "(g2,eps)", "(g3,1)", "(g3,theta)", "(g3,theta^2)"};
  RatMatrix want{{r(1, 6), r(1, 3), r(1, 6), r(1, 2), r(1, 2), r(1, 3), r(1, 3), r(1, 3)},
                 {r(1, 3), r(2, 3), r(1, 3), 0, 0, r(-1, 3), r(-1, 3), r(-1, 3)},
                 {r(1, 6), r(1, 3), r(1, 6), r(-1, 2), r(-1, 2), r(1, 3), r(1, 3), r(1, 3)},
                 {r(1, 2), 0, r(-1, 2), r(1, 2), r(-1, 2), 0, 0, 0},
                 {r(1, 2), 0, r(-1, 2), r(-1, 2), r(1, 2), 0, 0, 0},
                 {r(1, 3), r(-1, 3), r(1, 3), 0, 0, r(2, 3), r(-1, 3), r(-1, 3)},
                 {r(1, 3), r(-1, 3), r(1, 3), 0, 0, r(-1, 3), r(2, 3), r(-1, 3)},
                 {r(1, 3), r(-1, 3), r(1, 3), 0, 0, r(-1, 3), r(-1, 3), r(2, 3)}};
  const auto& b = fourierMatrix("S3");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(b.matrix[b.index(order[i])][b.index(order[j])], want[i][j]) << order[i] << order[j];
}

TEST(FourierMatrix, SymmetricAndInvolutive)
{
  for (const char* g : {"1", "Z2", "S3", "S4", "Z2^2", "Z2^3", "Z2^4"}) {
    const auto& b = fourierMatrix(g);
    ASSERT_TRUE(b.rational) << g;
    EXPECT_TRUE(isSymmetric(b.matrix)) << g;
    EXPECT_EQ(square(b.matrix), identityMatrix(int(b.mset.size()))) << g;
  }
  // S5: the (g5, theta^k) block lives in Q(sqrt 5); checked in cyclotomic arithmetic
  const auto& s5 = fourierMatrix("S5");
  EXPECT_FALSE(s5.rational);
  EXPECT_THROW(s5.rationalMatrix(), std::domain_error);
  FourierReport r = checkFourier(s5);
  EXPECT_TRUE(r.symmetric);
  EXPECT_TRUE(r.real);
  EXPECT_TRUE(r.involution);
  EXPECT_TRUE(r.unitary);
}

TEST(FourierMatrix, S5KloostermanEntry)
{
  // {(g5,t),(g5,t)} = (1/25) * 5 * sum_{a in (Z/5)^*} zeta^{a - 1/a} = (2 + zeta + zeta^-1)/5
  auto g = SmallGroup::get("S5");
  const auto& b = fourierMatrix("S5");
  int c5 = -1;
  for (int c = 0; c < g->numClasses(); ++c)
    if (g->classLabels()[c] == "g5") c5 = c;
  ASSERT_GE(c5, 0);
  const auto& cz = g->centralizer(c5);
  int L = b.order;
  for (int i = 1; i < 5; ++i) {
    // character value at the class representative is zeta_5^k for some k
    CycloNumber v = liftCyclo(cz.table.values[i][cz.classOfElem[cz.x]], L);
    int k = -1;
    for (int t = 1; t < 5; ++t)
      if (v == CycloNumber::zeta(L, t * L / 5)) k = t;
    ASSERT_GT(k, 0);
    CycloNumber want(L, Rational(0));
    for (int a = 1; a < 5; ++a) {
      int ainv = 1;
      while ((a * ainv) % 5 != 1) ++ainv;
      want += CycloNumber::zeta(L, ((k * (a - ainv)) % 5 + 5) % 5 * (L / 5));
    }
    want = CycloNumber(L, Rational(1, 5)) * want;
    int idx = b.index("(g5," + cz.labels[i] + ")");
    EXPECT_TRUE(b.values[idx][idx] == want) << i;
  }
}

TEST(FourierMatrix, ElementaryAbelianIsTensorPower)
{
  // Kronecker square of the Z/2 matrix: every entry is +-1/4
  const auto& b = fourierMatrix("Z2^2");
  for (const auto& row : b.matrix)
    for (const auto& x : row) EXPECT_EQ(abs(x), r(1, 4));
  for (const auto& x : b.matrix[b.index("(1,1)")]) EXPECT_EQ(x, r(1, 4));
}

TEST(SpecialColumn, MatchesMatrix)
{
  for (const char* name : {"Z2", "S3", "S4", "Z2^3"}) {
    auto g = SmallGroup::get(name);
    const auto& b = fourierMatrix(name);
    const auto& c1 = g->centralizer(0);
    for (int rho = 0; rho < c1.table.size(); ++rho) {
      auto col = specialColumn(*g, rho);
      int j = b.index("(1," + c1.labels[rho] + ")");
      for (std::size_t i = 0; i < col.size(); ++i) EXPECT_EQ(col[i], b.matrix[i][j]) << name;
    }
  }
  auto s3 = SmallGroup::get("S3");
  const auto& b = fourierMatrix("S3");
  EXPECT_EQ(b.matrix[b.index("(g3,1)")][b.index("(1,r)")], r(-1, 3));
  EXPECT_EQ(b.matrix[b.index("(g2,1)")][b.index("(1,1)")], r(1, 2));
  EXPECT_EQ(b.matrix[b.index("(g2,1)")][b.index("(1,r)")], 0);
  EXPECT_EQ(b.matrix[b.index("(1,1)")][b.index("(1,1)")], r(1, 6));
}

TEST(Families, G2Fixture)
{
  auto w = weylGroup("G2");
  FamilyData fd = familyDataFor(*w);
  EXPECT_EQ(fd.provenance, "standard");
  ASSERT_EQ(fd.families.size(), 3u);
  std::set<std::string> s3(fd.families[2].members.begin(), fd.families[2].members.end());
  EXPECT_EQ(s3, (std::set<std::string>{"phi{2,1}", "phi{2,2}", "phi'{1,3}", "phi''{1,3}"}));
  XWPairing x = xwPairing(*w, fd);
  EXPECT_EQ(x.labels.size(), 10u);
  EXPECT_EQ(square(x.matrix), identityMatrix(10));
  EXPECT_EQ(x.matrix[0][2], 0);
}

TEST(Families, TypeAIsIdentity)
{
  for (const char* t : {"A1", "A2", "A3"}) {
    auto w = weylGroup(t);
    IrrPairing p = irrPairing(*w, familyDataFor(*w));
    EXPECT_EQ(p.matrix, identityMatrix(w->numIrreps()));
    EXPECT_EQ(xwPairing(*w, familyDataFor(*w)).matrix, identityMatrix(w->numIrreps()));
  }
  EXPECT_THROW(familyDataFor(*weylGroup("F4")), std::out_of_range);
}

TEST(Families, RejectsBadData)
{
  auto w = weylGroup("A1");
  FamilyData fd = familyDataFor(*w);
  fd.families.pop_back();
  EXPECT_THROW(irrPairing(*w, fd), std::invalid_argument);
  FamilyData dup = familyDataFor(*w);
  dup.families[1].members[0] = dup.families[0].members[0];
  dup.families[1].embedding = dup.families[0].embedding;
  EXPECT_THROW(irrPairing(*w, dup), std::invalid_argument);
}

TEST(EF, G2)
{
  auto w = weylGroup("G2");
  IrrPairing p = irrPairing(*w, familyDataFor(*w));
  std::vector<Rational> triv(w->numIrreps(), 0);
  triv[w->irrIndex("phi{1,0}")] = 1;
  EXPECT_EQ(efMap(p, triv), triv);
  // M(S3)' is a proper subset of M(S3), so EF is not an involution on R(W).
  std::vector<Rational> e(w->numIrreps(), 0);
  int i21 = w->irrIndex("phi{2,1}");
  e[i21] = 1;
  EXPECT_EQ(efMap(p, efMap(p, e))[i21], r(1, 2));
}

TEST(EF, InductionCompatibility)
{
  auto g2 = weylGroup("G2");
  FamilyData fg = familyDataFor(*g2);
  for (int j = 0; j < 2; ++j) {
    auto l = parabolic(*g2, {j});
    EXPECT_TRUE(efInductionCheck(*g2, fg, *l, familyDataFor(*l, "A1")));
  }
  auto b2 = weylGroup("B2");
  FamilyData fb = familyDataFor(*b2);
  for (int j = 0; j < 2; ++j) {
    auto l = parabolic(*b2, {j});
    EXPECT_TRUE(efInductionCheck(*b2, fb, *l, familyDataFor(*l, "A1")));
  }
  // the long-root A2 is a reflection subgroup but not a parabolic one
  RootSystem rs = RootSystem::ofType('G', 2);
  std::vector<IntMatrix> gens{rs.reflection({0, 1}), rs.reflection(rs.highestRoot())};
  auto a2 = WeylGroup::fromReflections("A2long", 2, 2, gens);
  EXPECT_EQ(a2->order(), 6);
  EXPECT_FALSE(efInductionCheck(*g2, fg, *a2, familyDataFor(*a2, "A2")));
}

TEST(GenericDegree, Examples)
{
  auto g2 = weylGroup("G2");
  auto d = genericDegrees(*g2, familyDataFor(*g2));
  EXPECT_EQ(d[g2->irrIndex("phi{1,0}")], QPolynomial(1));
  EXPECT_EQ(d[g2->signIndex()], QPolynomial::monomial(6));
  QPolynomial phi2 = cyclotomic(2), phi3 = cyclotomic(3);
  EXPECT_EQ(d[g2->irrIndex("phi{2,1}")], r(1, 6) * QPolynomial::q() * phi2 * phi2 * phi3);
  auto a2 = weylGroup("A2");
  auto da = genericDegrees(*a2, familyDataFor(*a2));
  std::multiset<QPolynomial> got(da.begin(), da.end()), want{poly({1}), poly({0, 1, 1}), poly({0, 0, 0, 1})};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(da[i], fakeDegree(*a2, a2->irreducible(i)));
  EXPECT_EQ(std::set<QPolynomial>(got.begin(), got.end()), std::set<QPolynomial>(want.begin(), want.end()));
  auto b2 = weylGroup("B2");
  auto db = genericDegrees(*b2, familyDataFor(*b2));
  EXPECT_EQ(db[b2->irrIndex("(1)x(1)")], r(1, 2) * QPolynomial::q() * phi2 * phi2);
  EXPECT_EQ(db[b2->irrIndex("(1,1)x()")], r(1, 2) * QPolynomial::q() * cyclotomic(4));
  EXPECT_EQ(db[b2->irrIndex("()x(2)")], r(1, 2) * QPolynomial::q() * cyclotomic(4));
}

TEST(GenericDegree, Plancherel)
{
  auto g2 = weylGroup("G2");
  RootSystem rs = RootSystem::ofType('G', 2);
  auto a1a1 = WeylGroup::fromReflections("A1xA1~", 2, 2, {rs.reflection(rs.highestShortRoot()), rs.reflection({0, 1})});
  EXPECT_EQ(a1a1->order(), 4);
  std::vector<std::pair<std::shared_ptr<const WeylGroup>, std::string>> cases{
      {weylGroup("A1"), "A1"}, {a1a1, "A1xA1~"}, {weylGroup("A2"), "A2"}, {weylGroup("B2"), "B2"}, {g2, "G2"}};
  for (const auto& [w, t] : cases) EXPECT_TRUE(plancherelCheck(*w, genericDegrees(*w, familyDataFor(*w, t)))) << t;
}
