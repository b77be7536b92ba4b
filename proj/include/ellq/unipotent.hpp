#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptic.hpp"
#include "fixtures.hpp"
#include "fourier.hpp"
#include "rootsys.hpp"

namespace ellq {

// Roots of the dual group in simple-root coordinates.
struct DualRootDatum {
  std::string type;
  RootSystem system;
  std::vector<IntVec> roots;
  int centerOrder = 1; // |Z| of the simply connected group, det of the Cartan matrix
  int nu = 0;          // number of positive roots

  int rank() const { return system.rank(); }
};

namespace detail {

inline long integerDet(std::vector<std::vector<long>> a)
{
  // Bareiss elimination
  int n = int(a.size());
  long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * (n ? a[n - 1][n - 1] : 1);
}

} // namespace detail

inline DualRootDatum dualRootDatum(const std::string& type)
{
  if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
    throw std::invalid_argument("bad root datum type: " + type);
  DualRootDatum d;
  d.type = type;
  d.system = RootSystem::ofType(type[0], std::stoi(type.substr(1)));
  d.roots = d.system.roots();
  d.nu = d.system.numPositive();
  std::vector<std::vector<long>> a;
  for (const auto& row : d.system.cartan()) a.emplace_back(row.begin(), row.end());
  d.centerOrder = int(detail::integerDet(a));
  return d;
}

// s in the torus with e_alpha(s) = exp(2 pi i <alpha, v>), v in coweight coordinates.
struct SemisimplePoint {
  std::vector<Rational> v;

  int order() const
  {
    long m = 1;
    for (const auto& x : v) m = std::lcm(m, x.get_den().get_si());
    return int(m);
  }
  // k with e_alpha(s) = zeta_m^k
  int exponent(const IntVec& alpha) const
  {
    Rational t = 0;
    for (std::size_t i = 0; i < v.size(); ++i) t += alpha[i] * v[i];
    int m = order();
    Rational k = t * m;
    long r = k.get_num().get_si() % m;
    return int(r < 0 ? r + m : r);
  }
  bool isOne() const
  {
    for (const auto& x : v)
      if (x.get_den() != 1) return false;
    return true;
  }
};

// alpha(h) from weighted Dynkin marks on the simple roots.
struct SL2Marks {
  std::vector<int> simple;

  int weight(const IntVec& alpha) const
  {
    int w = 0;
    for (std::size_t i = 0; i < simple.size(); ++i) w += alpha[i] * simple[i];
    return w;
  }
};

struct MarksCheck {
  int centralizerRank = 0; // rank of the root system of Z(s)
  int dimG0 = 0;           // rank + #{alpha in Z(s) : alpha(h) = 0}
  int dimG2 = 0;           // #{alpha in Z(s) : alpha(h) = 2}
  bool isolated = false;
  bool ok() const { return isolated && dimG0 == dimG2; }
};

// u distinguished in Z(s) and Z(s) semisimple of full rank.
inline MarksCheck marksCheck(const DualRootDatum& d, const SemisimplePoint& s, const SL2Marks& h)
{
  if (int(s.v.size()) != d.rank() || int(h.simple.size()) != d.rank())
    throw std::invalid_argument("parameter rank mismatch");
  MarksCheck c;
  RatMatrix zs;
  for (const auto& a : d.roots) {
    if (s.exponent(a) != 0) continue;
    zs.emplace_back(a.begin(), a.end());
    int w = h.weight(a);
    if (w == 0) ++c.dimG0;
    if (w == 2) ++c.dimG2;
  }
  c.centralizerRank = zs.empty() ? 0 : rank(zs);
  c.dimG0 += d.rank();
  c.isolated = c.centralizerRank == d.rank();
  return c;
}

namespace detail {

using CycloPoly = std::vector<CycloNumber>; // coefficients in u

inline CycloPoly cpMul(const CycloPoly& a, const CycloPoly& b, int m)
{
  CycloPoly r(a.size() + b.size() - 1, CycloNumber(m, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline CycloPoly cpGalois(const CycloPoly& a, int k)
{
  CycloPoly r;
  for (const auto& c : a) r.push_back(c.galois(k));
  return r;
}

inline QPolynomial cpRational(const CycloPoly& a)
{
  std::vector<Rational> c;
  for (const auto& x : a) {
    if (!x.isRational()) throw std::domain_error("m_x does not lie in Q(q)");
    c.push_back(x.toRational());
  }
  return QPolynomial(c);
}

// p(u) = p'(u^2)
inline QPolynomial evenPart(const QPolynomial& p)
{
  std::vector<Rational> c;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2) {
      if (p.coeff(i) != 0) throw std::domain_error("m_x is not a function of q");
    } else {
      c.push_back(p.coeff(i));
    }
  }
  return QPolynomial(c);
}

} // namespace detail

// q^nu prod'(e_alpha(s') - 1) / prod'(q e_alpha(s') - 1), s' = s q^{h/2}, zero factors dropped.
inline RationalFunction mX(const DualRootDatum& d, const SemisimplePoint& s, const SL2Marks& h)
{
  if (!marksCheck(d, s, h).ok()) throw std::invalid_argument("su is not elliptic for these marks");
  int m = s.order();
  CycloNumber one(m, Rational(1));
  detail::CycloPoly num{one}, den{one};
  int shift = 2 * d.nu; // power of u = q^{1/2}
  // zeta^k u^a - 1, written as u^min(a,0) times a polynomial
  auto factor = [&](int k, int a, detail::CycloPoly& into, int sgn) {
    CycloNumber z = CycloNumber::zeta(m, k);
    detail::CycloPoly f(std::abs(a) + 1, CycloNumber(m, Rational(0)));
    if (a >= 0) {
      f[a] += z;
      f[0] += -one;
    } else {
      f[0] += z;
      f[-a] += -one;
      shift += sgn * a;
    }
    into = detail::cpMul(into, f, m);
  };
  for (const auto& alpha : d.roots) {
    int k = s.exponent(alpha), a = h.weight(alpha);
    if (!(k == 0 && a == 0)) factor(k, a, num, 1);
    if (!(k == 0 && a == -2)) factor(k, a + 2, den, -1);
  }
  // clear the denominator by its norm to Q
  detail::CycloPoly conj{one};
  for (int k = 2; k < m; ++k)
    if (std::gcd(k, m) == 1) conj = detail::cpMul(conj, detail::cpGalois(den, k), m);
  QPolynomial n = detail::cpRational(detail::cpMul(num, conj, m));
  QPolynomial dd = detail::cpRational(detail::cpMul(den, conj, m));
  if (shift >= 0) n *= QPolynomial::monomial(shift);
  else dd *= QPolynomial::monomial(-shift);
  RationalFunction inU(n, dd);
  RationalFunction r(detail::evenPart(inU.num()), detail::evenPart(inU.den()));
  if (r.num().leading() * r.den().leading() < 0) r = -r;
  return r;
}

struct UnipotentParam {
  std::string id, dual, u;
  SL2Marks marks;
  SemisimplePoint s;
  int aOrder = 1;
  RationalFunction expected;
};

inline std::vector<UnipotentParam> unipotentParams()
{
  std::vector<UnipotentParam> out;
  for (const auto& j : fixture("unipotent-params").payload) {
    UnipotentParam p;
    p.id = j.at("id").get<std::string>();
    p.dual = j.at("dual").get<std::string>();
    p.u = j.at("u").get<std::string>();
    p.marks.simple = j.at("marks").get<std::vector<int>>();
    for (const auto& x : j.at("v")) p.s.v.push_back(rationalFromJson(x));
    p.aOrder = j.at("aOrder").get<int>();
    p.expected = factoredFromJson(j.at("expected"));
    out.push_back(std::move(p));
  }
  return out;
}

inline UnipotentParam unipotentParam(const std::string& id)
{
  for (auto& p : unipotentParams())
    if (p.id == id) return p;
  throw std::out_of_range("no unipotent parameter " + id);
}

inline RationalFunction mX(const UnipotentParam& p) { return mX(dualRootDatum(p.dual), p.s, p.marks); }

// F-values keyed by the Fourier entry "(1,sigma)".
using SpringerFakeVector = std::map<std::string, RationalFunction>;

// W-characters of the sigma-parts of H(B_u), sign-twisted; sigma runs over Springer-type characters.
struct SpringerData {
  std::string group, gamma;
  std::map<std::string, ClassFunction> characters;
};

// Reads either a "characters" map or the type B "springerPartition"/"springerSigns" form.
inline SpringerData springerData(const std::string& fixtureId)
{
  const auto& j = fixture(fixtureId).payload;
  SpringerData d;
  d.group = j.at("group").get<std::string>();
  d.gamma = j.at("gamma").get<std::string>();
  auto w = weylGroup(d.group);
  if (j.contains("characters")) {
    for (auto it = j["characters"].begin(); it != j["characters"].end(); ++it) {
      ClassFunction f(w->numClasses(), 0);
      for (auto c = it.value().begin(); c != it.value().end(); ++c) {
        ClassFunction chi = w->irreducible(w->irrIndex(c.key()));
        for (int k = 0; k < w->numClasses(); ++k) f[k] += c.value().get<int>() * chi[k];
      }
      d.characters[it.key()] = f;
    }
  } else {
    ClassFunction base = lambdaTimesEmpty(*w, Partition(j.at("springerPartition").get<std::vector<int>>()));
    for (auto it = j.at("springerSigns").begin(); it != j.at("springerSigns").end(); ++it) {
      std::string key = it.key(); // "(1,sigma)"
      std::string sigma = key.substr(3, key.size() - 4);
      ClassFunction f = base;
      for (auto& x : f) x *= it.value().get<int>();
      d.characters[sigma] = f;
    }
  }
  return d;
}

inline SpringerFakeVector springerFakes(const WeylGroup& w, const SpringerData& d)
{
  SpringerFakeVector F;
  for (const auto& [sigma, f] : d.characters) F["(1," + sigma + ")"] = ellipticFakeDegree(w, f);
  return F;
}

// F = (q-1)^l N / cyc(W) for an appendix row.
inline RationalFunction appendixFake(const std::string& type, const std::string& orbit, const std::string& phi)
{
  for (const auto& row : fixture("appendix-exceptional").payload.at(type)) {
    if (row.at("orbit") != orbit || row.at("phi") != phi) continue;
    auto e = exponentsOf(type[0], std::stoi(type.substr(1)));
    RationalFunction n = factoredFromJson(row.at("N"));
    return RationalFunction(QPolynomial::fromInts({-1, 1}).pow(int(e.size()))) * n /
           RationalFunction(cycOf(e).expand());
  }
  throw std::out_of_range("no appendix row " + type + " " + orbit + " " + phi);
}

// (1/|Z|) sum {(y,rho),(1,rho')} F_(1,rho')
inline RationalFunction conjectureRHS(const FourierBlock& b, const std::string& entry, const SpringerFakeVector& F,
                                      int centerOrder)
{
  const RatMatrix& m = b.rationalMatrix();
  int i = b.index(entry);
  RationalFunction r;
  for (const auto& [key, f] : F) {
    if (key.rfind("(1,", 0) != 0) throw std::invalid_argument("fake degree off the s = 1 entries: " + key);
    Rational c = m[i][b.index(key)];
    if (c != 0) r = r + c * f;
  }
  return Rational(1) / centerOrder * r;
}

namespace detail {

// sigma(s) for the Springer-type sigma, s a class of Gamma given by label.
inline Rational springerValue(const SmallGroup& g, const std::string& sigma, const std::string& sClass)
{
  const auto& c1 = g.centralizer(0);
  int chi = -1, cls = -1;
  for (std::size_t i = 0; i < c1.labels.size(); ++i)
    if (c1.labels[i] == sigma) chi = int(i);
  for (int c = 0; c < g.numClasses(); ++c)
    if (g.classLabels()[c] == sClass) cls = c;
  if (chi < 0) throw std::out_of_range("no character " + sigma + " of " + g.name());
  if (cls < 0) throw std::out_of_range("no class " + sClass + " in " + g.name());
  return c1.table.values[chi][c1.classOfElem[g.classRep(cls)]].toRational();
}

} // namespace detail

// (1-q)^l <H(B_u)^s, S_q E>^el with H^s = sum_sigma sigma(s) H^sigma
inline RationalFunction qPartPrediction(const WeylGroup& w, const SpringerData& d, const std::string& sClass)
{
  auto g = SmallGroup::get(d.gamma);
  ClassFunction hs(w.numClasses(), 0);
  for (const auto& [sigma, f] : d.characters) {
    Rational v = detail::springerValue(*g, sigma, sClass);
    for (int k = 0; k < w.numClasses(); ++k) hs[k] += v * f[k];
  }
  RationalFunction r = ellipticFakeDegree(w, hs);
  return w.rank() % 2 ? -r : r;
}

// phi(1)/(|A(su)||Z|) times the q-part
inline RationalFunction conjEquiv(const WeylGroup& w, const SpringerData& d, const std::string& sClass, int phiDegree,
                                  int aOrder, int centerOrder)
{
  Rational c(phiDegree, aOrder * centerOrder);
  c.canonicalize();
  return c * qPartPrediction(w, d, sClass);
}

inline std::string entryClass(const std::string& entry)
{
  if (entry.size() < 3 || entry.front() != '(') throw std::invalid_argument("bad entry " + entry);
  return entry.substr(1, entry.find(',') - 1);
}

// One row of a formal-degree table evaluated by the independent pipelines.
struct FormalRow {
  std::string entry;
  RationalFunction printed;
  RationalFunction fourier; // conjectureRHS
  RationalFunction equiv;   // conjEquiv
  std::optional<RationalFunction> product; // phi(1)/(|A(su)||Z|) m_x
  std::string status;       // PASS, FAIL or DISCREPANCY
};

struct FormalTable {
  std::string group, gamma;
  int centerOrder = 1;
  SpringerFakeVector fakes; // from the published values
  SpringerFakeVector springerFakes;
  std::vector<FormalRow> rows;
};

inline std::string formalStatus(const FormalRow& r)
{
  bool agree = r.fourier == r.equiv && (!r.product || *r.product == r.fourier);
  if (!agree) return "FAIL";
  return r.fourier == r.printed ? "PASS" : "DISCREPANCY";
}

// Fixture "g2-formal" or "sp4".
inline FormalTable formalTable(const std::string& fixtureId)
{
  const auto& j = fixture(fixtureId).payload;
  FormalTable t;
  t.group = j.at("group").get<std::string>();
  t.gamma = j.at("gamma").get<std::string>();
  t.centerOrder = j.at("centerOrder").get<int>();
  auto w = weylGroup(t.group);
  SpringerData sd;
  if (j.contains("springer")) {
    for (auto it = j["springer"].begin(); it != j["springer"].end(); ++it)
      t.fakes[it.key()] = appendixFake(t.group, it.value().at("orbit"), it.value().at("phi"));
    sd = springerData("springer-" + t.group);
  } else {
    for (auto it = j.at("fake").begin(); it != j.at("fake").end(); ++it) t.fakes[it.key()] = factoredFromJson(it.value());
    sd = springerData(fixtureId);
  }
  t.springerFakes = springerFakes(*w, sd);
  const FourierBlock& b = fourierMatrix(t.gamma);
  for (const auto& r : j.at("rows")) {
    FormalRow row;
    row.entry = r.at("entry").get<std::string>();
    row.printed = factoredFromJson(r.at("printed"));
    int phiDeg = r.at("phiDegree").get<int>(), aOrder = r.at("aOrder").get<int>();
    row.fourier = conjectureRHS(b, row.entry, t.fakes, t.centerOrder);
    row.equiv = conjEquiv(*w, sd, entryClass(row.entry), phiDeg, aOrder, t.centerOrder);
    if (r.contains("params")) {
      Rational c(phiDeg, aOrder * t.centerOrder);
      c.canonicalize();
      row.product = c * mX(unipotentParam(r["params"].get<std::string>()));
    }
    row.status = formalStatus(row);
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace ellq
