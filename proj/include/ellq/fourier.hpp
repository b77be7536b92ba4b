#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "weylgrp.hpp"

namespace ellq {

// Lift a value of Q(zeta_e) into Q(zeta_L), e | L.
inline CycloNumber liftCyclo(const CycloNumber& a, int L)
{
  if (a.isRational()) return CycloNumber(L, a.toRational());
  if (L % a.order() != 0) throw std::invalid_argument("order does not divide target");
  return CycloNumber(L, a.poly().substitutePower(L / a.order()));
}

// A finite group given by permutation or diagonal sign matrices.
class SmallGroup {
public:
  struct Centralizer {
    int x = 0;                     // element of the ambient group
    MatrixGroup group;
    CharacterTable table;
    std::vector<std::string> labels;
    std::vector<int> classOfElem;  // ambient element -> class in the centralizer, -1 outside
  };

  static std::shared_ptr<const SmallGroup> get(const std::string& name)
  {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const SmallGroup>> cache;
    std::string n = normalize(name);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto g = std::shared_ptr<SmallGroup>(new SmallGroup(n));
    cache[n] = g;
    return g;
  }

  static std::string normalize(const std::string& name)
  {
    if (name == "1" || name == "trivial") return "1";
    if (name == "Z2" || name == "Z2^1" || name == "S2") return "Z2";
    if (name.rfind("Z2^", 0) == 0) {
      int k = std::stoi(name.substr(3));
      if (k >= 2 && k <= 4) return "Z2^" + std::to_string(k);
    }
    if (name == "S3" || name == "S4" || name == "S5") return name;
    throw std::invalid_argument("unsupported group: " + name);
  }

  const std::string& name() const { return name_; }
  const MatrixGroup& group() const { return g_; }
  long order() const { return g_.order(); }
  int numClasses() const { return g_.numClasses(); }
  int classRep(int c) const { return g_.classes()[c].rep; }
  const std::vector<std::string>& classLabels() const { return classLabels_; }
  const Centralizer& centralizer(int c) const { return cent_[c]; }
  int mul(int i, int j) const { return mult_[std::size_t(i) * order() + j]; }
  int inverse(int i) const { return g_.inverse(i); }

private:
  explicit SmallGroup(const std::string& n) : name_(n)
  {
    std::vector<IntMatrix> gens;
    int dim = 1;
    if (n == "Z2") {
      IntMatrix m = IntMatrix::identity(1);
      m(0, 0) = -1;
      gens.push_back(m);
    } else if (n.rfind("Z2^", 0) == 0) {
      dim = std::stoi(n.substr(3));
      for (int i = 0; i < dim; ++i) {
        IntMatrix m = IntMatrix::identity(dim);
        m(i, i) = -1;
        gens.push_back(m);
      }
    } else if (n[0] == 'S') {
      dim = n[1] - '0';
      for (int i = 0; i + 1 < dim; ++i) gens.push_back(detail::swapMatrix(dim, i, i + 1));
    }
    g_ = gens.empty() ? MatrixGroup::fromElements(1, {}) : MatrixGroup::generate(dim, gens);
    g_.computeClasses([](const IntMatrix& m) { return detOneMinusQ(m); });
    long N = order();
    mult_.resize(std::size_t(N) * N);
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) mult_[std::size_t(i) * N + j] = g_.mul(int(i), int(j));
    for (int c = 0; c < numClasses(); ++c) classLabels_.push_back(elementLabel(classRep(c)));
    for (int c = 0; c < numClasses(); ++c) cent_.push_back(makeCentralizer(classRep(c)));
  }

  std::string elementLabel(int e) const
  {
    if (e == 0) return "1";
    IntMatrix m = g_.element(e);
    if (name_ == "Z2") return "tau";
    if (name_[0] == 'Z') {
      std::string s = "t";
      for (int i = 0; i < m.dim; ++i) s += m(i, i) < 0 ? '1' : '0';
      return s;
    }
    std::vector<bool> seen(m.dim, false);
    std::vector<int> parts;
    for (int i = 0; i < m.dim; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int x = i; !seen[x];) {
        seen[x] = true;
        ++len;
        int next = x;
        for (int y = 0; y < m.dim; ++y)
          if (m(y, x) != 0) next = y;
        x = next;
      }
      if (len > 1) parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    std::string s = "g";
    for (int p : parts) s += std::to_string(p);
    return s;
  }

  Centralizer makeCentralizer(int x) const
  {
    Centralizer c;
    c.x = x;
    long N = order();
    std::vector<IntMatrix> elems;
    std::vector<int> idx;
    for (long g = 0; g < N; ++g)
      if (mul(int(g), x) == mul(x, int(g))) {
        elems.push_back(g_.element(int(g)));
        idx.push_back(int(g));
      }
    c.group = MatrixGroup::fromElements(g_.dim(), elems);
    c.group.computeClasses([](const IntMatrix& m) { return detOneMinusQ(m); });
    c.table = characterTable(c.group);
    c.classOfElem.assign(N, -1);
    for (int g : idx) c.classOfElem[g] = c.group.classOf(c.group.find(g_.element(g)));
    c.labels = characterLabels(c);
    return c;
  }

  std::vector<std::string> characterLabels(const Centralizer& c) const
  {
    const auto& t = c.table;
    long n = c.group.order();
    bool abelian = t.size() == c.group.numClasses() && t.size() == n;
    std::vector<std::string> out;
    for (int i = 0; i < t.size(); ++i) {
      std::string l = "chi" + std::to_string(i);
      if (i == 0) l = "1";
      else if (n == 2) l = "eps";
      else if (n == 3) {
        int cx = c.classOfElem[c.x];
        for (int k = 1; k < 3; ++k)
          if (t.values[i][cx] == CycloNumber::zeta(3, k)) l = k == 1 ? "theta" : "theta^2";
      } else if (n == 6 && !abelian)
        l = t.degree(i) == 2 ? "r" : "eps";
      out.push_back(l);
    }
    return out;
  }

  std::string name_;
  MatrixGroup g_;
  std::vector<int> mult_;
  std::vector<std::string> classLabels_;
  std::vector<Centralizer> cent_;
};

struct MPair {
  int cls = 0; // class of x in Gamma
  int chi = 0; // irreducible of C(x)
  std::string label;
};

inline std::vector<MPair> mSet(const SmallGroup& g)
{
  std::vector<MPair> out;
  for (int c = 0; c < g.numClasses(); ++c) {
    const auto& cz = g.centralizer(c);
    for (int i = 0; i < cz.table.size(); ++i)
      out.push_back({c, i, "(" + g.classLabels()[c] + "," + cz.labels[i] + ")"});
  }
  return out;
}

using CycloMatrix = std::vector<std::vector<CycloNumber>>;

struct FourierBlock {
  std::string gamma;
  std::vector<MPair> mset;
  int order = 1;       // entries lie in Q(zeta_order)
  CycloMatrix values;
  bool rational = false;
  RatMatrix matrix;    // filled when rational

  const RatMatrix& rationalMatrix() const
  {
    if (!rational) throw std::domain_error("Fourier matrix of " + gamma + " is not rational");
    return matrix;
  }

  int index(const std::string& label) const
  {
    for (std::size_t i = 0; i < mset.size(); ++i)
      if (mset[i].label == label) return int(i);
    throw std::out_of_range("no pair " + label + " in M(" + gamma + ")");
  }
  std::vector<std::string> labels() const
  {
    std::vector<std::string> l;
    for (const auto& p : mset) l.push_back(p.label);
    return l;
  }
};

// {(x,s),(y,t)} = 1/(|C(x)||C(y)|) sum_{g : x commutes with gyg^-1} s(gyg^-1) conj(t(g^-1xg))
inline FourierBlock computeFourierBlock(const SmallGroup& g)
{
  FourierBlock b;
  b.gamma = g.name();
  b.mset = mSet(g);
  int L = 1;
  for (int c = 0; c < g.numClasses(); ++c) L = std::lcm(L, g.centralizer(c).table.exponent);
  b.order = L;
  int n = int(b.mset.size());
  b.values.assign(n, std::vector<CycloNumber>(n, CycloNumber(L, Rational(0))));
  long N = g.order();
  for (int cx = 0; cx < g.numClasses(); ++cx)
    for (int cy = 0; cy < g.numClasses(); ++cy) {
      const auto& Cx = g.centralizer(cx);
      const auto& Cy = g.centralizer(cy);
      int x = Cx.x, y = Cy.x;
      // counts of (class of gyg^-1 in C(x), class of g^-1xg in C(y))
      std::map<std::pair<int, int>, long> counts;
      for (long gi = 0; gi < N; ++gi) {
        int ginv = g.inverse(int(gi));
        int yg = g.mul(g.mul(int(gi), y), ginv);
        if (g.mul(x, yg) != g.mul(yg, x)) continue;
        int xg = g.mul(g.mul(ginv, x), int(gi));
        ++counts[{Cx.classOfElem[yg], Cy.classOfElem[xg]}];
      }
      Rational scale = Rational(1) / (Rational(Cx.group.order()) * Cy.group.order());
      for (int i = 0; i < n; ++i) {
        if (b.mset[i].cls != cx) continue;
        for (int j = 0; j < n; ++j) {
          if (b.mset[j].cls != cy) continue;
          CycloNumber s(L, Rational(0));
          for (const auto& [k, cnt] : counts) {
            CycloNumber a = liftCyclo(Cx.table.values[b.mset[i].chi][k.first], L);
            CycloNumber t = liftCyclo(Cy.table.values[b.mset[j].chi][k.second], L).conj();
            s += CycloNumber(L, Rational(cnt)) * a * t;
          }
          b.values[i][j] = CycloNumber(L, scale) * s;
        }
      }
    }
  b.rational = true;
  for (const auto& row : b.values)
    for (const auto& v : row) b.rational = b.rational && v.isRational();
  if (b.rational) {
    b.matrix = zeroMatrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.matrix[i][j] = b.values[i][j].toRational();
  }
  return b;
}

inline const FourierBlock& fourierMatrix(const std::string& gamma)
{
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FourierBlock>> cache;
  auto g = SmallGroup::get(gamma);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[g->name()];
  if (!slot) slot = std::make_unique<FourierBlock>(computeFourierBlock(*g));
  return *slot;
}

// Column {(y,rho),(1,rho')} = rho(1) rho'(y)/|C(y)| over all of M(Gamma).
inline std::vector<Rational> specialColumn(const SmallGroup& g, int rhoPrime)
{
  const auto& c1 = g.centralizer(0);
  std::vector<Rational> col;
  for (const auto& p : mSet(g)) {
    const auto& cy = g.centralizer(p.cls);
    CycloNumber v = c1.table.values[rhoPrime][c1.classOfElem[cy.x]];
    if (!v.isRational()) throw std::logic_error("non-rational character value");
    col.push_back(Rational(cy.table.degree(p.chi)) * v.toRational() / cy.group.order());
  }
  return col;
}

struct Family {
  std::vector<std::string> members;
  std::string gamma;
  std::map<std::string, std::string> embedding; // member -> pair label
  std::map<std::string, int> delta;
};

struct FamilyData {
  std::string group;
  std::string provenance;
  std::vector<Family> families;
};

inline FamilyData familyDataFromJson(const nlohmann::json& j)
{
  FamilyData d;
  d.group = j.at("group").get<std::string>();
  for (const auto& f : j.at("families")) {
    Family fam;
    fam.members = f.at("members").get<std::vector<std::string>>();
    fam.gamma = f.at("gamma").get<std::string>();
    fam.embedding = f.at("embedding").get<std::map<std::string, std::string>>();
    if (f.contains("delta")) fam.delta = f["delta"].get<std::map<std::string, int>>();
    d.families.push_back(std::move(fam));
  }
  return d;
}

// Singleton families, as for products of symmetric groups.
inline FamilyData singletonFamilies(const WeylGroup& w)
{
  FamilyData d;
  d.group = w.name();
  d.provenance = "standard";
  for (const auto& l : w.labels()) d.families.push_back({{l}, "1", {{l, "(1,1)"}}, {{l, 1}}});
  return d;
}

inline bool isProductOfTypeA(const std::string& type)
{
  std::size_t pos = 0;
  while (pos < type.size()) {
    std::size_t next = type.find('x', pos);
    std::string f = type.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (f.size() < 2 || f[0] != 'A') return false;
    for (std::size_t i = 1; i < f.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(f[i])) && f[i] != '~') return false;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return !type.empty();
}

// Family data for W of the given type ("G2", "B2", "A2", "A1xA1~", ...).
inline FamilyData familyDataFor(const WeylGroup& w, std::string type = "")
{
  if (type.empty()) type = w.name();
  if (type.size() >= 2 && type[0] == 'C') type[0] = 'B';
  if (isProductOfTypeA(type)) return singletonFamilies(w);
  try {
    const Fixture& f = fixture("families-" + type);
    FamilyData d = familyDataFromJson(f.payload);
    d.provenance = f.provenance;
    return d;
  } catch (const std::out_of_range&) {
    throw std::out_of_range("no family data for type " + type);
  }
}

// The pairing {delta, delta'} on Irr(W), with family and position bookkeeping.
struct IrrPairing {
  RatMatrix matrix;
  std::vector<int> familyOf;
  std::vector<int> position; // index in the family's M(Gamma)
  std::vector<int> delta;
};

inline IrrPairing irrPairing(const WeylGroup& w, const FamilyData& fd)
{
  int k = w.numIrreps();
  IrrPairing p;
  p.matrix = zeroMatrix(k, k);
  p.familyOf.assign(k, -1);
  p.position.assign(k, -1);
  p.delta.assign(k, 1);
  for (std::size_t f = 0; f < fd.families.size(); ++f) {
    const Family& fam = fd.families[f];
    const FourierBlock& b = fourierMatrix(fam.gamma);
    std::set<int> used;
    for (const auto& m : fam.members) {
      int i = w.irrIndex(m);
      if (p.familyOf[i] >= 0) throw std::invalid_argument("families overlap at " + m);
      auto it = fam.embedding.find(m);
      if (it == fam.embedding.end()) throw std::invalid_argument("no embedding for " + m);
      int pos = b.index(it->second);
      if (!used.insert(pos).second) throw std::invalid_argument("embedding is not injective");
      p.familyOf[i] = int(f);
      p.position[i] = pos;
      auto d = fam.delta.find(m);
      if (d != fam.delta.end()) p.delta[i] = d->second;
    }
  }
  for (int i = 0; i < k; ++i)
    if (p.familyOf[i] < 0) throw std::invalid_argument("families do not cover " + w.labels()[i]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (p.familyOf[i] == p.familyOf[j])
        p.matrix[i][j] = fourierMatrix(fd.families[p.familyOf[i]].gamma).rationalMatrix()[p.position[i]][p.position[j]];
  return p;
}

struct XWPairing {
  std::vector<std::string> labels; // "<family>:<pair>"
  RatMatrix matrix;
};

inline XWPairing xwPairing(const WeylGroup& w, const FamilyData& fd)
{
  irrPairing(w, fd); // validates the partition
  XWPairing x;
  std::vector<std::pair<int, int>> offsets;
  for (std::size_t f = 0; f < fd.families.size(); ++f) {
    const FourierBlock& b = fourierMatrix(fd.families[f].gamma);
    offsets.push_back({int(x.labels.size()), int(b.mset.size())});
    for (const auto& l : b.labels()) x.labels.push_back(std::to_string(f) + ":" + l);
  }
  int n = int(x.labels.size());
  x.matrix = zeroMatrix(n, n);
  for (std::size_t f = 0; f < fd.families.size(); ++f) {
    const FourierBlock& b = fourierMatrix(fd.families[f].gamma);
    auto [o, s] = offsets[f];
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) x.matrix[o + i][o + j] = b.rationalMatrix()[i][j];
  }
  return x;
}

// EF(chi) = sum_{delta'} {chi, delta'} delta', on coordinates over Irr(W).
inline std::vector<Rational> efMap(const IrrPairing& p, const std::vector<Rational>& chi)
{
  int k = int(chi.size());
  std::vector<Rational> r(k, 0);
  for (int i = 0; i < k; ++i) {
    if (chi[i] == 0) continue;
    for (int j = 0; j < k; ++j) r[j] += chi[i] * p.matrix[i][j];
  }
  return r;
}

// ind_L(EF^L(delta)) == EF(ind_L(delta)) for every irreducible delta of W_L.
inline bool efInductionCheck(const WeylGroup& w, const FamilyData& fw, const WeylGroup& l, const FamilyData& fl)
{
  IrrPairing pw = irrPairing(w, fw), pl = irrPairing(l, fl);
  for (int d = 0; d < l.numIrreps(); ++d) {
    std::vector<Rational> e(l.numIrreps(), 0);
    e[d] = 1;
    auto toW = [&](const std::vector<Rational>& coords) {
      ClassFunction f(l.numClasses(), 0);
      for (int i = 0; i < l.numIrreps(); ++i)
        for (int c = 0; c < l.numClasses(); ++c) f[c] += coords[i] * l.value(i, c);
      return w.virtualOf(induce(l, w, f)).coords;
    };
    if (toW(efMap(pl, e)) != efMap(pw, toW(e))) return false;
  }
  return true;
}

// d_delta(q) = Delta(delta) sum_{delta'} {delta, delta'} f_{delta'}(q)
inline QPolynomial genericDegree(const WeylGroup& w, const IrrPairing& p, int delta)
{
  QPolynomial d;
  for (int j = 0; j < w.numIrreps(); ++j)
    if (p.matrix[delta][j] != 0) d += p.matrix[delta][j] * fakeDegree(w, w.irreducible(j));
  return Rational(p.delta[delta]) * d;
}

inline std::vector<QPolynomial> genericDegrees(const WeylGroup& w, const FamilyData& fd)
{
  IrrPairing p = irrPairing(w, fd);
  std::vector<QPolynomial> r;
  for (int i = 0; i < w.numIrreps(); ++i) r.push_back(genericDegree(w, p, i));
  return r;
}

// sum_delta d_delta(q) delta(1) == P(q)
inline bool plancherelCheck(const WeylGroup& w, const std::vector<QPolynomial>& d)
{
  QPolynomial s;
  for (int i = 0; i < w.numIrreps(); ++i) s += Rational(w.table().degree(i)) * d[i];
  return s == w.poincare();
}

inline CycloMatrix multiply(const CycloMatrix& a, const CycloMatrix& b, int L)
{
  std::size_t n = a.size();
  CycloMatrix r(n, std::vector<CycloNumber>(n, CycloNumber(L, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].isZero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

struct FourierReport {
  bool symmetric = true;
  bool real = true;        // every entry fixed by complex conjugation
  bool involution = true;  // M^2 = I
  bool unitary = true;     // rows orthonormal: M conj(M)^T = I
};

inline FourierReport checkFourier(const FourierBlock& b)
{
  FourierReport r;
  std::size_t n = b.values.size();
  if (b.rational) {
    r.symmetric = isSymmetric(b.matrix);
    r.involution = r.unitary = b.matrix * b.matrix == identityMatrix(int(n));
    return r;
  }
  CycloMatrix ct(n, std::vector<CycloNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(b.values[i][j] == b.values[j][i])) r.symmetric = false;
      if (!(b.values[i][j] == b.values[i][j].conj())) r.real = false;
      ct[j][i] = b.values[i][j].conj();
    }
  CycloMatrix sq = multiply(b.values, b.values, b.order), uu = multiply(b.values, ct, b.order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CycloNumber want(b.order, Rational(i == j ? 1 : 0));
      if (!(sq[i][j] == want)) r.involution = false;
      if (!(uu[i][j] == want)) r.unitary = false;
    }
  return r;
}

inline nlohmann::json toJson(const FourierBlock& b)
{
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : b.values) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& v : row) jr.push_back(v.isRational() ? v.toRational().get_str() : v.str());
    m.push_back(jr);
  }
  return {{"gamma", b.gamma}, {"labels", b.labels()}, {"rational", b.rational}, {"matrix", m}};
}

} // namespace ellq
