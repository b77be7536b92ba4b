#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptic.hpp"
#include "fixtures.hpp"
#include "fourier.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"

namespace ellq {

// Simple affine roots: node 0 is the affine node (finite part the highest short root), node i the simple root i-1.
// Omega = X/Q is taken trivial.
struct AffineDatum {
  std::string type;
  RootSystem system;
  std::vector<IntVec> nodes;
  std::string omega = "trivial";

  int rank() const { return system.rank(); }
};

inline AffineDatum affineDatum(const std::string& type)
{
  if (type.size() < 2) throw std::invalid_argument("bad affine type: " + type);
  AffineDatum d;
  d.type = type;
  d.system = RootSystem::ofType(char(std::toupper(static_cast<unsigned char>(type[0]))), std::stoi(type.substr(1)));
  d.nodes.push_back(d.system.highestShortRoot());
  for (int i = 0; i < d.rank(); ++i) {
    IntVec e(d.rank(), 0);
    e[i] = 1;
    d.nodes.push_back(e);
  }
  return d;
}

// Cartan type of the root subsystem spanned by the given (simple) roots.
inline std::string subsystemType(const RootSystem& rs, const std::vector<IntVec>& roots, char base)
{
  int n = int(roots.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        Rational a = rs.pairing(roots[i], roots[j]) * rs.pairing(roots[j], roots[i]);
        m[i][j] = int(a.get_num().get_si());
      }
  std::vector<int> comp(n, -1);
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(names.size());
    std::vector<int> members{s};
    comp[s] = id;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && m[members[k]][j]) {
          comp[j] = id;
          members.push_back(j);
        }
    int size = int(members.size()), maxEdge = 0, branch = -1;
    for (int a : members) {
      int deg = 0;
      for (int b : members) {
        maxEdge = std::max(maxEdge, m[a][b]);
        if (m[a][b]) ++deg;
      }
      if (deg == 3) branch = a;
    }
    std::string nm;
    if (maxEdge == 3) nm = "G2";
    else if (maxEdge == 2) {
      bool inner = false;
      for (int a : members)
        for (int b : members) {
          int da = 0, db = 0;
          for (int c : members) {
            if (m[a][c]) ++da;
            if (m[b][c]) ++db;
          }
          if (m[a][b] == 2 && da == 2 && db == 2) inner = true;
        }
      nm = inner ? "F4" : std::string(1, base == 'C' ? 'C' : 'B') + std::to_string(size);
    } else if (branch >= 0) {
      // arm lengths from the branch node
      std::vector<int> arms;
      for (int b : members) {
        if (!m[branch][b]) continue;
        int len = 1, prev = branch, cur = b;
        for (bool more = true; more;) {
          more = false;
          for (int c : members)
            if (c != prev && c != cur && m[cur][c]) {
              prev = cur;
              cur = c;
              ++len;
              more = true;
              break;
            }
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      nm = (arms[0] == 1 && arms[1] == 1 ? "D" : "E") + std::to_string(size);
    } else {
      nm = "A" + std::to_string(size);
    }
    names.push_back(nm);
  }
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "x" : "") + names[i];
  return out;
}

struct MaximalParabolic {
  int deleted = 0;        // the missing node
  std::vector<int> nodes;
  std::string type;       // e.g. "G2", "A1xA1", "A2"
  bool full = false;      // W_J maps onto W
  std::shared_ptr<const WeylGroup> group;

  // type used to look up family data
  std::string familyType() const { return full ? group->name() : type; }
};

inline std::vector<MaximalParabolic> maximalParabolics(const AffineDatum& d)
{
  auto w = weylGroup(d.type);
  std::vector<MaximalParabolic> out;
  int n = d.rank();
  for (int del = 0; del <= n; ++del) {
    MaximalParabolic p;
    p.deleted = del;
    std::vector<IntVec> roots;
    std::vector<IntMatrix> gens;
    for (int i = 0; i <= n; ++i) {
      if (i == del) continue;
      p.nodes.push_back(i);
      roots.push_back(d.nodes[i]);
      gens.push_back(d.system.reflection(d.nodes[i]));
    }
    p.type = subsystemType(d.system, roots, char(std::toupper(static_cast<unsigned char>(d.type[0]))));
    auto g = WeylGroup::fromReflections(p.type, n, n, gens);
    p.full = g->order() == w->order();
    p.group = p.full ? w : g;
    out.push_back(std::move(p));
  }
  return out;
}

struct AffineEllipticClass {
  int parabolic = 0; // index into maximalParabolics
  int cls = 0;       // class of W_J
  std::string name;  // C1, C2, ...
  int order = 1;
  long size = 0;
  Rational mu;       // |C| / |W_J|
};

// Elliptic classes of each W_J, by decreasing element order within J.
inline std::vector<AffineEllipticClass> affineEllipticClasses(const std::vector<MaximalParabolic>& pars)
{
  std::vector<AffineEllipticClass> out;
  for (std::size_t j = 0; j < pars.size(); ++j) {
    const WeylGroup& w = *pars[j].group;
    std::vector<int> ell = w.ellipticClasses();
    std::stable_sort(ell.begin(), ell.end(),
                     [&](int a, int b) { return w.classes()[a].order > w.classes()[b].order; });
    for (int c : ell) {
      AffineEllipticClass a;
      a.parabolic = int(j);
      a.cls = c;
      a.order = w.classes()[c].order;
      a.size = w.classes()[c].size;
      a.mu = Rational(a.size) / w.order();
      a.name = "C" + std::to_string(out.size() + 1);
      out.push_back(a);
    }
  }
  return out;
}

inline std::vector<AffineEllipticClass> affineEllipticClasses(const AffineDatum& d)
{
  return affineEllipticClasses(maximalParabolics(d));
}

// nu(C) = (-1)^l sum_delta delta(C) d_delta(q) / P_J(q)
inline std::vector<RationalFunction> nuFunction(const std::vector<MaximalParabolic>& pars,
                                                const std::vector<AffineEllipticClass>& classes)
{
  std::map<int, std::vector<QPolynomial>> degrees;
  std::vector<RationalFunction> nu;
  for (const auto& c : classes) {
    const MaximalParabolic& J = pars[c.parabolic];
    const WeylGroup& w = *J.group;
    auto it = degrees.find(c.parabolic);
    if (it == degrees.end()) it = degrees.emplace(c.parabolic, genericDegrees(w, familyDataFor(w, J.familyType()))).first;
    QPolynomial s;
    for (int i = 0; i < w.numIrreps(); ++i) s += Rational(w.value(i, c.cls)) * it->second[i];
    RationalFunction v = RationalFunction(s) / RationalFunction(w.poincare());
    nu.push_back(w.rank() % 2 ? -v : v);
  }
  return nu;
}

// sum_C v(C) nu(C) mu_el(C)
inline RationalFunction affineFormalDegree(const std::vector<Rational>& v, const std::vector<RationalFunction>& nu,
                                           const std::vector<AffineEllipticClass>& classes)
{
  if (v.size() != classes.size() || nu.size() != classes.size())
    throw std::invalid_argument("class lists do not match");
  RationalFunction r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r = r + (v[i] * classes[i].mu) * nu[i];
  return r;
}

// Isolated point of a discrete series module and its W-restriction at s = 1.
struct IsolatedData {
  std::string s;
  std::map<std::string, int> restriction;
};

// F of the s = 1 projection; zero at s != 1.
inline RationalFunction affineEllipticFake(const WeylGroup& w, const IsolatedData& d)
{
  if (d.s != "1") return RationalFunction();
  if (d.restriction.empty()) throw std::invalid_argument("missing restriction data");
  ClassFunction f(w.numClasses(), 0);
  for (const auto& [label, mult] : d.restriction) {
    ClassFunction chi = w.irreducible(w.irrIndex(label));
    for (int c = 0; c < w.numClasses(); ++c) f[c] += mult * chi[c];
  }
  return ellipticFakeDegree(w, f);
}

// EF^J on elliptic delta functions: A[i][j] = (|C_j|/|W_J|) sum delta(C_i) {delta,delta'} delta'(C_j).
// With transposed = true the weight is |C_i| instead.
inline RatMatrix efJElliptic(const MaximalParabolic& J, const std::vector<int>& ellClasses, bool transposed = false)
{
  const WeylGroup& w = *J.group;
  IrrPairing p = irrPairing(w, familyDataFor(w, J.familyType()));
  int n = int(ellClasses.size()), k = w.numIrreps();
  RatMatrix a = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int d = 0; d < k; ++d) {
        long x = w.value(d, ellClasses[i]);
        if (!x) continue;
        for (int e = 0; e < k; ++e)
          if (p.matrix[d][e] != 0) s += x * p.matrix[d][e] * w.value(e, ellClasses[j]);
      }
      long size = w.classes()[ellClasses[transposed ? i : j]].size;
      a[i][j] = s * size / w.order();
    }
  return a;
}

// Direct sum of the EF^J blocks over the affine elliptic classes.
inline RatMatrix efDeltaBasis(const std::vector<MaximalParabolic>& pars, const std::vector<AffineEllipticClass>& classes,
                              bool transposed = false)
{
  int n = int(classes.size());
  RatMatrix a = zeroMatrix(n, n);
  for (std::size_t j = 0; j < pars.size(); ++j) {
    std::vector<int> idx, cls;
    for (int i = 0; i < n; ++i)
      if (classes[i].parabolic == int(j)) {
        idx.push_back(i);
        cls.push_back(classes[i].cls);
      }
    if (idx.empty()) continue;
    RatMatrix b = efJElliptic(pars[j], cls, transposed);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) a[idx[r]][idx[c]] = b[r][c];
  }
  return a;
}

// Gram matrix sum_C v_i(C) v_j(C) mu_el(C).
inline RatMatrix affineGram(const RatMatrix& basis, const std::vector<AffineEllipticClass>& classes)
{
  int n = int(basis.size());
  RatMatrix g = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t c = 0; c < classes.size(); ++c) g[i][j] += basis[i][c] * basis[j][c] * classes[c].mu;
  return g;
}

// EF^a_el in the basis: V diag(mu) A V^T.
inline RatMatrix efAffineElliptic(const RatMatrix& deltaMatrix, const RatMatrix& basis,
                                  const std::vector<AffineEllipticClass>& classes)
{
  if (rank(affineGram(basis, classes)) != int(basis.size())) throw std::invalid_argument("degenerate basis");
  RatMatrix dm = zeroMatrix(int(classes.size()), int(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) dm[c][c] = classes[c].mu;
  return basis * dm * deltaMatrix * transpose(basis);
}

// Fourier submatrix on (gamma, pair) entries; entries with different gamma lie in different families.
inline RatMatrix fourierSubmatrix(const std::vector<std::pair<std::string, std::string>>& entries)
{
  int n = int(entries.size());
  RatMatrix m = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (entries[i].first != entries[j].first) continue;
      const FourierBlock& b = fourierMatrix(entries[i].first);
      m[i][j] = b.rationalMatrix()[b.index(entries[i].second)][b.index(entries[j].second)];
    }
  return m;
}

// Every stage of the affine G2 computation next to the published data.
struct G2AffineReport {
  std::vector<MaximalParabolic> parabolics;
  std::vector<AffineEllipticClass> classes;
  std::vector<Rational> publishedMu;
  std::vector<RationalFunction> nu;
  RatMatrix v;
  std::vector<std::string> vLabels;
  RatMatrix gram;
  std::vector<RatMatrix> efJ, efJTransposed, publishedEfJ;
  RatMatrix efV, publishedEfV, fourier;
  std::vector<RationalFunction> formal;    // affineFormalDegree(v_i)
  std::vector<RationalFunction> fakes;     // affineEllipticFake(v_i)
  std::vector<RationalFunction> predicted; // sum_j EF^a[i][j] F(v_j)

  bool muMatches() const
  {
    if (classes.size() != publishedMu.size()) return false;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].mu != publishedMu[i]) return false;
    return true;
  }
};

inline G2AffineReport g2AffineReport()
{
  const auto& j = fixture("g2-affine").payload;
  G2AffineReport r;
  AffineDatum d = affineDatum("G2");
  r.parabolics = maximalParabolics(d);
  r.classes = affineEllipticClasses(r.parabolics);
  for (const auto& x : j.at("muEl")) r.publishedMu.push_back(rationalFromJson(x));
  r.nu = nuFunction(r.parabolics, r.classes);
  r.v = matrixFromJson(j.at("v"));
  r.vLabels = j.at("vLabels").get<std::vector<std::string>>();
  r.gram = affineGram(r.v, r.classes);
  for (std::size_t p = 0; p < r.parabolics.size(); ++p) {
    std::vector<int> cls;
    for (const auto& c : r.classes)
      if (c.parabolic == int(p)) cls.push_back(c.cls);
    r.efJ.push_back(efJElliptic(r.parabolics[p], cls));
    r.efJTransposed.push_back(efJElliptic(r.parabolics[p], cls, true));
    r.publishedEfJ.push_back(matrixFromJson(j.at("efJ" + std::to_string(p))));
  }
  r.efV = efAffineElliptic(efDeltaBasis(r.parabolics, r.classes), r.v, r.classes);
  r.publishedEfV = matrixFromJson(j.at("efV"));
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& e : j.at("fourierEntries")) entries.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  r.fourier = fourierSubmatrix(entries);
  auto w = weylGroup("G2");
  for (std::size_t i = 0; i < r.v.size(); ++i) {
    r.formal.push_back(affineFormalDegree(r.v[i], r.nu, r.classes));
    const auto& iso = j.at("isolated")[i];
    IsolatedData data{iso.at("s").get<std::string>(), {}};
    if (iso.contains("restriction")) data.restriction = iso["restriction"].get<std::map<std::string, int>>();
    r.fakes.push_back(affineEllipticFake(*w, data));
  }
  for (std::size_t i = 0; i < r.v.size(); ++i) {
    RationalFunction s;
    for (std::size_t k = 0; k < r.v.size(); ++k)
      if (r.efV[i][k] != 0) s = s + r.efV[i][k] * r.fakes[k];
    r.predicted.push_back(s);
  }
  return r;
}

} // namespace ellq
