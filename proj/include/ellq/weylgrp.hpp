#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "exactq.hpp"
#include "group.hpp"
#include "rootsys.hpp"

namespace ellq {

struct GroupSpec {
  char family = 'A'; // A, B, D, G, F ('C' is accepted as B)
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  static GroupSpec parse(const std::string& s)
  {
    if (s.size() < 2) throw std::invalid_argument("bad group type: " + s);
    GroupSpec g;
    g.family = char(std::toupper(static_cast<unsigned char>(s[0])));
    g.rank = std::stoi(s.substr(1));
    if (g.family == 'C') g.family = 'B';
    if (std::string("ABDGF").find(g.family) == std::string::npos) throw std::invalid_argument("bad group type: " + s);
    if (g.rank < 1) throw std::invalid_argument("bad rank");
    return g;
  }
  friend bool operator<(const GroupSpec& a, const GroupSpec& b)
  {
    return std::tie(a.family, a.rank) < std::tie(b.family, b.rank);
  }
};

struct ClassInfo {
  int rep = 0;
  long size = 0;
  int order = 1;
  QPolynomial charPoly; // det(1 - q w) on E
  bool elliptic = false;
  Rational det1;        // det(1 - w) on E
  std::string name;
  std::optional<SignedCycleType> signedType; // B, D
  std::optional<Partition> cycleType;        // A
};

using ClassFunction = std::vector<Rational>;

class WeylGroup;

// Rational coordinates over Irr(W).
struct VirtualCharacter {
  const WeylGroup* group = nullptr;
  std::vector<Rational> coords;
};

class WeylGroup {
public:
  static std::shared_ptr<const WeylGroup> build(const GroupSpec& spec, long bound = 50000);

  // Reflection group on Z^dim generated by the given Coxeter generators; rank = dim E.
  static std::shared_ptr<const WeylGroup> fromReflections(const std::string& name, int dim, int rank,
                                                          const std::vector<IntMatrix>& gens,
                                                          long bound = 50000)
  {
    auto w = std::shared_ptr<WeylGroup>(new WeylGroup());
    w->name_ = name;
    w->family_ = '?';
    w->dim_ = dim;
    w->rank_ = rank;
    w->g_ = MatrixGroup::generate(dim, gens, bound);
    w->finishClasses();
    return w;
  }

  const std::string& name() const { return name_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  long order() const { return g_.order(); }
  const MatrixGroup& group() const { return g_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  int numClasses() const { return int(classes_.size()); }
  std::vector<int> ellipticClasses() const
  {
    std::vector<int> r;
    for (int c = 0; c < numClasses(); ++c)
      if (classes_[c].elliptic) r.push_back(c);
    return r;
  }

  // det(1 - q w) on E.
  QPolynomial charPolyE(const IntMatrix& m) const
  {
    QPolynomial p = detOneMinusQ(m);
    QPolynomial one = QPolynomial::fromInts({1, -1});
    for (int k = rank_; k < dim_; ++k) p = p.exactDiv(one);
    return p;
  }

  const CharacterTable& table() const
  {
    std::call_once(tableOnce_, [this] {
      table_ = characterTable(g_);
      if (!table_.rational) throw std::runtime_error("Weyl group table is not rational");
      assignLabels();
    });
    return table_;
  }
  long value(int chi, int cls) const { return table().intValues[chi][cls]; }
  int numIrreps() const { return table().size(); }
  const std::vector<std::string>& labels() const
  {
    table();
    return labels_;
  }
  int irrIndex(const std::string& label) const
  {
    const auto& l = labels();
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] == label) return int(i);
    throw std::out_of_range("no irreducible labelled " + label);
  }
  int trivialIndex() const { return 0; }
  int signIndex() const
  {
    ClassFunction s = signFunction();
    for (int i = 0; i < numIrreps(); ++i) {
      bool ok = true;
      for (int c = 0; c < numClasses() && ok; ++c) ok = Rational(value(i, c)) == s[c];
      if (ok) return i;
    }
    throw std::logic_error("sign character missing");
  }
  ClassFunction signFunction() const
  {
    ClassFunction s;
    for (const auto& c : classes_) {
      // det w = (-1)^{#eigenvalues -1}; read off det(1-qw) leading term sign
      Rational lead = c.charPoly.coeff(rank_);
      s.push_back(rank_ % 2 == 0 ? lead : -lead);
    }
    return s;
  }

  // Sum_w q^{l(w)}, l the word length in the generators.
  QPolynomial poincare() const
  {
    std::vector<Rational> c;
    for (long i = 0; i < order(); ++i) {
      int d = g_.length(int(i));
      if (d >= int(c.size())) c.resize(d + 1, 0);
      c[d] += 1;
    }
    return QPolynomial(std::move(c));
  }
  const std::optional<ExponentData>& exponents() const { return exponents_; }

  ClassFunction irreducible(int chi) const
  {
    ClassFunction f;
    for (int c = 0; c < numClasses(); ++c) f.push_back(value(chi, c));
    return f;
  }
  ClassFunction classFunction(const VirtualCharacter& v) const
  {
    check(v);
    ClassFunction f(numClasses(), 0);
    for (int i = 0; i < numIrreps(); ++i)
      if (v.coords[i] != 0)
        for (int c = 0; c < numClasses(); ++c) f[c] += v.coords[i] * value(i, c);
    return f;
  }
  VirtualCharacter virtualOf(const ClassFunction& f) const
  {
    VirtualCharacter v{this, std::vector<Rational>(numIrreps(), 0)};
    for (int i = 0; i < numIrreps(); ++i) v.coords[i] = inner(f, irreducible(i));
    return v;
  }
  VirtualCharacter basisVector(int chi) const
  {
    VirtualCharacter v{this, std::vector<Rational>(numIrreps(), 0)};
    v.coords[chi] = 1;
    return v;
  }
  Rational inner(const ClassFunction& a, const ClassFunction& b) const
  {
    Rational s = 0;
    for (int c = 0; c < numClasses(); ++c) s += Rational(classes_[c].size) * a[c] * b[c];
    return s / order();
  }
  void check(const VirtualCharacter& v) const
  {
    if (v.group != this) throw std::invalid_argument("group mismatch");
    if (int(v.coords.size()) != numIrreps()) throw std::invalid_argument("coordinate length mismatch");
  }

  // lcm of all class polynomials det(1-qw) on E
  const QPolynomial& charPolyLcm() const
  {
    std::call_once(lcmOnce_, [this] {
      QPolynomial l(1);
      for (const auto& c : classes_) {
        QPolynomial g = QPolynomial::gcd(l, c.charPoly);
        l = l * c.charPoly.exactDiv(g);
      }
      lcm_ = l.monic();
    });
    return lcm_;
  }

private:
  WeylGroup() = default;

  void finishClasses()
  {
    g_.computeClasses([this](const IntMatrix& m) { return charPolyE(m); });
    for (std::size_t k = 0; k < g_.classes().size(); ++k) {
      const auto& c = g_.classes()[k];
      ClassInfo ci;
      ci.rep = c.rep;
      ci.size = c.size;
      ci.order = c.order;
      IntMatrix m = g_.element(c.rep);
      ci.charPoly = charPolyE(m);
      ci.det1 = ci.charPoly.eval(1);
      ci.elliptic = ci.det1 != 0;
      if (family_ == 'A') ci.cycleType = permCycleType(m);
      if (family_ == 'B' || family_ == 'D') ci.signedType = signedCycleType(m);
      if (ci.cycleType) ci.name = ci.cycleType->str();
      else if (ci.signedType) ci.name = ci.signedType->positive.str() + ";" + ci.signedType->negative.str();
      else ci.name = "C" + std::to_string(k);
      classes_.push_back(std::move(ci));
    }
  }

  static Partition permCycleType(const IntMatrix& m)
  {
    int n = m.dim;
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (m(i, j)) img[j] = i;
    std::vector<bool> seen(n, false);
    std::vector<int> parts;
    for (int j = 0; j < n; ++j) {
      if (seen[j]) continue;
      int len = 0;
      for (int x = j; !seen[x]; x = img[x]) seen[x] = true, ++len;
      parts.push_back(len);
    }
    return Partition(parts);
  }
  static SignedCycleType signedCycleType(const IntMatrix& m)
  {
    int n = m.dim;
    std::vector<int> img(n), sg(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (m(i, j)) img[j] = i, sg[j] = m(i, j);
    std::vector<bool> seen(n, false);
    std::vector<int> pos, neg;
    for (int j = 0; j < n; ++j) {
      if (seen[j]) continue;
      int len = 0, s = 1;
      for (int x = j; !seen[x]; x = img[x]) seen[x] = true, ++len, s *= sg[x];
      (s > 0 ? pos : neg).push_back(len);
    }
    return {Partition(pos), Partition(neg)};
  }

  QPolynomial fakeOf(int chi) const;
  void assignLabels() const;

  std::string name_;
  char family_ = '?';
  int dim_ = 0, rank_ = 0;
  MatrixGroup g_;
  std::vector<ClassInfo> classes_;
  std::optional<ExponentData> exponents_;

  mutable std::once_flag tableOnce_, lcmOnce_;
  mutable CharacterTable table_;
  mutable std::vector<std::string> labels_;
  mutable QPolynomial lcm_;
};

// f(q) = (1-q)^l P(q) (1/|W|) sum_w chi(w)/det(1-qw); P from word lengths.
inline QPolynomial fakeDegree(const WeylGroup& w, const ClassFunction& chi)
{
  const QPolynomial& L = w.charPolyLcm();
  QPolynomial s;
  for (int c = 0; c < w.numClasses(); ++c) {
    if (chi[c] == 0) continue;
    const auto& cl = w.classes()[c];
    s += (Rational(cl.size) * chi[c]) * L.exactDiv(cl.charPoly);
  }
  QPolynomial one = QPolynomial::fromInts({1, -1});
  QPolynomial num = one.pow(w.rank()) * w.poincare() * s;
  QPolynomial r = num.exactDiv(Rational(w.order()) * L);
  return r;
}

inline QPolynomial fakeDegree(const VirtualCharacter& v)
{
  return fakeDegree(*v.group, v.group->classFunction(v));
}

inline QPolynomial WeylGroup::fakeOf(int chi) const
{
  ClassFunction f;
  for (long v : table_.intValues[chi]) f.push_back(v);
  return fakeDegree(*this, f);
}

inline void WeylGroup::assignLabels() const
{
  int k = table_.size();
  labels_.assign(k, "");
  auto rowEq = [&](int chi, auto&& f) {
    for (int c = 0; c < numClasses(); ++c)
      if (table_.intValues[chi][c] != f(c)) return false;
    return true;
  };
  if (family_ == 'A') {
    for (const auto& p : partitionsOf(rank_ + 1))
      for (int chi = 0; chi < k; ++chi)
        if (labels_[chi].empty() && rowEq(chi, [&](int c) { return mnCharacter(p, *classes_[c].cycleType); }))
          labels_[chi] = p.str();
  } else if (family_ == 'B') {
    for (const auto& b : bipartitionsOf(rank_))
      for (int chi = 0; chi < k; ++chi)
        if (labels_[chi].empty() && rowEq(chi, [&](int c) { return bnCharacter(b, *classes_[c].signedType); }))
          labels_[chi] = b.str();
  } else if (family_ == 'D') {
    for (const auto& b : bipartitionsOf(rank_)) {
      if (b.right < b.left) continue;
      auto res = [&](int c) { return bnCharacter(b, *classes_[c].signedType); };
      if (b.left != b.right) {
        for (int chi = 0; chi < k; ++chi)
          if (labels_[chi].empty() && rowEq(chi, res)) labels_[chi] = b.str();
        continue;
      }
      // restriction splits into two; find the pair summing to it
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
          if (!labels_[x].empty() || !labels_[y].empty()) continue;
          bool ok = true;
          for (int c = 0; c < numClasses() && ok; ++c)
            ok = table_.intValues[x][c] + table_.intValues[y][c] == res(c);
          if (ok) {
            labels_[x] = b.str() + "+";
            labels_[y] = b.str() + "-";
          }
        }
    }
  } else if (family_ == 'G' || family_ == 'F') {
    std::map<std::pair<long, int>, std::vector<int>> byKey;
    for (int chi = 0; chi < k; ++chi) {
      long d = table_.degree(chi);
      int b = fakeOf(chi).lowDegree();
      byKey[{d, b}].push_back(chi);
    }
    for (const auto& [key, rows] : byKey) {
      std::string base = "{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
      if (rows.size() == 1) {
        labels_[rows[0]] = "phi" + base;
        continue;
      }
      std::vector<int> ord = rows;
      if (family_ == 'G') {
        // phi'' is trivial on the reflection in the short simple root
        int s0 = g_.classOf(g_.find(g_.generators()[0]));
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
          return table_.intValues[a][s0] < table_.intValues[b][s0];
        });
      }
      for (std::size_t i = 0; i < ord.size(); ++i) labels_[ord[i]] = "phi" + std::string(i + 1, '\'') + base;
    }
  }
  for (int chi = 0; chi < k; ++chi)
    if (labels_[chi].empty()) labels_[chi] = "chi" + std::to_string(chi);
}

namespace detail {

inline IntMatrix swapMatrix(int n, int i, int j, int sign = 1)
{
  IntMatrix m = IntMatrix::identity(n);
  m(i, i) = m(j, j) = 0;
  m(i, j) = m(j, i) = sign;
  return m;
}

inline std::vector<IntMatrix> generatorsFor(const GroupSpec& s, int& dim)
{
  std::vector<IntMatrix> gens;
  int r = s.rank;
  switch (s.family) {
  case 'A':
    dim = r + 1;
    for (int i = 0; i < r; ++i) gens.push_back(swapMatrix(dim, i, i + 1));
    break;
  case 'B': {
    dim = r;
    for (int i = 0; i + 1 < r; ++i) gens.push_back(swapMatrix(dim, i, i + 1));
    IntMatrix m = IntMatrix::identity(dim);
    m(r - 1, r - 1) = -1;
    gens.push_back(m);
    break;
  }
  case 'D':
    if (r < 2) throw std::invalid_argument("D_n needs n >= 2");
    dim = r;
    for (int i = 0; i + 1 < r; ++i) gens.push_back(swapMatrix(dim, i, i + 1));
    gens.push_back(swapMatrix(dim, r - 2, r - 1, -1));
    break;
  case 'G':
  case 'F':
    dim = r;
    gens = RootSystem::ofType(s.family, r).simpleReflections();
    break;
  default:
    throw std::invalid_argument("unsupported family");
  }
  return gens;
}

} // namespace detail

inline std::shared_ptr<const WeylGroup> WeylGroup::build(const GroupSpec& spec, long bound)
{
  auto w = std::shared_ptr<WeylGroup>(new WeylGroup());
  w->name_ = spec.name();
  w->family_ = spec.family;
  w->rank_ = spec.rank;
  auto gens = detail::generatorsFor(spec, w->dim_);
  w->g_ = MatrixGroup::generate(w->dim_, gens, bound);
  w->finishClasses();
  w->exponents_ = ExponentData::of(exponentsOf(spec.family, spec.rank));
  if (w->exponents_->order() != w->order()) throw std::logic_error("group order disagrees with exponents");
  return w;
}

// Shared, lazily built groups.
inline std::shared_ptr<const WeylGroup> weylGroup(const GroupSpec& spec)
{
  static std::mutex mu;
  static std::map<GroupSpec, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  auto w = WeylGroup::build(spec);
  cache[spec] = w;
  return w;
}
inline std::shared_ptr<const WeylGroup> weylGroup(const std::string& s) { return weylGroup(GroupSpec::parse(s)); }

// Standard parabolic (or any reflection) subgroup from a subset of the generators.
inline std::shared_ptr<const WeylGroup> parabolic(const WeylGroup& w, const std::vector<int>& J,
                                                  const std::string& name = "")
{
  std::vector<IntMatrix> gens;
  for (int j : J) gens.push_back(w.group().generators().at(j));
  std::string nm = name;
  if (nm.empty()) {
    nm = w.name() + "_J{";
    for (std::size_t i = 0; i < J.size(); ++i) nm += (i ? "," : "") + std::to_string(J[i]);
    nm += "}";
  }
  return WeylGroup::fromReflections(nm, w.dim(), int(J.size()), gens);
}

// Class of W containing each class of H; H must act on the same lattice.
inline std::vector<int> classFusion(const WeylGroup& h, const WeylGroup& w)
{
  if (h.dim() != w.dim()) throw std::invalid_argument("invalid embedding");
  std::vector<int> f;
  for (const auto& c : h.classes()) {
    int e = w.group().find(h.group().element(c.rep));
    if (e < 0) throw std::invalid_argument("invalid embedding");
    f.push_back(w.group().classOf(e));
  }
  return f;
}

inline ClassFunction induce(const WeylGroup& h, const WeylGroup& w, const ClassFunction& chi)
{
  auto fus = classFusion(h, w);
  ClassFunction r(w.numClasses(), 0);
  for (int d = 0; d < h.numClasses(); ++d) r[fus[d]] += Rational(h.classes()[d].size) * chi[d];
  for (int c = 0; c < w.numClasses(); ++c)
    r[c] = r[c] * w.order() / (Rational(h.order()) * w.classes()[c].size);
  return r;
}

inline ClassFunction restrict(const WeylGroup& h, const WeylGroup& w, const ClassFunction& psi)
{
  auto fus = classFusion(h, w);
  ClassFunction r;
  for (int d = 0; d < h.numClasses(); ++d) r.push_back(psi[fus[d]]);
  return r;
}

inline nlohmann::json classesJson(const WeylGroup& w)
{
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : w.classes()) {
    IntMatrix m = w.group().element(c.rep);
    std::vector<std::vector<int>> rows(m.dim, std::vector<int>(m.dim));
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) rows[i][j] = m(i, j);
    out.push_back({{"name", c.name},
                   {"rep", rows},
                   {"size", c.size},
                   {"order", c.order},
                   {"charpoly", toJson(c.charPoly)},
                   {"charpoly_text", render(RationalFunction(c.charPoly))},
                   {"elliptic", c.elliptic}});
  }
  return out;
}

inline nlohmann::json tableJson(const WeylGroup& w)
{
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : w.classes()) cls.push_back(c.name);
  return {{"group", w.name()}, {"classes", cls}, {"labels", w.labels()}, {"values", w.table().intValues}};
}

} // namespace ellq
