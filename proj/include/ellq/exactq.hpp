#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ellq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational parseRational(const std::string& s)
{
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  return r;
}

inline std::string toString(const Rational& r)
{
  return r.get_str();
}

// Dense polynomial in q over Q, lowest degree first.
class QPolynomial {
public:
  QPolynomial() = default;
  QPolynomial(const Rational& c) { if (c != 0) c_.push_back(c); }
  QPolynomial(int c) : QPolynomial(Rational(c)) {}
  explicit QPolynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static QPolynomial fromInts(const std::vector<long>& c)
  {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return QPolynomial(std::move(r));
  }
  static QPolynomial monomial(int k, const Rational& c = 1)
  {
    std::vector<Rational> r(k + 1);
    r[k] = c;
    return QPolynomial(std::move(r));
  }
  static QPolynomial q() { return monomial(1); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  Rational coeff(int k) const
  {
    return (k >= 0 && k < int(c_.size())) ? c_[k] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }
  int lowDegree() const
  {
    for (int i = 0; i < int(c_.size()); ++i)
      if (c_[i] != 0) return i;
    return -1;
  }

  Rational eval(const Rational& x) const
  {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  QPolynomial monic() const
  {
    if (isZero()) return *this;
    QPolynomial r = *this;
    Rational l = leading();
    for (auto& x : r.c_) x /= l;
    return r;
  }

  // p(q^k)
  QPolynomial substitutePower(int k) const
  {
    if (isZero()) return *this;
    std::vector<Rational> r(std::size_t(degree()) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return QPolynomial(std::move(r));
  }

  // q^deg p(1/q)
  QPolynomial reversed(int deg) const
  {
    std::vector<Rational> r(deg + 1);
    for (int i = 0; i <= degree(); ++i) r[deg - i] = c_[i];
    return QPolynomial(std::move(r));
  }

  QPolynomial& operator+=(const QPolynomial& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  QPolynomial operator-() const
  {
    QPolynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
  {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(r));
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
  friend QPolynomial operator*(const Rational& s, QPolynomial p)
  {
    if (s == 0) return {};
    for (auto& x : p.c_) x *= s;
    return p;
  }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  QPolynomial pow(int k) const
  {
    QPolynomial r(1), b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // Euclidean division; throws on zero divisor.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b)
  {
    if (b.isZero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPolynomial(), a};
    std::vector<Rational> r = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational& lb = b.leading();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      if (r[i] == 0) continue;
      Rational f = r[i] / lb;
      quo[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(r))};
  }
  friend QPolynomial operator/(const QPolynomial& a, const QPolynomial& b) { return divmod(a, b).first; }
  friend QPolynomial operator%(const QPolynomial& a, const QPolynomial& b) { return divmod(a, b).second; }

  bool divides(const QPolynomial& a) const { return (a % *this).isZero(); }

  // Exact quotient; throws when not divisible.
  QPolynomial exactDiv(const QPolynomial& b) const
  {
    auto [qt, r] = divmod(*this, b);
    if (!r.isZero()) throw std::domain_error("inexact polynomial division");
    return qt;
  }

  static QPolynomial gcd(QPolynomial a, QPolynomial b)
  {
    while (!b.isZero()) {
      QPolynomial r = a % b;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  bool operator<(const QPolynomial& o) const
  {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  bool hasIntegerCoeffs() const
  {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
  }

  std::string str(const std::string& var = "q") const
  {
    if (isZero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[i];
      if (a == 0) continue;
      Rational m = abs(a);
      bool neg = a < 0;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? "-" : "+";
      bool unit = (m == 1);
      if (!unit || i == 0) s += m.get_str();
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Reduced quotient num/den with den monic.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const QPolynomial& p) : num_(p), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(QPolynomial n, QPolynomial d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RationalFunction q() { return RationalFunction(QPolynomial::q()); }

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.degree() == 0; }
  QPolynomial asPolynomial() const
  {
    if (!isPolynomial()) throw std::domain_error("not a polynomial");
    return num_;
  }

  Rational eval(const Rational& x) const
  {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
  }

  RationalFunction inverse() const
  {
    if (isZero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    QPolynomial g = QPolynomial::gcd(a.den_, b.den_);
    QPolynomial ad = a.den_.exactDiv(g), bd = b.den_.exactDiv(g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  RationalFunction operator-() const
  {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.isZero() || b.isZero()) return {};
    QPolynomial g1 = QPolynomial::gcd(a.num_, b.den_);
    QPolynomial g2 = QPolynomial::gcd(b.num_, a.den_);
    return RationalFunction(a.num_.exactDiv(g1) * b.num_.exactDiv(g2),
                            a.den_.exactDiv(g2) * b.den_.exactDiv(g1));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
  {
    if (b.isZero()) throw std::domain_error("division by zero rational function");
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction pow(int k) const
  {
    if (k < 0) return inverse().pow(-k);
    return RationalFunction(num_.pow(k), den_.pow(k));
  }

  // Holds after every operation; exposed for tests.
  bool isCanonical() const
  {
    if (den_.isZero() || den_.leading() != 1) return false;
    if (num_.isZero()) return den_ == QPolynomial(1);
    return QPolynomial::gcd(num_, den_).degree() == 0;
  }

  std::string str() const
  {
    if (isPolynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

private:
  void reduce()
  {
    if (den_.isZero()) throw std::domain_error("zero denominator");
    if (num_.isZero()) {
      den_ = QPolynomial(1);
      return;
    }
    QPolynomial g = QPolynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exactDiv(g);
      den_ = den_.exactDiv(g);
    }
    Rational l = den_.leading();
    if (l != 1) {
      num_ = Rational(1 / l) * num_;
      den_ = den_.monic();
    }
  }
  QPolynomial num_;
  QPolynomial den_;
};

inline RationalFunction operator*(const Rational& s, const RationalFunction& f)
{
  return RationalFunction(s) * f;
}

// Phi_n, cached.
inline const QPolynomial& cyclotomic(int n)
{
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, QPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPolynomial p = QPolynomial::monomial(n) - QPolynomial(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto jt = cache.find(d);
    QPolynomial phid;
    if (jt != cache.end()) {
      phid = jt->second;
    } else {
      // Build divisors bottom-up without recursion into the lock.
      QPolynomial pd = QPolynomial::monomial(d) - QPolynomial(1);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = pd.exactDiv(cache.at(e));
      cache.emplace(d, pd);
      phid = pd;
    }
    p = p.exactDiv(phid);
  }
  return cache.emplace(n, p).first->second;
}

struct CyclotomicFactorization {
  Rational scalar = 1;
  int qPower = 0;
  std::map<int, int> factors;
  QPolynomial remainder = QPolynomial(1);

  QPolynomial expand() const
  {
    QPolynomial r = scalar * QPolynomial::monomial(qPower);
    for (auto [n, m] : factors) r *= cyclotomic(n).pow(m);
    return r * remainder;
  }
};

constexpr int kDefaultCyclotomicBound = 30;

inline CyclotomicFactorization factorCyclotomic(const QPolynomial& p, int bound = kDefaultCyclotomicBound)
{
  if (p.isZero()) throw std::invalid_argument("zero input");
  CyclotomicFactorization f;
  int low = p.lowDegree();
  f.qPower = low;
  std::vector<Rational> c(p.coeffs().begin() + low, p.coeffs().end());
  QPolynomial r(std::move(c));
  f.scalar = r.leading();
  r = r.monic();
  for (int n = 1; n <= bound && r.degree() > 0; ++n) {
    const QPolynomial& phi = cyclotomic(n);
    if (phi.degree() > r.degree()) continue;
    int m = 0;
    for (;;) {
      auto [qt, rem] = QPolynomial::divmod(r, phi);
      if (!rem.isZero()) break;
      r = qt;
      ++m;
    }
    if (m) f.factors[n] = m;
  }
  f.remainder = r;
  return f;
}

namespace detail {

inline std::string renderFactors(const CyclotomicFactorization& f, bool withPhi1AsLinear)
{
  std::vector<std::string> groups;
  if (f.qPower > 0) groups.push_back(f.qPower == 1 ? "q" : "q^" + std::to_string(f.qPower));
  std::string phis;
  for (auto [n, m] : f.factors) {
    if (n == 1 && withPhi1AsLinear) {
      groups.push_back(m == 1 ? "(q-1)" : "(q-1)^" + std::to_string(m));
      continue;
    }
    if (!phis.empty()) phis += " ";
    phis += "Phi" + std::to_string(n);
    if (m > 1) phis += "^" + std::to_string(m);
  }
  if (!phis.empty()) groups.push_back(phis);
  if (f.remainder.degree() > 0) groups.push_back("(" + f.remainder.str() + ")");
  std::string s;
  for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? " * " : "") + groups[i];
  return s;
}

} // namespace detail

// Cyclotomic rendering, e.g. "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)".
inline std::string render(const RationalFunction& f, int bound = kDefaultCyclotomicBound)
{
  if (f.isZero()) return "0";
  CyclotomicFactorization n = factorCyclotomic(f.num(), bound);
  CyclotomicFactorization d = factorCyclotomic(f.den(), bound);
  Rational scalar = n.scalar / d.scalar;
  n.scalar = 1;
  d.scalar = 1;
  std::string body = detail::renderFactors(n, true);
  std::string s;
  if (body.empty()) {
    s = scalar.get_str();
  } else if (scalar == 1) {
    s = body;
  } else if (scalar == -1) {
    s = "-" + body;
  } else {
    s = scalar.get_str() + " * " + body;
  }
  bool trivialDen = d.qPower == 0 && d.factors.empty() && d.remainder.degree() <= 0;
  if (trivialDen) return s;
  std::string dd = detail::renderFactors(d, false);
  bool single = dd.find(' ') == std::string::npos;
  return s + " / " + (single ? dd : "(" + dd + ")");
}

// ---- JSON ----

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << render(f); }

inline nlohmann::json toJson(const Rational& r) { return r.get_str(); }

inline nlohmann::json toJson(const QPolynomial& p)
{
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline nlohmann::json toJson(const RationalFunction& f)
{
  return {{"num", toJson(f.num())}, {"den", toJson(f.den())}};
}

inline nlohmann::json toJson(const CyclotomicFactorization& f)
{
  nlohmann::json phi = nlohmann::json::object();
  for (auto [n, m] : f.factors) phi[std::to_string(n)] = m;
  return {{"scalar", f.scalar.get_str()}, {"qpow", f.qPower}, {"phi", phi}, {"rem", toJson(f.remainder)}};
}

inline Rational rationalFromJson(const nlohmann::json& j)
{
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parseRational(j.get<std::string>());
}

inline QPolynomial polynomialFromJson(const nlohmann::json& j)
{
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rationalFromJson(x));
  return QPolynomial(std::move(c));
}

inline RationalFunction rationalFunctionFromJson(const nlohmann::json& j)
{
  return RationalFunction(polynomialFromJson(j.at("num")), polynomialFromJson(j.at("den")));
}

inline CyclotomicFactorization factorizationFromJson(const nlohmann::json& j)
{
  CyclotomicFactorization f;
  f.scalar = rationalFromJson(j.at("scalar"));
  f.qPower = j.at("qpow").get<int>();
  for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it)
    f.factors[std::stoi(it.key())] = it.value().get<int>();
  f.remainder = polynomialFromJson(j.at("rem"));
  return f;
}

// Rational function and its factored form together.
inline nlohmann::json toJsonFactored(const RationalFunction& f)
{
  nlohmann::json j = toJson(f);
  if (!f.isZero()) {
    j["num_factored"] = toJson(factorCyclotomic(f.num()));
    j["den_factored"] = toJson(factorCyclotomic(f.den()));
  }
  j["text"] = render(f);
  return j;
}

// ---- Q(zeta_e) ----

inline int eulerPhi(int n)
{
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// Element of Q(zeta_e) in the power basis modulo Phi_e.
class CycloNumber {
public:
  CycloNumber() : e_(1) {}
  CycloNumber(int e, const Rational& c) : e_(e), p_(c) {}
  CycloNumber(int e, QPolynomial p) : e_(e), p_(std::move(p)) { p_ = p_ % cyclotomic(e_); }

  static CycloNumber zeta(int e, int k)
  {
    k %= e;
    if (k < 0) k += e;
    return CycloNumber(e, QPolynomial::monomial(k));
  }

  int order() const { return e_; }
  const QPolynomial& poly() const { return p_; }
  bool isZero() const { return p_.isZero(); }
  bool isRational() const { return p_.degree() <= 0; }
  Rational toRational() const
  {
    if (!isRational()) throw std::domain_error("cyclotomic value is not rational");
    return p_.coeff(0);
  }

  // zeta -> zeta^{-1}
  CycloNumber conj() const { return galois(e_ - 1); }

  // zeta -> zeta^k, gcd(k,e)=1
  CycloNumber galois(int k) const
  {
    QPolynomial r;
    const auto& c = p_.coeffs();
    for (int i = 0; i < int(c.size()); ++i)
      if (c[i] != 0) r += c[i] * QPolynomial::monomial(int((long(i) * k) % e_));
    return CycloNumber(e_, r);
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b)
  {
    int e = common(a, b);
    return CycloNumber(e, a.p_ + b.p_, true);
  }
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b)
  {
    int e = common(a, b);
    return CycloNumber(e, a.p_ - b.p_, true);
  }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b)
  {
    int e = common(a, b);
    return CycloNumber(e, a.p_ * b.p_);
  }
  CycloNumber operator-() const { return CycloNumber(e_, -p_, true); }
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b)
  {
    return (a.isRational() && b.isRational()) ? a.p_ == b.p_ : (a.e_ == b.e_ && a.p_ == b.p_);
  }

  std::string str() const { return p_.str("z" + std::to_string(e_)); }

private:
  CycloNumber(int e, QPolynomial p, bool) : e_(e), p_(std::move(p)) {}
  static int common(const CycloNumber& a, const CycloNumber& b)
  {
    if (a.e_ == b.e_ || b.isRational()) return a.e_;
    if (a.isRational()) return b.e_;
    throw std::domain_error("mixed cyclotomic orders");
  }
  int e_;
  QPolynomial p_;
};

} // namespace ellq
