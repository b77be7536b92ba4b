#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "exactq.hpp"

namespace ellq {

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix zeroMatrix(int r, int c) { return RatMatrix(r, std::vector<Rational>(c, 0)); }

inline RatMatrix identityMatrix(int n)
{
  RatMatrix m = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMatrix transpose(const RatMatrix& a)
{
  if (a.empty()) return {};
  RatMatrix t = zeroMatrix(int(a[0].size()), int(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r = zeroMatrix(int(a.size()), b.empty() ? 0 : int(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline bool isSymmetric(const RatMatrix& a)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

// Row echelon in place; returns rank.
inline int rowReduce(RatMatrix& a)
{
  int rows = int(a.size()), cols = rows ? int(a[0].size()) : 0, r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline int rank(RatMatrix a) { return rowReduce(a); }

inline RatMatrix inverse(const RatMatrix& a)
{
  int n = int(a.size());
  RatMatrix m = zeroMatrix(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  if (rowReduce(m) < n) throw std::domain_error("singular matrix");
  for (int i = 0; i < n; ++i) {
    if (m[i][i] == 0) throw std::domain_error("singular matrix");
    Rational d = m[i][i];
    for (auto& x : m[i]) x /= d;
  }
  RatMatrix inv = zeroMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

inline nlohmann::json toJson(const RatMatrix& a)
{
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : a) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    j.push_back(r);
  }
  return j;
}

inline RatMatrix matrixFromJson(const nlohmann::json& j)
{
  RatMatrix a;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rationalFromJson(x));
    a.push_back(r);
  }
  return a;
}

inline std::string matrixText(const RatMatrix& a)
{
  std::string s;
  for (const auto& row : a) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].get_str();
    s += "]\n";
  }
  return s;
}

} // namespace ellq
