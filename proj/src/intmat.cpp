#include "mhikita/intmat.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

#include "mhikita/errors.hpp"

namespace mh {

namespace {
std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw StructuralError("integer matrix arithmetic overflowed 64 bits");
  return static_cast<std::int64_t>(v);
}
}  // namespace

IntMat int_zero(std::size_t r, std::size_t c) { return IntMat(r, std::vector<std::int64_t>(c, 0)); }

IntMat int_identity(std::size_t n) {
  IntMat r = int_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat int_transpose(const IntMat& a, std::size_t cols) {
  IntMat r = int_zero(cols, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j][i] = a[i][j];
  return r;
}

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t inner, std::size_t cols) {
  IntMat r = int_zero(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = narrow(__int128(r[i][j]) + __int128(a[i][k]) * b[k][j]);
  return r;
}

std::int64_t int_det(const IntMat& a0) {
  std::size_t n = a0.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = a0[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        narrow(a[i][j]);
      }
    prev = a[k][k];
  }
  return narrow(a[n - 1][n - 1] * sign);
}

int int_rank(const IntMat& a, std::size_t cols) {
  std::vector<RatVec> m;
  for (auto& row : a) m.emplace_back(row.begin(), row.end());
  int rank = 0;
  std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == Rational(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != static_cast<std::size_t>(rank) && m[i][c] != Rational(0)) {
        Rational f = m[i][c] / m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
      }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> smith_invariants(const IntMat& a0, std::size_t cols) {
  IntMat a = a0;
  std::size_t rows = a.size();
  std::vector<std::int64_t> d;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[pi], a[t]);
    for (auto& row : a) std::swap(row[pj], row[t]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = narrow(__int128(a[i][j]) - __int128(q) * a[t][j]);
        if (a[i][t]) {
          std::swap(a[i], a[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = narrow(__int128(a[i][j]) - __int128(q) * a[i][t]);
        if (a[t][j]) {
          for (auto& row : a) std::swap(row[j], row[t]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold any entry the pivot does not divide into row t
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t]) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] = narrow(__int128(a[t][c]) + a[i][c]);
              clean = false;
              break;
            }
      }
    }
    d.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return d;
}

bool rat_inverse(const IntMat& A, std::vector<RatVec>* inv) {
  std::size_t n = A.size();
  std::vector<RatVec> m(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == Rational(0)) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[c]);
    Rational s = m[c][c];
    for (auto& v : m[c]) v /= s;
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && m[i][c] != Rational(0)) {
        Rational f = m[i][c];
        for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
      }
  }
  inv->assign(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) (*inv)[i][j] = m[i][n + j];
  return true;
}

bool rat_solve(const IntMat& A, const std::vector<Rational>& b, RatVec* x) {
  std::vector<RatVec> inv;
  if (!rat_inverse(A, &inv)) return false;
  std::size_t n = A.size();
  x->assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) (*x)[i] += inv[i][j] * b[j];
  return true;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace mh
