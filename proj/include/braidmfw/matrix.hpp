#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "braidmfw/errors.hpp"
#include "braidmfw/laurent.hpp"

namespace braidmfw {

template <class T> using Matrix = std::vector<std::vector<T>>;

template <class T> Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T> Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<T> r(n, std::vector<T>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == T(0)) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

/// Determinant over Z[t, t^-1] by fraction-free (Bareiss) elimination.
inline LaurentPoly1 determinant(Matrix<LaurentPoly1> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly1(1);
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  int sign = 1;
  LaurentPoly1 prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly1();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace braidmfw
