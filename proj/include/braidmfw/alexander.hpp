#pragma once

// Alexander polynomials: the reduced Burau route for any braid closure and
// the explicit Seifert matrix of the 3-braid family C_{x,y,z}.

#include <cstddef>
#include <string>
#include <vector>

#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"
#include "braidmfw/laurent.hpp"
#include "braidmfw/matrix.hpp"

namespace braidmfw {

// --- Burau ------------------------------------------------------------------------

/// Reduced Burau matrix of sigma_index^sign on `strands` strands.
inline Matrix<LaurentPoly1> reduced_burau_generator(int strands, int index, int sign) {
  const std::size_t d = static_cast<std::size_t>(strands - 1);
  if (index < 1 || index > strands - 1) throw InputError("Burau generator out of range");
  Matrix<LaurentPoly1> m = identity_matrix<LaurentPoly1>(d);
  const LaurentPoly1 t = t_pow(1), ti = t_pow(-1);
  const std::size_t i = static_cast<std::size_t>(index - 1); // row of the twisted coordinate
  if (d == 1) {
    m[0][0] = sign > 0 ? -t : -ti;
    return m;
  }
  if (sign > 0) {
    m[i][i] = -t;
    if (i > 0) m[i][i - 1] = t;
    if (i + 1 < d) m[i][i + 1] = LaurentPoly1(1);
  } else {
    m[i][i] = -ti;
    if (i > 0) m[i][i - 1] = LaurentPoly1(1);
    if (i + 1 < d) m[i][i + 1] = ti;
  }
  return m;
}

inline Matrix<LaurentPoly1> reduced_burau(const BraidWord& w) {
  Matrix<LaurentPoly1> m = identity_matrix<LaurentPoly1>(static_cast<std::size_t>(w.strands() - 1));
  for (const auto& l : w.letters()) m = m * reduced_burau_generator(w.strands(), l.index, l.sign);
  return m;
}

/// Alexander polynomial up to +-t^k, before normalization:
/// det(I - burau(w)) (1 - t) / (1 - t^n).
inline LaurentPoly1 burau_alexander_raw(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return LaurentPoly1(1);
  Matrix<LaurentPoly1> m = reduced_burau(w);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& x : m[i]) x = -x;
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += LaurentPoly1(1);
  LaurentPoly1 geometric; // 1 + t + ... + t^(n-1)
  for (int k = 0; k < n; ++k) geometric += t_pow(k);
  return divide_exact(determinant(std::move(m)), geometric);
}

/// Normalized Alexander polynomial of the closure. Knots are normalized with
/// lowest term +1; for links whose lowest coefficient is not a unit the
/// polynomial is shifted to degree 0 with a positive lowest coefficient. A
/// split link gives 0.
inline LaurentPoly1 burau_alexander(const BraidWord& w) {
  const LaurentPoly1 raw = burau_alexander_raw(w);
  if (raw.is_zero()) return raw;
  return normalize_up_to_unit(raw);
}

// --- Seifert matrices ---------------------------------------------------------

struct SeifertMatrix {
  Matrix<int> entries;

  std::size_t dimension() const noexcept { return entries.size(); }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

/// Seifert matrix of C_{x,y,z} = a2^-1 a1^x a2^y a3^z on its Bennequin
/// surface. Basis: two loops around the central disks, then chains of
/// x-1, y-1, z-1 loops through consecutive twisted bands.
inline SeifertMatrix seifert_C(int x, int y, int z) {
  if (x < 1 || y < 1 || z < 1) throw InputError("seifert_C parameters must be positive");
  const std::size_t bx = static_cast<std::size_t>(x - 1), by = static_cast<std::size_t>(y - 1),
                    bz = static_cast<std::size_t>(z - 1);
  const std::size_t n = 2 + bx + by + bz;
  const std::size_t sx = 2, sy = 2 + bx, sz = 2 + bx + by;
  Matrix<int> v(n, std::vector<int>(n, 0));
  v[0][1] = 1;
  v[1][0] = 1;
  if (by > 0) v[0][sy] = 1;
  if (bx > 0) v[1][sx] = -1;
  if (bz > 0) v[1][sz] = 1;
  auto chain = [&](std::size_t start, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) {
      v[start + k][start + k] = -1;
      if (k + 1 < len) v[start + k][start + k + 1] = 1;
    }
  };
  chain(sx, bx);
  chain(sy, by);
  chain(sz, bz);
  return {std::move(v)};
}

/// det(V^T - t V), exact and unnormalized.
inline LaurentPoly1 alexander_from_seifert(const SeifertMatrix& v) {
  const std::size_t n = v.dimension();
  Matrix<LaurentPoly1> m(n, std::vector<LaurentPoly1>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (v.entries[i].size() != n) throw InputError("Seifert matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly1(v.entries[j][i]) - t_pow(1) * LaurentPoly1(v.entries[i][j]);
  }
  return determinant(std::move(m));
}

/// First k coefficients of the normalized polynomial, zero-padded.
inline std::vector<BigInt> leading_terms(const LaurentPoly1& p, std::size_t k) {
  if (p.is_zero()) throw InputError("leading terms of the zero polynomial");
  auto coeffs = dense_coefficients(normalize_alexander(p));
  coeffs.resize(k);
  return coeffs;
}

} // namespace braidmfw
