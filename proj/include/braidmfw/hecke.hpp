#pragma once

// HOMFLYPT via the Markov trace on the Hecke algebra H_n.
//
// Write Q(beta) = v^{-e} P(closure of beta), e the exponent sum. Then
// Q(beta s) - Q(beta s^-1) = z Q(beta), so Q factors through H_n with
// T_i^2 = z T_i + 1, and Q is the trace with
//   tr(x T_{n-1} y) = v^{-1} tr(xy),   tr(x) = delta tr_{n-1}(x),
// for x, y in H_{n-1}, delta = (v^{-1} - v) / z.
//
// Elements of H_k are dense arrays over the permutation basis T_w,
// w in S_k. A basis element T_w factors uniquely as
// T_u T_{k-1} T_{k-2} ... T_j with u in S_{k-1}, where j is the position of
// the value k in the one-line notation of w; the trace is taken one level
// at a time using that factorization. Coefficients are polynomials in z
// and delta; each level contributes either v^{-1} or delta, so the v-power
// is recovered from the delta-degree at the end.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"
#include "braidmfw/laurent.hpp"

namespace braidmfw {

class CoefficientOverflow : public std::overflow_error {
public:
  CoefficientOverflow() : std::overflow_error("64-bit coefficient overflow") {}
};

/// int64 that throws CoefficientOverflow instead of wrapping.
struct CheckedInt64 {
  std::int64_t value = 0;

  CheckedInt64() = default;
  CheckedInt64(std::int64_t v) : value(v) {} // NOLINT(google-explicit-constructor)

  CheckedInt64& operator+=(CheckedInt64 o) {
    if (__builtin_add_overflow(value, o.value, &value)) throw CoefficientOverflow();
    return *this;
  }
  CheckedInt64& operator-=(CheckedInt64 o) {
    if (__builtin_sub_overflow(value, o.value, &value)) throw CoefficientOverflow();
    return *this;
  }
  bool is_zero() const noexcept { return value == 0; }
  BigInt to_big() const { return BigInt(value); }
};

inline bool coeff_is_zero(const CheckedInt64& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline BigInt coeff_to_big(const CheckedInt64& c) { return c.to_big(); }
inline BigInt coeff_to_big(const BigInt& c) { return c; }

namespace detail {

/// Permutations of {0..k-1} indexed by rank, with right-multiplication tables.
struct SymmetricGroupTables {
  int k = 0;
  std::size_t order = 1;
  std::vector<std::vector<std::uint32_t>> times_s; // [i][w] -> w * s_{i+1}
  std::vector<std::vector<std::uint8_t>> ascent;    // [i][w] -> l(w s) > l(w)
  std::vector<std::uint32_t> drop_max;              // [w] -> rank of w with value k-1 removed (in S_{k-1})
  std::vector<std::uint8_t> max_position;           // [w] -> 0-based position of the value k-1

  static std::uint32_t rank(const std::vector<int>& perm) {
    // Lehmer code, most significant digit first.
    const int k = static_cast<int>(perm.size());
    std::uint32_t r = 0;
    for (int i = 0; i < k; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < k; ++j) smaller += perm[j] < perm[i];
      r = r * static_cast<std::uint32_t>(k - i) + static_cast<std::uint32_t>(smaller);
    }
    return r;
  }

  explicit SymmetricGroupTables(int k_) : k(k_) {
    for (int i = 2; i <= k; ++i) order *= static_cast<std::size_t>(i);
    std::vector<std::vector<int>> perms(order);
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::size_t idx = 0;
    do {
      perms[idx++] = p; // next_permutation enumerates in Lehmer-rank order
    } while (std::next_permutation(p.begin(), p.end()));

    times_s.assign(static_cast<std::size_t>(std::max(k - 1, 0)), std::vector<std::uint32_t>(order));
    ascent.assign(static_cast<std::size_t>(std::max(k - 1, 0)), std::vector<std::uint8_t>(order));
    drop_max.resize(order);
    max_position.resize(order);
    for (std::size_t w = 0; w < order; ++w) {
      auto q = perms[w];
      for (int i = 0; i + 1 < k; ++i) {
        ascent[i][w] = q[i] < q[i + 1];
        std::swap(q[i], q[i + 1]);
        times_s[i][w] = rank(q);
        std::swap(q[i], q[i + 1]);
      }
      const auto pos = std::find(q.begin(), q.end(), k - 1) - q.begin();
      max_position[w] = static_cast<std::uint8_t>(pos);
      q.erase(q.begin() + pos);
      drop_max[w] = q.empty() ? 0 : rank(q);
    }
  }
};

} // namespace detail

/// Dense element of H_k: for each basis permutation a block of
/// (z-degree x delta-degree) coefficients.
template <class Coeff> struct HeckeElement {
  std::size_t basis = 0;
  std::size_t zdim = 0, ddim = 0;
  std::vector<Coeff> data;
  std::vector<std::uint8_t> live;

  HeckeElement(std::size_t basis_, std::size_t zdim_, std::size_t ddim_)
      : basis(basis_), zdim(zdim_), ddim(ddim_), data(basis_ * zdim_ * ddim_), live(basis_, 0) {}

  std::size_t stride() const noexcept { return zdim * ddim; }
  Coeff* block(std::size_t w) { return data.data() + w * stride(); }
  const Coeff* block(std::size_t w) const { return data.data() + w * stride(); }

  /// block(dst) += sign * z^zshift * delta^dshift * src.
  void accumulate(std::size_t dst, const Coeff* src, std::size_t src_zdim, std::size_t src_ddim, int sign,
                  std::size_t zshift, std::size_t dshift) {
    Coeff* out = block(dst);
    bool any = false;
    for (std::size_t zd = 0; zd < src_zdim; ++zd)
      for (std::size_t dd = 0; dd < src_ddim; ++dd) {
        const Coeff& c = src[zd * src_ddim + dd];
        if (coeff_is_zero(c)) continue;
        const std::size_t tz = zd + zshift, td = dd + dshift;
        if (tz >= zdim || td >= ddim) throw InternalError("Hecke coefficient exceeds its degree bound");
        if (sign > 0) out[tz * ddim + td] += c;
        else out[tz * ddim + td] -= c;
        any = true;
      }
    if (any) live[dst] = 1;
  }
};

template <class Coeff> class HeckeTraceEngine {
public:
  explicit HeckeTraceEngine(int max_strands) {
    for (int k = 0; k <= max_strands; ++k) tables_.emplace_back(std::max(k, 1));
  }

  int max_strands() const noexcept { return static_cast<int>(tables_.size()) - 1; }

  LaurentPoly2 homfly(const BraidWord& w) const {
    const int n = w.strands();
    if (n > max_strands()) throw LimitError("Hecke engine built for at most " + std::to_string(max_strands()) + " strands");
    const std::size_t zdim = w.length() + 1;
    const std::size_t ddim = static_cast<std::size_t>(n);

    HeckeElement<Coeff> x(tables_[n].order, zdim, 1);
    x.block(0)[0] = Coeff(1); // rank 0 is the identity permutation
    x.live[0] = 1;
    for (const auto& l : w.letters()) x = times_generator(x, n, l.index - 1, l.sign);

    // Re-home into a block layout with room for delta powers.
    HeckeElement<Coeff> cur(x.basis, zdim, ddim);
    for (std::size_t b = 0; b < x.basis; ++b)
      if (x.live[b]) cur.accumulate(b, x.block(b), zdim, 1, 1, 0, 0);

    for (int k = n; k >= 2; --k) cur = reduce_level(cur, k);

    // cur is a scalar in H_1: sum c[zd][dd] z^zd delta^dd v^{-(n-1-dd)}.
    LaurentPoly2 q;
    const LaurentPoly2 delta_num = v_pow(-1) - v_pow(1);
    LaurentPoly2 delta_pow(1);
    for (std::size_t dd = 0; dd < ddim; ++dd) {
      LaurentPoly2 part;
      for (std::size_t zd = 0; zd < zdim; ++zd) {
        const Coeff& c = cur.block(0)[zd * ddim + dd];
        if (coeff_is_zero(c)) continue;
        part.add_term({-(n - 1 - static_cast<int>(dd)), static_cast<int>(zd) - static_cast<int>(dd)}, coeff_to_big(c));
      }
      if (!part.is_zero()) q += part * delta_pow;
      delta_pow *= delta_num;
    }
    return q.shifted({exponent_sum(w), 0});
  }

private:
  HeckeElement<Coeff> times_generator(const HeckeElement<Coeff>& x, int k, int gen, int sign) const {
    const auto& t = tables_[k];
    HeckeElement<Coeff> out(x.basis, x.zdim, x.ddim);
    const std::size_t zd = x.zdim, dd = x.ddim;
    for (std::size_t w = 0; w < x.basis; ++w) {
      if (!x.live[w]) continue;
      const Coeff* c = x.block(w);
      const std::size_t ws = t.times_s[gen][w];
      out.accumulate(ws, c, zd, dd, 1, 0, 0);
      const bool up = t.ascent[gen][w] != 0;
      if (sign > 0 && !up) out.accumulate(w, c, zd, dd, 1, 1, 0);   // T_w T = z T_w + T_ws
      if (sign < 0 && up) out.accumulate(w, c, zd, dd, -1, 1, 0);   // T_w T^-1 = T_ws - z T_w
    }
    return out;
  }

  // Trace down from H_k to H_{k-1}.
  HeckeElement<Coeff> reduce_level(const HeckeElement<Coeff>& x, int k) const {
    const auto& t = tables_[k];
    const std::size_t lower = tables_[k - 1].order;
    // groups[j] collects coefficients of T_u T_{k-1} ... T_{j+1} (0-based j, j < k-1);
    // group k-1 (value k at the last position) carries delta.
    std::vector<HeckeElement<Coeff>> groups;
    groups.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) groups.emplace_back(lower, x.zdim, x.ddim);
    for (std::size_t w = 0; w < x.basis; ++w) {
      if (!x.live[w]) continue;
      const int j = t.max_position[w];
      groups[j].accumulate(t.drop_max[w], x.block(w), x.zdim, x.ddim, 1, 0, j == k - 1 ? 1 : 0);
    }
    // Group j (0-based) needs right multiplication by T_{k-2} T_{k-3} ... T_{j+1}
    // in 1-based generator names, i.e. 0-based generators k-3 down to j.
    HeckeElement<Coeff> out = std::move(groups[k - 1]);
    for (int j = 0; j < k - 1; ++j) {
      HeckeElement<Coeff> g = std::move(groups[j]);
      if (std::none_of(g.live.begin(), g.live.end(), [](std::uint8_t b) { return b != 0; })) continue;
      for (int gen = k - 3; gen >= j; --gen) g = times_generator(g, k - 1, gen, 1);
      for (std::size_t u = 0; u < lower; ++u)
        if (g.live[u]) out.accumulate(u, g.block(u), g.zdim, g.ddim, 1, 0, 0);
    }
    return out;
  }

  std::vector<detail::SymmetricGroupTables> tables_;
};

} // namespace braidmfw
