#pragma once

// Braid words for derived links: cables, connected sums, the axis-linked
// family A^n(w) and the Birman-Menasco family BM_{x,y,z,w}.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"

namespace braidmfw {

/// Bundle crossing: on `strands` strands, bundle `i` (strands (i-1)p+1..ip)
/// crosses bundle i+1, all p^2 crossings with the given sign.
inline std::vector<Letter> bundle_crossing(int i, int p, int sign) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(p * p));
  const int boundary = i * p; // generator between the two bundles
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s) out.push_back({boundary - r + s, sign});
  return out;
}

/// (s_{first} ... s_{first+p-2})^k, or the inverse power for k < 0.
inline std::vector<Letter> bundle_twist(int first, int p, int k) {
  std::vector<Letter> out;
  for (int rep = 0; rep < std::abs(k); ++rep) {
    if (k > 0)
      for (int j = 0; j < p - 1; ++j) out.push_back({first + j, 1});
    else
      for (int j = p - 2; j >= 0; --j) out.push_back({first + j, -1});
  }
  return out;
}

struct CableSpec {
  int p = 1;
  int q = 0;
  int k = 0;
};

inline CableSpec cable_spec(const BraidWord& w, int p, int q) {
  if (p < 1) throw InputError("cable needs p >= 1");
  return {p, q, q - p * exponent_sum(w)};
}

/// Cable with one twist count per component; twist j sits on the bundle of
/// the lowest strand of component j.
inline BraidWord cable_link(const BraidWord& w, int p, const std::vector<int>& twists) {
  if (p < 1) throw InputError("cable needs p >= 1");
  const auto cycles = closure_cycles(w);
  if (twists.size() != cycles.size())
    throw InputError("cable needs one twist count per component (" + std::to_string(cycles.size()) + ")");
  std::vector<Letter> out;
  out.reserve(w.length() * static_cast<std::size_t>(p * p));
  for (const auto& l : w.letters()) {
    auto block = bundle_crossing(l.index, p, l.sign);
    out.insert(out.end(), block.begin(), block.end());
  }
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    const int bundle = *std::min_element(cycles[j].begin(), cycles[j].end());
    auto tw = bundle_twist(bundle * p + 1, p, twists[j]);
    out.insert(out.end(), tw.begin(), tw.end());
  }
  return BraidWord(w.strands() * p, std::move(out));
}

/// (p, q)-cable of a knot word, k = q - p c.
inline BraidWord cable(const BraidWord& w, int p, int q) {
  const CableSpec spec = cable_spec(w, p, q);
  if (component_count(w) != 1) throw InputError("cable(w, p, q) needs a knot; use cable_link for links");
  BraidWord out = cable_link(w, p, {spec.k});
  if (out.strands() != p * w.strands() || exponent_sum(out) != (p - 1) * q + p * exponent_sum(w))
    throw InternalError("cable word violates its crossing formula");
  return out;
}

/// p^2 c_L + (p-1)(k_1 + ... + k_l).
inline long long cable_crossing_count_link(long long c_link, long long p, const std::vector<long long>& ks) {
  return p * p * c_link + (p - 1) * std::accumulate(ks.begin(), ks.end(), 0LL);
}

inline BraidWord connect_sum(const BraidWord& w1, const BraidWord& w2) {
  if (component_count(w1) != 1 || component_count(w2) != 1) throw InputError("connect_sum needs two knots");
  const int n = w1.strands() + w2.strands() - 1;
  return concat(with_strands(w1, n), shift_indices(w2, w1.strands() - 1, n));
}

/// n shifted copies of w in a ring; consecutive copies are clasped by two
/// full twists (s^4) between the top strand of one copy and the bottom
/// strand of the next. For n >= 3 the clasp from the last copy back to the
/// first runs as a band behind the copies in between.
inline BraidWord axis_linked_union(const BraidWord& w, int n) {
  if (n < 1) throw InputError("axis_linked_union needs n >= 1");
  if (n == 1) return w;
  const int b = w.strands(), total = n * b;
  std::vector<Letter> out;
  for (int j = 0; j < n; ++j)
    for (const auto& l : w.letters()) out.push_back({l.index + j * b, l.sign});
  for (int j = 1; j < n; ++j)
    for (int k = 0; k < 4; ++k) out.push_back({j * b, 1});
  if (n >= 3) {
    for (int i = total - 1; i >= 2; --i) out.push_back({i, 1});
    for (int k = 0; k < 4; ++k) out.push_back({1, 1});
    for (int i = 2; i <= total - 1; ++i) out.push_back({i, -1});
  }
  return BraidWord(total, std::move(out));
}

// --- Birman-Menasco family -------------------------------------------------------

struct BMParams {
  int x = 0, y = 0, z = 0, w = 0;
};

/// One run of the frozen template: either a fixed letter power or a
/// parameter block (param in 0..3 for x, y, z, w) on generator `gen`.
struct BMSegment {
  int gen;
  int param; // -1 for a fixed run
  int fixed;
};

inline constexpr BMSegment kBMTemplate[] = {
    {2, 3, 0}, {3, 2, 0}, {2, -1, -1}, {1, 1, 0}, {1, -1, 1}, {2, -1, 2}, {3, -1, 1}, {2, -1, 1}, {1, 0, 0},
};

inline BraidWord bm_word(const BMParams& p) {
  const int vals[4] = {p.x, p.y, p.z, p.w};
  std::vector<Letter> out;
  for (const auto& s : kBMTemplate) {
    const int e = s.param < 0 ? s.fixed : vals[s.param];
    for (int i = 0; i < std::abs(e); ++i) out.push_back({s.gen, e > 0 ? 1 : -1});
  }
  return BraidWord(4, std::move(out));
}

inline BraidWord kn_word(int n) { return bm_word({-1, -2, n, 2}); }

} // namespace braidmfw
