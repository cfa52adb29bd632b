#pragma once

// The 3-strand braid group in band generators
//   a1 = s1, a2 = s2, a3 = s2 s1 s2^-1,   alpha = a1 a3 = a2 a1 = a3 a2,
// with a breadth-first shortest-form search and recognition of the
// A/B/C/D knot families.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidmfw/alexander.hpp"
#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"

namespace braidmfw {

struct BandLetter {
  int band = 1; // 1, 2 or 3
  int sign = 1;

  BandLetter inverse() const { return {band, -sign}; }
  friend bool operator==(const BandLetter&, const BandLetter&) = default;
  friend auto operator<=>(const BandLetter&, const BandLetter&) = default;
};

using BandWord = std::vector<BandLetter>;

/// "-2 1 1 2 2 3" style text; '-' marks an inverse band.
inline BandWord parse_band_word(std::string_view text) {
  BandWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string_view t = tok;
    if (!t.empty() && t.front() == '-') {
      sign = -1;
      t.remove_prefix(1);
    }
    if (t.size() != 1 || t[0] < '1' || t[0] > '3') throw InputError("bad band letter '" + tok + "'");
    out.push_back({t[0] - '0', sign});
  }
  return out;
}

inline std::string to_text(const BandWord& bw) {
  std::string s;
  for (const auto& l : bw) {
    if (!s.empty()) s += ' ';
    if (l.sign < 0) s += '-';
    s += static_cast<char>('0' + l.band);
  }
  return s;
}

inline int exponent_sum(const BandWord& bw) {
  int e = 0;
  for (const auto& l : bw) e += l.sign;
  return e;
}

inline BraidWord band_to_artin(const BandWord& bw) {
  std::vector<Letter> out;
  for (const auto& l : bw) {
    if (l.band < 1 || l.band > 3) throw InputError("band index out of range");
    if (l.band == 3) {
      out.push_back({2, 1});
      out.push_back({1, l.sign});
      out.push_back({2, -1});
    } else {
      out.push_back({l.band, l.sign});
    }
  }
  return BraidWord(3, std::move(out));
}

/// Subscript rotation i -> i+1 mod 3 (conjugation by alpha).
inline BandWord rotate_subscripts(const BandWord& bw, int by = 1) {
  BandWord out = bw;
  for (auto& l : out) l.band = ((l.band - 1 + by) % 3 + 3) % 3 + 1;
  return out;
}

namespace detail {

/// All length-2 band words grouped by the element they represent.
/// Pairs equal to the identity are not included.
inline const std::vector<std::vector<std::array<BandLetter, 2>>>& band_pair_classes() {
  static const auto classes = [] {
    std::vector<BandLetter> letters;
    for (int b = 1; b <= 3; ++b)
      for (int s : {1, -1}) letters.push_back({b, s});
    std::vector<std::pair<Matrix<LaurentPoly1>, std::vector<std::array<BandLetter, 2>>>> groups;
    const auto id = identity_matrix<LaurentPoly1>(2);
    for (const auto& x : letters)
      for (const auto& y : letters) {
        const auto m = reduced_burau(band_to_artin({x, y}));
        if (m == id) continue;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == m; });
        if (it == groups.end()) groups.push_back({m, {{x, y}}});
        else it->second.push_back({x, y});
      }
    std::vector<std::vector<std::array<BandLetter, 2>>> out;
    for (auto& g : groups)
      if (g.second.size() > 1) out.push_back(std::move(g.second));
    return out;
  }();
  return classes;
}

inline std::string band_key(const BandWord& bw) {
  std::string s;
  for (const auto& l : bw) s += static_cast<char>(l.sign > 0 ? '0' + l.band : 'A' + l.band - 1);
  return s;
}

inline BandWord min_rotation(const BandWord& bw) {
  BandWord best = bw;
  for (std::size_t r = 1; r < bw.size(); ++r) {
    BandWord cand(bw.begin() + static_cast<std::ptrdiff_t>(r), bw.end());
    cand.insert(cand.end(), bw.begin(), bw.begin() + static_cast<std::ptrdiff_t>(r));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

/// Cyclically non-decreasing subscripts: each step is +0 or +1 mod 3.
inline bool cyclic_nondecreasing(const BandWord& bw, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i + 1 < to; ++i) {
    const int d = ((bw[i + 1].band - bw[i].band) % 3 + 3) % 3;
    if (d > 1) return false;
  }
  return true;
}

inline bool is_alpha(const BandLetter& x, const BandLetter& y, int sign) {
  if (x.sign != sign || y.sign != sign) return false;
  // alpha = a1a3 = a2a1 = a3a2; alpha^-1 is the reverse of each spelling, inverted
  const int first = sign > 0 ? x.band : y.band, second = sign > 0 ? y.band : x.band;
  return (first == 1 && second == 3) || (first == 2 && second == 1) || (first == 3 && second == 2);
}

} // namespace detail

enum class XuForm { AlphaPowerP, NAlphaBarPower, NP, Unclassified };

inline const char* to_string(XuForm f) {
  switch (f) {
    case XuForm::AlphaPowerP: return "alpha^k P";
    case XuForm::NAlphaBarPower: return "N alphabar^k";
    case XuForm::NP: return "N P";
    case XuForm::Unclassified: return "unclassified";
  }
  return "?";
}

struct ShortestFormResult {
  std::size_t length = 0;
  BandWord representative;
  XuForm form = XuForm::Unclassified;
  int k = 0;
  std::size_t states_explored = 0;
  bool complete = true;
};

struct BandSearchBudget {
  std::size_t max_states = 200000;
};

namespace detail {

/// Try to read a rotation of bw as one of the three forms.
inline std::optional<std::pair<XuForm, int>> classify_rotation(const BandWord& bw) {
  const std::size_t n = bw.size();
  std::size_t neg = 0;
  for (const auto& l : bw) neg += l.sign < 0;
  if (neg == 0) {
    std::size_t i = 0;
    int k = 0;
    while (i + 1 < n && is_alpha(bw[i], bw[i + 1], 1)) {
      i += 2;
      ++k;
    }
    // Prefer the largest alpha prefix that leaves a monotone tail.
    for (int kk = k; kk >= 0; --kk)
      if (cyclic_nondecreasing(bw, static_cast<std::size_t>(2 * kk), n)) return std::pair{XuForm::AlphaPowerP, kk};
    return std::nullopt;
  }
  if (neg == n) {
    int k = 0;
    std::size_t j = n;
    while (j >= 2 && is_alpha(bw[j - 2], bw[j - 1], -1)) {
      j -= 2;
      ++k;
    }
    for (int kk = k; kk >= 0; --kk)
      if (cyclic_nondecreasing(bw, 0, n - static_cast<std::size_t>(2 * kk))) return std::pair{XuForm::NAlphaBarPower, kk};
    return std::nullopt;
  }
  std::size_t split = 0;
  while (split < n && bw[split].sign < 0) ++split;
  for (std::size_t i = split; i < n; ++i)
    if (bw[i].sign < 0) return std::nullopt;
  if (cyclic_nondecreasing(bw, 0, split) && cyclic_nondecreasing(bw, split, n)) return std::pair{XuForm::NP, 0};
  return std::nullopt;
}

} // namespace detail

/// Breadth-first search over the cyclic words reachable by the length-2
/// band relations and free cancellation; returns a shortest word found and
/// its form. The representative is the least classified word of minimal
/// length, compared over rotations and subscript rotations.
inline ShortestFormResult shortest_band_form(const BandWord& input, const BandSearchBudget& budget = {}) {
  for (const auto& l : input)
    if (l.band < 1 || l.band > 3 || (l.sign != 1 && l.sign != -1)) throw InputError("bad band letter");
  const auto& classes = detail::band_pair_classes();
  std::map<std::array<BandLetter, 2>, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& p : classes[c]) class_of[p] = c;

  ShortestFormResult res;
  std::unordered_map<std::string, bool> seen;
  std::queue<BandWord> queue;
  std::vector<BandWord> minimal;
  std::size_t best = input.size() + 1;

  auto visit = [&](BandWord w) {
    w = detail::min_rotation(w);
    if (!seen.emplace(detail::band_key(w), true).second) return;
    if (w.size() < best) {
      best = w.size();
      minimal.clear();
    }
    if (w.size() == best) minimal.push_back(w);
    queue.push(std::move(w));
  };
  visit(input);

  while (!queue.empty()) {
    if (seen.size() >= budget.max_states) {
      res.complete = false;
      break;
    }
    const BandWord w = std::move(queue.front());
    queue.pop();
    const std::size_t n = w.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      if (n == 2 && j == 0) continue;
      const std::array<BandLetter, 2> pair{w[i], w[j]};
      if (pair[0] == pair[1].inverse()) {
        BandWord rot;
        for (std::size_t k = 1; k + 1 < n; ++k) rot.push_back(w[(j + k) % n]);
        visit(std::move(rot));
        continue;
      }
      auto it = class_of.find(pair);
      if (it == class_of.end()) continue;
      for (const auto& alt : classes[it->second]) {
        if (alt == pair) continue;
        BandWord next = w;
        next[i] = alt[0];
        next[j] = alt[1];
        visit(std::move(next));
      }
    }
  }
  res.states_explored = seen.size();
  res.length = best;

  std::optional<std::tuple<int, std::string, BandWord, XuForm>> pick;
  for (const auto& m : minimal) {
    for (int s = 0; s < 3; ++s) {
      const BandWord sym = rotate_subscripts(m, s);
      for (std::size_t r = 0; r < std::max<std::size_t>(sym.size(), 1); ++r) {
        BandWord rot(sym.begin() + static_cast<std::ptrdiff_t>(r), sym.end());
        rot.insert(rot.end(), sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(r));
        auto cls = detail::classify_rotation(rot);
        if (!cls) continue;
        auto cand = std::tuple{-cls->second, detail::band_key(rot), rot, cls->first};
        if (!pick || std::tie(std::get<0>(cand), std::get<1>(cand)) < std::tie(std::get<0>(*pick), std::get<1>(*pick)))
          pick = std::move(cand);
      }
    }
  }
  if (pick) {
    res.representative = std::get<2>(*pick);
    res.form = std::get<3>(*pick);
    res.k = -std::get<0>(*pick);
  } else if (!minimal.empty()) {
    res.representative = *std::min_element(minimal.begin(), minimal.end());
  }
  return res;
}

// --- A/B/C/D families ------------------------------------------------------------

enum class Family { A, B, C, D };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw InputError("unknown family '" + s + "'");
}

struct FamilyMatch {
  Family family;
  std::vector<int> params;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
  }
  return 0;
}

inline bool family_constraints_hold(Family f, const std::vector<int>& p) {
  if (p.size() != family_arity(f)) return false;
  switch (f) {
    case Family::A: return p[0] >= 2 && p[0] % 2 == 0;
    case Family::B: return p[0] >= 3 && p[1] >= 3 && p[0] % 2 == 1 && p[1] % 2 == 1;
    case Family::C: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && (p[0] + p[2]) % 2 == 1 && p[1] % 2 == 0;
    case Family::D: return p[0] >= 2 && p[1] >= 2 && p[2] >= 1 && p[3] >= 1;
  }
  return false;
}

/// A_x = -3 -2 1^x, B_{x,y} = -3 -3 1^x 2^y, C_{x,y,z} = -2 1^x 2^y 3^z,
/// D_{x,y,z,w} = -2 1^x 2^y 3^z 1^w.
inline BandWord family_word(Family f, const std::vector<int>& p) {
  if (!family_constraints_hold(f, p)) throw InputError(std::string("parameters violate the constraints of family ") + to_string(f));
  BandWord out;
  auto run = [&](int band, int count) {
    for (int i = 0; i < count; ++i) out.push_back({band, 1});
  };
  switch (f) {
    case Family::A:
      out = {{3, -1}, {2, -1}};
      run(1, p[0]);
      break;
    case Family::B:
      out = {{3, -1}, {3, -1}};
      run(1, p[0]);
      run(2, p[1]);
      break;
    case Family::C:
      out = {{2, -1}};
      run(1, p[0]);
      run(2, p[1]);
      run(3, p[2]);
      break;
    case Family::D:
      out = {{2, -1}};
      run(1, p[0]);
      run(2, p[1]);
      run(3, p[2]);
      run(1, p[3]);
      break;
  }
  return out;
}

inline std::optional<FamilyMatch> classify_ABCD(const BandWord& bw) {
  const std::size_t n = bw.size();
  for (std::size_t r = 0; r < n; ++r) {
    BandWord w(bw.begin() + static_cast<std::ptrdiff_t>(r), bw.end());
    w.insert(w.end(), bw.begin(), bw.begin() + static_cast<std::ptrdiff_t>(r));
    // Split into the negative prefix and runs of positive letters.
    std::size_t i = 0;
    BandWord prefix;
    while (i < n && w[i].sign < 0) prefix.push_back(w[i++]);
    std::vector<std::pair<int, int>> runs;
    bool ok = true;
    for (; i < n; ++i) {
      if (w[i].sign < 0) {
        ok = false;
        break;
      }
      if (!runs.empty() && runs.back().first == w[i].band) ++runs.back().second;
      else runs.push_back({w[i].band, 1});
    }
    if (!ok) continue;
    auto bands_are = [&](std::initializer_list<int> want) {
      if (runs.size() != want.size()) return false;
      std::size_t k = 0;
      for (int b : want)
        if (runs[k++].first != b) return false;
      return true;
    };
    std::optional<FamilyMatch> m;
    if (prefix == BandWord{{3, -1}, {2, -1}} && bands_are({1})) m = FamilyMatch{Family::A, {runs[0].second}};
    else if (prefix == BandWord{{3, -1}, {3, -1}} && bands_are({1, 2}))
      m = FamilyMatch{Family::B, {runs[0].second, runs[1].second}};
    else if (prefix == BandWord{{2, -1}} && bands_are({1, 2, 3}))
      m = FamilyMatch{Family::C, {runs[0].second, runs[1].second, runs[2].second}};
    else if (prefix == BandWord{{2, -1}} && bands_are({1, 2, 3, 1}))
      m = FamilyMatch{Family::D, {runs[0].second, runs[1].second, runs[2].second, runs[3].second}};
    if (m && family_constraints_hold(m->family, m->params)) return m;
  }
  return std::nullopt;
}

} // namespace braidmfw
