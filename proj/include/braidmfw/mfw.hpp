#pragma once

// MFW bounds and deficits for braid representatives, the skein-crossing
// certificate for non-sharpness, and the stabilization quadrant explorer.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "braidmfw/braid.hpp"
#include "braidmfw/destabilize.hpp"
#include "braidmfw/errors.hpp"
#include "braidmfw/homflypt.hpp"

namespace braidmfw {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct MFWReport {
  int c = 0;
  int b = 1;
  int d_minus = 0, d_plus = 0;
  int lower_bound_b = 1;
  int D_plus_rep = 0;
  int D_minus_rep = 0;
  Rational deficit_at_b{0};
  int beta = 0;
  int gamma = 0;
  LaurentPoly2 homfly;
};

inline MFWReport mfw_report_from(const BraidWord& w, const LaurentPoly2& p, std::optional<int> claimed_b = std::nullopt) {
  if (claimed_b && *claimed_b < 1) throw InputError("claimed braid index must be positive");
  MFWReport r;
  r.homfly = p;
  r.c = exponent_sum(w);
  const int strands = w.strands();
  std::tie(r.d_minus, r.d_plus) = v_degrees(p);
  if ((r.d_plus - r.d_minus) % 2 != 0) throw InternalError("HOMFLYPT v-span is odd for " + to_text(w));
  r.lower_bound_b = (r.d_plus - r.d_minus) / 2 + 1;
  r.D_plus_rep = (r.c + strands - 1) - r.d_plus;
  r.D_minus_rep = r.d_minus - (r.c - strands + 1);
  if (r.D_plus_rep < 0 || r.D_minus_rep < 0) throw InternalError("MFW inequality violated for " + to_text(w));
  r.b = claimed_b.value_or(strands);
  r.deficit_at_b = Rational(r.b) - Rational(r.d_plus - r.d_minus, 2) - 1;
  r.beta = r.c - strands;
  r.gamma = r.c + strands;
  return r;
}

inline MFWReport mfw_report(const BraidWord& w, std::optional<int> claimed_b = std::nullopt,
                            HomflyCalculator& calc = default_calculator()) {
  return mfw_report_from(w, calc.homfly(w), claimed_b);
}

/// When the inequality is sharp, the braid index and the exponent sum of a
/// minimal representative are forced: b = (d+ - d-)/2 + 1, c = (d+ + d-)/2.
inline std::optional<std::pair<int, int>> sharp_consequences(const MFWReport& r) {
  if (r.deficit_at_b != Rational(0)) return std::nullopt;
  return std::pair{(r.d_plus - r.d_minus) / 2 + 1, (r.d_plus + r.d_minus) / 2};
}

// --- non-sharpness certificate ---------------------------------------------------

struct ResolutionSearch {
  char role = '0'; // '+', '-' or '0'
  BraidWord word;
  DestabilizationResult positive, negative;
};

struct ThmACertificate {
  BraidWord word;
  std::size_t position = 0;
  char role = '+';
  int p = 0;
  int n = 0;
  int D_plus_bound = 0;
  int D_minus_bound = 0;
  bool budget_exhausted = false;
  std::vector<ResolutionSearch> resolutions; // the two words other than `word`
};

inline ThmACertificate thmA_check(const BraidWord& w, std::size_t position, const SearchBudget& budget = {}) {
  const auto t = skein_triple(w, position);
  ThmACertificate cert;
  cert.word = w;
  cert.position = position;
  cert.role = w[position].sign > 0 ? '+' : '-';
  const std::pair<char, const BraidWord*> others[2] = {
      cert.role == '+' ? std::pair{'-', &t.minus} : std::pair{'+', &t.plus}, {'0', &t.zero}};
  cert.p = cert.n = 1 << 20;
  for (const auto& [role, word] : others) {
    ResolutionSearch rs{role, *word, destabilization_search(*word, 1, budget), destabilization_search(*word, -1, budget)};
    cert.p = std::min(cert.p, rs.positive.count);
    cert.n = std::min(cert.n, rs.negative.count);
    cert.budget_exhausted = cert.budget_exhausted || rs.positive.budget_exhausted || rs.negative.budget_exhausted;
    cert.resolutions.push_back(std::move(rs));
  }
  cert.D_plus_bound = 2 * cert.p;
  cert.D_minus_bound = 2 * cert.n;
  return cert;
}

/// Replays every witness and checks that each ends in a word with the
/// claimed number of destabilizations accounted for.
inline bool verify_certificate(const ThmACertificate& cert) {
  for (const auto& rs : cert.resolutions) {
    for (const auto* res : {&rs.positive, &rs.negative}) {
      const int sign = res == &rs.positive ? 1 : -1;
      const BraidWord end = replay_witness(rs.word, res->witness);
      if (!(end == res->final_word)) return false;
      int counted = 0, other = 0;
      for (const auto& m : res->witness)
        if (m.kind == MoveKind::Destabilize) (m.sign == sign ? counted : other)++;
      if (counted != res->count || other != res->other_sign) return false;
      if (end.strands() != rs.word.strands() - counted - other) return false;
    }
  }
  return true;
}

/// Searches every crossing of w and returns the certificate with the
/// largest p + n (first position on ties).
inline ThmACertificate thmA_best(const BraidWord& w, const SearchBudget& budget = {}) {
  if (w.length() == 0) throw InputError("thmA needs a nonempty word");
  std::optional<ThmACertificate> best;
  for (std::size_t i = 0; i < w.length(); ++i) {
    auto c = thmA_check(w, i, budget);
    if (!best || c.p + c.n > best->p + best->n) best = std::move(c);
  }
  return *best;
}

// --- cables and the quadrant explorer ----------------------------------------------

/// p (c2 - c1) / 2 for exponent sums c1 < c2 of two minimal representatives.
inline Rational deficit_cable_bound(long long c1, long long c2, long long p) {
  if (p < 1) throw InputError("p must be positive");
  if (!(c1 < c2)) throw InputError("deficit_cable_bound needs c1 < c2");
  if ((c2 - c1) % 2 != 0) throw InputError("c2 - c1 must be even");
  return Rational(p * (c2 - c1), 2);
}

struct QuadrantPoint {
  int b = 0, c = 0;
  int x = 0, y = 0; // positive and negative stabilizations
  bool in_quadrant = false;
  bool in_mfw_region = false;
  friend auto operator<=>(const QuadrantPoint&, const QuadrantPoint&) = default;
};

struct QuadrantScan {
  int b_min = 0, c_min = 0;
  int d_minus = 0, d_plus = 0;
  std::vector<QuadrantPoint> points;
  std::size_t violations = 0;

  std::string to_csv() const {
    std::ostringstream out;
    out << "b,c,x,y,in_quadrant,in_mfw_region\n";
    for (const auto& p : points)
      out << p.b << ',' << p.c << ',' << p.x << ',' << p.y << ',' << (p.in_quadrant ? 1 : 0) << ','
          << (p.in_mfw_region ? 1 : 0) << '\n';
    return out.str();
  }
};

/// Stabilizes w_min in every sign sequence of length <= depth and records
/// the (b, c) points reached.
inline QuadrantScan quadrant_scan(const BraidWord& w_min, int c_min, int depth,
                                  HomflyCalculator& calc = default_calculator()) {
  if (depth < 0) throw InputError("depth must be non-negative");
  QuadrantScan scan;
  scan.b_min = w_min.strands();
  scan.c_min = c_min;
  std::tie(scan.d_minus, scan.d_plus) = calc.homfly_degrees(w_min);
  std::set<QuadrantPoint> seen;
  std::vector<std::pair<BraidWord, std::pair<int, int>>> level{{w_min, {0, 0}}};
  for (int d = 0; d <= depth; ++d) {
    std::vector<std::pair<BraidWord, std::pair<int, int>>> next;
    for (const auto& [word, xy] : level) {
      QuadrantPoint p;
      p.b = word.strands();
      p.c = exponent_sum(word);
      p.x = xy.first;
      p.y = xy.second;
      p.in_quadrant = p.b == scan.b_min + p.x + p.y && p.c == scan.c_min + p.x - p.y;
      p.in_mfw_region = -p.b + (scan.d_plus + 1) <= p.c && p.c <= p.b + (scan.d_minus - 1);
      seen.insert(p);
      if (d < depth) {
        next.push_back({stabilize(word, 1), {xy.first + 1, xy.second}});
        next.push_back({stabilize(word, -1), {xy.first, xy.second + 1}});
      }
    }
    level = std::move(next);
  }
  // Distinct (b, c) points; different sequences with equal counts coincide.
  std::set<std::pair<int, int>> bc;
  for (const auto& p : seen) {
    if (!bc.insert({p.b, p.c}).second) continue;
    scan.points.push_back(p);
    if (!p.in_quadrant || !p.in_mfw_region) ++scan.violations;
  }
  return scan;
}

} // namespace braidmfw
