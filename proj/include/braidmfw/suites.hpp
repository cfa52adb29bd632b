#pragma once

// Verification suites shared by the command line tool and the acceptance
// binary. Each check yields one named pass/fail line.

#include <array>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "braidmfw/alexander.hpp"
#include "braidmfw/band3.hpp"
#include "braidmfw/constructions.hpp"
#include "braidmfw/homflypt.hpp"
#include "braidmfw/knot_table.hpp"
#include "braidmfw/mfw.hpp"

namespace braidmfw {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

template <class F> CheckResult timed_check(std::string suite, std::string name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r{std::move(suite), std::move(name), false, {}, 0.0};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace detail

/// Exponent sums and deficits of the table words at their braid index.
inline std::vector<CheckResult> suite_five_knots(HomflyCalculator& calc, const std::vector<KnotTableEntry>& table) {
  std::vector<CheckResult> out;
  for (const auto& e : table)
    out.push_back(detail::timed_check("five-knots", e.name, [&](std::string& d) {
      const auto rep = mfw_report(e.word(), e.braid_index, calc);
      d = "c=" + std::to_string(rep.c) + " deficit=" + to_string(rep.deficit_at_b) + " d=(" +
          std::to_string(rep.d_minus) + "," + std::to_string(rep.d_plus) + ")";
      bool ok = true;
      if (e.expected_c) ok = ok && rep.c == *e.expected_c;
      if (e.expected_deficit) ok = ok && rep.deficit_at_b == *e.expected_deficit;
      return ok;
    }));
  return out;
}

/// The (2, 2c+1)-cable of each table knot keeps deficit 1 at index 2b.
inline std::vector<CheckResult> suite_cables(HomflyCalculator& calc, const std::vector<KnotTableEntry>& table) {
  std::vector<CheckResult> out;
  for (const auto& e : table)
    out.push_back(detail::timed_check("cables", e.name + " (2,2c+1)", [&](std::string& d) {
      const BraidWord w = e.word();
      const int c = exponent_sum(w);
      const BraidWord k = cable(w, 2, 2 * c + 1);
      const auto rep = mfw_report(k, 2 * e.braid_index, calc);
      d = "strands=" + std::to_string(k.strands()) + " letters=" + std::to_string(k.length()) +
          " c=" + std::to_string(rep.c) + " deficit=" + to_string(rep.deficit_at_b);
      return rep.deficit_at_b == Rational(1);
    }));
  return out;
}

/// Seifert recurrence, leading terms and Burau agreement on the C family.
inline std::vector<CheckResult> suite_alexander() {
  std::vector<CheckResult> out;
  out.push_back(detail::timed_check("alexander", "recurrence 3<=x<=8, y,z in {2,3,4}", [](std::string& d) {
    int bad = 0, total = 0;
    for (int x = 3; x <= 8; ++x)
      for (int y = 2; y <= 4; ++y)
        for (int z = 2; z <= 4; ++z) {
          ++total;
          const auto dx = alexander_from_seifert(seifert_C(x, y, z));
          const auto d1 = alexander_from_seifert(seifert_C(x - 1, y, z));
          const auto d2 = alexander_from_seifert(seifert_C(x - 2, y, z));
          if (!(dx == (t_pow(1) - LaurentPoly1(1)) * d1 + t_pow(1) * d2)) ++bad;
        }
    d = std::to_string(total - bad) + "/" + std::to_string(total) + " exact";
    return bad == 0;
  }));
  out.push_back(detail::timed_check("alexander", "leading terms (1,-5) for x,y,z in {2,3}", [](std::string& d) {
    int bad = 0;
    for (int x = 2; x <= 3; ++x)
      for (int y = 2; y <= 3; ++y)
        for (int z = 2; z <= 3; ++z)
          if (leading_terms(alexander_from_seifert(seifert_C(x, y, z)), 2) != std::vector<BigInt>{1, -5}) ++bad;
    d = std::to_string(8 - bad) + "/8";
    return bad == 0;
  }));
  out.push_back(detail::timed_check("alexander", "Burau and Seifert agree on the grid", [](std::string& d) {
    int bad = 0, total = 0;
    for (int x = 1; x <= 8; ++x)
      for (int y = 2; y <= 4; ++y)
        for (int z = 2; z <= 4; ++z) {
          ++total;
          BandWord bw{{2, -1}};
          bw.insert(bw.end(), static_cast<std::size_t>(x), {1, 1});
          bw.insert(bw.end(), static_cast<std::size_t>(y), {2, 1});
          bw.insert(bw.end(), static_cast<std::size_t>(z), {3, 1});
          const auto seifert = normalize_up_to_unit(alexander_from_seifert(seifert_C(x, y, z)));
          if (!(burau_alexander(band_to_artin(bw)) == seifert)) ++bad;
        }
    d = std::to_string(total - bad) + "/" + std::to_string(total);
    return bad == 0;
  }));
  return out;
}

struct BMIdentity {
  const char* knot;
  BMParams params;
};

inline constexpr std::array<BMIdentity, 10> kBMIdentities{{
    {"9_42", {-1, 1, -2, -1}},
    {"9_42", {-1, -2, -2, 2}},
    {"9_49", {-1, 1, 1, 2}},
    {"10_132", {-1, -2, -2, -2}},
    {"10_150", {3, -2, -2, 2}},
    {"10_150", {-1, 2, -2, 2}},
    {"10_150", {-1, -2, 2, 2}},
    {"10_150", {-1, 1, 2, -1}},
    {"10_150", {3, 1, -2, -1}},
    {"10_156", {-1, 1, 1, -2}},
}};

/// Same knot type up to mirror image, judged by HOMFLYPT and Alexander.
inline bool same_invariants(HomflyCalculator& calc, const BraidWord& a, const BraidWord& b, std::string* how = nullptr) {
  if (component_count(a) != component_count(b)) return false;
  if (!(burau_alexander(a) == burau_alexander(b))) return false;
  const auto pa = calc.homfly(a), pb = calc.homfly(b);
  if (pa == pb) {
    if (how) *how = "equal";
    return true;
  }
  if (pa == mirror_homfly(pb)) {
    if (how) *how = "mirror";
    return true;
  }
  return false;
}

inline std::vector<CheckResult> suite_bm_identities(HomflyCalculator& calc, const std::vector<KnotTableEntry>& table) {
  std::vector<CheckResult> out;
  for (const auto& id : kBMIdentities) {
    const auto& p = id.params;
    const std::string name = std::string(id.knot) + " = BM(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
                             std::to_string(p.z) + "," + std::to_string(p.w) + ")";
    out.push_back(detail::timed_check("bm-identities", name, [&](std::string& d) {
      const KnotTableEntry* entry = nullptr;
      for (const auto& e : table)
        if (e.name == id.knot) entry = &e;
      if (!entry) {
        d = "knot missing from table";
        return false;
      }
      const BraidWord w = bm_word(p);
      std::string how;
      const bool ok = same_invariants(calc, w, entry->word(), &how);
      d = "word=" + to_text(w) + " components=" + std::to_string(component_count(w)) + (ok ? " match=" + how : " no match");
      return ok;
    }));
  }
  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, HomflyCalculator& calc,
                                          const std::vector<KnotTableEntry>& table) {
  if (name == "five-knots") return suite_five_knots(calc, table);
  if (name == "cables") return suite_cables(calc, table);
  if (name == "alexander") return suite_alexander();
  if (name == "bm-identities") return suite_bm_identities(calc, table);
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"five-knots", "cables", "alexander", "bm-identities"}) {
      auto part = run_suite(s, calc, table);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw InputError("unknown suite '" + name + "' (five-knots, cables, alexander, bm-identities, all)");
}

} // namespace braidmfw
