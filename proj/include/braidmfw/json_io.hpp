#pragma once

// JSON forms of the library's reports (nlohmann::json, vendored).

#include <string>

#include "json.hpp"

#include "braidmfw/band3.hpp"
#include "braidmfw/braid.hpp"
#include "braidmfw/homflypt.hpp"
#include "braidmfw/knot_table.hpp"
#include "braidmfw/mfw.hpp"

namespace braidmfw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "braidmfw.report/1";

inline Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"text", to_string(r)}};
}

inline Rational rational_from_json(const Json& j) {
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline Json to_json(const MFWReport& r) {
  return Json{{"c", r.c},
              {"b", r.b},
              {"d_minus", r.d_minus},
              {"d_plus", r.d_plus},
              {"lower_bound_b", r.lower_bound_b},
              {"D_plus_rep", r.D_plus_rep},
              {"D_minus_rep", r.D_minus_rep},
              {"deficit_at_b", rational_json(r.deficit_at_b)},
              {"beta", r.beta},
              {"gamma", r.gamma},
              {"homfly", r.homfly.to_string()}};
}

inline MFWReport mfw_report_from_json(const Json& j) {
  MFWReport r;
  r.c = j.at("c").get<int>();
  r.b = j.at("b").get<int>();
  r.d_minus = j.at("d_minus").get<int>();
  r.d_plus = j.at("d_plus").get<int>();
  r.lower_bound_b = j.at("lower_bound_b").get<int>();
  r.D_plus_rep = j.at("D_plus_rep").get<int>();
  r.D_minus_rep = j.at("D_minus_rep").get<int>();
  r.deficit_at_b = rational_from_json(j.at("deficit_at_b"));
  r.beta = j.at("beta").get<int>();
  r.gamma = j.at("gamma").get<int>();
  r.homfly = LaurentPoly2::parse(j.at("homfly").get<std::string>());
  return r;
}

inline bool operator==(const MFWReport& a, const MFWReport& b) {
  return a.c == b.c && a.b == b.b && a.d_minus == b.d_minus && a.d_plus == b.d_plus &&
         a.lower_bound_b == b.lower_bound_b && a.D_plus_rep == b.D_plus_rep && a.D_minus_rep == b.D_minus_rep &&
         a.deficit_at_b == b.deficit_at_b && a.beta == b.beta && a.gamma == b.gamma && a.homfly == b.homfly;
}

inline Json to_json(const MoveRecord& m) {
  return Json{{"kind", to_string(m.kind)}, {"index", m.index}, {"sign", m.sign}, {"result", to_text(m.result)},
              {"strands", m.result.strands()}};
}

inline Json to_json(const DestabilizationResult& r) {
  Json witness = Json::array();
  for (const auto& m : r.witness) witness.push_back(to_json(m));
  return Json{{"count", r.count},
              {"other_sign", r.other_sign},
              {"final_word", to_text(r.final_word)},
              {"final_strands", r.final_word.strands()},
              {"states_explored", r.states_explored},
              {"budget_exhausted", r.budget_exhausted},
              {"witness", witness}};
}

inline Json to_json(const ThmACertificate& c) {
  Json res = Json::array();
  for (const auto& r : c.resolutions)
    res.push_back(Json{{"role", std::string(1, r.role)},
                       {"word", to_text(r.word)},
                       {"positive", to_json(r.positive)},
                       {"negative", to_json(r.negative)}});
  return Json{{"word", to_text(c.word)},
              {"strands", c.word.strands()},
              {"position", c.position},
              {"role", std::string(1, c.role)},
              {"p", c.p},
              {"n", c.n},
              {"D_plus_bound", c.D_plus_bound},
              {"D_minus_bound", c.D_minus_bound},
              {"budget_exhausted", c.budget_exhausted},
              {"resolutions", res}};
}

inline Json to_json(const QuadrantScan& s) {
  Json pts = Json::array();
  for (const auto& p : s.points)
    pts.push_back(Json{{"b", p.b}, {"c", p.c}, {"x", p.x}, {"y", p.y}, {"in_quadrant", p.in_quadrant},
                       {"in_mfw_region", p.in_mfw_region}});
  return Json{{"b_min", s.b_min}, {"c_min", s.c_min},   {"d_minus", s.d_minus},
              {"d_plus", s.d_plus}, {"points", pts}, {"violations", s.violations}};
}

inline Json to_json(const ShortestFormResult& r) {
  return Json{{"length", r.length},
              {"representative", to_text(r.representative)},
              {"form", to_string(r.form)},
              {"k", r.k},
              {"states_explored", r.states_explored},
              {"complete", r.complete}};
}

inline Json to_json(const std::optional<FamilyMatch>& m) {
  if (!m) return nullptr;
  return Json{{"family", to_string(m->family)}, {"params", m->params}};
}

inline Json to_json(const KnotTableEntry& e) {
  Json j{{"name", e.name}, {"braid_word", e.braid_word}, {"braid_index", e.braid_index}};
  j["expected_c"] = e.expected_c ? Json(*e.expected_c) : Json(nullptr);
  j["expected_deficit"] = e.expected_deficit ? rational_json(*e.expected_deficit) : Json(nullptr);
  return j;
}

} // namespace braidmfw
