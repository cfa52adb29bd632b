#pragma once

// Knot table: CSV rows of (name, braid word, braid index, expected c,
// expected deficit). The five-row table ships compiled in.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"

namespace braidmfw {

inline constexpr std::string_view kKnotTableHeader = "name,braid_word,braid_index,expected_c,expected_deficit";

inline constexpr std::string_view kDefaultKnotTable =
    "name,braid_word,braid_index,expected_c,expected_deficit\n"
    "9_42,aaacBAAcB,4,1,1\n"
    "9_49,aabbcbAbbcB,4,7,1\n"
    "10_132,AbcaaaBBBcb,4,3,2\n"
    "10_150,aabbcbABccB,4,5,1\n"
    "10_156,aaacBAAcbAb,4,3,1\n";

struct KnotTableEntry {
  std::string name;
  std::string braid_word;
  int braid_index = 1;
  std::optional<int> expected_c;
  std::optional<boost::rational<long long>> expected_deficit;

  BraidWord word() const { return parse_any(braid_word, braid_index); }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(field);
      field.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  out.push_back(field);
  return out;
}

inline int parse_int_field(const std::string& s, const std::string& what, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
  }
}

inline boost::rational<long long> parse_rational_field(const std::string& s, std::size_t line) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_int_field(s, "expected_deficit", line);
  const int num = parse_int_field(s.substr(0, slash), "expected_deficit", line);
  const int den = parse_int_field(s.substr(slash + 1), "expected_deficit", line);
  if (den == 0) throw InputError("line " + std::to_string(line) + ": zero denominator");
  return {num, den};
}

} // namespace detail

inline std::vector<KnotTableEntry> parse_knot_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InputError("knot table is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (line != kKnotTableHeader) throw InputError("knot table header must be '" + std::string(kKnotTableHeader) + "'");
  std::vector<KnotTableEntry> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 5) throw InputError("line " + std::to_string(lineno) + ": expected 5 fields");
    KnotTableEntry e;
    e.name = f[0];
    if (e.name.empty()) throw InputError("line " + std::to_string(lineno) + ": empty name");
    e.braid_word = f[1];
    e.braid_index = detail::parse_int_field(f[2], "braid_index", lineno);
    if (e.braid_index < 1) throw InputError("line " + std::to_string(lineno) + ": braid_index must be positive");
    if (!f[3].empty()) e.expected_c = detail::parse_int_field(f[3], "expected_c", lineno);
    if (!f[4].empty()) e.expected_deficit = detail::parse_rational_field(f[4], lineno);
    BraidWord w(1);
    try {
      w = parse_any(e.braid_word);
    } catch (const InputError& err) {
      throw InputError("line " + std::to_string(lineno) + ": " + err.what());
    }
    if (w.strands() > e.braid_index)
      throw InputError("line " + std::to_string(lineno) + ": word uses more strands than braid_index");
    rows.push_back(std::move(e));
  }
  return rows;
}

inline std::vector<KnotTableEntry> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open knot table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_knot_table(ss.str());
}

inline std::vector<KnotTableEntry> default_knot_table() { return parse_knot_table(kDefaultKnotTable); }

inline std::string format_knot_table(const std::vector<KnotTableEntry>& rows) {
  std::ostringstream out;
  out << kKnotTableHeader << '\n';
  for (const auto& e : rows) {
    out << e.name << ',' << e.braid_word << ',' << e.braid_index << ',';
    if (e.expected_c) out << *e.expected_c;
    out << ',';
    if (e.expected_deficit) {
      out << e.expected_deficit->numerator();
      if (e.expected_deficit->denominator() != 1) out << '/' << e.expected_deficit->denominator();
    }
    out << '\n';
  }
  return out.str();
}

} // namespace braidmfw
