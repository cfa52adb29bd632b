#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidmfw/braidmfw.hpp"
#include "braidmfw/json_io.hpp"
#include "braidmfw/suites.hpp"

namespace fs = std::filesystem;
using namespace braidmfw;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct GlobalOptions {
  bool json = false;
  std::string engine = "auto";
  int max_strands = 8;
  std::size_t max_letters = 120;
  std::string cache_dir;
  std::string data_dir;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<CheckResult> checks;
  std::ostringstream text;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

std::string cache_file(const GlobalOptions& g) { return (fs::path(g.cache_dir) / "homfly-cache.tsv").string(); }

Json invariants_json(const BraidWord& w, HomflyCalculator& calc) {
  const auto p = calc.homfly(w);
  const auto [dm, dp] = v_degrees(p);
  const int c = exponent_sum(w), b = w.strands();
  return Json{{"word", to_text(w)},
              {"strands", b},
              {"letters", w.length()},
              {"components", component_count(w)},
              {"homfly", p.to_string()},
              {"d_minus", dm},
              {"d_plus", dp},
              {"alexander", burau_alexander(w).to_string()},
              {"c", c},
              {"beta", c - b},
              {"gamma", c + b}};
}

void print_fields(std::ostream& out, const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      out << indent << it.key() << ":\n";
      print_fields(out, *it, indent + "  ");
    } else if (it->is_string()) {
      out << indent << it.key() << ": " << it->get<std::string>() << '\n';
    } else {
      out << indent << it.key() << ": " << it->dump() << '\n';
    }
  }
}

std::vector<KnotTableEntry> resolve_table(const GlobalOptions& g, const std::string& explicit_path, std::string& source) {
  if (!explicit_path.empty()) {
    source = explicit_path;
    return load_knot_table(explicit_path);
  }
  if (!g.data_dir.empty()) {
    const auto path = fs::path(g.data_dir) / "knot_table.csv";
    if (fs::exists(path)) {
      source = path.string();
      return load_knot_table(path.string());
    }
  }
  source = "built-in";
  return default_knot_table();
}

BraidWord read_word(const std::string& text, std::optional<int> strands) {
  if (strands && *strands < 1) throw InputError("--strands must be positive");
  return parse_any(text, strands);
}

void emit(const Report& r, const GlobalOptions& g, double seconds) {
  if (g.json) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back(Json{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail},
                            {"seconds", c.seconds}});
    Json out{{"schema", kReportSchema},
             {"command", r.command},
             {"inputs", r.inputs},
             {"results", r.results},
             {"engine", Json{{"homfly", kHomflyEngineVersion}, {"mode", g.engine}}},
             {"checks", checks},
             {"passed", r.passed()},
             {"timings", Json{{"total_seconds", seconds}}}};
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << r.text.str();
  if (!r.checks.empty()) {
    std::size_t ok = 0;
    for (const auto& c : r.checks) {
      ok += c.passed;
      std::cout << (c.passed ? "PASS " : "FAIL ") << '[' << c.suite << "] " << c.name << "  (" << c.detail << ", "
                << std::fixed << std::setprecision(2) << c.seconds << " s)\n";
    }
    std::cout << ok << '/' << r.checks.size() << " checks passed\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HOMFLYPT, Alexander and MFW braid-index tools for braid closures.\n"
               "Words use letters a..y (A..Y inverse) or signed integers such as \"1 -2 3\"."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kHomflyEngineVersion));

  GlobalOptions g;
  if (const char* s = std::getenv("BRAIDMFW_MAX_STRANDS")) g.max_strands = std::atoi(s);
  if (const char* s = std::getenv("BRAIDMFW_MAX_LETTERS")) g.max_letters = static_cast<std::size_t>(std::atoll(s));
  app.add_flag("--json", g.json, "Emit a JSON report instead of text");
  app.add_option("--engine", g.engine, "HOMFLYPT engine: auto, reference or hecke")
      ->check(CLI::IsMember({"auto", "reference", "hecke"}))
      ->capture_default_str();
  app.add_option("--max-strands", g.max_strands, "Refuse braids with more strands (env BRAIDMFW_MAX_STRANDS)")
      ->capture_default_str();
  app.add_option("--max-letters", g.max_letters, "Refuse braids with more letters (env BRAIDMFW_MAX_LETTERS)")
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Persist the HOMFLYPT cache here (env BRAIDMFW_CACHE_DIR; default off)")
      ->envname("BRAIDMFW_CACHE_DIR");
  app.add_option("--data-dir", g.data_dir, "Dataset directory holding knot_table.csv (env BRAIDMFW_DATA_DIR)")
      ->envname("BRAIDMFW_DATA_DIR");

  std::string word, word2, band, suite = "all", table_path, table_action;
  std::optional<int> strands, braid_index, position;
  int p = 2, q = 1, n = 2, depth = 6, states = 100000;
  bool with_invariants = false;
  std::vector<int> bm_params;

  auto* inv = app.add_subcommand("invariants", "HOMFLYPT, degrees, Alexander, components, beta and gamma");
  inv->add_option("word", word, "Braid word")->required();
  inv->add_option("--strands", strands, "Strand count (default: highest generator + 1)");

  auto* mfw = app.add_subcommand("mfw", "MFW bounds and deficit");
  mfw->add_option("word", word, "Braid word")->required();
  mfw->add_option("--strands", strands, "Strand count");
  mfw->add_option("--braid-index", braid_index, "Claimed braid index (default: strand count)");

  auto* thma = app.add_subcommand("thma", "Skein-crossing certificate for non-sharpness");
  thma->add_option("word", word, "Braid word")->required();
  thma->add_option("--strands", strands, "Strand count");
  thma->add_option("--position", position, "Crossing position (default: search all)");
  thma->add_option("--max-depth", depth, "Non-destabilizing moves allowed between destabilizations")->capture_default_str();
  thma->add_option("--max-states", states, "States explored per search")->capture_default_str();

  auto* cab = app.add_subcommand("cable", "(p, q)-cable of a knot");
  cab->add_option("word", word, "Braid word")->required();
  cab->add_option("--strands", strands, "Strand count");
  cab->add_option("-p", p, "Cable strands per component")->required();
  cab->add_option("-q", q, "Cable slope")->required();
  cab->add_flag("--invariants", with_invariants, "Also compute invariants of the result");

  auto* cs = app.add_subcommand("connect-sum", "Connected sum of two knots");
  cs->add_option("word1", word, "First braid word")->required();
  cs->add_option("word2", word2, "Second braid word")->required();
  cs->add_flag("--invariants", with_invariants, "Also compute invariants of the result");

  auto* ax = app.add_subcommand("axis-union", "n clasped copies of a braid");
  ax->add_option("word", word, "Braid word")->required();
  ax->add_option("--strands", strands, "Strand count");
  ax->add_option("-n", n, "Number of copies")->required();
  ax->add_flag("--invariants", with_invariants, "Also compute invariants of the result");

  auto* bm = app.add_subcommand("bm", "Four-parameter family word BM(x, y, z, w)");
  bm->add_option("params", bm_params, "x y z w (prefix negatives with --, e.g. bm -- -1 1 -2 -1)")
      ->expected(4)
      ->required();
  bm->add_flag("--invariants", with_invariants, "Also compute invariants of the result");

  auto* xu = app.add_subcommand("xu", "Shortest band form and family classification on 3 strands");
  xu->add_option("band_word", band, "Band word such as \"-2 1 1 2 2 3\"")->required();
  xu->add_option("--max-states", states, "BFS state budget")->capture_default_str();

  auto* vp = app.add_subcommand("verify-paper", "Run the verification suites");
  vp->add_option("--suite", suite, "five-knots, cables, alexander, bm-identities or all")
      ->check(CLI::IsMember({"five-knots", "cables", "alexander", "bm-identities", "all"}))
      ->capture_default_str();
  vp->add_option("--table", table_path, "Knot table CSV (default: data dir, then the built-in table)");

  auto* tab = app.add_subcommand("table", "Validate and store a knot table, or show the active one");
  tab->add_option("action", table_action, "ingest or show")->check(CLI::IsMember({"ingest", "show"}))->required();
  tab->add_option("path", table_path, "CSV path for ingest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    HomflyConfig cfg;
    cfg.engine = parse_engine(g.engine);
    cfg.max_strands = g.max_strands;
    cfg.max_letters = g.max_letters;
    HomflyCalculator calc(cfg);
    if (!g.cache_dir.empty()) calc.load_cache(cache_file(g));

    auto* sub = app.get_subcommands().front();
    r.command = sub->get_name();

    if (sub == inv) {
      const BraidWord w = read_word(word, strands);
      r.inputs = Json{{"word", word}};
      r.results = invariants_json(w, calc);
      print_fields(r.text, r.results);
    } else if (sub == mfw) {
      const BraidWord w = read_word(word, strands);
      r.inputs = Json{{"word", word}, {"braid_index", braid_index ? Json(*braid_index) : Json(nullptr)}};
      const auto rep = mfw_report(w, braid_index, calc);
      r.results = to_json(rep);
      if (auto sharp = sharp_consequences(rep))
        r.results["sharp"] = Json{{"braid_index", sharp->first}, {"exponent_sum", sharp->second}};
      print_fields(r.text, r.results);
    } else if (sub == thma) {
      const BraidWord w = read_word(word, strands);
      if (depth < 0 || states < 1) throw InputError("search budget must be positive");
      const SearchBudget budget{depth, static_cast<std::size_t>(states)};
      r.inputs = Json{{"word", word}, {"position", position ? Json(*position) : Json(nullptr)}};
      ThmACertificate cert;
      if (position) {
        if (*position < 0 || static_cast<std::size_t>(*position) >= w.length()) throw InputError("position out of range");
        cert = thmA_check(w, static_cast<std::size_t>(*position), budget);
      } else {
        cert = thmA_best(w, budget);
      }
      r.results = to_json(cert);
      r.results["verified"] = verify_certificate(cert);
      r.text << "word: " << to_text(cert.word) << "\nposition: " << cert.position << " (" << cert.role << ")\n"
             << "p: " << cert.p << "  n: " << cert.n << "\nD+ >= " << cert.D_plus_bound << "  D- >= " << cert.D_minus_bound
             << "\nwitnesses replay: " << (verify_certificate(cert) ? "yes" : "NO") << '\n';
      if (cert.budget_exhausted) r.text << "search budget exhausted; bounds are lower bounds only\n";
    } else if (sub == cab || sub == cs || sub == ax || sub == bm) {
      BraidWord out(1);
      if (sub == cab) {
        const BraidWord w = read_word(word, strands);
        out = cable(w, p, q);
        r.inputs = Json{{"word", word}, {"p", p}, {"q", q}};
        r.results["k"] = cable_spec(w, p, q).k;
      } else if (sub == cs) {
        out = connect_sum(parse_any(word), parse_any(word2));
        r.inputs = Json{{"word1", word}, {"word2", word2}};
      } else if (sub == ax) {
        out = axis_linked_union(read_word(word, strands), n);
        r.inputs = Json{{"word", word}, {"n", n}};
      } else {
        const BMParams bp{bm_params[0], bm_params[1], bm_params[2], bm_params[3]};
        out = bm_word(bp);
        r.inputs = Json{{"x", bp.x}, {"y", bp.y}, {"z", bp.z}, {"w", bp.w}};
      }
      r.results["word"] = to_text(out);
      r.results["strands"] = out.strands();
      r.results["letters"] = out.length();
      r.results["c"] = exponent_sum(out);
      r.results["components"] = component_count(out);
      if (with_invariants) r.results["invariants"] = invariants_json(out, calc);
      print_fields(r.text, r.results);
    } else if (sub == xu) {
      const BandWord bw = parse_band_word(band);
      r.inputs = Json{{"band_word", band}};
      const auto sf = shortest_band_form(bw, BandSearchBudget{static_cast<std::size_t>(std::max(states, 1))});
      r.results = Json{{"shortest", to_json(sf)}, {"family", to_json(classify_ABCD(sf.representative))}};
      print_fields(r.text, r.results);
    } else if (sub == vp) {
      std::string source;
      const auto table = resolve_table(g, table_path, source);
      r.inputs = Json{{"suite", suite}, {"table", source}};
      r.checks = run_suite(suite, calc, table);
      r.results["mfw_checks"] = calc.mfw_checks();
      r.results["mfw_violations"] = calc.mfw_violations();
      r.text << "suite: " << suite << "  table: " << source << '\n';
    } else if (sub == tab) {
      if (table_action == "ingest") {
        if (table_path.empty()) throw InputError("table ingest needs a CSV path");
        const auto rows = load_knot_table(table_path);
        const fs::path dir = g.data_dir.empty() ? fs::path("data") : fs::path(g.data_dir);
        fs::create_directories(dir);
        const auto dest = dir / "knot_table.csv";
        std::ofstream(dest, std::ios::trunc) << format_knot_table(rows);
        r.inputs = Json{{"path", table_path}};
        r.results = Json{{"rows", rows.size()}, {"stored", dest.string()}};
        r.text << "stored " << rows.size() << " rows in " << dest.string() << '\n';
      } else {
        std::string source;
        const auto rows = resolve_table(g, table_path, source);
        Json arr = Json::array();
        for (const auto& e : rows) arr.push_back(to_json(e));
        r.inputs = Json{{"table", source}};
        r.results = Json{{"rows", arr}};
        r.text << "# " << source << '\n' << format_knot_table(rows);
      }
    }

    if (!g.cache_dir.empty()) {
      fs::create_directories(g.cache_dir);
      calc.save_cache(cache_file(g));
    }
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitExpectation;
  }
  emit(r, g, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return r.passed() ? kExitPass : kExitExpectation;
}
