#pragma once

// HOMFLYPT polynomial of braid closures, normalized by
//   v^-1 P(L+) - v P(L-) = z P(L0),   P(unknot) = 1.
//
// Two engines sit behind HomflyCalculator: the skein-recursion reference
// engine and the Hecke-trace performance engine. Results are memoized by
// cyclic canonical word, and every result is checked against the
// Morton-Franks-Williams inequality c - b + 1 <= d- <= d+ <= c + b - 1.

#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "braidmfw/braid.hpp"
#include "braidmfw/errors.hpp"
#include "braidmfw/hecke.hpp"
#include "braidmfw/laurent.hpp"
#include "braidmfw/skein.hpp"

namespace braidmfw {

enum class Engine { Auto, Reference, Hecke };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Reference: return "reference";
    case Engine::Hecke: return "hecke";
  }
  return "?";
}

inline Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::Auto;
  if (s == "reference") return Engine::Reference;
  if (s == "hecke") return Engine::Hecke;
  throw InputError("unknown engine '" + s + "' (expected auto, reference or hecke)");
}

struct HomflyConfig {
  int max_strands = 8;
  std::size_t max_letters = 120;
  Engine engine = Engine::Auto;
};

/// Bumped whenever either engine could produce a different polynomial.
inline constexpr const char* kHomflyEngineVersion = "homfly-v1";
inline constexpr const char* kCacheHeader = "# braidmfw homfly cache";

class HomflyCalculator {
public:
  explicit HomflyCalculator(HomflyConfig config = {}) : config_(config) {}

  const HomflyConfig& config() const noexcept { return config_; }
  void set_config(const HomflyConfig& config) { config_ = config; }

  LaurentPoly2 homfly(const BraidWord& w) { return homfly(w, config_.engine); }

  LaurentPoly2 homfly(const BraidWord& w, Engine engine) {
    if (w.strands() > config_.max_strands)
      throw LimitError("braid has " + std::to_string(w.strands()) + " strands; limit is " +
                       std::to_string(config_.max_strands));
    if (w.length() > config_.max_letters)
      throw LimitError("braid has " + std::to_string(w.length()) + " letters; limit is " +
                       std::to_string(config_.max_letters));

    if (engine == Engine::Auto) engine = (w.strands() <= 5 && w.length() <= 20) ? Engine::Reference : Engine::Hecke;

    const std::string key = canonical_key(w);
    {
      std::shared_lock lock(cache_mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) {
        check_mfw(w, it->second);
        return it->second;
      }
    }

    LaurentPoly2 p = engine == Engine::Reference ? reference_.homfly(w) : hecke_homfly(w);
    check_mfw(w, p);
    {
      std::unique_lock lock(cache_mutex_);
      auto [it, inserted] = cache_.emplace(key, p);
      if (!inserted && !(it->second == p)) throw InternalError("homfly cache holds a different value for " + key);
    }
    return p;
  }

  /// Compute with one engine, bypassing the cache (for cross-engine checks).
  LaurentPoly2 homfly_uncached(const BraidWord& w, Engine engine) {
    LaurentPoly2 p = engine == Engine::Reference ? reference_.homfly(w) : hecke_homfly(w);
    check_mfw(w, p);
    return p;
  }

  std::pair<int, int> homfly_degrees(const BraidWord& w) { return v_degrees(homfly(w)); }

  std::size_t mfw_checks() const noexcept { return mfw_checks_.load(); }
  std::size_t mfw_violations() const noexcept { return mfw_violations_.load(); }
  std::size_t cache_size() const {
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
  }

  /// Load a cache file; a missing, foreign or corrupt file is ignored.
  bool load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header) || header != std::string(kCacheHeader) + " " + kHomflyEngineVersion) return false;
    std::unordered_map<std::string, LaurentPoly2> loaded;
    std::string line;
    try {
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) return false;
        loaded.emplace(line.substr(0, tab), LaurentPoly2::parse(line.substr(tab + 1)));
      }
    } catch (const InputError&) {
      return false;
    }
    std::unique_lock lock(cache_mutex_);
    for (auto& [k, v] : loaded) cache_.insert_or_assign(k, std::move(v));
    return true;
  }

  void save_cache(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot write cache file " + path);
    out << kCacheHeader << ' ' << kHomflyEngineVersion << '\n';
    std::shared_lock lock(cache_mutex_);
    for (const auto& [k, v] : cache_) out << k << '\t' << v.to_string() << '\n';
  }

private:
  LaurentPoly2 hecke_homfly(const BraidWord& w) {
    std::shared_ptr<const HeckeTraceEngine<CheckedInt64>> fast;
    std::shared_ptr<const HeckeTraceEngine<BigInt>> big;
    {
      std::lock_guard lock(hecke_mutex_);
      if (!hecke_fast_ || hecke_fast_->max_strands() < w.strands()) {
        hecke_fast_ = std::make_shared<HeckeTraceEngine<CheckedInt64>>(std::max(w.strands(), 2));
        hecke_big_ = std::make_shared<HeckeTraceEngine<BigInt>>(std::max(w.strands(), 2));
      }
      fast = hecke_fast_;
      big = hecke_big_;
    }
    try {
      return fast->homfly(w);
    } catch (const CoefficientOverflow&) {
      return big->homfly(w);
    }
  }

  void check_mfw(const BraidWord& w, const LaurentPoly2& p) {
    ++mfw_checks_;
    if (p.is_zero()) {
      ++mfw_violations_;
      throw InternalError("HOMFLYPT polynomial came out zero for " + to_text(w));
    }
    const auto [dm, dp] = v_degrees(p);
    const int c = exponent_sum(w), b = w.strands();
    if (!(c - b + 1 <= dm && dp <= c + b - 1)) {
      ++mfw_violations_;
      throw InternalError("MFW inequality violated for " + to_text(w) + ": P = " + p.to_string());
    }
  }

  HomflyConfig config_;
  SkeinEngine reference_;
  std::mutex hecke_mutex_;
  std::shared_ptr<const HeckeTraceEngine<CheckedInt64>> hecke_fast_;
  std::shared_ptr<const HeckeTraceEngine<BigInt>> hecke_big_;
  mutable std::shared_mutex cache_mutex_;
  std::unordered_map<std::string, LaurentPoly2> cache_;
  std::atomic<std::size_t> mfw_checks_{0}, mfw_violations_{0};
};

/// Process-wide calculator used by the free functions below.
inline HomflyCalculator& default_calculator() {
  static HomflyCalculator calc;
  return calc;
}

inline LaurentPoly2 homfly(const BraidWord& w) { return default_calculator().homfly(w); }

/// (d_minus, d_plus) of the HOMFLYPT polynomial.
inline std::pair<int, int> homfly_degrees(const BraidWord& w) { return default_calculator().homfly_degrees(w); }

} // namespace braidmfw
