#pragma once

// Reference HOMFLYPT engine: skein recursion on braid words.
//
// The closure is traversed component by component (base point at the
// bottom of the lowest unvisited strand). A crossing first met on its
// under-strand is "bad"; the skein relation
//   P_+ = v^2 P_- + v z P_0,    P_- = v^-2 P_+ - v^-1 z P_0
// switches it (same word, one fewer bad crossing) or deletes it (shorter
// word). A word without bad crossings closes to a descending diagram, the
// unlink, with P = delta^(components - 1), delta = (v^-1 - v)/z.
//
// Before that, every node is simplified by moves that cannot loop:
// free/cyclic reduction, splitting at an unused generator, and Markov
// destabilization of a top or bottom generator used once.

#include <functional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidmfw/braid.hpp"
#include "braidmfw/laurent.hpp"

namespace braidmfw {

/// (v^-1 - v) z^-1, the value of the 2-component unlink.
inline LaurentPoly2 unlink_delta() { return (v_pow(-1) - v_pow(1)) * z_pow(-1); }

class SkeinEngine {
public:
  using Memo = std::unordered_map<std::string, LaurentPoly2>;

  LaurentPoly2 homfly(const BraidWord& w) {
    return eval(w);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

private:
  LaurentPoly2 eval(const BraidWord& input) {
    BraidWord w = cyclic_reduce(input);
    const int n = w.strands();
    if (n == 1) return LaurentPoly2(1);

    // Split at an unused generator: the closure is a split union.
    std::vector<int> uses(static_cast<std::size_t>(n), 0);
    for (const auto& l : w.letters()) ++uses[l.index];
    for (int i = 1; i < n; ++i) {
      if (uses[i] != 0) continue;
      std::vector<Letter> lower, upper;
      for (const auto& l : w.letters()) {
        if (l.index < i) lower.push_back(l);
        else upper.push_back({l.index - i, l.sign});
      }
      return unlink_delta() * eval(BraidWord(i, std::move(lower))) * eval(BraidWord(n - i, std::move(upper)));
    }
    // Markov destabilization of a generator used once.
    if (uses[n - 1] == 1) {
      if (auto d = destabilize_syntactic(w, w.letters()[index_of(w, n - 1)].sign)) return eval(*d);
    }
    if (uses[1] == 1) {
      const BraidWord f = flip_word(w);
      if (auto d = destabilize_syntactic(f, f.letters()[index_of(f, n - 1)].sign)) return eval(*d);
    }

    const std::string key = canonical_key(w);
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    LaurentPoly2 result;
    const auto bad = first_bad_crossing(w);
    if (!bad) {
      result = unlink_delta().pow(static_cast<unsigned>(component_count(w) - 1));
    } else {
      const auto t = skein_triple(w, *bad);
      if (w[*bad].sign > 0) {
        result = v_pow(2) * eval(t.minus) + v_pow(1) * z_pow(1) * eval(t.zero);
      } else {
        result = v_pow(-2) * eval(t.plus) - v_pow(-1) * z_pow(1) * eval(t.zero);
      }
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(key, result);
    return result;
  }

  static std::size_t index_of(const BraidWord& w, int gen) {
    for (std::size_t i = 0; i < w.length(); ++i)
      if (w[i].index == gen) return i;
    return 0;
  }

  static BraidWord flip_word(const BraidWord& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (const auto& l : w.letters()) out.push_back({w.strands() - l.index, l.sign});
    return BraidWord(w.strands(), std::move(out));
  }

  /// Position of the first crossing met on its under-strand, if any.
  /// For sigma_i (positive) the strand moving from position i to i+1 is over.
  static std::optional<std::size_t> first_bad_crossing(const BraidWord& w) {
    const int n = w.strands();
    const std::size_t len = w.length();
    std::vector<bool> crossing_seen(len, false), base_seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
      if (base_seen[start]) continue;
      int p = start;
      do {
        base_seen[p] = true;
        for (std::size_t k = 0; k < len; ++k) {
          const Letter& l = w.letters()[k];
          const int lo = l.index - 1; // 0-based left position of the crossing
          if (p != lo && p != lo + 1) continue;
          const bool moving_right = (p == lo);
          const bool over = (l.sign > 0) == moving_right;
          if (!crossing_seen[k]) {
            crossing_seen[k] = true;
            if (!over) return k;
          }
          p = moving_right ? lo + 1 : lo;
        }
      } while (p != start);
    }
    return std::nullopt;
  }

  mutable std::shared_mutex mutex_;
  Memo memo_;
};

} // namespace braidmfw
