#pragma once

#include <random>
#include <vector>

#include "braidmfw/braid.hpp"

namespace braidmfw::testutil {

inline BraidWord random_word(std::mt19937& rng, int strands, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len), gen(1, strands - 1), coin(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back({gen(rng), coin(rng) ? 1 : -1});
  return BraidWord(strands, std::move(ls));
}

/// Random knot word: resample until the closure has one component.
inline BraidWord random_knot(std::mt19937& rng, int strands, int min_len, int max_len) {
  for (;;) {
    BraidWord w = random_word(rng, strands, min_len, max_len);
    if (component_count(w) == 1) return w;
  }
}

} // namespace braidmfw::testutil
