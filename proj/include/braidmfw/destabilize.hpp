#pragma once

// Bounded breadth-first search for destabilizations.
//
// States are braid words kept in cyclic canonical form; the search applies
// conjugation by a single generator, far commutation, the braid relation,
// and the half-twist flip, and at every state tries a syntactic
// destabilization of either sign. Only destabilizations of the requested
// sign are counted: a destabilization of the other sign changes c + b
// (resp. c - b) by zero, so it never spoils the count. The result is a
// lower bound for the true number of available destabilizations.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidmfw/braid.hpp"

namespace braidmfw {

struct SearchBudget {
  int max_depth = 6;            // non-destabilizing moves since the last destabilization
  std::size_t max_states = 100000;
};

struct DestabilizationResult {
  int count = 0;                   // destabilizations of the requested sign
  int other_sign = 0;              // destabilizations of the opposite sign on the same path
  std::vector<MoveRecord> witness; // replays from the input word to `final_word`
  BraidWord final_word;
  std::size_t states_explored = 0;
  bool budget_exhausted = false;
};

namespace detail {

// Length-3 braid relations on indices (i, j, i) with |i - j| = 1:
// signs (s1, s2, s3) on (i, j, i) rewrite to (t1, t2, t3) on (j, i, j).
struct Rewrite3 {
  int from[3];
  int to[3];
};
inline constexpr Rewrite3 kBraidRelations[] = {
    {{1, 1, 1}, {1, 1, 1}},     {{-1, -1, -1}, {-1, -1, -1}}, {{1, 1, -1}, {-1, 1, 1}},
    {{-1, 1, 1}, {1, 1, -1}},   {{1, -1, -1}, {-1, -1, 1}},   {{-1, -1, 1}, {1, -1, -1}},
};

} // namespace detail

/// Swap letters at p and p+1 when their generators are at least two apart.
inline std::optional<BraidWord> commute_at(const BraidWord& w, std::size_t p) {
  if (p + 1 >= w.length()) return std::nullopt;
  const auto& ls = w.letters();
  if (std::abs(ls[p].index - ls[p + 1].index) < 2) return std::nullopt;
  std::vector<Letter> out = ls;
  std::swap(out[p], out[p + 1]);
  return BraidWord(w.strands(), std::move(out));
}

/// Apply a length-3 braid relation to letters p..p+2, if one matches.
inline std::optional<BraidWord> braid_relation_at(const BraidWord& w, std::size_t p) {
  if (p + 2 >= w.length()) return std::nullopt;
  const auto& ls = w.letters();
  const int i = ls[p].index, j = ls[p + 1].index;
  if (ls[p + 2].index != i || std::abs(i - j) != 1) return std::nullopt;
  for (const auto& r : detail::kBraidRelations) {
    if (ls[p].sign != r.from[0] || ls[p + 1].sign != r.from[1] || ls[p + 2].sign != r.from[2]) continue;
    std::vector<Letter> out = ls;
    out[p] = {j, r.to[0]};
    out[p + 1] = {i, r.to[1]};
    out[p + 2] = {j, r.to[2]};
    return BraidWord(w.strands(), std::move(out));
  }
  return std::nullopt;
}

/// Conjugation by the half twist: sigma_i -> sigma_{n-i}.
inline BraidWord flip(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) out.push_back({w.strands() - l.index, l.sign});
  return BraidWord(w.strands(), std::move(out));
}

/// Re-apply one recorded move to `w`. Throws InternalError if the move
/// does not apply or does not reproduce the recorded result.
inline BraidWord replay_move(const BraidWord& w, const MoveRecord& m) {
  std::optional<BraidWord> r;
  switch (m.kind) {
    case MoveKind::Conjugate: r = conjugate(w, m.index, m.sign); break;
    case MoveKind::CyclicShift: r = cyclic_shift(w, m.index); break;
    case MoveKind::FreeReduce: r = free_reduce(w); break;
    case MoveKind::Commute: r = commute_at(w, static_cast<std::size_t>(m.index)); break;
    case MoveKind::BraidRelation: r = braid_relation_at(w, static_cast<std::size_t>(m.index)); break;
    case MoveKind::Flip: r = flip(w); break;
    case MoveKind::Stabilize: r = stabilize(w, m.sign); break;
    case MoveKind::Destabilize: r = destabilize_syntactic(w, m.sign); break;
  }
  if (!r || !(*r == m.result)) throw InternalError(std::string("witness move does not replay: ") + to_string(m.kind));
  return *r;
}

/// Replay a witness from `start`; returns the final word.
inline BraidWord replay_witness(const BraidWord& start, const std::vector<MoveRecord>& witness) {
  BraidWord w = start;
  for (const auto& m : witness) w = replay_move(w, m);
  return w;
}

/// Bring w to cyclic canonical form, recording the moves used.
inline BraidWord canonicalize_recorded(const BraidWord& w, std::vector<MoveRecord>& moves) {
  BraidWord cur = w;
  auto push = [&](MoveKind k, int index, BraidWord next) {
    if (next == cur) return;
    cur = std::move(next);
    moves.push_back({k, index, 0, cur});
  };
  push(MoveKind::FreeReduce, 0, free_reduce(cur));
  while (cur.length() >= 2 && cur.letters().front() == cur.letters().back().inverse()) {
    push(MoveKind::CyclicShift, 1, cyclic_shift(cur, 1));
    push(MoveKind::FreeReduce, 0, free_reduce(cur));
  }
  const BraidWord target = cyclic_canonical(cur);
  for (std::size_t k = 0; k < cur.length(); ++k) {
    if (cyclic_shift(cur, static_cast<long>(k)) == target) {
      push(MoveKind::CyclicShift, static_cast<int>(k), cyclic_shift(cur, static_cast<long>(k)));
      break;
    }
  }
  return cur;
}

/// Greatest number of `sign`-destabilizations found within the budget.
inline DestabilizationResult destabilization_search(const BraidWord& start, int sign, const SearchBudget& budget = {}) {
  if (sign != 1 && sign != -1) throw InputError("destabilization sign must be +1 or -1");

  struct Node {
    BraidWord word;
    int parent;
    std::vector<MoveRecord> moves; // from parent's word to this word
    int count, other, depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> best_count; // canonical key -> count reached
  std::deque<int> queue;
  DestabilizationResult result;

  auto add = [&](BraidWord word, int parent, std::vector<MoveRecord> moves, int count, int other, int depth) {
    word = canonicalize_recorded(word, moves);
    const std::string key = canonical_key(word);
    auto it = best_count.find(key);
    if (it != best_count.end() && it->second >= count) return;
    if (nodes.size() >= budget.max_states) {
      result.budget_exhausted = true;
      return;
    }
    best_count[key] = count;
    nodes.push_back({std::move(word), parent, std::move(moves), count, other, depth});
    queue.push_back(static_cast<int>(nodes.size()) - 1);
  };

  add(start, -1, {}, 0, 0, 0);
  int best = 0;
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Node node = nodes[id];
    if (node.count > nodes[best].count) best = id;
    if (node.word.strands() == 1) continue;

    for (int s : {sign, -sign}) {
      if (auto d = destabilize_syntactic(node.word, s)) {
        std::vector<MoveRecord> mv{{MoveKind::Destabilize, 0, s, *d}};
        add(*d, id, std::move(mv), node.count + (s == sign), node.other + (s != sign), 0);
      }
    }
    if (node.depth >= budget.max_depth) continue;
    const int next_depth = node.depth + 1;
    for (int i = 1; i < node.word.strands(); ++i)
      for (int s : {1, -1}) {
        BraidWord c = conjugate(node.word, i, s);
        add(c, id, {{MoveKind::Conjugate, i, s, c}}, node.count, node.other, next_depth);
      }
    for (std::size_t p = 0; p + 1 < node.word.length(); ++p) {
      if (auto c = commute_at(node.word, p))
        add(*c, id, {{MoveKind::Commute, static_cast<int>(p), 0, *c}}, node.count, node.other, next_depth);
      if (auto r = braid_relation_at(node.word, p))
        add(*r, id, {{MoveKind::BraidRelation, static_cast<int>(p), 0, *r}}, node.count, node.other, next_depth);
    }
    BraidWord f = flip(node.word);
    add(f, id, {{MoveKind::Flip, 0, 0, f}}, node.count, node.other, next_depth);
  }

  result.states_explored = nodes.size();
  result.count = nodes[best].count;
  result.other_sign = nodes[best].other;
  result.final_word = nodes[best].word;
  std::vector<const Node*> chain;
  for (int id = best; id >= 0; id = nodes[id].parent) chain.push_back(&nodes[id]);
  // The root's own canonicalization moves come first.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    result.witness.insert(result.witness.end(), (*it)->moves.begin(), (*it)->moves.end());
  return result;
}

} // namespace braidmfw
