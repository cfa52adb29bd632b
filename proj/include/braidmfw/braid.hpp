#pragma once

// Braid words in Artin generators and the mechanics of Markov moves.
//
// Text notation: 'a' = sigma_1, 'b' = sigma_2, ..., 'y' = sigma_25; an
// uppercase letter is the inverse generator. Braids that need more than 25
// generators use the integer list form ("1 -2 3", sign = exponent).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidmfw/errors.hpp"

namespace braidmfw {

/// sigma_index^sign, index is 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const noexcept { return {index, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr int kMaxAlphabetGenerator = 25;

class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw InputError("strand count must be positive");
  }
  BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw InputError("strand count must be positive");
    for (const auto& l : letters_) check_letter(l);
  }

  int strands() const noexcept { return strands_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_.at(i); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord& a, const BraidWord& b) {
    if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

private:
  void check_letter(const Letter& l) const {
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
    if (l.index < 1 || l.index > strands_ - 1)
      throw InputError("generator index " + std::to_string(l.index) + " out of range for " +
                       std::to_string(strands_) + " strands");
  }

  int strands_ = 1;
  std::vector<Letter> letters_;
};

// --- text forms ---------------------------------------------------------------

/// Parse letter notation. Without `strands`, uses 1 + the largest generator index.
inline BraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  int max_index = 0;
  for (char ch : text) {
    const auto uch = static_cast<unsigned char>(ch);
    if (!std::isalpha(uch) || uch > 127) throw InputError(std::string("invalid braid letter '") + ch + "'");
    const bool inverse = std::isupper(uch) != 0;
    const int index = std::tolower(uch) - 'a' + 1;
    if (index > kMaxAlphabetGenerator) throw InputError("letter 'z' is not a generator (alphabet is a..y)");
    letters.push_back({index, inverse ? -1 : 1});
    max_index = std::max(max_index, index);
  }
  const int n = strands.value_or(max_index + 1);
  if (max_index >= n)
    throw InputError("generator index " + std::to_string(max_index) + " needs more than " + std::to_string(n) +
                     " strands");
  return BraidWord(n, std::move(letters));
}

/// Parse the integer list form, e.g. "1 -2 3" or "1,-2,3".
inline BraidWord parse_int_word(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::vector<Letter> letters;
  int max_index = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("invalid integer generator '" + token + "'");
    }
    if (used != token.size() || v == 0) throw InputError("invalid integer generator '" + token + "'");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(v));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') flush();
    else token.push_back(ch);
  }
  flush();
  const int n = strands.value_or(max_index + 1);
  if (max_index >= n) throw InputError("generator index exceeds strand count");
  return BraidWord(n, std::move(letters));
}

/// Letter notation if every generator fits the alphabet, otherwise throws.
inline std::string to_letters(const BraidWord& w) {
  std::string out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (l.index > kMaxAlphabetGenerator) throw InputError("word needs the integer list form");
    const char c = static_cast<char>('a' + l.index - 1);
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return out;
}

inline std::string to_int_list(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    os << l.index * l.sign;
    first = false;
  }
  return os.str();
}

/// Letter notation when possible, integer list otherwise.
inline std::string to_text(const BraidWord& w) {
  return w.strands() - 1 <= kMaxAlphabetGenerator ? to_letters(w) : to_int_list(w);
}

/// Accepts either notation; digits select the integer form.
inline BraidWord parse_any(std::string_view text, std::optional<int> strands = std::nullopt) {
  const bool numeric = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  return numeric ? parse_int_word(text, strands) : parse_word(text, strands);
}

// --- counting -------------------------------------------------------------------

inline int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

inline std::size_t occurrences(const BraidWord& w, int index) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(), [&](const Letter& l) { return l.index == index; }));
}

/// The permutation of strand positions induced by reading the word from
/// bottom to top: perm[p] is where the strand starting at p ends (0-based).
inline std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0); // at[position] = starting strand
  for (const auto& l : w.letters()) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[at[pos]] = static_cast<int>(pos);
  return perm;
}

/// Cycles of the closure permutation, each listed from its smallest position.
inline std::vector<std::vector<int>> closure_cycles(const BraidWord& w) {
  const auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<int>> cycles;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int p = static_cast<int>(s); !seen[p]; p = perm[p]) {
      seen[p] = true;
      cyc.push_back(p);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline int component_count(const BraidWord& w) { return static_cast<int>(closure_cycles(w).size()); }

/// For each strand position, the index of the closure component through it.
inline std::vector<int> component_of_position(const BraidWord& w) {
  std::vector<int> comp(static_cast<std::size_t>(w.strands()));
  const auto cycles = closure_cycles(w);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int p : cycles[c]) comp[p] = static_cast<int>(c);
  return comp;
}

/// Pairwise linking numbers of the closure components (half the signed
/// count of crossings between two components).
inline std::vector<std::vector<int>> linking_matrix(const BraidWord& w) {
  const auto comp = component_of_position(w);
  const auto ncomp = static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end()) + 1);
  std::vector<std::vector<int>> twice(ncomp, std::vector<int>(ncomp, 0));
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : w.letters()) {
    const int a = comp[at[l.index - 1]], b = comp[at[l.index]];
    if (a != b) {
      twice[a][b] += l.sign;
      twice[b][a] += l.sign;
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  for (auto& row : twice)
    for (auto& x : row) x /= 2;
  return twice;
}

// --- word operations ------------------------------------------------------------

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<Letter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(ls));
}

inline BraidWord with_strands(const BraidWord& w, int strands) { return BraidWord(strands, w.letters()); }

/// Shift every generator index up by `offset`, on `strands` strands.
inline BraidWord shift_indices(const BraidWord& w, int offset, int strands) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (const auto& l : w.letters()) ls.push_back({l.index + offset, l.sign});
  return BraidWord(strands, std::move(ls));
}

inline BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (const auto& l : w.letters()) ls.push_back(l.inverse());
  return BraidWord(w.strands(), std::move(ls));
}

inline BraidWord reverse(const BraidWord& w) {
  std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(ls));
}

inline BraidWord inverse(const BraidWord& w) { return mirror(reverse(w)); }

/// Rotate left by k letters (the first k letters move to the end).
inline BraidWord cyclic_shift(const BraidWord& w, long k) {
  if (w.empty()) return w;
  const auto n = static_cast<long>(w.length());
  k = ((k % n) + n) % n;
  std::vector<Letter> ls = w.letters();
  std::rotate(ls.begin(), ls.begin() + k, ls.end());
  return BraidWord(w.strands(), std::move(ls));
}

/// Cancel adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back() == l.inverse()) out.pop_back();
    else out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

/// Free reduction that also cancels across the ends of the cyclic word.
inline BraidWord cyclic_reduce(const BraidWord& w) {
  std::vector<Letter> ls = free_reduce(w).letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return BraidWord(w.strands(), std::vector<Letter>(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi)));
}

/// sigma_i^-eps * w * sigma_i^eps.
inline BraidWord conjugate(const BraidWord& w, int index, int sign) {
  if (index < 1 || index > w.strands() - 1) throw InputError("conjugating generator out of range");
  if (sign != 1 && sign != -1) throw InputError("conjugating sign must be +1 or -1");
  std::vector<Letter> ls;
  ls.reserve(w.length() + 2);
  ls.push_back({index, -sign});
  ls.insert(ls.end(), w.letters().begin(), w.letters().end());
  ls.push_back({index, sign});
  return BraidWord(w.strands(), std::move(ls));
}

/// Lexicographically least rotation of the cyclically reduced word.
inline BraidWord cyclic_canonical(const BraidWord& w) {
  BraidWord r = cyclic_reduce(w);
  const auto& ls = r.letters();
  const std::size_t n = ls.size();
  if (n < 2) return r;
  // Booth-style least rotation via doubling; words are short.
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = ls[(s + k) % n];
      const Letter& b = ls[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = s;
      break;
    }
  }
  return cyclic_shift(r, static_cast<long>(best));
}

/// Compact string key of the cyclic canonical form (used for memo tables).
inline std::string canonical_key(const BraidWord& w) {
  const BraidWord c = cyclic_canonical(w);
  return std::to_string(c.strands()) + ":" + to_text(c);
}

// --- Markov moves -----------------------------------------------------------------

enum class MoveKind { Conjugate, CyclicShift, FreeReduce, Commute, BraidRelation, Flip, Stabilize, Destabilize };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Conjugate: return "conjugate";
    case MoveKind::CyclicShift: return "cyclic-shift";
    case MoveKind::FreeReduce: return "free-reduce";
    case MoveKind::Commute: return "commute";
    case MoveKind::BraidRelation: return "braid-relation";
    case MoveKind::Flip: return "flip";
    case MoveKind::Stabilize: return "stabilize";
    case MoveKind::Destabilize: return "destabilize";
  }
  return "?";
}

struct MoveRecord {
  MoveKind kind = MoveKind::FreeReduce;
  int index = 0; // generator for Conjugate, shift for CyclicShift, position otherwise
  int sign = 0;  // for Conjugate / Stabilize / Destabilize
  BraidWord result;
};

/// Expected (delta exponent sum, delta strands) of a move.
inline std::pair<int, int> move_effect(MoveKind kind, int sign) {
  switch (kind) {
    case MoveKind::Stabilize: return {sign, 1};
    case MoveKind::Destabilize: return {-sign, -1};
    default: return {0, 0};
  }
}

/// Append sigma_n^eps and add a strand.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw InputError("stabilization sign must be +1 or -1");
  std::vector<Letter> ls = w.letters();
  ls.push_back({w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(ls));
}

/// Remove the last strand when some cyclic shift of the free reduction uses
/// the top generator exactly once, with sign `sign`.
inline std::optional<BraidWord> destabilize_syntactic(const BraidWord& w, int sign) {
  if (w.strands() < 2) return std::nullopt;
  const BraidWord r = free_reduce(w);
  const int top = w.strands() - 1;
  std::optional<std::size_t> pos;
  for (std::size_t i = 0; i < r.length(); ++i) {
    if (r[i].index != top) continue;
    if (pos) return std::nullopt;
    pos = i;
  }
  if (!pos || r[*pos].sign != sign) return std::nullopt;
  const BraidWord rotated = cyclic_shift(r, static_cast<long>(*pos) + 1); // top letter now last
  std::vector<Letter> ls(rotated.letters().begin(), rotated.letters().end() - 1);
  return BraidWord(w.strands() - 1, std::move(ls));
}

// --- skein triples -----------------------------------------------------------------

struct SkeinTriple {
  BraidWord plus, minus, zero;
};

/// The three words that differ from w only at letter `position`.
inline SkeinTriple skein_triple(const BraidWord& w, std::size_t position) {
  if (position >= w.length()) throw InputError("skein position out of range");
  std::vector<Letter> p = w.letters(), m = w.letters(), z = w.letters();
  p[position].sign = 1;
  m[position].sign = -1;
  z.erase(z.begin() + static_cast<long>(position));
  return {BraidWord(w.strands(), std::move(p)), BraidWord(w.strands(), std::move(m)),
          BraidWord(w.strands(), std::move(z))};
}

} // namespace braidmfw
