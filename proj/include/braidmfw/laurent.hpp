#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.
// Laurent<1> is a polynomial in t, Laurent<2> a polynomial in (v, z).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidmfw/errors.hpp"

namespace braidmfw {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
template <std::size_t N> struct VarNames;
template <> struct VarNames<1> {
  static constexpr std::array<char, 1> names{'t'};
};
template <> struct VarNames<2> {
  static constexpr std::array<char, 2> names{'v', 'z'};
};
} // namespace detail

template <std::size_t N> class Laurent {
public:
  using Exponent = std::array<int, N>;
  using TermMap = std::map<Exponent, BigInt>;

  Laurent() = default;
  Laurent(long long c) { // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponent{}, BigInt(c));
  }
  explicit Laurent(BigInt c) {
    if (c != 0) terms_.emplace(Exponent{}, std::move(c));
  }

  static Laurent monomial(BigInt c, const Exponent& e) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }
  /// The single variable `var` raised to `power`, coefficient 1.
  static Laurent variable(std::size_t var, int power = 1) {
    Exponent e{};
    e[var] = power;
    return monomial(BigInt(1), e);
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  BigInt coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent scaled(const BigInt& s) const {
    if (s == 0) return {};
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  /// Multiply by the monomial with exponent `by`.
  Laurent shifted(const Exponent& by) const {
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exponent n;
      for (std::size_t k = 0; k < N; ++k) n[k] = e[k] + by[k];
      r.terms_.emplace_hint(r.terms_.end(), n, c);
    }
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent r(1);
    Laurent base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  /// (min, max) exponent of variable `var`. Throws on the zero polynomial.
  std::pair<int, int> degree_range(std::size_t var) const {
    if (is_zero()) throw InputError("degree of the zero polynomial");
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[var]);
      hi = std::max(hi, e[var]);
    }
    return {lo, hi};
  }

  /// Substitute var -> sign * var^-1 (used for mirror images).
  Laurent inverted(std::size_t var, int sign = 1) const {
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exponent n = e;
      n[var] = -e[var];
      r.add_term(n, (sign < 0 && (e[var] % 2 != 0)) ? BigInt(-c) : c);
    }
    return r;
  }

  // Deterministic text form: terms in lexicographic exponent order,
  // each written c*x^a[*y^b].
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        os << c;
      } else if (c < 0) {
        os << " - " << BigInt(-c);
      } else {
        os << " + " << c;
      }
      first = false;
      for (std::size_t k = 0; k < N; ++k) os << '*' << detail::VarNames<N>::names[k] << '^' << e[k];
    }
    return os.str();
  }

  /// Parse the text form. Variables may be omitted (exponent 0) or written
  /// without '^' (exponent 1); the coefficient may be omitted (1).
  static Laurent parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

private:
  TermMap terms_;
};

using LaurentPoly1 = Laurent<1>;
using LaurentPoly2 = Laurent<2>;

template <std::size_t N> Laurent<N> Laurent<N>::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](std::string& out) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    out.assign(text.substr(start, i - start));
    if (out.empty() || out == "-" || out == "+") throw InputError("expected integer in polynomial text");
  };
  auto fail = [&](const char* what) {
    throw InputError(std::string("polynomial parse error: ") + what + " at offset " + std::to_string(i));
  };

  Laurent result;
  skip_ws();
  if (text.substr(i) == "0") return result;
  int sign = 1;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    if (!first) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++i;
      skip_ws();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip_ws();
    }
    first = false;

    BigInt coeff(1);
    bool have_factor = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string digits;
      read_int(digits);
      coeff = BigInt(digits);
      have_factor = true;
    }
    Exponent e{};
    while (true) {
      skip_ws();
      if (have_factor) {
        if (i >= text.size() || text[i] != '*') break;
        ++i;
        skip_ws();
      }
      if (i >= text.size()) fail("dangling '*'");
      std::size_t var = N;
      for (std::size_t k = 0; k < N; ++k)
        if (text[i] == detail::VarNames<N>::names[k]) var = k;
      if (var == N) {
        if (!have_factor) fail("expected coefficient or variable");
        fail("unknown variable");
      }
      ++i;
      skip_ws();
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string digits;
        read_int(digits);
        power = std::stoi(digits);
      }
      e[var] += power;
      have_factor = true;
    }
    result.add_term(e, sign < 0 ? BigInt(-coeff) : coeff);
  }
  return result;
}

// --- (v, z) helpers ---------------------------------------------------------

inline LaurentPoly2 v_pow(int k) { return LaurentPoly2::variable(0, k); }
inline LaurentPoly2 z_pow(int k) { return LaurentPoly2::variable(1, k); }

/// (d_minus, d_plus): minimal and maximal v-degree. Throws on zero.
inline std::pair<int, int> v_degrees(const LaurentPoly2& p) { return p.degree_range(0); }

/// HOMFLYPT of the mirror link: P(v, z) -> P(-v^-1, z).
inline LaurentPoly2 mirror_homfly(const LaurentPoly2& p) { return p.inverted(0, -1); }

// --- t helpers ----------------------------------------------------------------

inline LaurentPoly1 t_pow(int k) { return LaurentPoly1::variable(0, k); }

/// Coefficients of p from its lowest t-degree upward (dense).
inline std::vector<BigInt> dense_coefficients(const LaurentPoly1& p) {
  if (p.is_zero()) return {};
  auto [lo, hi] = p.degree_range(0);
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e[0] - lo)] = c;
  return out;
}

/// Exact division in Z[t, t^-1]. Throws InputError when q does not divide p.
inline LaurentPoly1 divide_exact(const LaurentPoly1& p, const LaurentPoly1& q) {
  if (q.is_zero()) throw InputError("division by the zero polynomial");
  if (p.is_zero()) return {};
  auto [qlo, qhi] = q.degree_range(0);
  const BigInt lead = q.coefficient({qhi});
  LaurentPoly1 rem = p, quot;
  while (!rem.is_zero()) {
    auto [rlo, rhi] = rem.degree_range(0);
    if (rhi - rlo < qhi - qlo) throw InputError("polynomial division is not exact");
    const BigInt rc = rem.coefficient({rhi});
    if (rc % lead != 0) throw InputError("polynomial division is not exact");
    auto m = LaurentPoly1::monomial(rc / lead, {rhi - qhi});
    quot += m;
    rem -= m * q;
  }
  return quot;
}

/// Normalize an Alexander polynomial up to +-t^k so the lowest term is +1.
/// Throws InputError on zero or when the lowest coefficient is not +-1.
inline LaurentPoly1 normalize_alexander(const LaurentPoly1& p) {
  if (p.is_zero()) throw InputError("cannot normalize the zero polynomial");
  auto [lo, hi] = p.degree_range(0);
  const BigInt low = p.coefficient({lo});
  if (low != 1 && low != -1) throw InputError("lowest Alexander coefficient is not +-1: " + low.str());
  return p.shifted({-lo}).scaled(low);
}

/// Normalize up to a unit +-t^k without requiring a unit lowest coefficient:
/// shift to lowest degree 0 and make the lowest coefficient positive.
inline LaurentPoly1 normalize_up_to_unit(const LaurentPoly1& p) {
  if (p.is_zero()) return p;
  auto [lo, hi] = p.degree_range(0);
  const BigInt low = p.coefficient({lo});
  return p.shifted({-lo}).scaled(low < 0 ? -1 : 1);
}

} // namespace braidmfw
