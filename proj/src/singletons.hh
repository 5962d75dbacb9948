#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "word.hh"

namespace kbinom {

/// A sequence of positive integers s_1, s_2, ..., arbitrary precision.
using Seq = std::vector<mpz_class>;

/// Parse a comma-separated sequence of positive integers, e.g. "2,50,31752".
Seq parse_sequence(const std::string& text);

/// Inverse of parse_sequence.
std::string format_sequence(const Seq& s);

/// Per-term verdicts for the three growth conditions a singleton-family
/// sequence must satisfy at every index n:
///   D1: s_n / 2 is a perfect square (write t_n for its square root),
///   D2: s_n > (t_n + s_1 + ... + s_{n-1})^2,
///   D3: t_n > (s_1 + ... + s_{n-1}) * (s_1 + ... + s_{n-3}).
/// D2 and D3 are decided exactly even when D1 fails, by comparing squared
/// integer quantities instead of real square roots.
struct SeqCheck {
  bool d1 = false;
  bool d2 = false;
  bool d3 = false;

  bool all() const noexcept { return d1 && d2 && d3; }
};

std::vector<SeqCheck> validate_sequence(const Seq& s);

/// True when every term passes all three conditions.
bool sequence_ok(const Seq& s);

/// The pointwise-least sequence satisfying D1-D3, built greedily: each term
/// is the least s_n = 2 t^2 (t >= 1) satisfying D2 and D3 given the previous
/// terms.  The first three terms are 2, 50, 31752.
Seq minimal_sequence(std::size_t count);

/// The singleton-family word 1^p 2^{s_{n-1}} 3^{s_{n-2}} 1^{s_{n-3}} ... a^{s_1}
/// with a == n (mod 3): n runs whose letters cycle 1 -> 2 -> 3 -> 1 and whose
/// exponents walk the sequence downwards from s_{n-1}.  Requires p >= 1,
/// n >= 2 and at least n-1 sequence terms.
Rle rho(const mpz_class& p, unsigned n, const Seq& s);

/// True when no other word of the abelian class of w is k-binomially
/// equivalent to w.  Brute force over the abelian class; the budget bounds
/// the class size (0 picks the library default).
bool is_singleton(const Word& w, unsigned k, std::uint64_t budget);

/// Exhaustive check of the coefficient-domination property behind the
/// singleton family: for every word u != w in the abelian class of the
/// ternary word w, at least one of binom(u, 12) >= binom(w, 12),
/// binom(u, 23) >= binom(w, 23), binom(u, 31) >= binom(w, 31) must fail.
/// A counterexample, if any, dominates w in all three coefficients.
struct Prop54Report {
  bool holds = false;
  std::uint64_t words_checked = 0;  ///< abelian-class words other than w
  std::optional<Word> counterexample;
};

Prop54Report check_prop54(const Rle& w, std::uint64_t budget);

}  // namespace kbinom
