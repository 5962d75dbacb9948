#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "error.hh"

namespace kbinom {

/// Letters are 1-based indices into the alphabet {1, ..., m}.
using Letter = unsigned;

/// A finite word over {1, ..., m}.  The alphabet size is carried alongside
/// the letters because operations such as signatures and class enumeration
/// depend on m, not just on the letters that happen to occur.
struct Word {
  unsigned m = 0;               ///< alphabet size, >= 1
  std::vector<Letter> letters;  ///< each in [1, m]

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.m == b.m && a.letters == b.letters;
  }
  /// Length-then-lexicographic order, the canonical listing order used by
  /// every enumeration in the library.
  friend bool operator<(const Word& a, const Word& b) noexcept {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

/// Hash over the letters only; alphabet size is a type-level concern and
/// words of different m never share a container in practice.
struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w.letters) {
      h ^= a;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// One maximal run a^q of a run-length encoded word.  Exponents are
/// arbitrary-precision because the singleton-family constructions produce
/// runs far beyond 64 bits.
struct Run {
  Letter letter = 0;
  mpz_class exponent;  ///< >= 1
};

/// A word in run-length form: adjacent runs always carry distinct letters.
struct Rle {
  unsigned m = 0;
  std::vector<Run> runs;

  /// Number of maximal blocks (the block count of the expanded word).
  std::size_t block_count() const noexcept { return runs.size(); }
  /// Total length as a big integer.
  mpz_class length() const;

  friend bool operator==(const Rle& a, const Rle& b) noexcept {
    if (a.m != b.m || a.runs.size() != b.runs.size()) return false;
    for (std::size_t i = 0; i < a.runs.size(); ++i)
      if (a.runs[i].letter != b.runs[i].letter || a.runs[i].exponent != b.runs[i].exponent) return false;
    return true;
  }
};

/// A letter of the free group alphabet {1, ..., m} u {1', ..., m'}:
/// `inverse` marks the primed (inverse) letters.
struct SignedLetter {
  Letter base = 0;
  bool inverse = false;

  friend bool operator==(const SignedLetter& a, const SignedLetter& b) noexcept {
    return a.base == b.base && a.inverse == b.inverse;
  }
};

/// A word over letters and their formal inverses.
struct SignedWord {
  unsigned m = 0;
  std::vector<SignedLetter> letters;

  std::size_t size() const noexcept { return letters.size(); }
};

// ---------------------------------------------------------------------------
// Parsing and formatting
// ---------------------------------------------------------------------------

/// Parse a word over {1, ..., m}.  For m <= 9 the text is a string of digits
/// ("1223312"); for m > 9 it is a comma-separated list of letters
/// ("1,12,3").  The empty string denotes the empty word.  On failure the
/// error message names the offending position.
Word parse_word(const std::string& text, unsigned m);

/// Inverse of parse_word: digits for m <= 9, comma-separated otherwise.
std::string format_word(const Word& w);

/// Parse a signed word, '.'-separated with a prime marking an inverse
/// letter, e.g. "1.2.3'.2.3.1'".  The empty string denotes the empty word.
SignedWord parse_signed(const std::string& text, unsigned m);

/// Inverse of parse_signed.
std::string format_signed(const SignedWord& w);

/// Parse a run-length encoded word, space-separated "letter^exponent" runs,
/// e.g. "1^1 2^50 3^2".  A bare letter abbreviates exponent 1.  Adjacent
/// runs must carry distinct letters and exponents must be positive.
Rle parse_rle(const std::string& text, unsigned m);

/// Inverse of parse_rle; always writes explicit exponents.
std::string format_rle(const Rle& r);

// ---------------------------------------------------------------------------
// Basic word operations
// ---------------------------------------------------------------------------

/// Parikh vector: occurrence count of each letter 1..m, as m entries.
std::vector<std::uint64_t> parikh(const Word& w);

/// The maximal-run decomposition of a word, e.g. 112333122132 has the eight
/// blocks 11.2.333.1.22.1.3.2.  Errors on the empty word, whose block
/// decomposition is not defined.
Rle letter_factorization(const Word& w);

/// Number of maximal blocks of w (the size of its letter factorization).
std::uint64_t block_count(const Word& w);

/// Expand a run-length word into a dense one.  Refuses with a budget error
/// when the total length exceeds `budget` (0 picks the library default).
Word expand(const Rle& r, std::uint64_t budget);

/// Apply the letter rotation 1 -> 3, 2 -> 1, 3 -> 2 to a ternary word.
Word apply_morphism_sigma(const Word& w);

/// Same rotation on a run-length word (run structure is preserved).
Rle apply_morphism_sigma(const Rle& r);

/// The lexicographically least word of the abelian class of w, i.e.
/// 1^{|w|_1} 2^{|w|_2} ... m^{|w|_m}.
Word sorted_representative(const Word& w);

/// Build the sorted word with the given Parikh vector over {1, ..., m}.
Word word_from_parikh(const std::vector<std::uint64_t>& counts);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Default cap on the number of words any single enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// Resolve a user-supplied budget: 0 selects the library default.
inline std::uint64_t resolve_budget(std::uint64_t budget) {
  return budget == 0 ? kDefaultBudget : budget;
}

/// m^n if it fits in 64 bits, otherwise Overflow.
std::uint64_t checked_pow(unsigned m, unsigned n);

/// Number of words in the abelian class with Parikh vector `counts`
/// (a multinomial coefficient), as a big integer.
mpz_class abelian_class_size(const std::vector<std::uint64_t>& counts);

/// Visit all words of length n over {1, ..., m} in lexicographic order.
/// The callback receives each word by const reference.
void for_each_word(unsigned m, unsigned n, const std::function<void(const Word&)>& fn);

/// Visit the abelian class of `start` in lexicographic order; `start` is
/// sorted internally first.  The callback may return false to stop early.
void for_each_abelian(const Word& start, const std::function<bool(const Word&)>& fn);

}  // namespace kbinom
