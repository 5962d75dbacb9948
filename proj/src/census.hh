#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "word.hh"

namespace kbinom {

/// Number of k-binomial equivalence classes among the m^n words of length n
/// over {1, ..., m}: a streaming lexicographic enumeration that groups words
/// by their full signature.  Refuses with a budget error naming the m^n
/// words required when that exceeds `budget` (0 picks the library default).
std::uint64_t count_classes(unsigned m, unsigned n, unsigned k, std::uint64_t budget);

/// The length-n slice of the lexicographically-least language: the first
/// word of each k-binomial class in lexicographic enumeration order.
/// Returned in lexicographic order.
std::vector<Word> ll_language(unsigned m, unsigned n, unsigned k, std::uint64_t budget);

/// The length-n slice of the singleton language: words whose k-binomial
/// class contains no other word.  Returned in lexicographic order.
std::vector<Word> sing_language(unsigned m, unsigned n, unsigned k, std::uint64_t budget);

/// Number of k-binomial classes inside the abelian class with Parikh vector
/// x (one entry per letter).  The budget bounds the abelian class size,
/// which is a multinomial coefficient named in the refusal message.
std::uint64_t f_parikh(const std::vector<std::uint64_t>& x, unsigned k, std::uint64_t budget);

/// The set of values binom(u, ab) over all words u with i occurrences of a
/// and j of b, sorted increasing.  Exchanging adjacent letters walks the
/// coefficient down one unit at a time, so the set is {0, 1, ..., ij}.
std::vector<std::uint64_t> coefficient_range(Letter a, Letter b, unsigned i, unsigned j,
                                             std::uint64_t budget);

/// Per-fiber growth bound report for k = 2.  For the Parikh vector x over m
/// letters, f = f(x) is compared against
///   lower        = prod_{a<b} (floor(x_a/(m-1)) * floor(x_b/(m-1)) + 1),
///   upper        = prod_{a<b} (x_a * x_b + 1)      (each pair coefficient
///                  takes at most x_a x_b + 1 values), and
///   strict_upper  = prod_{a<b}  x_a * x_b           (the tighter product
///                  without the +1, which fails already at x = (2,2)).
struct GrowthBounds {
  std::uint64_t f = 0;
  mpz_class lower;
  mpz_class upper;
  mpz_class strict_upper;
  bool lower_ok = false;        ///< lower <= f
  bool upper_ok = false;        ///< f <= upper
  bool strict_upper_ok = false;  ///< f <= strict_upper
};

GrowthBounds check_growth_bounds(const std::vector<std::uint64_t>& x, std::uint64_t budget);

/// (n^3 + 5n + 6) / 6: the number of 2-binomial classes of binary words of
/// length n, which also counts the maximal number of cake pieces produced by
/// n planar cuts.  Exact 64-bit; errors on overflow.
std::uint64_t cake_count(std::uint64_t n);

}  // namespace kbinom
