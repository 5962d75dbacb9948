#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "word.hh"

namespace kbinom {

/// Number of occurrences of v as a scattered (not necessarily contiguous)
/// subword of u.  Exact 64-bit arithmetic: any intermediate count that would
/// wrap raises an Overflow error instead of returning a truncated value.
/// binom(u, empty) = 1 for every u.
std::uint64_t binom(const Word& u, const Word& v);

/// All scattered-subword counts binom(w, v) for 1 <= |v| <= k, flattened in
/// the canonical order: patterns of length 1 first, then length 2, ..., and
/// lexicographic order inside each length block.  The vector has
/// m + m^2 + ... + m^k entries; two words are k-binomially equivalent
/// exactly when their vectors are equal.
std::vector<std::uint64_t> signature(const Word& w, unsigned k);

/// Index of pattern v inside the canonical signature layout for alphabet m.
std::size_t signature_index(const Word& v, unsigned m);

/// k-binomial equivalence test with the cheap rejections first: words of
/// different length never compare equal, then Parikh vectors, then the full
/// signatures level by level.
bool equivalent(const Word& u, const Word& v, unsigned k);

/// The three defining entries of the unitriangular Parikh matrix of a
/// binary word: (|w|_1, |w|_2, binom(w, 12)).  Only defined for m = 2.
struct ParikhMatrix {
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;
  std::uint64_t c12 = 0;

  friend bool operator==(const ParikhMatrix&, const ParikhMatrix&) = default;
};

ParikhMatrix parikh_matrix(const Word& w);

/// Scattered-subword count binom(u, v) where u is run-length encoded and
/// |v| <= 2, in arbitrary precision.  A single pass over the runs suffices:
/// a run a^q contributes C(q, 2) occurrences of aa internally and
/// q * (number of b's seen so far) occurrences of ba for each b != a.
mpz_class rle_binom(const Rle& u, const Word& v);

}  // namespace kbinom
