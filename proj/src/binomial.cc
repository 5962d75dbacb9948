#include "binomial.hh"

#include <string>

namespace kbinom {

namespace {

[[noreturn]] void overflow(const Word& u, const Word& v) {
  throw_overflow("binom(" + format_word(u) + ", " + format_word(v) +
                 ") exceeds 64 bits; use the run-length arbitrary-precision path");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const Word& u, const Word& v) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow(u, v);
  return r;
}

}  // namespace

std::uint64_t binom(const Word& u, const Word& v) {
  // Classic dynamic program: process u left to right, maintaining the number
  // of ways to embed each prefix of v into the part of u read so far.
  // count[j] is the embedding count for the length-j prefix; count[0] = 1.
  std::vector<std::uint64_t> count(v.size() + 1, 0);
  count[0] = 1;
  for (Letter a : u.letters) {
    for (std::size_t j = v.size(); j >= 1; --j) {
      if (v.letters[j - 1] == a) count[j] = checked_add(count[j], count[j - 1], u, v);
    }
  }
  return count[v.size()];
}

std::vector<std::uint64_t> signature(const Word& w, unsigned k) {
  if (k == 0) throw_range("signature order k must be at least 1");
  const unsigned m = w.m;

  // Layout: one block per pattern length, lexicographic inside a block.
  std::vector<std::size_t> offset(k + 1, 0);
  std::size_t total = 0;
  for (unsigned L = 1; L <= k; ++L) {
    offset[L] = total;
    total += checked_pow(m, L);
  }
  std::vector<std::uint64_t> sig(total, 0);

  // Single left-to-right pass: when a letter x arrives, every already-counted
  // embedding of a length-(L-1) pattern p extends to an embedding of p.x, so
  // the length-L counts are updated from the length-(L-1) counts, longest
  // patterns first to keep the pass honest about position order.
  std::vector<std::size_t> block(k + 1, 0);
  for (unsigned L = 1; L <= k; ++L) block[L] = checked_pow(m, L);
  for (Letter x : w.letters) {
    for (unsigned L = k; L >= 2; --L) {
      const std::size_t src = offset[L - 1];
      for (std::size_t p = 0; p < block[L - 1]; ++p) {
        std::uint64_t c = sig[src + p];
        if (c == 0) continue;
        std::size_t dst = offset[L] + p * m + (x - 1);
        std::uint64_t r;
        if (__builtin_add_overflow(sig[dst], c, &r))
          throw_overflow("signature(" + format_word(w) + ", " + std::to_string(k) +
                         ") exceeds 64 bits in a pattern count");
        sig[dst] = r;
      }
    }
    sig[offset[1] + (x - 1)] += 1;
  }
  return sig;
}

std::size_t signature_index(const Word& v, unsigned m) {
  if (v.empty()) throw_range("the empty pattern has no signature slot");
  std::size_t offset = 0;
  for (std::size_t L = 1; L < v.size(); ++L) offset += checked_pow(m, static_cast<unsigned>(L));
  std::size_t index = 0;
  for (Letter a : v.letters) index = index * m + (a - 1);
  return offset + index;
}

bool equivalent(const Word& u, const Word& v, unsigned k) {
  if (k == 0) throw_range("equivalence order k must be at least 1");
  if (u.m != v.m) throw_range("cannot compare words over different alphabets");
  if (u.size() != v.size()) return false;
  if (parikh(u) != parikh(v)) return false;
  if (k == 1) return true;
  return signature(u, k) == signature(v, k);
}

ParikhMatrix parikh_matrix(const Word& w) {
  if (w.m != 2) throw_unsupported("the Parikh matrix is defined for binary words only");
  ParikhMatrix p;
  for (Letter a : w.letters) {
    if (a == 1) {
      p.ones++;
    } else {
      p.twos++;
      p.c12 += p.ones;  // every 1 seen so far pairs with this 2
    }
  }
  return p;
}

mpz_class rle_binom(const Rle& u, const Word& v) {
  if (v.size() > 2)
    throw_unsupported("run-length binomial coefficients support patterns of length at most 2, got \"" +
                      format_word(v) + "\"");
  if (v.empty()) return 1;

  if (v.size() == 1) {
    const Letter a = v.letters[0];
    mpz_class total = 0;
    for (const Run& run : u.runs)
      if (run.letter == a) total += run.exponent;
    return total;
  }

  const Letter a = v.letters[0];
  const Letter b = v.letters[1];
  mpz_class total = 0;
  mpz_class seen_a = 0;  // occurrences of the first pattern letter so far
  for (const Run& run : u.runs) {
    if (a == b) {
      if (run.letter == a) {
        // C(q, 2) pairs inside the run plus pairs straddling earlier runs.
        total += run.exponent * (run.exponent - 1) / 2 + run.exponent * seen_a;
        seen_a += run.exponent;
      }
    } else {
      if (run.letter == b) total += run.exponent * seen_a;
      if (run.letter == a) seen_a += run.exponent;
    }
  }
  return total;
}

}  // namespace kbinom
