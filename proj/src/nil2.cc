#include "nil2.hh"

#include <string>

#include "binomial.hh"
#include "exchange.hh"

namespace kbinom {

namespace {

long long checked_ll_add(long long x, long long y, const char* what) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw_overflow(std::string(what) + " exceeds 64 bits");
  return r;
}

}  // namespace

long long bracket(const SignedWord& u, const Word& v) {
  if (v.size() > 2)
    throw_unsupported("signed subword counts support patterns of length at most 2, got \"" + format_word(v) +
                      "\"");
  if (v.empty()) return 1;

  if (v.size() == 1) {
    const Letter a = v.letters[0];
    long long total = 0;
    for (const SignedLetter& s : u.letters)
      if (s.base == a) total = checked_ll_add(total, s.inverse ? -1 : 1, "signed letter count");
    return total;
  }

  // Pattern ab: sum of sign products over position pairs i < j matching a
  // then b.  A single pass carries the signed count of a's seen so far; when
  // a = b the pair contribution is taken before the running count is
  // updated, so only strictly earlier positions pair up.
  const Letter a = v.letters[0], b = v.letters[1];
  long long total = 0;
  long long seen_a = 0;
  for (const SignedLetter& s : u.letters) {
    const long long sign = s.inverse ? -1 : 1;
    if (s.base == b) {
      long long term;
      if (__builtin_mul_overflow(sign, seen_a, &term)) throw_overflow("signed pair count exceeds 64 bits");
      total = checked_ll_add(total, term, "signed pair count");
    }
    if (s.base == a) seen_a = checked_ll_add(seen_a, sign, "signed letter count");
  }
  return total;
}

std::vector<long long> phi(const SignedWord& u) {
  const unsigned m = u.m;
  std::vector<long long> coords;
  coords.reserve(static_cast<std::size_t>(m) * m);

  Word pattern;
  pattern.m = m;
  for (Letter a = 1; a <= m; ++a) {
    pattern.letters = {a};
    coords.push_back(bracket(u, pattern));
  }
  for (Letter a = 1; a <= m; ++a) {
    for (Letter b = 1; b <= m; ++b) {
      if (a == b) continue;
      pattern.letters = {a, b};
      coords.push_back(bracket(u, pattern));
    }
  }
  return coords;
}

std::vector<long long> phi(const Word& w) {
  SignedWord u;
  u.m = w.m;
  u.letters.reserve(w.size());
  for (Letter a : w.letters) u.letters.push_back(SignedLetter{a, false});
  return phi(u);
}

NilNormalForm nil_normal_form(const Word& w) {
  NilNormalForm nf;
  nf.counts = parikh(w);
  nf.exponents.assign(pair_count(w.m), 0);
  // binom(w, ba) for a < b: count pairs with the larger letter first.
  std::vector<std::uint64_t> seen(w.m, 0);
  for (Letter x : w.letters) {
    for (Letter b = x + 1; b <= w.m; ++b) nf.exponents[pair_index(x, b, w.m)] += seen[b - 1];
    seen[x - 1]++;
  }
  return nf;
}

}  // namespace kbinom
