#include "automaticity.hh"

#include <algorithm>
#include <map>
#include <set>

#include "census.hh"

namespace kbinom {

Slice build_slice(SliceKind kind, unsigned m, unsigned k, unsigned C, std::uint64_t budget) {
  if (m == 0) throw_range("alphabet size must be at least 1");
  if (k == 0) throw_range("equivalence order k must be at least 1");

  // The whole build enumerates sum_{n <= C} m^n words; refuse upfront naming
  // the total, then let each per-length pass run under its own exact budget.
  const std::uint64_t cap = resolve_budget(budget);
  mpz_class total = 0;
  for (unsigned n = 0; n <= C; ++n) {
    mpz_class layer;
    mpz_ui_pow_ui(layer.get_mpz_t(), m, n);
    total += layer;
  }
  if (total > cap)
    throw_budget("building the slice needs a budget of " + total.get_str() +
                 " words, above the configured " + std::to_string(cap));

  Slice slice;
  slice.kind = kind;
  slice.m = m;
  slice.k = k;
  slice.C = C;
  for (unsigned n = 0; n <= C; ++n) {
    std::vector<Word> layer = kind == SliceKind::LL ? ll_language(m, n, k, checked_pow(m, n))
                                                    : sing_language(m, n, k, checked_pow(m, n));
    slice.words.insert(slice.words.end(), layer.begin(), layer.end());
  }
  return slice;
}

const char* nerode_domain_name(NerodeDomain domain) {
  switch (domain) {
    case NerodeDomain::UpToT: return "all words of length <= t including the empty word";
    case NerodeDomain::ExactT: return "words of length exactly t";
    case NerodeDomain::NonEmptyUpToT: return "nonempty words of length <= t";
  }
  return "unknown";
}

std::uint64_t approx_nerode_count(const Slice& slice, unsigned t, NerodeDomain domain) {
  if (t > slice.C)
    throw_range("truncation t = " + std::to_string(t) + " exceeds the slice cut-off C = " +
                std::to_string(slice.C));

  const auto in_domain = [&](std::size_t len) {
    switch (domain) {
      case NerodeDomain::UpToT: return len <= t;
      case NerodeDomain::ExactT: return len == static_cast<std::size_t>(t);
      case NerodeDomain::NonEmptyUpToT: return len >= 1 && len <= t;
    }
    return false;
  };

  // Group the truncated left quotients by prefix: for every slice word w and
  // every cut point yielding a domain-length prefix, the suffix enters the
  // quotient set of that prefix when it survives the length-(C - t)
  // truncation.  Domain words that collect no suffix — non-prefixes, or
  // prefixes whose continuations are all too long — share the empty quotient.
  const std::size_t trunc = slice.C - t;
  std::map<Word, std::set<Word>> quotients;
  for (const Word& w : slice.words) {
    const std::size_t cuts = std::min<std::size_t>(w.size(), t);
    for (std::size_t cut = 0; cut <= cuts; ++cut) {
      if (!in_domain(cut)) continue;
      if (w.size() - cut > trunc) continue;
      Word prefix{slice.m, {w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(cut)}};
      Word suffix{slice.m, {w.letters.begin() + static_cast<std::ptrdiff_t>(cut), w.letters.end()}};
      quotients[std::move(prefix)].insert(std::move(suffix));
    }
  }

  // Canonical representation: the sorted list of suffixes (std::set already
  // iterates in the canonical word order).
  std::set<std::vector<Word>> distinct;
  for (const auto& [prefix, suffixes] : quotients)
    distinct.insert(std::vector<Word>(suffixes.begin(), suffixes.end()));

  std::uint64_t domain_size = 0;
  for (unsigned L = 0; L <= t; ++L) {
    if (!in_domain(L)) continue;
    if (__builtin_add_overflow(domain_size, checked_pow(slice.m, L), &domain_size))
      throw_overflow("domain size does not fit in 64 bits");
  }
  const bool has_empty_class = quotients.size() < domain_size;
  return distinct.size() + (has_empty_class ? 1 : 0);
}

}  // namespace kbinom
