#include "census.hh"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "binomial.hh"

namespace kbinom {

namespace {

struct SigHash {
  std::size_t operator()(const std::vector<std::uint64_t>& sig) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t v : sig) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Check m^n against the budget; returns the resolved budget.
std::uint64_t require_power_budget(unsigned m, unsigned n, std::uint64_t budget) {
  const std::uint64_t cap = resolve_budget(budget);
  mpz_class words;
  mpz_ui_pow_ui(words.get_mpz_t(), m, n);
  if (words > cap)
    throw_budget("enumerating {1.." + std::to_string(m) + "}^" + std::to_string(n) +
                 " needs a budget of " + words.get_str() + " words, above the configured " +
                 std::to_string(cap));
  return cap;
}

/// Check the abelian class size of x against the budget; returns the size.
std::uint64_t require_class_budget(const std::vector<std::uint64_t>& x, std::uint64_t budget) {
  const std::uint64_t cap = resolve_budget(budget);
  const mpz_class size = abelian_class_size(x);
  if (size > cap)
    throw_budget("the abelian class has " + size.get_str() + " words, above the configured budget of " +
                 std::to_string(cap));
  return static_cast<std::uint64_t>(size.get_ui());
}

}  // namespace

std::uint64_t count_classes(unsigned m, unsigned n, unsigned k, std::uint64_t budget) {
  if (k == 0) throw_range("census order k must be at least 1");
  require_power_budget(m, n, budget);
  std::unordered_set<std::vector<std::uint64_t>, SigHash> classes;
  for_each_word(m, n, [&](const Word& w) { classes.insert(signature(w, k)); });
  return classes.size();
}

std::vector<Word> ll_language(unsigned m, unsigned n, unsigned k, std::uint64_t budget) {
  if (k == 0) throw_range("census order k must be at least 1");
  require_power_budget(m, n, budget);
  std::unordered_set<std::vector<std::uint64_t>, SigHash> seen;
  std::vector<Word> least;
  for_each_word(m, n, [&](const Word& w) {
    if (seen.insert(signature(w, k)).second) least.push_back(w);
  });
  return least;  // lexicographic by construction
}

std::vector<Word> sing_language(unsigned m, unsigned n, unsigned k, std::uint64_t budget) {
  if (k == 0) throw_range("census order k must be at least 1");
  require_power_budget(m, n, budget);
  // First occurrence index per signature, plus a multiplicity flag.
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, SigHash> index;
  std::vector<Word> first;
  std::vector<bool> alone;
  for_each_word(m, n, [&](const Word& w) {
    auto [it, fresh] = index.try_emplace(signature(w, k), first.size());
    if (fresh) {
      first.push_back(w);
      alone.push_back(true);
    } else {
      alone[it->second] = false;
    }
  });
  std::vector<Word> out;
  for (std::size_t i = 0; i < first.size(); ++i)
    if (alone[i]) out.push_back(first[i]);
  return out;  // lexicographic: filtered from a lexicographic listing
}

std::uint64_t f_parikh(const std::vector<std::uint64_t>& x, unsigned k, std::uint64_t budget) {
  if (k == 0) throw_range("census order k must be at least 1");
  require_class_budget(x, budget);
  std::unordered_set<std::vector<std::uint64_t>, SigHash> classes;
  for_each_abelian(word_from_parikh(x), [&](const Word& w) {
    classes.insert(signature(w, k));
    return true;
  });
  return classes.size();
}

std::vector<std::uint64_t> coefficient_range(Letter a, Letter b, unsigned i, unsigned j,
                                             std::uint64_t budget) {
  if (a == b) throw_range("coefficient_range needs two distinct letters");
  if (a < 1 || b < 1) throw_range("letters are 1-based");

  const unsigned m = std::max(a, b);
  std::vector<std::uint64_t> counts(m, 0);
  counts[a - 1] = i;
  counts[b - 1] = j;
  require_class_budget(counts, budget);

  Word pattern;
  pattern.m = m;
  pattern.letters = {a, b};

  std::unordered_set<std::uint64_t> values;
  for_each_abelian(word_from_parikh(counts), [&](const Word& w) {
    values.insert(binom(w, pattern));
    return true;
  });
  std::vector<std::uint64_t> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

GrowthBounds check_growth_bounds(const std::vector<std::uint64_t>& x, std::uint64_t budget) {
  const unsigned m = static_cast<unsigned>(x.size());
  if (m == 0) throw_range("the Parikh vector must have at least one entry");

  GrowthBounds g;
  g.f = f_parikh(x, 2, budget);
  g.lower = 1;
  g.upper = 1;
  g.strict_upper = 1;
  for (unsigned a = 1; a <= m; ++a) {
    for (unsigned b = a + 1; b <= m; ++b) {
      const mpz_class xa = static_cast<unsigned long>(x[a - 1]);
      const mpz_class xb = static_cast<unsigned long>(x[b - 1]);
      if (m >= 2) g.lower *= (xa / (m - 1)) * (xb / (m - 1)) + 1;
      g.upper *= xa * xb + 1;
      g.strict_upper *= xa * xb;
    }
  }
  g.lower_ok = g.lower <= g.f;
  g.upper_ok = g.f <= g.upper;
  g.strict_upper_ok = g.f <= g.strict_upper;
  return g;
}

std::uint64_t cake_count(std::uint64_t n) {
  // (n^3 + 5n + 6) / 6 with explicit overflow checks.
  std::uint64_t n2, n3, five_n, sum;
  if (__builtin_mul_overflow(n, n, &n2) || __builtin_mul_overflow(n2, n, &n3) ||
      __builtin_mul_overflow(n, 5ull, &five_n) || __builtin_add_overflow(n3, five_n, &sum) ||
      __builtin_add_overflow(sum, 6ull, &sum))
    throw_overflow("(n^3 + 5n + 6)/6 does not fit in 64 bits for n = " + std::to_string(n));
  return sum / 6;
}

}  // namespace kbinom
