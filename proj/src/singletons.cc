#include "singletons.hh"

#include <algorithm>

#include "binomial.hh"

namespace kbinom {

Seq parse_sequence(const std::string& text) {
  Seq s;
  if (text.empty()) return s;
  std::size_t pos = 0, index = 1;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string token = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw_parse("invalid sequence term \"" + token + "\" at index " + std::to_string(index) + " of \"" +
                  text + "\"");
    mpz_class value(token);
    if (value <= 0)
      throw_parse("sequence term at index " + std::to_string(index) + " of \"" + text +
                  "\" must be positive");
    s.push_back(std::move(value));
    if (end == std::string::npos) break;
    pos = end + 1;
    ++index;
  }
  return s;
}

std::string format_sequence(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += s[i].get_str();
  }
  return out;
}

namespace {

/// D2 at term s with prefix sum S, exactly:  s > (sqrt(s/2) + S)^2.
/// Scaling by 4 turns the inequality into  (s - 2 S^2) > 2 S sqrt(2s),
/// which is decided by comparing squares (both sides are nonnegative once
/// the left side is positive).
bool d2_holds(const mpz_class& s, const mpz_class& S) {
  mpz_class lhs = s - 2 * S * S;
  if (lhs <= 0) return S == 0 && s > 0;  // S = 0 reduces D2 to s > s/2
  return lhs * lhs > 8 * S * S * s;
}

/// D3 at term s with prefix sums S1 (up to n-1) and S3 (up to n-3), exactly:
/// sqrt(s/2) > S1 * S3  <=>  2s > 4 (S1 S3)^2  (strict even at equality,
/// since sqrt(s/2) = S1 S3 would force both sides of the square equal).
bool d3_holds(const mpz_class& s, const mpz_class& S1, const mpz_class& S3) {
  mpz_class p = S1 * S3;
  return 2 * s > 4 * p * p;
}

bool d1_holds(const mpz_class& s, mpz_class* root) {
  if (s <= 0 || !mpz_divisible_ui_p(s.get_mpz_t(), 2)) return false;
  mpz_class half = s / 2;
  if (!mpz_perfect_square_p(half.get_mpz_t())) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), half.get_mpz_t());
  return true;
}

}  // namespace

std::vector<SeqCheck> validate_sequence(const Seq& s) {
  std::vector<SeqCheck> checks(s.size());
  mpz_class S1 = 0;  // s_1 + ... + s_{n-1}
  for (std::size_t n = 1; n <= s.size(); ++n) {
    // s_1 + ... + s_{n-3}
    mpz_class S3 = 0;
    for (std::size_t i = 0; i + 3 <= n; ++i) S3 += s[i];

    SeqCheck& c = checks[n - 1];
    c.d1 = d1_holds(s[n - 1], nullptr);
    c.d2 = d2_holds(s[n - 1], S1);
    c.d3 = d3_holds(s[n - 1], S1, S3);
    S1 += s[n - 1];
  }
  return checks;
}

bool sequence_ok(const Seq& s) {
  for (const SeqCheck& c : validate_sequence(s))
    if (!c.all()) return false;
  return true;
}

Seq minimal_sequence(std::size_t count) {
  Seq s;
  mpz_class S1 = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    mpz_class S3 = 0;
    for (std::size_t i = 0; i + 3 <= n; ++i) S3 += s[i];

    // Least t with 2t^2 > (t + S1)^2 is just above S1 (1 + sqrt 2); least t
    // with D3 is S1*S3 + 1.  Start at the larger and walk up the few steps
    // the floor approximations may miss.
    mpz_class t = S1 * S3 + 1;
    mpz_class d2_start;
    mpz_sqrt(d2_start.get_mpz_t(), mpz_class(2 * S1 * S1).get_mpz_t());
    d2_start += S1 + 1;
    if (d2_start > t) t = d2_start;
    if (t < 1) t = 1;
    while (true) {
      mpz_class candidate = 2 * t * t;
      if (d2_holds(candidate, S1) && d3_holds(candidate, S1, S3)) {
        s.push_back(candidate);
        S1 += candidate;
        break;
      }
      ++t;
    }
  }
  return s;
}

Rle rho(const mpz_class& p, unsigned n, const Seq& s) {
  if (p < 1) throw_range("the leading run exponent p must be at least 1");
  if (n < 2) throw_range("the singleton-family word needs n >= 2");
  if (s.size() < n - 1)
    throw_range("the singleton-family word with n = " + std::to_string(n) + " needs " +
                std::to_string(n - 1) + " sequence terms, got " + std::to_string(s.size()));
  for (std::size_t i = 0; i < n - 1; ++i)
    if (s[i] <= 0) throw_range("sequence terms must be positive");

  Rle r;
  r.m = 3;
  r.runs.push_back(Run{1, p});
  // Runs 2..n: letters cycle 1 -> 2 -> 3 -> 1, exponents s_{n-1}, ..., s_1.
  for (unsigned j = 2; j <= n; ++j) {
    Letter letter = static_cast<Letter>((j - 1) % 3 + 1);
    r.runs.push_back(Run{letter, s[n - j]});
  }
  return r;
}

bool is_singleton(const Word& w, unsigned k, std::uint64_t budget) {
  if (k == 0) throw_range("equivalence order k must be at least 1");
  const std::uint64_t cap = resolve_budget(budget);
  const mpz_class size = abelian_class_size(parikh(w));
  if (size > cap)
    throw_budget("the abelian class of " + format_word(w) + " has " + size.get_str() +
                 " words, above the configured budget of " + std::to_string(cap));

  const std::vector<std::uint64_t> sig = signature(w, k);
  bool alone = true;
  for_each_abelian(w, [&](const Word& u) {
    if (u == w) return true;
    if (signature(u, k) == sig) {
      alone = false;
      return false;  // counterexample found, stop enumerating
    }
    return true;
  });
  return alone;
}

Prop54Report check_prop54(const Rle& r, std::uint64_t budget) {
  if (r.m != 3) throw_unsupported("the domination check is defined over the alphabet {1,2,3}");
  const Word w = expand(r, budget);
  const std::uint64_t cap = resolve_budget(budget);
  const mpz_class size = abelian_class_size(parikh(w));
  if (size > cap)
    throw_budget("the abelian class of " + format_rle(r) + " has " + size.get_str() +
                 " words, above the configured budget of " + std::to_string(cap));

  Word p12, p23, p31;
  p12.m = p23.m = p31.m = 3;
  p12.letters = {1, 2};
  p23.letters = {2, 3};
  p31.letters = {3, 1};
  const std::uint64_t c12 = binom(w, p12), c23 = binom(w, p23), c31 = binom(w, p31);

  Prop54Report report;
  report.holds = true;
  for_each_abelian(w, [&](const Word& u) {
    if (u == w) return true;
    report.words_checked++;
    if (binom(u, p12) >= c12 && binom(u, p23) >= c23 && binom(u, p31) >= c31) {
      report.holds = false;
      report.counterexample = u;
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace kbinom
