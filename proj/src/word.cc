#include "word.hh"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kbinom {

namespace {

void require_alphabet(unsigned m) {
  if (m == 0) throw_range("alphabet size must be at least 1");
}

/// Parse a decimal number from text[pos...], advancing pos.  `what` names
/// the surrounding construct for error messages.
unsigned parse_number(const std::string& text, std::size_t& pos, const char* what) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw_parse(std::string("expected a digit in ") + what + " at position " + std::to_string(pos + 1) +
                " of \"" + text + "\"");
  unsigned long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
    if (value > 1'000'000'000ul)
      throw_parse(std::string("letter value out of range in ") + what + " at position " +
                  std::to_string(pos + 1) + " of \"" + text + "\"");
    ++pos;
  }
  return static_cast<unsigned>(value);
}

}  // namespace

mpz_class Rle::length() const {
  mpz_class n = 0;
  for (const Run& r : runs) n += r.exponent;
  return n;
}

Word parse_word(const std::string& text, unsigned m) {
  require_alphabet(m);
  Word w;
  w.m = m;
  if (text.empty()) return w;

  if (m <= 9) {
    // One digit per letter.
    w.letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > static_cast<char>('0' + m))
        throw_parse("invalid letter '" + std::string(1, c) + "' at position " + std::to_string(i + 1) +
                    " of \"" + text + "\" (alphabet {1.." + std::to_string(m) + "})");
      w.letters.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }

  // Comma-separated letters for alphabets beyond single digits.
  std::size_t pos = 0, index = 1;
  while (true) {
    unsigned value = parse_number(text, pos, "word");
    if (value < 1 || value > m)
      throw_parse("letter " + std::to_string(value) + " at position " + std::to_string(index) + " of \"" +
                  text + "\" is outside the alphabet {1.." + std::to_string(m) + "}");
    w.letters.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw_parse("expected ',' at position " + std::to_string(pos + 1) + " of \"" + text + "\"");
    ++pos;
    ++index;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  if (w.m <= 9) {
    out.reserve(w.letters.size());
    for (Letter a : w.letters) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w.letters[i]);
  }
  return out;
}

SignedWord parse_signed(const std::string& text, unsigned m) {
  require_alphabet(m);
  SignedWord w;
  w.m = m;
  if (text.empty()) return w;

  std::size_t pos = 0, index = 1;
  while (true) {
    unsigned value = parse_number(text, pos, "signed word");
    if (value < 1 || value > m)
      throw_parse("letter " + std::to_string(value) + " in token " + std::to_string(index) + " of \"" +
                  text + "\" is outside the alphabet {1.." + std::to_string(m) + "}");
    bool inverse = false;
    if (pos < text.size() && text[pos] == '\'') {
      inverse = true;
      ++pos;
    }
    w.letters.push_back(SignedLetter{value, inverse});
    if (pos == text.size()) break;
    if (text[pos] != '.')
      throw_parse("expected '.' after token " + std::to_string(index) + " at position " +
                  std::to_string(pos + 1) + " of \"" + text + "\"");
    ++pos;
    ++index;
  }
  return w;
}

std::string format_signed(const SignedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(w.letters[i].base);
    if (w.letters[i].inverse) out.push_back('\'');
  }
  return out;
}

Rle parse_rle(const std::string& text, unsigned m) {
  require_alphabet(m);
  Rle r;
  r.m = m;

  std::istringstream in(text);
  std::string token;
  std::size_t index = 0;
  while (in >> token) {
    ++index;
    std::size_t pos = 0;
    unsigned letter = parse_number(token, pos, "run");
    if (letter < 1 || letter > m)
      throw_parse("letter " + std::to_string(letter) + " in run " + std::to_string(index) + " of \"" + text +
                  "\" is outside the alphabet {1.." + std::to_string(m) + "}");
    mpz_class exponent = 1;
    if (pos < token.size()) {
      if (token[pos] != '^')
        throw_parse("expected '^' in run " + std::to_string(index) + " of \"" + text + "\"");
      std::string digits = token.substr(pos + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw_parse("invalid exponent \"" + digits + "\" in run " + std::to_string(index) + " of \"" + text +
                    "\"");
      exponent = mpz_class(digits);
    }
    if (exponent <= 0)
      throw_parse("exponent must be positive in run " + std::to_string(index) + " of \"" + text + "\"");
    if (!r.runs.empty() && r.runs.back().letter == letter)
      throw_parse("runs " + std::to_string(index - 1) + " and " + std::to_string(index) + " of \"" + text +
                  "\" repeat the letter " + std::to_string(letter) + "; merge them");
    r.runs.push_back(Run{letter, exponent});
  }
  return r;
}

std::string format_rle(const Rle& r) {
  std::string out;
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(r.runs[i].letter);
    out.push_back('^');
    out += r.runs[i].exponent.get_str();
  }
  return out;
}

std::vector<std::uint64_t> parikh(const Word& w) {
  std::vector<std::uint64_t> counts(w.m, 0);
  for (Letter a : w.letters) counts[a - 1]++;
  return counts;
}

Rle letter_factorization(const Word& w) {
  if (w.empty()) throw_range("letter factorization of the empty word is not defined");
  Rle r;
  r.m = w.m;
  for (Letter a : w.letters) {
    if (!r.runs.empty() && r.runs.back().letter == a)
      r.runs.back().exponent += 1;
    else
      r.runs.push_back(Run{a, 1});
  }
  return r;
}

std::uint64_t block_count(const Word& w) {
  if (w.empty()) throw_range("block count of the empty word is not defined");
  std::uint64_t blocks = 1;
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] != w.letters[i - 1]) ++blocks;
  return blocks;
}

Word expand(const Rle& r, std::uint64_t budget) {
  const std::uint64_t cap = resolve_budget(budget);
  mpz_class total = r.length();
  if (total > cap)
    throw_budget("expanding \"" + format_rle(r) + "\" needs a budget of " + total.get_str() +
                 " letters, above the configured " + std::to_string(cap));
  Word w;
  w.m = r.m;
  w.letters.reserve(total.get_ui());
  for (const Run& run : r.runs) {
    unsigned long q = run.exponent.get_ui();
    w.letters.insert(w.letters.end(), q, run.letter);
  }
  return w;
}

namespace {
Letter rotate_sigma(Letter a) {
  // 1 -> 3, 2 -> 1, 3 -> 2
  switch (a) {
    case 1: return 3;
    case 2: return 1;
    default: return 2;
  }
}
}  // namespace

Word apply_morphism_sigma(const Word& w) {
  if (w.m != 3) throw_unsupported("the rotation morphism is defined over the alphabet {1,2,3} only");
  Word out;
  out.m = 3;
  out.letters.reserve(w.letters.size());
  for (Letter a : w.letters) out.letters.push_back(rotate_sigma(a));
  return out;
}

Rle apply_morphism_sigma(const Rle& r) {
  if (r.m != 3) throw_unsupported("the rotation morphism is defined over the alphabet {1,2,3} only");
  Rle out;
  out.m = 3;
  out.runs.reserve(r.runs.size());
  for (const Run& run : r.runs) out.runs.push_back(Run{rotate_sigma(run.letter), run.exponent});
  return out;
}

Word sorted_representative(const Word& w) {
  return word_from_parikh(parikh(w));
}

Word word_from_parikh(const std::vector<std::uint64_t>& counts) {
  Word w;
  w.m = static_cast<unsigned>(counts.size());
  require_alphabet(w.m);
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  w.letters.reserve(total);
  for (unsigned a = 1; a <= w.m; ++a)
    w.letters.insert(w.letters.end(), counts[a - 1], static_cast<Letter>(a));
  return w;
}

std::uint64_t checked_pow(unsigned m, unsigned n) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < n; ++i)
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(m), &result))
      throw_overflow(std::to_string(m) + "^" + std::to_string(n) + " does not fit in 64 bits");
  return result;
}

mpz_class abelian_class_size(const std::vector<std::uint64_t>& counts) {
  // Multinomial coefficient as a product of binomials:
  //   (c1 + ... + cm)! / (c1! ... cm!) = prod_i C(c1 + ... + ci, ci)
  mpz_class size = 1;
  unsigned long running = 0;
  for (std::uint64_t c : counts) {
    running += static_cast<unsigned long>(c);
    mpz_class term;
    mpz_bin_uiui(term.get_mpz_t(), running, static_cast<unsigned long>(c));
    size *= term;
  }
  return size;
}

void for_each_word(unsigned m, unsigned n, const std::function<void(const Word&)>& fn) {
  require_alphabet(m);
  Word w;
  w.m = m;
  w.letters.assign(n, 1);
  while (true) {
    fn(w);
    // Odometer increment in base m over digits 1..m, most significant first.
    std::size_t i = n;
    while (i > 0 && w.letters[i - 1] == m) w.letters[--i] = 1;
    if (i == 0) return;
    w.letters[i - 1]++;
  }
}

void for_each_abelian(const Word& start, const std::function<bool(const Word&)>& fn) {
  Word w = start;
  std::sort(w.letters.begin(), w.letters.end());
  do {
    if (!fn(w)) return;
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
}

}  // namespace kbinom
