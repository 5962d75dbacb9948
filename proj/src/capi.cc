#include "kbinom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "automaticity.hh"
#include "binomial.hh"
#include "census.hh"
#include "error.hh"
#include "exchange.hh"
#include "nil2.hh"
#include "singletons.hh"
#include "switchrel.hh"
#include "word.hh"

using namespace kbinom;

/* Opaque handle definitions: thin wrappers around the C++ core types. */
struct kb_word {
  Word value;
};
struct kb_rle {
  Rle value;
};
struct kb_signed {
  SignedWord value;
};
struct kb_seq {
  Seq value;
};
struct kb_wordlist {
  std::vector<std::string> texts;
};
struct kb_trace {
  ExchangeTrace value;
};
struct kb_slice {
  Slice value;
};

namespace {

thread_local std::string g_last_error;

kb_status set_error(kb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

kb_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse: return KB_ERR_PARSE;
    case ErrorCode::Range: return KB_ERR_RANGE;
    case ErrorCode::Overflow: return KB_ERR_OVERFLOW;
    case ErrorCode::Unsupported: return KB_ERR_UNSUPPORTED;
    case ErrorCode::Budget: return KB_ERR_BUDGET;
    case ErrorCode::NoMem: return KB_ERR_NOMEM;
  }
  return KB_ERR_RANGE;
}

/* Run fn, translating exceptions into status codes. */
template <typename Fn>
kb_status guarded(Fn&& fn) {
  try {
    fn();
    return KB_OK;
  } catch (const Error& e) {
    return set_error(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(KB_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return set_error(KB_ERR_RANGE, e.what());
  }
}

kb_status require(bool ok, const char* what) {
  return ok ? KB_OK : set_error(KB_ERR_RANGE, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
T* dup_buffer(const std::vector<T>& v) {
  T* out = static_cast<T*>(std::malloc(sizeof(T) * std::max<std::size_t>(v.size(), 1)));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, v.data(), sizeof(T) * v.size());
  return out;
}

kb_wordlist* make_wordlist(const std::vector<Word>& words) {
  auto* list = new kb_wordlist;
  list->texts.reserve(words.size());
  for (const Word& w : words) list->texts.push_back(format_word(w));
  return list;
}

}  // namespace

extern "C" {

const char* kb_last_error(void) { return g_last_error.c_str(); }

void kb_free(void* ptr) { std::free(ptr); }

uint64_t kb_default_budget(void) { return kDefaultBudget; }

/* ---------------- dense words ---------------- */

kb_status kb_word_parse(const char* text, unsigned m, kb_word** out) {
  if (kb_status s = require(text && out, "null argument to kb_word_parse")) return s;
  return guarded([&] { *out = new kb_word{parse_word(text, m)}; });
}

kb_status kb_word_format(const kb_word* w, char** out) {
  if (kb_status s = require(w && out, "null argument to kb_word_format")) return s;
  return guarded([&] { *out = dup_string(format_word(w->value)); });
}

kb_status kb_word_length(const kb_word* w, size_t* out) {
  if (kb_status s = require(w && out, "null argument to kb_word_length")) return s;
  *out = w->value.size();
  return KB_OK;
}

kb_status kb_word_alphabet(const kb_word* w, unsigned* out) {
  if (kb_status s = require(w && out, "null argument to kb_word_alphabet")) return s;
  *out = w->value.m;
  return KB_OK;
}

void kb_word_free(kb_word* w) { delete w; }

kb_status kb_parikh(const kb_word* w, uint64_t** counts, size_t* m) {
  if (kb_status s = require(w && counts && m, "null argument to kb_parikh")) return s;
  return guarded([&] {
    std::vector<std::uint64_t> p = parikh(w->value);
    *counts = dup_buffer(p);
    *m = p.size();
  });
}

kb_status kb_binom(const kb_word* u, const kb_word* v, uint64_t* out) {
  if (kb_status s = require(u && v && out, "null argument to kb_binom")) return s;
  return guarded([&] { *out = binom(u->value, v->value); });
}

kb_status kb_signature(const kb_word* w, unsigned k, uint64_t** vec, size_t* len) {
  if (kb_status s = require(w && vec && len, "null argument to kb_signature")) return s;
  return guarded([&] {
    std::vector<std::uint64_t> sig = signature(w->value, k);
    *vec = dup_buffer(sig);
    *len = sig.size();
  });
}

kb_status kb_equivalent(const kb_word* u, const kb_word* v, unsigned k, int* out) {
  if (kb_status s = require(u && v && out, "null argument to kb_equivalent")) return s;
  return guarded([&] { *out = equivalent(u->value, v->value, k) ? 1 : 0; });
}

kb_status kb_parikh_matrix(const kb_word* w, uint64_t out[3]) {
  if (kb_status s = require(w && out, "null argument to kb_parikh_matrix")) return s;
  return guarded([&] {
    ParikhMatrix p = parikh_matrix(w->value);
    out[0] = p.ones;
    out[1] = p.twos;
    out[2] = p.c12;
  });
}

kb_status kb_sorted_representative(const kb_word* w, kb_word** out) {
  if (kb_status s = require(w && out, "null argument to kb_sorted_representative")) return s;
  return guarded([&] { *out = new kb_word{sorted_representative(w->value)}; });
}

kb_status kb_block_count(const kb_word* w, uint64_t* out) {
  if (kb_status s = require(w && out, "null argument to kb_block_count")) return s;
  return guarded([&] { *out = block_count(w->value); });
}

kb_status kb_apply_morphism_sigma(const kb_word* w, kb_word** out) {
  if (kb_status s = require(w && out, "null argument to kb_apply_morphism_sigma")) return s;
  return guarded([&] { *out = new kb_word{apply_morphism_sigma(w->value)}; });
}

/* ---------------- run-length words ---------------- */

kb_status kb_rle_parse(const char* text, unsigned m, kb_rle** out) {
  if (kb_status s = require(text && out, "null argument to kb_rle_parse")) return s;
  return guarded([&] { *out = new kb_rle{parse_rle(text, m)}; });
}

kb_status kb_rle_format(const kb_rle* r, char** out) {
  if (kb_status s = require(r && out, "null argument to kb_rle_format")) return s;
  return guarded([&] { *out = dup_string(format_rle(r->value)); });
}

kb_status kb_rle_block_count(const kb_rle* r, uint64_t* out) {
  if (kb_status s = require(r && out, "null argument to kb_rle_block_count")) return s;
  *out = r->value.block_count();
  return KB_OK;
}

kb_status kb_rle_run(const kb_rle* r, size_t index, unsigned* letter, char** exponent) {
  if (kb_status s = require(r && letter && exponent, "null argument to kb_rle_run")) return s;
  if (index >= r->value.runs.size()) return set_error(KB_ERR_RANGE, "run index out of range");
  return guarded([&] {
    *letter = r->value.runs[index].letter;
    *exponent = dup_string(r->value.runs[index].exponent.get_str());
  });
}

void kb_rle_free(kb_rle* r) { delete r; }

kb_status kb_letter_factorization(const kb_word* w, kb_rle** out) {
  if (kb_status s = require(w && out, "null argument to kb_letter_factorization")) return s;
  return guarded([&] { *out = new kb_rle{letter_factorization(w->value)}; });
}

kb_status kb_rle_expand(const kb_rle* r, uint64_t budget, kb_word** out) {
  if (kb_status s = require(r && out, "null argument to kb_rle_expand")) return s;
  return guarded([&] { *out = new kb_word{expand(r->value, budget)}; });
}

kb_status kb_rle_binom(const kb_rle* u, const kb_word* v, char** out) {
  if (kb_status s = require(u && v && out, "null argument to kb_rle_binom")) return s;
  return guarded([&] { *out = dup_string(rle_binom(u->value, v->value).get_str()); });
}

kb_status kb_rle_apply_morphism_sigma(const kb_rle* r, kb_rle** out) {
  if (kb_status s = require(r && out, "null argument to kb_rle_apply_morphism_sigma")) return s;
  return guarded([&] { *out = new kb_rle{apply_morphism_sigma(r->value)}; });
}

/* ---------------- word lists ---------------- */

kb_status kb_wordlist_size(const kb_wordlist* list, size_t* out) {
  if (kb_status s = require(list && out, "null argument to kb_wordlist_size")) return s;
  *out = list->texts.size();
  return KB_OK;
}

kb_status kb_wordlist_get(const kb_wordlist* list, size_t index, const char** out) {
  if (kb_status s = require(list && out, "null argument to kb_wordlist_get")) return s;
  if (index >= list->texts.size()) return set_error(KB_ERR_RANGE, "word list index out of range");
  *out = list->texts[index].c_str();
  return KB_OK;
}

void kb_wordlist_free(kb_wordlist* list) { delete list; }

/* ---------------- switch rewriting ---------------- */

kb_status kb_switch_neighbors(const kb_word* w, kb_wordlist** out) {
  if (kb_status s = require(w && out, "null argument to kb_switch_neighbors")) return s;
  return guarded([&] { *out = make_wordlist(switch_neighbors(w->value)); });
}

kb_status kb_switch_class(const kb_word* w, uint64_t budget, kb_wordlist** out) {
  if (kb_status s = require(w && out, "null argument to kb_switch_class")) return s;
  return guarded([&] { *out = make_wordlist(switch_class(w->value, budget)); });
}

/* ---------------- exchange trace and class generation ---------------- */

kb_status kb_exchange_trace(const kb_word* w, kb_trace** out) {
  if (kb_status s = require(w && out, "null argument to kb_exchange_trace")) return s;
  return guarded([&] { *out = new kb_trace{exchange_trace(w->value)}; });
}

kb_status kb_trace_steps(const kb_trace* tr, size_t* out) {
  if (kb_status s = require(tr && out, "null argument to kb_trace_steps")) return s;
  *out = tr->value.steps.size();
  return KB_OK;
}

kb_status kb_trace_step(const kb_trace* tr, size_t index, size_t* pos, unsigned* a, unsigned* b) {
  if (kb_status s = require(tr && pos && a && b, "null argument to kb_trace_step")) return s;
  if (index >= tr->value.steps.size()) return set_error(KB_ERR_RANGE, "trace step index out of range");
  const ExchangeStep& step = tr->value.steps[index];
  *pos = step.pos;
  *a = step.a;
  *b = step.b;
  return KB_OK;
}

kb_status kb_trace_total(const kb_trace* tr, unsigned a, unsigned b, uint64_t* out) {
  if (kb_status s = require(tr && out, "null argument to kb_trace_total")) return s;
  return guarded([&] { *out = tr->value.totals[pair_index(a, b, tr->value.target.m)]; });
}

void kb_trace_free(kb_trace* tr) { delete tr; }

kb_status kb_class2(const kb_word* w, uint64_t budget, kb_wordlist** out) {
  if (kb_status s = require(w && out, "null argument to kb_class2")) return s;
  return guarded([&] { *out = make_wordlist(class2(w->value, budget)); });
}

kb_status kb_class2_tree(const kb_word* w, uint64_t budget, char** out) {
  if (kb_status s = require(w && out, "null argument to kb_class2_tree")) return s;
  return guarded([&] {
    std::string text;
    for (const Class2Edge& e : class2_tree(w->value, budget)) {
      text += format_word(e.parent);
      text += '\t';
      text += format_word(e.child);
      text += '\t';
      text += std::to_string(e.a);
      text += '\t';
      text += std::to_string(e.b);
      text += '\n';
    }
    *out = dup_string(text);
  });
}

/* ---------------- signed words and coordinates ---------------- */

kb_status kb_signed_parse(const char* text, unsigned m, kb_signed** out) {
  if (kb_status s = require(text && out, "null argument to kb_signed_parse")) return s;
  return guarded([&] { *out = new kb_signed{parse_signed(text, m)}; });
}

kb_status kb_signed_format(const kb_signed* s, char** out) {
  if (kb_status st = require(s && out, "null argument to kb_signed_format")) return st;
  return guarded([&] { *out = dup_string(format_signed(s->value)); });
}

void kb_signed_free(kb_signed* s) { delete s; }

kb_status kb_bracket(const kb_signed* s, const kb_word* v, int64_t* out) {
  if (kb_status st = require(s && v && out, "null argument to kb_bracket")) return st;
  return guarded([&] { *out = bracket(s->value, v->value); });
}

kb_status kb_phi(const kb_signed* s, int64_t** vec, size_t* len) {
  if (kb_status st = require(s && vec && len, "null argument to kb_phi")) return st;
  return guarded([&] {
    std::vector<long long> coords = phi(s->value);
    std::vector<int64_t> fixed(coords.begin(), coords.end());
    *vec = dup_buffer(fixed);
    *len = fixed.size();
  });
}

kb_status kb_nil_normal_form(const kb_word* w, uint64_t** counts, size_t* m, uint64_t** exponents,
                             size_t* pairs) {
  if (kb_status s = require(w && counts && m && exponents && pairs, "null argument to kb_nil_normal_form"))
    return s;
  return guarded([&] {
    NilNormalForm nf = nil_normal_form(w->value);
    *counts = dup_buffer(nf.counts);
    *m = nf.counts.size();
    *exponents = dup_buffer(nf.exponents);
    *pairs = nf.exponents.size();
  });
}

/* ---------------- census ---------------- */

kb_status kb_count_classes(unsigned m, unsigned n, unsigned k, uint64_t budget, uint64_t* out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_count_classes")) return s;
  return guarded([&] { *out = count_classes(m, n, k, budget); });
}

kb_status kb_ll_language(unsigned m, unsigned n, unsigned k, uint64_t budget, kb_wordlist** out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_ll_language")) return s;
  return guarded([&] { *out = make_wordlist(ll_language(m, n, k, budget)); });
}

kb_status kb_sing_language(unsigned m, unsigned n, unsigned k, uint64_t budget, kb_wordlist** out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_sing_language")) return s;
  return guarded([&] { *out = make_wordlist(sing_language(m, n, k, budget)); });
}

kb_status kb_f_parikh(const uint64_t* x, size_t m, unsigned k, uint64_t budget, uint64_t* out) {
  if (kb_status s = require(x && out, "null argument to kb_f_parikh")) return s;
  return guarded([&] { *out = f_parikh(std::vector<std::uint64_t>(x, x + m), k, budget); });
}

kb_status kb_coefficient_range(unsigned a, unsigned b, unsigned i, unsigned j, uint64_t budget,
                               uint64_t** values, size_t* count) {
  if (kb_status s = require(values && count, "null argument to kb_coefficient_range")) return s;
  return guarded([&] {
    std::vector<std::uint64_t> vals = coefficient_range(a, b, i, j, budget);
    *values = dup_buffer(vals);
    *count = vals.size();
  });
}

kb_status kb_check_growth_bounds(const uint64_t* x, size_t m, uint64_t budget, kb_bounds_report* out) {
  if (kb_status s = require(x && out, "null argument to kb_check_growth_bounds")) return s;
  return guarded([&] {
    GrowthBounds g = check_growth_bounds(std::vector<std::uint64_t>(x, x + m), budget);
    out->f = g.f;
    out->lower = dup_string(g.lower.get_str());
    out->upper = dup_string(g.upper.get_str());
    out->strict_upper = dup_string(g.strict_upper.get_str());
    out->lower_ok = g.lower_ok ? 1 : 0;
    out->upper_ok = g.upper_ok ? 1 : 0;
    out->strict_upper_ok = g.strict_upper_ok ? 1 : 0;
  });
}

kb_status kb_cake_count(uint64_t n, uint64_t* out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_cake_count")) return s;
  return guarded([&] { *out = cake_count(n); });
}

/* ---------------- sequences and the singleton family ---------------- */

kb_status kb_seq_parse(const char* text, kb_seq** out) {
  if (kb_status s = require(text && out, "null argument to kb_seq_parse")) return s;
  return guarded([&] { *out = new kb_seq{parse_sequence(text)}; });
}

kb_status kb_seq_format(const kb_seq* s, char** out) {
  if (kb_status st = require(s && out, "null argument to kb_seq_format")) return st;
  return guarded([&] { *out = dup_string(format_sequence(s->value)); });
}

kb_status kb_seq_length(const kb_seq* s, size_t* out) {
  if (kb_status st = require(s && out, "null argument to kb_seq_length")) return st;
  *out = s->value.size();
  return KB_OK;
}

kb_status kb_seq_term(const kb_seq* s, size_t index, char** out) {
  if (kb_status st = require(s && out, "null argument to kb_seq_term")) return st;
  if (index >= s->value.size()) return set_error(KB_ERR_RANGE, "sequence index out of range");
  return guarded([&] { *out = dup_string(s->value[index].get_str()); });
}

void kb_seq_free(kb_seq* s) { delete s; }

kb_status kb_validate_sequence(const kb_seq* s, uint8_t** flags, size_t* terms, int* all_ok) {
  if (kb_status st = require(s && flags && terms && all_ok, "null argument to kb_validate_sequence"))
    return st;
  return guarded([&] {
    std::vector<SeqCheck> checks = validate_sequence(s->value);
    std::vector<uint8_t> bytes;
    bytes.reserve(checks.size() * 3);
    bool ok = true;
    for (const SeqCheck& c : checks) {
      bytes.push_back(c.d1 ? 1 : 0);
      bytes.push_back(c.d2 ? 1 : 0);
      bytes.push_back(c.d3 ? 1 : 0);
      ok = ok && c.all();
    }
    *flags = dup_buffer(bytes);
    *terms = checks.size();
    *all_ok = ok ? 1 : 0;
  });
}

kb_status kb_minimal_sequence(size_t count, kb_seq** out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_minimal_sequence")) return s;
  return guarded([&] { *out = new kb_seq{minimal_sequence(count)}; });
}

kb_status kb_rho(const char* p, unsigned n, const kb_seq* s, kb_rle** out) {
  if (kb_status st = require(p && s && out, "null argument to kb_rho")) return st;
  return guarded([&] {
    std::string text(p);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw_parse("invalid run exponent \"" + text + "\"");
    *out = new kb_rle{rho(mpz_class(text), n, s->value)};
  });
}

kb_status kb_is_singleton(const kb_word* w, unsigned k, uint64_t budget, int* out) {
  if (kb_status s = require(w && out, "null argument to kb_is_singleton")) return s;
  return guarded([&] { *out = is_singleton(w->value, k, budget) ? 1 : 0; });
}

kb_status kb_check_prop54(const kb_rle* w, uint64_t budget, int* holds, uint64_t* words_checked,
                          char** counterexample) {
  if (kb_status s = require(w && holds && words_checked && counterexample,
                            "null argument to kb_check_prop54"))
    return s;
  return guarded([&] {
    Prop54Report report = check_prop54(w->value, budget);
    *holds = report.holds ? 1 : 0;
    *words_checked = report.words_checked;
    *counterexample = report.counterexample ? dup_string(format_word(*report.counterexample)) : nullptr;
  });
}

/* ---------------- truncated Nerode approximation ---------------- */

kb_status kb_build_slice(int kind, unsigned m, unsigned k, unsigned C, uint64_t budget, kb_slice** out) {
  if (kb_status s = require(out != nullptr, "null argument to kb_build_slice")) return s;
  if (kind != KB_SLICE_LL && kind != KB_SLICE_SING)
    return set_error(KB_ERR_RANGE, "slice kind must be KB_SLICE_LL or KB_SLICE_SING");
  return guarded([&] {
    *out = new kb_slice{
        build_slice(kind == KB_SLICE_LL ? SliceKind::LL : SliceKind::Sing, m, k, C, budget)};
  });
}

kb_status kb_slice_size(const kb_slice* s, size_t* out) {
  if (kb_status st = require(s && out, "null argument to kb_slice_size")) return st;
  *out = s->value.words.size();
  return KB_OK;
}

void kb_slice_free(kb_slice* s) { delete s; }

kb_status kb_approx_nerode_count(const kb_slice* s, unsigned t, int domain, uint64_t* out) {
  if (kb_status st = require(s && out, "null argument to kb_approx_nerode_count")) return st;
  NerodeDomain d;
  switch (domain) {
    case KB_NERODE_UPTO_T: d = NerodeDomain::UpToT; break;
    case KB_NERODE_EXACT_T: d = NerodeDomain::ExactT; break;
    case KB_NERODE_NONEMPTY: d = NerodeDomain::NonEmptyUpToT; break;
    default: return set_error(KB_ERR_RANGE, "unknown domain convention");
  }
  return guarded([&] { *out = approx_nerode_count(s->value, t, d); });
}

const char* kb_nerode_domain_name(int domain) {
  switch (domain) {
    case KB_NERODE_UPTO_T: return nerode_domain_name(NerodeDomain::UpToT);
    case KB_NERODE_EXACT_T: return nerode_domain_name(NerodeDomain::ExactT);
    case KB_NERODE_NONEMPTY: return nerode_domain_name(NerodeDomain::NonEmptyUpToT);
    default: return "unknown";
  }
}

}  // extern "C"
