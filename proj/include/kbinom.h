/*
 * C interface to the k-binomial word toolkit.
 *
 * Conventions
 *   - Every function returns a kb_status; results travel through out
 *     parameters, which are written only on KB_OK.
 *   - On failure, kb_last_error() returns a thread-local message naming the
 *     offending input or the budget actually required.
 *   - Objects behind opaque handles are released with their kb_*_free
 *     function; strings and numeric buffers returned through out parameters
 *     are heap-allocated and released with kb_free.  Passing NULL to any
 *     free function is a no-op.
 *   - Values that may exceed 64 bits (run exponents, run-length subword
 *     counts, sequence terms) are exchanged as decimal strings.
 *   - Enumerating functions take a budget capping the number of words they
 *     may visit; 0 selects the library default (kb_default_budget()).
 *
 * Word syntax
 *   - dense words: digits for alphabets up to 9 letters ("1223312"),
 *     comma-separated letters beyond ("1,12,3"); "" is the empty word
 *   - signed words: '.'-separated letters, a prime marks an inverse,
 *     e.g. "1.2.3'.2.3.1'"
 *   - run-length words: space-separated letter^exponent runs, "1^1 2^50 3^2"
 *   - sequences: comma-separated positive integers, "2,50,31752"
 */
#ifndef KBINOM_H
#define KBINOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define KB_API __declspec(dllexport)
#else
#define KB_API __attribute__((visibility("default")))
#endif

typedef enum kb_status {
  KB_OK = 0,
  KB_ERR_PARSE = 1,       /* malformed textual input */
  KB_ERR_RANGE = 2,       /* argument outside the documented domain */
  KB_ERR_OVERFLOW = 3,    /* exact 64-bit arithmetic would wrap */
  KB_ERR_UNSUPPORTED = 4, /* operation restricted to another alphabet/shape */
  KB_ERR_BUDGET = 5,      /* enumeration larger than the configured budget */
  KB_ERR_NOMEM = 6        /* allocation failure */
} kb_status;

/* Thread-local message for the most recent failure in this thread. */
KB_API const char* kb_last_error(void);

/* Release a string or numeric buffer returned by this library. */
KB_API void kb_free(void* ptr);

/* Default enumeration budget (words visited) when a call passes 0. */
KB_API uint64_t kb_default_budget(void);

/* ------------------------------------------------------------------ */
/* Dense words                                                         */
/* ------------------------------------------------------------------ */

typedef struct kb_word kb_word;

KB_API kb_status kb_word_parse(const char* text, unsigned m, kb_word** out);
KB_API kb_status kb_word_format(const kb_word* w, char** out);
KB_API kb_status kb_word_length(const kb_word* w, size_t* out);
KB_API kb_status kb_word_alphabet(const kb_word* w, unsigned* out);
KB_API void kb_word_free(kb_word* w);

/* Parikh vector: m occurrence counts. */
KB_API kb_status kb_parikh(const kb_word* w, uint64_t** counts, size_t* m);

/* Scattered-subword count binom(u, v), exact 64-bit. */
KB_API kb_status kb_binom(const kb_word* u, const kb_word* v, uint64_t* out);

/* Flattened counts of all patterns with 1 <= |v| <= k (see kb_signature
 * layout in the header comment of the C++ core: length blocks, then
 * lexicographic).  Two words are ~_k-equivalent iff the vectors are equal. */
KB_API kb_status kb_signature(const kb_word* w, unsigned k, uint64_t** vec, size_t* len);

/* 1 when u ~_k v, else 0. */
KB_API kb_status kb_equivalent(const kb_word* u, const kb_word* v, unsigned k, int* out);

/* Binary words only: out = {|w|_1, |w|_2, binom(w, 12)}. */
KB_API kb_status kb_parikh_matrix(const kb_word* w, uint64_t out[3]);

/* Lexicographically least word of the abelian class. */
KB_API kb_status kb_sorted_representative(const kb_word* w, kb_word** out);

/* Number of maximal blocks of w. */
KB_API kb_status kb_block_count(const kb_word* w, uint64_t* out);

/* Letter rotation 1 -> 3, 2 -> 1, 3 -> 2 over {1,2,3}. */
KB_API kb_status kb_apply_morphism_sigma(const kb_word* w, kb_word** out);

/* ------------------------------------------------------------------ */
/* Run-length words                                                    */
/* ------------------------------------------------------------------ */

typedef struct kb_rle kb_rle;

KB_API kb_status kb_rle_parse(const char* text, unsigned m, kb_rle** out);
KB_API kb_status kb_rle_format(const kb_rle* r, char** out);
KB_API kb_status kb_rle_block_count(const kb_rle* r, uint64_t* out);
KB_API kb_status kb_rle_run(const kb_rle* r, size_t index, unsigned* letter, char** exponent);
KB_API void kb_rle_free(kb_rle* r);

/* Maximal-run decomposition of a dense word. */
KB_API kb_status kb_letter_factorization(const kb_word* w, kb_rle** out);

/* Expansion to a dense word; the budget caps the total length. */
KB_API kb_status kb_rle_expand(const kb_rle* r, uint64_t budget, kb_word** out);

/* binom(u, v) for run-length u and |v| <= 2, as a decimal string. */
KB_API kb_status kb_rle_binom(const kb_rle* u, const kb_word* v, char** out);

/* Letter rotation over {1,2,3} on the run-length form. */
KB_API kb_status kb_rle_apply_morphism_sigma(const kb_rle* r, kb_rle** out);

/* ------------------------------------------------------------------ */
/* Word lists                                                          */
/* ------------------------------------------------------------------ */

typedef struct kb_wordlist kb_wordlist;

KB_API kb_status kb_wordlist_size(const kb_wordlist* list, size_t* out);
/* Borrowed pointer, valid until the list is freed. */
KB_API kb_status kb_wordlist_get(const kb_wordlist* list, size_t index, const char** out);
KB_API void kb_wordlist_free(kb_wordlist* list);

/* ------------------------------------------------------------------ */
/* Switch rewriting (x ab y ba z <-> x ba y ab z)                      */
/* ------------------------------------------------------------------ */

KB_API kb_status kb_switch_neighbors(const kb_word* w, kb_wordlist** out);
KB_API kb_status kb_switch_class(const kb_word* w, uint64_t budget, kb_wordlist** out);

/* ------------------------------------------------------------------ */
/* Class generation by adjacent exchanges                              */
/* ------------------------------------------------------------------ */

typedef struct kb_trace kb_trace;

/* Rebuild w from its sorted representative; the trace records each adjacent
 * exchange ab -> ba as (pos, a, b) with pos the 1-based index of the left
 * letter, plus per-pair totals. */
KB_API kb_status kb_exchange_trace(const kb_word* w, kb_trace** out);
KB_API kb_status kb_trace_steps(const kb_trace* tr, size_t* out);
KB_API kb_status kb_trace_step(const kb_trace* tr, size_t index, size_t* pos, unsigned* a, unsigned* b);
/* Total number of ab -> ba exchanges for the pair (a, b), a < b. */
KB_API kb_status kb_trace_total(const kb_trace* tr, unsigned a, unsigned b, uint64_t* out);
KB_API void kb_trace_free(kb_trace* tr);

/* The 2-binomial class of w (sorted, deduplicated). */
KB_API kb_status kb_class2(const kb_word* w, uint64_t budget, kb_wordlist** out);

/* The class2 search DAG as "parent<TAB>child<TAB>a<TAB>b" lines. */
KB_API kb_status kb_class2_tree(const kb_word* w, uint64_t budget, char** out);

/* ------------------------------------------------------------------ */
/* Signed words and nil-2 group coordinates                            */
/* ------------------------------------------------------------------ */

typedef struct kb_signed kb_signed;

KB_API kb_status kb_signed_parse(const char* text, unsigned m, kb_signed** out);
KB_API kb_status kb_signed_format(const kb_signed* s, char** out);
KB_API void kb_signed_free(kb_signed* s);

/* Signed scattered-subword count for |v| <= 2. */
KB_API kb_status kb_bracket(const kb_signed* s, const kb_word* v, int64_t* out);

/* The m^2 coordinates: m signed letter counts, then the two-distinct-letter
 * patterns 12, 13, ..., 1m, 21, 23, ... in that order. */
KB_API kb_status kb_phi(const kb_signed* s, int64_t** vec, size_t* len);

/* Normal form of a plain word in the free nil-2 group: the Parikh vector
 * (m entries) and the commutator exponents binom(w, ba) for the pairs
 * (a, b), a < b, in the order (1,2), (1,3), ..., (m-1,m). */
KB_API kb_status kb_nil_normal_form(const kb_word* w, uint64_t** counts, size_t* m, uint64_t** exponents,
                                    size_t* pairs);

/* ------------------------------------------------------------------ */
/* Census of equivalence classes                                       */
/* ------------------------------------------------------------------ */

KB_API kb_status kb_count_classes(unsigned m, unsigned n, unsigned k, uint64_t budget, uint64_t* out);
KB_API kb_status kb_ll_language(unsigned m, unsigned n, unsigned k, uint64_t budget, kb_wordlist** out);
KB_API kb_status kb_sing_language(unsigned m, unsigned n, unsigned k, uint64_t budget, kb_wordlist** out);

/* Number of ~_k classes within the abelian class of Parikh vector x. */
KB_API kb_status kb_f_parikh(const uint64_t* x, size_t m, unsigned k, uint64_t budget, uint64_t* out);

/* Sorted set of values binom(u, ab) over words with i a's and j b's. */
KB_API kb_status kb_coefficient_range(unsigned a, unsigned b, unsigned i, unsigned j, uint64_t budget,
                                      uint64_t** values, size_t* count);

typedef struct kb_bounds_report {
  uint64_t f;          /* number of classes in the fiber */
  char* lower;         /* decimal; prod_{a<b} (floor(x_a/(m-1)) floor(x_b/(m-1)) + 1) */
  char* upper;         /* decimal; prod_{a<b} (x_a x_b + 1) */
  char* strict_upper;   /* decimal; prod_{a<b} x_a x_b */
  int lower_ok;        /* lower <= f */
  int upper_ok;        /* f <= upper */
  int strict_upper_ok;  /* f <= strict_upper (known to fail, e.g. at (2,2)) */
} kb_bounds_report;

/* Fill a report for the Parikh vector x (k = 2).  The three strings are
 * allocated and must each be released with kb_free. */
KB_API kb_status kb_check_growth_bounds(const uint64_t* x, size_t m, uint64_t budget,
                                        kb_bounds_report* out);

/* (n^3 + 5n + 6) / 6, the binary 2-binomial class count at length n. */
KB_API kb_status kb_cake_count(uint64_t n, uint64_t* out);

/* ------------------------------------------------------------------ */
/* Growth sequences and the singleton family                           */
/* ------------------------------------------------------------------ */

typedef struct kb_seq kb_seq;

KB_API kb_status kb_seq_parse(const char* text, kb_seq** out);
KB_API kb_status kb_seq_format(const kb_seq* s, char** out);
KB_API kb_status kb_seq_length(const kb_seq* s, size_t* out);
KB_API kb_status kb_seq_term(const kb_seq* s, size_t index, char** out);
KB_API void kb_seq_free(kb_seq* s);

/* Per-term condition flags: 3 bytes per term (D1, D2, D3), 1 = holds. */
KB_API kb_status kb_validate_sequence(const kb_seq* s, uint8_t** flags, size_t* terms, int* all_ok);

/* Greedy pointwise-least admissible sequence; first terms 2, 50, 31752. */
KB_API kb_status kb_minimal_sequence(size_t count, kb_seq** out);

/* The singleton-family word 1^p 2^{s_{n-1}} ... a^{s_1} (p decimal). */
KB_API kb_status kb_rho(const char* p, unsigned n, const kb_seq* s, kb_rle** out);

/* 1 when no other word of the abelian class is ~_k-equivalent to w. */
KB_API kb_status kb_is_singleton(const kb_word* w, unsigned k, uint64_t budget, int* out);

/* Domination check over the abelian class of a ternary run-length word:
 * holds = 1 when no other word matches or beats all three coefficients
 * binom(., 12), binom(., 23), binom(., 31).  counterexample is NULL when
 * none exists, else a word text to release with kb_free. */
KB_API kb_status kb_check_prop54(const kb_rle* w, uint64_t budget, int* holds, uint64_t* words_checked,
                                 char** counterexample);

/* ------------------------------------------------------------------ */
/* Truncated Nerode approximation                                      */
/* ------------------------------------------------------------------ */

typedef struct kb_slice kb_slice;

#define KB_SLICE_LL 0
#define KB_SLICE_SING 1

/* Domain conventions for kb_approx_nerode_count. */
#define KB_NERODE_UPTO_T 0     /* all u with |u| <= t, including the empty word */
#define KB_NERODE_EXACT_T 1    /* only u with |u| = t */
#define KB_NERODE_NONEMPTY 2   /* all u with 1 <= |u| <= t */

KB_API kb_status kb_build_slice(int kind, unsigned m, unsigned k, unsigned C, uint64_t budget,
                                kb_slice** out);
KB_API kb_status kb_slice_size(const kb_slice* s, size_t* out);
KB_API void kb_slice_free(kb_slice* s);

/* Number of classes of the truncated-quotient relation at truncation t under
 * the chosen domain convention. */
KB_API kb_status kb_approx_nerode_count(const kb_slice* s, unsigned t, int domain, uint64_t* out);

/* Stable human-readable name of a domain convention. */
KB_API const char* kb_nerode_domain_name(int domain);

#ifdef __cplusplus
}
#endif

#endif /* KBINOM_H */
