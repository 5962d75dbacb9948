// Command-line front end for the k-binomial word toolkit.  Every subcommand
// talks to the shared library through its C API only, assembles a
// deterministic JSON envelope {command, inputs, result, metadata} and writes
// it to standard output (or --out).  Errors go to standard error: exit 1 for
// domain errors (parse, range, budget, ...), exit 2 for usage errors.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbinom.h"

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "json";  // json | csv | human
  std::uint64_t budget = 0;     // 0: environment variable, then library default
  std::string out;              // output path; empty: standard output
};

[[noreturn]] void fail_domain() {
  std::cerr << "error: " << kb_last_error() << "\n";
  std::exit(1);
}

void check(kb_status status) {
  if (status != KB_OK) fail_domain();
}

[[noreturn]] void fail_usage(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  std::exit(2);
}

std::uint64_t resolved_budget(const Options& opt) {
  if (opt.budget != 0) return opt.budget;
  if (const char* env = std::getenv("KBINOM_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
      fail_usage(std::string("KBINOM_BUDGET must be a positive integer, got \"") + env + "\"");
    return value;
  }
  return kb_default_budget();
}

/// Take ownership of a C string from the library.
std::string take_string(char* s) {
  std::string out = s ? s : "";
  kb_free(s);
  return out;
}

// --m inference when the flag is absent.  Only the single-digit syntaxes are
// unambiguous without an alphabet size, so inference reads digits/letter
// tokens and demands an explicit --m for anything else.

/// Dense words: every character is one digit letter.
unsigned infer_dense(const std::string& text) {
  unsigned best = 1;
  for (char c : text) {
    if (c < '1' || c > '9')
      fail_usage("cannot infer the alphabet size of \"" + text + "\"; pass --m explicitly");
    best = std::max(best, static_cast<unsigned>(c - '0'));
  }
  return best;
}

/// Signed words: '.'-separated letter tokens, prime suffix for inverses.
unsigned infer_signed(const std::string& text) {
  unsigned best = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('.', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    if (!token.empty() && token.back() == '\'') token.pop_back();
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      fail_usage("cannot infer the alphabet size of \"" + text + "\"; pass --m explicitly");
    best = std::max(best, static_cast<unsigned>(std::strtoul(token.c_str(), nullptr, 10)));
    pos = end + 1;
  }
  return best;
}

/// Run-length words: whitespace-separated "letter^exponent" (or bare letter).
unsigned infer_rle(const std::string& text) {
  unsigned best = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    const std::size_t caret = token.find('^');
    if (caret != std::string::npos) token = token.substr(0, caret);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      fail_usage("cannot infer the alphabet size of \"" + text + "\"; pass --m explicitly");
    best = std::max(best, static_cast<unsigned>(std::strtoul(token.c_str(), nullptr, 10)));
    pos = end;
  }
  return best;
}

unsigned pick_dense(const std::string& text, unsigned m) { return m == 0 ? infer_dense(text) : m; }
unsigned pick_signed(const std::string& text, unsigned m) { return m == 0 ? infer_signed(text) : m; }
unsigned pick_rle(const std::string& text, unsigned m) { return m == 0 ? infer_rle(text) : m; }

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

/// Everything a subcommand produces beyond the result value itself.
struct Rendering {
  std::vector<std::string> csv;    // lines, header first
  std::vector<std::string> human;  // lines
  std::vector<std::string> notes;  // metadata.convention_notes
  std::uint64_t budget_used = 0;   // enumeration cap in effect (0: none needed)
};

void write_output(const Options& opt, const std::string& command, const ordered_json& inputs,
                  const ordered_json& result, const Rendering& r) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) fail_usage("cannot open output path \"" + opt.out + "\"");
    os = &file;
  }
  if (opt.format == "json") {
    ordered_json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["result"] = result;
    envelope["metadata"] = ordered_json{{"budget_used", r.budget_used}, {"convention_notes", r.notes}};
    *os << envelope.dump(2) << "\n";
  } else if (opt.format == "csv") {
    for (const std::string& line : r.csv) *os << line << "\n";
  } else {
    for (const std::string& line : r.human) *os << line << "\n";
  }
}

std::vector<std::string> scalar_csv(const std::string& value) { return {"value", value}; }

/// Collect a word list from the library and free the handle.
std::vector<std::string> drain_wordlist(kb_wordlist* list) {
  std::size_t n = 0;
  check(kb_wordlist_size(list, &n));
  std::vector<std::string> words;
  words.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char* text = nullptr;
    check(kb_wordlist_get(list, i, &text));
    words.emplace_back(text);
  }
  kb_wordlist_free(list);
  return words;
}

Rendering wordlist_rendering(const std::vector<std::string>& words, std::uint64_t budget_used) {
  Rendering r;
  r.budget_used = budget_used;
  r.csv.push_back("word");
  for (const std::string& w : words) {
    r.csv.push_back(w.empty() ? "\"\"" : w);
    r.human.push_back(w);
  }
  if (words.empty()) r.human.push_back("(none)");
  return r;
}

// ---------------------------------------------------------------------------
// Seed tables (used by `seed-tables` and shared with the CLI tests)
// ---------------------------------------------------------------------------

ordered_json automaticity_table(int kind, unsigned m, unsigned k, unsigned C, unsigned t_max,
                                std::uint64_t budget) {
  kb_slice* slice = nullptr;
  check(kb_build_slice(kind, m, k, C, budget, &slice));
  std::size_t size = 0;
  check(kb_slice_size(slice, &size));

  ordered_json table;
  table["language"] = kind == KB_SLICE_LL ? "ll" : "sing";
  table["m"] = m;
  table["k"] = k;
  table["C"] = C;
  table["slice_size"] = size;
  ordered_json domains = ordered_json::array();
  for (int domain : {KB_NERODE_UPTO_T, KB_NERODE_EXACT_T, KB_NERODE_NONEMPTY}) {
    ordered_json row;
    row["domain"] = kb_nerode_domain_name(domain);
    ordered_json counts = ordered_json::array();
    for (unsigned t = 1; t <= t_max; ++t) {
      std::uint64_t count = 0;
      check(kb_approx_nerode_count(slice, t, domain, &count));
      counts.push_back(count);
    }
    row["counts"] = counts;
    domains.push_back(row);
  }
  table["domains"] = domains;
  kb_slice_free(slice);
  return table;
}

/// Degree-(n-1) Newton forward-difference extrapolation at the next integer.
std::int64_t extrapolate_next(const std::vector<std::int64_t>& values) {
  std::vector<std::vector<std::int64_t>> diff{values};
  while (diff.back().size() > 1) {
    const std::vector<std::int64_t>& prev = diff.back();
    std::vector<std::int64_t> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    diff.push_back(next);
  }
  // P(n) = sum_i C(n, i) * Delta^i, evaluated at n = values.size().
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  std::int64_t result = 0;
  std::int64_t choose = 1;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    result += choose * diff[i][0];
    choose = choose * (n - static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i + 1);
  }
  return result;
}

int run_seed_tables(const Options& opt, const std::string& dir) {
  namespace fs = std::filesystem;
  const std::uint64_t budget = resolved_budget(opt);
  fs::create_directories(dir);
  std::vector<std::string> written;

  auto save = [&](const std::string& name, const ordered_json& value) {
    const std::string path = dir + "/" + name;
    std::ofstream file(path);
    if (!file) fail_usage("cannot open output path \"" + path + "\"");
    file << value.dump(2) << "\n";
    written.push_back(path);
    std::cerr << "seed-tables: wrote " << path << "\n";
  };

  auto census_row = [&](unsigned m, unsigned n, unsigned k) {
    std::uint64_t count = 0;
    check(kb_count_classes(m, n, k, budget, &count));
    return count;
  };

  // Class counts per length for the three instances every check relies on.
  {
    ordered_json t;
    t["m"] = 3;
    t["k"] = 2;
    ordered_json counts = ordered_json::array();
    std::vector<std::int64_t> values;
    for (unsigned n = 0; n <= 9; ++n) {
      std::uint64_t c = census_row(3, n, 2);
      counts.push_back(ordered_json{{"n", n}, {"classes", c}});
      values.push_back(static_cast<std::int64_t>(c));
    }
    t["counts"] = counts;
    save("ternary_census.json", t);

    ordered_json interp;
    interp["nodes_n"] = ordered_json{0, 1, 2, 3, 4, 5, 6, 7, 8};
    interp["degree"] = 8;
    std::vector<std::int64_t> nodes(values.begin(), values.begin() + 9);
    interp["predicted_at_9"] = extrapolate_next(nodes);
    interp["enumerated_at_9"] = values[9];
    interp["agrees"] = extrapolate_next(nodes) == values[9];
    save("ternary_interpolation.json", interp);
  }
  {
    ordered_json t;
    t["m"] = 2;
    t["k"] = 2;
    t["formula"] = "(n^3 + 5n + 6) / 6";
    ordered_json counts = ordered_json::array();
    for (unsigned n = 0; n <= 12; ++n) {
      std::uint64_t formula = 0;
      check(kb_cake_count(n, &formula));
      counts.push_back(ordered_json{{"n", n}, {"classes", census_row(2, n, 2)}, {"formula", formula}});
    }
    t["counts"] = counts;
    save("binary_census.json", t);
  }
  {
    ordered_json t;
    t["m"] = 2;
    t["k"] = 3;
    ordered_json counts = ordered_json::array();
    for (unsigned n = 0; n <= 15; ++n) counts.push_back(ordered_json{{"n", n}, {"classes", census_row(2, n, 3)}});
    t["counts"] = counts;
    save("binary_census_k3.json", t);
  }

  // Worked class-generation examples.
  {
    ordered_json t;
    for (const char* text : {"1223312", "1221"}) {
      kb_word* w = nullptr;
      check(kb_word_parse(text, 3, &w));
      kb_wordlist* list = nullptr;
      check(kb_class2(w, budget, &list));
      t[text] = drain_wordlist(list);
      kb_word_free(w);
    }
    save("class2_examples.json", t);
  }
  {
    kb_word* w = nullptr;
    check(kb_word_parse("1223312", 3, &w));
    kb_trace* trace = nullptr;
    check(kb_exchange_trace(w, &trace));
    std::size_t steps = 0;
    check(kb_trace_steps(trace, &steps));
    ordered_json t;
    t["word"] = "1223312";
    ordered_json step_rows = ordered_json::array();
    for (std::size_t i = 0; i < steps; ++i) {
      std::size_t pos = 0;
      unsigned a = 0, b = 0;
      check(kb_trace_step(trace, i, &pos, &a, &b));
      step_rows.push_back(ordered_json{{"pos", pos}, {"a", a}, {"b", b}});
    }
    t["steps"] = step_rows;
    ordered_json totals = ordered_json::array();
    for (unsigned a = 1; a <= 3; ++a)
      for (unsigned b = a + 1; b <= 3; ++b) {
        std::uint64_t total = 0;
        check(kb_trace_total(trace, a, b, &total));
        totals.push_back(ordered_json{{"a", a}, {"b", b}, {"count", total}});
      }
    t["totals"] = totals;
    kb_trace_free(trace);
    kb_word_free(w);
    save("exchange_trace_example.json", t);
  }

  // Group-coordinate example.
  {
    kb_signed* s = nullptr;
    check(kb_signed_parse("1.2.3'.2.3.1'", 3, &s));
    std::int64_t* vec = nullptr;
    std::size_t len = 0;
    check(kb_phi(s, &vec, &len));
    ordered_json t;
    t["input"] = "1.2.3'.2.3.1'";
    t["m"] = 3;
    ordered_json coords = ordered_json::array();
    for (std::size_t i = 0; i < len; ++i) coords.push_back(vec[i]);
    t["coordinates"] = coords;
    kb_free(vec);
    kb_signed_free(s);
    save("phi_example.json", t);
  }

  // Growth sequence, singleton family, block counts.
  {
    kb_seq* seq = nullptr;
    check(kb_minimal_sequence(3, &seq));
    ordered_json t;
    t["count"] = 3;
    ordered_json terms = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      char* term = nullptr;
      check(kb_seq_term(seq, i, &term));
      terms.push_back(take_string(term));
    }
    t["terms"] = terms;
    save("minimal_sequence.json", t);

    ordered_json rhos;
    for (auto [p, n] : {std::pair<const char*, unsigned>{"1", 3}, {"3", 4}, {"2", 2}}) {
      kb_rle* r = nullptr;
      check(kb_rho(p, n, seq, &r));
      char* text = nullptr;
      check(kb_rle_format(r, &text));
      std::uint64_t blocks = 0;
      check(kb_rle_block_count(r, &blocks));
      rhos["p=" + std::string(p) + ",n=" + std::to_string(n)] =
          ordered_json{{"runs", take_string(text)}, {"blocks", blocks}};
      kb_rle_free(r);
    }
    save("rho_examples.json", rhos);

    std::cerr << "seed-tables: checking the length-53 singleton over its abelian class\n";
    kb_rle* r13 = nullptr;
    check(kb_rho("1", 3, seq, &r13));
    kb_word* w13 = nullptr;
    check(kb_rle_expand(r13, budget, &w13));
    int alone = 0;
    check(kb_is_singleton(w13, 2, budget, &alone));
    int holds = 0;
    std::uint64_t checked_words = 0;
    char* counterexample = nullptr;
    check(kb_check_prop54(r13, budget, &holds, &checked_words, &counterexample));
    ordered_json t2;
    t2["word"] = "1^1 2^50 3^2";
    t2["is_singleton"] = alone == 1;
    t2["domination_holds"] = holds == 1;
    t2["words_checked"] = checked_words;
    if (counterexample) t2["counterexample"] = take_string(counterexample);
    kb_word_free(w13);
    kb_rle_free(r13);
    kb_seq_free(seq);
    save("singleton_example.json", t2);
  }
  {
    kb_word* w = nullptr;
    check(kb_word_parse("112333122132", 3, &w));
    std::uint64_t blocks = 0;
    check(kb_block_count(w, &blocks));
    kb_word_free(w);
    save("nb_examples.json", ordered_json{{"112333122132", blocks}});
  }

  // Growth-bound ingredients.
  {
    ordered_json ranges = ordered_json::array();
    for (unsigned i = 1; i <= 5; ++i)
      for (unsigned j = 1; j <= 5; ++j) {
        std::uint64_t* values = nullptr;
        std::size_t count = 0;
        check(kb_coefficient_range(1, 2, i, j, budget, &values, &count));
        ranges.push_back(ordered_json{{"i", i},
                                      {"j", j},
                                      {"min", values[0]},
                                      {"max", values[count - 1]},
                                      {"cardinality", count},
                                      {"full", count == static_cast<std::size_t>(i) * j + 1}});
        kb_free(values);
      }
    save("coefficient_ranges.json", ranges);

    std::uint64_t x22[2] = {2, 2};
    kb_bounds_report report;
    check(kb_check_growth_bounds(x22, 2, budget, &report));
    ordered_json t;
    t["x"] = ordered_json{2, 2};
    t["f"] = report.f;
    t["lower"] = take_string(report.lower);
    t["upper"] = take_string(report.upper);
    t["strict_upper"] = take_string(report.strict_upper);
    t["lower_ok"] = report.lower_ok == 1;
    t["upper_ok"] = report.upper_ok == 1;
    t["strict_upper_ok"] = report.strict_upper_ok == 1;
    t["note"] =
        "the product of x_a x_b without the +1 misses the fiber count already at x = (2,2): f = 5 > 4";
    save("growth_discrepancy.json", t);
  }

  // Truncated Nerode approximation tables, all three domain conventions.
  std::cerr << "seed-tables: building automaticity tables (binary C=15, ternary C=9)\n";
  {
    ordered_json t;
    t["binary_ll_k3_C15"] = automaticity_table(KB_SLICE_LL, 2, 3, 15, 9, budget);
    t["ternary_ll_k2_C9"] = automaticity_table(KB_SLICE_LL, 3, 2, 9, 6, budget);
    t["note"] = "counts are per truncation t = 1..t_max for each domain convention";
    save("automaticity_tables.json", t);
  }

  ordered_json files = ordered_json::array();
  for (const std::string& path : written) files.push_back(path);
  Rendering r;
  r.budget_used = budget;
  r.csv.push_back("file");
  for (const std::string& path : written) r.csv.push_back(path);
  for (const std::string& path : written) r.human.push_back(path);
  write_output(opt, "seed-tables", ordered_json{{"dir", dir}}, files, r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-binomial equivalence toolkit"};
  app.require_subcommand(0, 1);
  // Let --format / --budget / --out appear after the subcommand name too.
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--budget", opt.budget,
                 "enumeration budget in words (0: KBINOM_BUDGET environment variable, then the "
                 "library default)");
  app.add_option("--out", opt.out, "write the output to this path instead of standard output");

  // Shared option holders; each subcommand registers the ones it needs.
  std::string word_text, second_text, signed_text, rle_text, seq_text, x_text, p_text;
  unsigned m = 0, k = 2, n = 0, C = 0, t_max = 0, count = 3, range_i = 0, range_j = 0;
  unsigned letter_a = 1, letter_b = 2, rho_n = 2;
  std::string tree_path, lang = "ll", dir = "tables";

  auto parse_x = [&](const std::string& text) {
    std::vector<std::uint64_t> x;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string::npos) end = text.size();
      const std::string token = text.substr(pos, end - pos);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        fail_usage("invalid Parikh vector entry \"" + token + "\" in \"" + text + "\"");
      x.push_back(std::strtoull(token.c_str(), nullptr, 10));
      pos = end + 1;
      if (end == text.size()) break;
    }
    return x;
  };

  // ----- binom -----
  auto* cmd_binom = app.add_subcommand("binom", "scattered-subword count binom(u, v)");
  cmd_binom->add_option("u", word_text, "host word")->required();
  cmd_binom->add_option("v", second_text, "pattern word")->required();
  cmd_binom->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_binom->callback([&] {
    const unsigned mm = m != 0 ? m : std::max(infer_dense(word_text), infer_dense(second_text));
    kb_word *u = nullptr, *v = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &u));
    check(kb_word_parse(second_text.c_str(), mm, &v));
    std::uint64_t value = 0;
    check(kb_binom(u, v, &value));
    kb_word_free(u);
    kb_word_free(v);
    Rendering r;
    r.csv = scalar_csv(std::to_string(value));
    r.human = {std::to_string(value)};
    write_output(opt, "binom", ordered_json{{"u", word_text}, {"v", second_text}, {"m", mm}}, value, r);
  });

  // ----- signature -----
  auto* cmd_signature = app.add_subcommand("signature", "all pattern counts up to length k");
  cmd_signature->add_option("word", word_text)->required();
  cmd_signature->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_signature->add_option("--k", k, "order")->capture_default_str();
  cmd_signature->callback([&] {
    const unsigned mm = pick_dense(word_text, m);
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &w));
    std::uint64_t* vec = nullptr;
    std::size_t len = 0;
    check(kb_signature(w, k, &vec, &len));
    kb_word_free(w);
    ordered_json result = ordered_json::array();
    Rendering r;
    r.csv.push_back("index,count");
    for (std::size_t i = 0; i < len; ++i) {
      result.push_back(vec[i]);
      r.csv.push_back(std::to_string(i) + "," + std::to_string(vec[i]));
      r.human.push_back(std::to_string(vec[i]));
    }
    kb_free(vec);
    r.notes = {"patterns are ordered by length, then lexicographically"};
    write_output(opt, "signature", ordered_json{{"word", word_text}, {"m", mm}, {"k", k}}, result, r);
  });

  // ----- equiv -----
  auto* cmd_equiv = app.add_subcommand("equiv", "k-binomial equivalence test");
  cmd_equiv->add_option("u", word_text)->required();
  cmd_equiv->add_option("v", second_text)->required();
  cmd_equiv->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_equiv->add_option("--k", k, "order")->capture_default_str();
  cmd_equiv->callback([&] {
    const unsigned mm = m != 0 ? m : std::max(infer_dense(word_text), infer_dense(second_text));
    kb_word *u = nullptr, *v = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &u));
    check(kb_word_parse(second_text.c_str(), mm, &v));
    int eq = 0;
    check(kb_equivalent(u, v, k, &eq));
    kb_word_free(u);
    kb_word_free(v);
    Rendering r;
    r.csv = scalar_csv(eq ? "true" : "false");
    r.human = {eq ? "equivalent" : "not equivalent"};
    write_output(opt, "equiv",
                 ordered_json{{"u", word_text}, {"v", second_text}, {"m", mm}, {"k", k}},
                 static_cast<bool>(eq), r);
  });

  // ----- parikh-matrix -----
  auto* cmd_pm = app.add_subcommand("parikh-matrix", "binary Parikh matrix entries");
  cmd_pm->add_option("word", word_text)->required();
  cmd_pm->callback([&] {
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), 2, &w));
    std::uint64_t entries[3] = {0, 0, 0};
    check(kb_parikh_matrix(w, entries));
    kb_word_free(w);
    ordered_json result{{"ones", entries[0]}, {"twos", entries[1]}, {"c12", entries[2]}};
    Rendering r;
    r.csv = {"ones,twos,c12",
             std::to_string(entries[0]) + "," + std::to_string(entries[1]) + "," + std::to_string(entries[2])};
    r.human = {"|w|_1 = " + std::to_string(entries[0]), "|w|_2 = " + std::to_string(entries[1]),
               "binom(w,12) = " + std::to_string(entries[2])};
    write_output(opt, "parikh-matrix", ordered_json{{"word", word_text}, {"m", 2}}, result, r);
  });

  // ----- switch-class -----
  auto* cmd_switch = app.add_subcommand("switch-class", "closure under the switch rewrite");
  cmd_switch->add_option("word", word_text)->required();
  cmd_switch->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_switch->callback([&] {
    const unsigned mm = pick_dense(word_text, m);
    const std::uint64_t budget = resolved_budget(opt);
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &w));
    kb_wordlist* list = nullptr;
    check(kb_switch_class(w, budget, &list));
    kb_word_free(w);
    std::vector<std::string> words = drain_wordlist(list);
    ordered_json result = words;
    write_output(opt, "switch-class", ordered_json{{"word", word_text}, {"m", mm}}, result,
                 wordlist_rendering(words, budget));
  });

  // ----- class2 -----
  auto* cmd_class2 = app.add_subcommand("class2", "2-binomial equivalence class");
  cmd_class2->add_option("word", word_text)->required();
  cmd_class2->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_class2->add_option("--tree", tree_path, "also write the search DAG to this path");
  cmd_class2->callback([&] {
    const unsigned mm = pick_dense(word_text, m);
    const std::uint64_t budget = resolved_budget(opt);
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &w));
    kb_wordlist* list = nullptr;
    check(kb_class2(w, budget, &list));
    std::vector<std::string> words = drain_wordlist(list);
    Rendering r = wordlist_rendering(words, budget);
    if (!tree_path.empty()) {
      char* tree = nullptr;
      check(kb_class2_tree(w, budget, &tree));
      std::ofstream file(tree_path);
      if (!file) fail_usage("cannot open output path \"" + tree_path + "\"");
      file << take_string(tree);
      r.notes.push_back("search DAG written to " + tree_path +
                        " as parent<TAB>child<TAB>a<TAB>b lines");
    }
    kb_word_free(w);
    write_output(opt, "class2", ordered_json{{"word", word_text}, {"m", mm}}, words, r);
  });

  // ----- trace -----
  auto* cmd_trace = app.add_subcommand("trace", "adjacent-exchange rebuild from the sorted word");
  cmd_trace->add_option("word", word_text)->required();
  cmd_trace->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_trace->callback([&] {
    const unsigned mm = pick_dense(word_text, m);
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &w));
    kb_trace* trace = nullptr;
    check(kb_exchange_trace(w, &trace));
    std::size_t steps = 0;
    check(kb_trace_steps(trace, &steps));

    kb_word* root = nullptr;
    check(kb_sorted_representative(w, &root));
    char* root_text_raw = nullptr;
    check(kb_word_format(root, &root_text_raw));
    const std::string root_text = take_string(root_text_raw);
    kb_word_free(root);

    ordered_json step_rows = ordered_json::array();
    Rendering r;
    r.budget_used = 0;
    r.csv.push_back("step,pos,a,b");
    for (std::size_t i = 0; i < steps; ++i) {
      std::size_t pos = 0;
      unsigned a = 0, b = 0;
      check(kb_trace_step(trace, i, &pos, &a, &b));
      step_rows.push_back(ordered_json{{"pos", pos}, {"a", a}, {"b", b}});
      r.csv.push_back(std::to_string(i) + "," + std::to_string(pos) + "," + std::to_string(a) + "," +
                      std::to_string(b));
      r.human.push_back("swap at " + std::to_string(pos) + ": " + std::to_string(a) + std::to_string(b) +
                        " -> " + std::to_string(b) + std::to_string(a));
    }
    ordered_json totals = ordered_json::array();
    for (unsigned a = 1; a <= mm; ++a)
      for (unsigned b = a + 1; b <= mm; ++b) {
        std::uint64_t total = 0;
        check(kb_trace_total(trace, a, b, &total));
        totals.push_back(ordered_json{{"a", a}, {"b", b}, {"count", total}});
        r.human.push_back("total " + std::to_string(a) + std::to_string(b) + "->" + std::to_string(b) +
                          std::to_string(a) + ": " + std::to_string(total));
      }
    kb_trace_free(trace);
    kb_word_free(w);
    ordered_json result{{"root", root_text}, {"target", word_text}, {"steps", step_rows}, {"totals", totals}};
    write_output(opt, "trace", ordered_json{{"word", word_text}, {"m", mm}}, result, r);
  });

  // ----- phi -----
  auto* cmd_phi = app.add_subcommand("phi", "group coordinates of a signed word");
  cmd_phi->add_option("word", signed_text, "signed word, e.g. \"1.2.3'.2.3.1'\"")->required();
  cmd_phi->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_phi->callback([&] {
    const unsigned mm = pick_signed(signed_text, m);
    kb_signed* s = nullptr;
    check(kb_signed_parse(signed_text.c_str(), mm, &s));
    std::int64_t* vec = nullptr;
    std::size_t len = 0;
    check(kb_phi(s, &vec, &len));
    kb_signed_free(s);
    ordered_json result = ordered_json::array();
    Rendering r;
    r.csv.push_back("index,value");
    for (std::size_t i = 0; i < len; ++i) {
      result.push_back(vec[i]);
      r.csv.push_back(std::to_string(i) + "," + std::to_string(vec[i]));
      r.human.push_back(std::to_string(vec[i]));
    }
    kb_free(vec);
    r.notes = {"coordinate order: single letters 1..m, then patterns 12, 13, ..., 21, 23, ..."};
    write_output(opt, "phi", ordered_json{{"word", signed_text}, {"m", mm}}, result, r);
  });

  // ----- normal-form -----
  auto* cmd_nf = app.add_subcommand("normal-form", "nil-2 normal form of a plain word");
  cmd_nf->add_option("word", word_text)->required();
  cmd_nf->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_nf->callback([&] {
    const unsigned mm = pick_dense(word_text, m);
    kb_word* w = nullptr;
    check(kb_word_parse(word_text.c_str(), mm, &w));
    std::uint64_t *counts = nullptr, *exponents = nullptr;
    std::size_t nm = 0, pairs = 0;
    check(kb_nil_normal_form(w, &counts, &nm, &exponents, &pairs));
    kb_word_free(w);
    ordered_json jc = ordered_json::array(), je = ordered_json::array();
    Rendering r;
    r.csv.push_back("kind,index,value");
    for (std::size_t i = 0; i < nm; ++i) {
      jc.push_back(counts[i]);
      r.csv.push_back("count," + std::to_string(i + 1) + "," + std::to_string(counts[i]));
    }
    for (std::size_t i = 0; i < pairs; ++i) {
      je.push_back(exponents[i]);
      r.csv.push_back("exponent," + std::to_string(i + 1) + "," + std::to_string(exponents[i]));
    }
    kb_free(counts);
    kb_free(exponents);
    r.human = {"counts: " + jc.dump(), "exponents: " + je.dump()};
    r.notes = {"exponent order: pairs (1,2), (1,3), ..., (m-1,m); the (a,b) entry is binom(w, ba)"};
    write_output(opt, "normal-form", ordered_json{{"word", word_text}, {"m", mm}},
                 ordered_json{{"counts", jc}, {"exponents", je}}, r);
  });

  // ----- census / ll / sing -----
  auto* cmd_census = app.add_subcommand("census", "number of k-binomial classes of length-n words");
  cmd_census->add_option("--m", m, "alphabet size")->required();
  cmd_census->add_option("--k", k, "order")->capture_default_str();
  cmd_census->add_option("--n", n, "word length")->required();
  cmd_census->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    std::uint64_t value = 0;
    check(kb_count_classes(m, n, k, budget, &value));
    Rendering r;
    r.budget_used = budget;
    r.csv = scalar_csv(std::to_string(value));
    r.human = {std::to_string(value)};
    write_output(opt, "census", ordered_json{{"m", m}, {"k", k}, {"n", n}}, value, r);
  });

  auto* cmd_ll = app.add_subcommand("ll", "length-n slice of the lexicographically-least language");
  cmd_ll->add_option("--m", m, "alphabet size")->required();
  cmd_ll->add_option("--k", k, "order")->capture_default_str();
  cmd_ll->add_option("--n", n, "word length")->required();
  cmd_ll->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    kb_wordlist* list = nullptr;
    check(kb_ll_language(m, n, k, budget, &list));
    std::vector<std::string> words = drain_wordlist(list);
    write_output(opt, "ll", ordered_json{{"m", m}, {"k", k}, {"n", n}}, words,
                 wordlist_rendering(words, budget));
  });

  auto* cmd_sing = app.add_subcommand("sing", "length-n slice of the singleton language");
  cmd_sing->add_option("--m", m, "alphabet size")->required();
  cmd_sing->add_option("--k", k, "order")->capture_default_str();
  cmd_sing->add_option("--n", n, "word length")->required();
  cmd_sing->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    kb_wordlist* list = nullptr;
    check(kb_sing_language(m, n, k, budget, &list));
    std::vector<std::string> words = drain_wordlist(list);
    write_output(opt, "sing", ordered_json{{"m", m}, {"k", k}, {"n", n}}, words,
                 wordlist_rendering(words, budget));
  });

  // ----- f-parikh -----
  auto* cmd_fp = app.add_subcommand("f-parikh", "number of k-binomial classes within an abelian class");
  cmd_fp->add_option("--x", x_text, "Parikh vector, e.g. \"4,4,4\"")->required();
  cmd_fp->add_option("--k", k, "order")->capture_default_str();
  cmd_fp->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    std::vector<std::uint64_t> x = parse_x(x_text);
    std::uint64_t value = 0;
    check(kb_f_parikh(x.data(), x.size(), k, budget, &value));
    Rendering r;
    r.budget_used = budget;
    r.csv = scalar_csv(std::to_string(value));
    r.human = {std::to_string(value)};
    write_output(opt, "f-parikh", ordered_json{{"x", x}, {"k", k}}, value, r);
  });

  // ----- bounds -----
  auto* cmd_bounds = app.add_subcommand("bounds", "per-fiber growth bounds for k = 2");
  cmd_bounds->add_option("--x", x_text, "Parikh vector, e.g. \"2,2\"")->required();
  cmd_bounds->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    std::vector<std::uint64_t> x = parse_x(x_text);
    kb_bounds_report report;
    check(kb_check_growth_bounds(x.data(), x.size(), budget, &report));
    const std::string lower = take_string(report.lower);
    const std::string upper = take_string(report.upper);
    const std::string strict_upper = take_string(report.strict_upper);
    ordered_json result{{"f", report.f},
                        {"lower", lower},
                        {"upper", upper},
                        {"strict_upper", strict_upper},
                        {"lower_ok", report.lower_ok == 1},
                        {"upper_ok", report.upper_ok == 1},
                        {"strict_upper_ok", report.strict_upper_ok == 1}};
    Rendering r;
    r.budget_used = budget;
    r.csv = {"f,lower,upper,strict_upper,lower_ok,upper_ok,strict_upper_ok",
             std::to_string(report.f) + "," + lower + "," + upper + "," + strict_upper + "," +
                 (report.lower_ok ? "true" : "false") + "," + (report.upper_ok ? "true" : "false") + "," +
                 (report.strict_upper_ok ? "true" : "false")};
    r.human = {"f = " + std::to_string(report.f), "lower = " + lower, "upper = " + upper,
               "strict_upper = " + strict_upper};
    r.notes = {"upper is the corrected product of (x_a x_b + 1); strict_upper omits the +1 and fails "
               "already at x = (2,2)"};
    write_output(opt, "bounds", ordered_json{{"x", x}}, result, r);
  });

  // ----- rho -----
  auto* cmd_rho = app.add_subcommand("rho", "singleton-family word as runs");
  cmd_rho->add_option("--p", p_text, "leading run exponent (decimal)")->required();
  cmd_rho->add_option("--n", rho_n, "number of runs")->required();
  cmd_rho->add_option("--seq", seq_text, "growth sequence, e.g. \"2,50\"")->required();
  cmd_rho->callback([&] {
    kb_seq* seq = nullptr;
    check(kb_seq_parse(seq_text.c_str(), &seq));
    kb_rle* r13 = nullptr;
    check(kb_rho(p_text.c_str(), rho_n, seq, &r13));
    kb_seq_free(seq);
    char* text = nullptr;
    check(kb_rle_format(r13, &text));
    const std::string runs = take_string(text);
    std::uint64_t blocks = 0;
    check(kb_rle_block_count(r13, &blocks));
    kb_rle_free(r13);
    Rendering r;
    r.csv = scalar_csv("\"" + runs + "\"");
    r.human = {runs, "blocks: " + std::to_string(blocks)};
    write_output(opt, "rho", ordered_json{{"p", p_text}, {"n", rho_n}, {"seq", seq_text}},
                 ordered_json{{"runs", runs}, {"blocks", blocks}}, r);
  });

  // ----- validate-seq -----
  auto* cmd_vs = app.add_subcommand("validate-seq", "check the three growth conditions per term");
  cmd_vs->add_option("--seq", seq_text, "sequence, e.g. \"2,50,31752\"")->required();
  cmd_vs->callback([&] {
    kb_seq* seq = nullptr;
    check(kb_seq_parse(seq_text.c_str(), &seq));
    std::uint8_t* flags = nullptr;
    std::size_t terms = 0;
    int all_ok = 0;
    check(kb_validate_sequence(seq, &flags, &terms, &all_ok));
    ordered_json rows = ordered_json::array();
    Rendering r;
    r.csv.push_back("index,term,d1,d2,d3");
    for (std::size_t i = 0; i < terms; ++i) {
      char* term = nullptr;
      check(kb_seq_term(seq, i, &term));
      const std::string term_text = take_string(term);
      const bool d1 = flags[3 * i] != 0, d2 = flags[3 * i + 1] != 0, d3 = flags[3 * i + 2] != 0;
      rows.push_back(ordered_json{{"index", i + 1}, {"term", term_text}, {"d1", d1}, {"d2", d2}, {"d3", d3}});
      r.csv.push_back(std::to_string(i + 1) + "," + term_text + "," + (d1 ? "true" : "false") + "," +
                      (d2 ? "true" : "false") + "," + (d3 ? "true" : "false"));
      r.human.push_back("s_" + std::to_string(i + 1) + " = " + term_text + ": D1 " + (d1 ? "ok" : "FAIL") +
                        ", D2 " + (d2 ? "ok" : "FAIL") + ", D3 " + (d3 ? "ok" : "FAIL"));
    }
    kb_free(flags);
    kb_seq_free(seq);
    write_output(opt, "validate-seq", ordered_json{{"seq", seq_text}},
                 ordered_json{{"terms", rows}, {"ok", all_ok == 1}}, r);
  });

  // ----- min-seq -----
  auto* cmd_ms = app.add_subcommand("min-seq", "greedy pointwise-least admissible sequence");
  cmd_ms->add_option("--count", count, "number of terms")->capture_default_str();
  cmd_ms->callback([&] {
    kb_seq* seq = nullptr;
    check(kb_minimal_sequence(count, &seq));
    ordered_json terms = ordered_json::array();
    Rendering r;
    r.csv.push_back("index,term");
    for (std::size_t i = 0; i < count; ++i) {
      char* term = nullptr;
      check(kb_seq_term(seq, i, &term));
      const std::string text = take_string(term);
      terms.push_back(text);
      r.csv.push_back(std::to_string(i + 1) + "," + text);
      r.human.push_back(text);
    }
    kb_seq_free(seq);
    write_output(opt, "min-seq", ordered_json{{"count", count}}, terms, r);
  });

  // ----- nb -----
  auto* cmd_nb = app.add_subcommand("nb", "number of maximal blocks");
  cmd_nb->add_option("word", word_text, "dense word (or use --rle)");
  cmd_nb->add_option("--rle", rle_text, "run-length word, e.g. \"1^1 2^50 3^2\"");
  cmd_nb->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_nb->callback([&] {
    std::uint64_t blocks = 0;
    ordered_json inputs;
    if (!rle_text.empty()) {
      const unsigned mm = pick_rle(rle_text, m);
      kb_rle* r13 = nullptr;
      check(kb_rle_parse(rle_text.c_str(), mm, &r13));
      check(kb_rle_block_count(r13, &blocks));
      kb_rle_free(r13);
      inputs = ordered_json{{"rle", rle_text}, {"m", mm}};
    } else if (!word_text.empty()) {
      const unsigned mm = pick_dense(word_text, m);
      kb_word* w = nullptr;
      check(kb_word_parse(word_text.c_str(), mm, &w));
      check(kb_block_count(w, &blocks));
      kb_word_free(w);
      inputs = ordered_json{{"word", word_text}, {"m", mm}};
    } else {
      fail_usage("nb needs a word argument or --rle");
    }
    Rendering r;
    r.csv = scalar_csv(std::to_string(blocks));
    r.human = {std::to_string(blocks)};
    write_output(opt, "nb", inputs, blocks, r);
  });

  // ----- is-singleton -----
  auto* cmd_is = app.add_subcommand("is-singleton", "is the word alone in its k-binomial class?");
  cmd_is->add_option("word", word_text, "dense word (or use --rle)");
  cmd_is->add_option("--rle", rle_text, "run-length word to expand first");
  cmd_is->add_option("--m", m, "alphabet size (default: inferred)");
  cmd_is->add_option("--k", k, "order")->capture_default_str();
  cmd_is->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    kb_word* w = nullptr;
    ordered_json inputs;
    if (!rle_text.empty()) {
      const unsigned mm = pick_rle(rle_text, m);
      kb_rle* r13 = nullptr;
      check(kb_rle_parse(rle_text.c_str(), mm, &r13));
      check(kb_rle_expand(r13, budget, &w));
      kb_rle_free(r13);
      inputs = ordered_json{{"rle", rle_text}, {"m", mm}, {"k", k}};
    } else if (!word_text.empty()) {
      const unsigned mm = pick_dense(word_text, m);
      check(kb_word_parse(word_text.c_str(), mm, &w));
      inputs = ordered_json{{"word", word_text}, {"m", mm}, {"k", k}};
    } else {
      fail_usage("is-singleton needs a word argument or --rle");
    }
    int alone = 0;
    check(kb_is_singleton(w, k, budget, &alone));
    kb_word_free(w);
    Rendering r;
    r.budget_used = budget;
    r.csv = scalar_csv(alone ? "true" : "false");
    r.human = {alone ? "singleton" : "not a singleton"};
    write_output(opt, "is-singleton", inputs, static_cast<bool>(alone), r);
  });

  // ----- prop54 -----
  auto* cmd_prop = app.add_subcommand("prop54", "coefficient-domination check over the abelian class");
  cmd_prop->add_option("--rle", rle_text, "ternary run-length word, e.g. \"1^1 2^50 3^2\"")->required();
  cmd_prop->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    kb_rle* r13 = nullptr;
    check(kb_rle_parse(rle_text.c_str(), 3, &r13));
    int holds = 0;
    std::uint64_t words_checked = 0;
    char* counterexample = nullptr;
    check(kb_check_prop54(r13, budget, &holds, &words_checked, &counterexample));
    kb_rle_free(r13);
    ordered_json result{{"holds", holds == 1}, {"words_checked", words_checked}};
    std::string ce;
    if (counterexample) {
      ce = take_string(counterexample);
      result["counterexample"] = ce;
    } else {
      result["counterexample"] = nullptr;
    }
    Rendering r;
    r.budget_used = budget;
    r.csv = {"holds,words_checked,counterexample",
             std::string(holds ? "true" : "false") + "," + std::to_string(words_checked) + "," + ce};
    r.human = {holds ? "holds" : ("fails, counterexample " + ce),
               "words checked: " + std::to_string(words_checked)};
    write_output(opt, "prop54", ordered_json{{"rle", rle_text}, {"m", 3}}, result, r);
  });

  // ----- automaticity -----
  auto* cmd_auto = app.add_subcommand("automaticity", "truncated Nerode approximation table");
  cmd_auto->add_option("--lang", lang, "language: ll or sing")
      ->check(CLI::IsMember({"ll", "sing"}))
      ->capture_default_str();
  cmd_auto->add_option("--m", m, "alphabet size")->required();
  cmd_auto->add_option("--k", k, "order")->capture_default_str();
  cmd_auto->add_option("--C", C, "slice cut-off length")->required();
  cmd_auto->add_option("--t-max", t_max, "largest truncation t")->required();
  cmd_auto->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    std::cerr << "automaticity: building the " << lang << " slice up to length " << C << "\n";
    ordered_json table = automaticity_table(lang == "ll" ? KB_SLICE_LL : KB_SLICE_SING, m, k, C, t_max,
                                            budget);
    Rendering r;
    r.budget_used = budget;
    r.csv.push_back("domain,t,count");
    for (const auto& row : table["domains"]) {
      const std::string domain = row["domain"].get<std::string>();
      for (unsigned t = 1; t <= t_max; ++t) {
        r.csv.push_back("\"" + domain + "\"," + std::to_string(t) + "," +
                        row["counts"][t - 1].dump());
        r.human.push_back(domain + ", t=" + std::to_string(t) + ": " + row["counts"][t - 1].dump());
      }
    }
    r.notes = {"all three domain conventions are reported; quotient sets are compared as sorted word "
               "lists truncated to length C - t"};
    write_output(opt, "automaticity",
                 ordered_json{{"lang", lang}, {"m", m}, {"k", k}, {"C", C}, {"t_max", t_max}}, table, r);
  });

  // ----- coefficient-range -----
  auto* cmd_cr = app.add_subcommand("coefficient-range", "values of binom(u, ab) over a two-letter class");
  cmd_cr->add_option("--a", letter_a, "first letter")->capture_default_str();
  cmd_cr->add_option("--b", letter_b, "second letter")->capture_default_str();
  cmd_cr->add_option("--i", range_i, "occurrences of a")->required();
  cmd_cr->add_option("--j", range_j, "occurrences of b")->required();
  cmd_cr->callback([&] {
    const std::uint64_t budget = resolved_budget(opt);
    std::uint64_t* values = nullptr;
    std::size_t n_values = 0;
    check(kb_coefficient_range(letter_a, letter_b, range_i, range_j, budget, &values, &n_values));
    ordered_json result = ordered_json::array();
    Rendering r;
    r.budget_used = budget;
    r.csv.push_back("value");
    for (std::size_t i = 0; i < n_values; ++i) {
      result.push_back(values[i]);
      r.csv.push_back(std::to_string(values[i]));
      r.human.push_back(std::to_string(values[i]));
    }
    kb_free(values);
    write_output(opt, "coefficient-range",
                 ordered_json{{"a", letter_a}, {"b", letter_b}, {"i", range_i}, {"j", range_j}}, result, r);
  });

  // ----- seed-tables -----
  auto* cmd_seed = app.add_subcommand("seed-tables", "regenerate every acceptance table in one run");
  cmd_seed->add_option("--dir", dir, "output directory")->capture_default_str();
  bool seed_flag = false;
  app.add_flag("--seed-tables", seed_flag, "same as the seed-tables subcommand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints the requested help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to standard error
    return 2;
  }

  if (seed_flag || cmd_seed->parsed()) return run_seed_tables(opt, dir);
  if (app.get_subcommands().empty()) {
    std::cerr << "usage error: a subcommand is required (see --help)\n";
    return 2;
  }
  return 0;
}
