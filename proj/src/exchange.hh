#pragma once

#include <cstdint>
#include <vector>

#include "word.hh"

namespace kbinom {

/// One adjacent exchange ab -> ba performed while rebuilding a word from its
/// sorted representative.  `pos` is the 1-based index of the left letter of
/// the swapped pair; before the swap the word reads ab at (pos, pos+1) with
/// a < b, after the swap it reads ba.
struct ExchangeStep {
  std::size_t pos = 0;
  Letter a = 0;
  Letter b = 0;

  friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

/// Index of the pair (a, b), a < b, in the canonical pair order
/// (1,2), (1,3), ..., (1,m), (2,3), ..., (m-1,m).
std::size_t pair_index(Letter a, Letter b, unsigned m);

/// Number of unordered letter pairs over an alphabet of size m.
inline std::size_t pair_count(unsigned m) { return static_cast<std::size_t>(m) * (m - 1) / 2; }

/// The full record of rebuilding `target` from its sorted representative by
/// adjacent exchanges: the deterministic step sequence and, per letter pair
/// (a, b) with a < b, the total number of ab -> ba exchanges performed.
/// Each exchange ab -> ba lowers binom(., ab) by exactly one and leaves every
/// other pair coefficient unchanged, so totals[pair_index(a, b)] always
/// equals binom(target, ba).
struct ExchangeTrace {
  Word root;    ///< the sorted representative the rebuild starts from
  Word target;  ///< the word the rebuild ends at
  std::vector<ExchangeStep> steps;
  std::vector<std::uint64_t> totals;  ///< indexed by pair_index over the alphabet of target
};

/// Rebuild w from its sorted representative and record every exchange.
ExchangeTrace exchange_trace(const Word& w);

/// The 2-binomial equivalence class of w, generated by exploring adjacent
/// exchanges ab -> ba (a < b) from the sorted representative and pruning any
/// branch whose pair coefficient would drop below the target binom(w, ab).
/// Deduplicated and sorted lexicographically.  Refuses with a budget error
/// when the search visits more than `budget` distinct words (0 picks the
/// library default).
std::vector<Word> class2(const Word& w, std::uint64_t budget);

/// One explored edge of the class2 search: `child` was generated from
/// `parent` by an ab -> ba exchange.  Every edge the pruned search generates
/// is listed once, in discovery order; a child reached along several paths
/// appears as the target of several edges but is expanded only once.
struct Class2Edge {
  Word parent;
  Word child;
  Letter a = 0;
  Letter b = 0;
};

/// The search DAG behind class2(w), for debugging and visualisation.
std::vector<Class2Edge> class2_tree(const Word& w, std::uint64_t budget);

}  // namespace kbinom
