#pragma once

#include <cstdint>
#include <vector>

#include "word.hh"

namespace kbinom {

/// All words reachable from w by one switch rewrite
///   x ab y ba z  <->  x ba y ab z   (a != b),
/// i.e. swapping a factor ab with a later disjoint factor ba.  Both rewrite
/// orientations are covered because the scan ranges over all ordered letter
/// pairs.  The result is sorted and duplicate-free and never contains w
/// itself unless w is fixed by some rewrite (impossible: a rewrite always
/// changes at least one position).
std::vector<Word> switch_neighbors(const Word& w);

/// The reflexive-transitive closure of the switch rewrite: every word
/// reachable from w by any number of switch steps, computed by breadth-first
/// search.  Always contains w.  Refuses with a budget error when more than
/// `budget` words are discovered (0 picks the library default).
std::vector<Word> switch_class(const Word& w, std::uint64_t budget);

}  // namespace kbinom
