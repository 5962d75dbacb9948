#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "word.hh"

namespace kbinom {

/// Which canonical language a finite automaticity slice is cut from.
enum class SliceKind {
  LL,    ///< lexicographically least class representatives
  Sing,  ///< words alone in their class
};

/// The length-bounded slice L cap Sigma^{<= C} of one of the canonical
/// languages, the finite object the truncated Nerode approximation works on.
struct Slice {
  SliceKind kind = SliceKind::LL;
  unsigned m = 0;
  unsigned k = 0;
  unsigned C = 0;
  std::vector<Word> words;  ///< sorted by length, lexicographic inside a length
};

Slice build_slice(SliceKind kind, unsigned m, unsigned k, unsigned C, std::uint64_t budget);

/// Domain conventions for the truncated Nerode count.  The approximation
/// relation compares truncated left quotients
///   u^{-1}(L cap Sigma^{<= C}) cap Sigma^{<= C - t},
/// and the resulting counts depend on which test words u are classified.
/// All three defensible readings are implemented and the choice is recorded
/// by name in machine output.
enum class NerodeDomain {
  UpToT,          ///< all u with |u| <= t, including the empty word
  ExactT,         ///< only u with |u| = t
  NonEmptyUpToT,  ///< all u with 1 <= |u| <= t
};

/// Human-readable name of a domain convention, stable across releases.
const char* nerode_domain_name(NerodeDomain domain);

/// Number of classes of the truncated-quotient equivalence over the chosen
/// domain of test words.  Quotient sets are canonicalised as sorted word
/// lists before comparison.  Errors when t exceeds the slice cut-off C.
std::uint64_t approx_nerode_count(const Slice& slice, unsigned t, NerodeDomain domain);

}  // namespace kbinom
