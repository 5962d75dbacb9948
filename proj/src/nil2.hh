#pragma once

#include <cstdint>
#include <vector>

#include "word.hh"

namespace kbinom {

/// Signed scattered-subword count of a pattern v with |v| <= 2 inside a
/// signed word u: every embedding of the base letters of v contributes the
/// product of the signs of the matched positions (+1 for a plain letter,
/// -1 for an inverse).  For plain words this is exactly binom(u, v).
/// bracket(u, empty) = 1.
long long bracket(const SignedWord& u, const Word& v);

/// The m^2 group coordinates of a signed word: the m single-letter signed
/// counts followed by the m^2 - m signed pair counts for the two-distinct-
/// letter patterns in the order 12, 13, ..., 1m, 21, 23, ..., (m)(m-1).
/// Equal coordinates characterise equality of the projections into the free
/// nil-2 group, and on plain words equality of coordinates is exactly
/// 2-binomial equivalence.
std::vector<long long> phi(const SignedWord& u);

/// phi of a plain word (no inverses).
std::vector<long long> phi(const Word& w);

/// The normal form of the image of a plain word in the free nil-2 group:
/// the Parikh vector together with the commutator exponents, which for the
/// pair (a, b), a < b, equal binom(w, ba).  Exponents are listed in the
/// canonical pair order (1,2), (1,3), ..., (m-1,m).
struct NilNormalForm {
  std::vector<std::uint64_t> counts;     ///< Parikh vector, m entries
  std::vector<std::uint64_t> exponents;  ///< binom(w, ba) per pair (a, b), a < b

  friend bool operator==(const NilNormalForm&, const NilNormalForm&) = default;
};

NilNormalForm nil_normal_form(const Word& w);

}  // namespace kbinom
