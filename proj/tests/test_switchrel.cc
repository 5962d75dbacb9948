#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "binomial.hh"
#include "switchrel.hh"
#include "test_util.hh"
#include "word.hh"

using namespace kbinom;
using testutil::W;
using testutil::expect_error;
using testutil::random_word;

namespace {

std::vector<std::string> formatted(const std::vector<Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(format_word(w));
  return out;
}

}  // namespace

TEST_CASE("switch_neighbors finds every single-switch rewrite") {
  // 121212: switching the 12 at positions 1-2 with the 21 at positions 4-5
  // gives 211122; switching the 21 at positions 2-3 with the 12 at
  // positions 5-6 gives 112221.  No other disjoint ab...ba pattern exists.
  CHECK(formatted(switch_neighbors(W("121212", 2))) == std::vector<std::string>{"112221", "211122"});

  const std::vector<std::string> n1221 = formatted(switch_neighbors(W("1221", 2)));
  CHECK(std::find(n1221.begin(), n1221.end(), "2112") != n1221.end());

  CHECK(switch_neighbors(W("1122", 2)).empty());
  CHECK(switch_neighbors(W("", 2)).empty());
  CHECK(switch_neighbors(W("121", 2)).empty());  // overlapping pairs never switch
}

TEST_CASE("switch neighbors are sorted, unique, and distinct from the source") {
  std::mt19937 rng(11);
  for (int round = 0; round < 60; ++round) {
    const Word w = random_word(rng, 3, 9);
    const std::vector<Word> neighbors = switch_neighbors(w);
    for (std::size_t i = 0; i + 1 < neighbors.size(); ++i) CHECK(neighbors[i] < neighbors[i + 1]);
    for (const Word& v : neighbors) CHECK_FALSE(v == w);
  }
}

TEST_CASE("a switch preserves 2-binomial equivalence") {
  std::mt19937 rng(12);
  for (int round = 0; round < 80; ++round) {
    const Word w = random_word(rng, 3, 9);
    for (const Word& v : switch_neighbors(w)) {
      CHECK(equivalent(w, v, 2));
      CHECK_FALSE(equivalent(w, v, 9));  // same word would be the only 9-equivalent one
    }
  }
}

TEST_CASE("switch_class of the worked ternary example is trivial") {
  CHECK(formatted(switch_class(W("1223312", 3), 0)) == std::vector<std::string>{"1223312"});
}

TEST_CASE("switch_class is closed and contains the seed") {
  const std::vector<Word> cls = switch_class(W("121212", 2), 0);
  const std::vector<std::string> texts = formatted(cls);
  CHECK(std::find(texts.begin(), texts.end(), "121212") != texts.end());
  for (const Word& member : cls)
    for (const Word& v : switch_neighbors(member))
      CHECK(std::find(cls.begin(), cls.end(), v) != cls.end());
}

TEST_CASE("switch_class stops at the budget") {
  expect_error([] { switch_class(W("121212", 2), 1); }, ErrorCode::Budget, "budget");
}
