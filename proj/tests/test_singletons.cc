#include <doctest.h>

#include <string>
#include <vector>

#include "census.hh"
#include "singletons.hh"
#include "test_util.hh"
#include "word.hh"

using namespace kbinom;
using testutil::W;
using testutil::expect_error;

TEST_CASE("parse_sequence round trips and validates terms") {
  const Seq s = parse_sequence("2,50,31752");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 2);
  CHECK(s[2] == 31752);
  CHECK(format_sequence(s) == "2,50,31752");

  CHECK(parse_sequence("").empty());
  expect_error([] { parse_sequence("2,,3"); }, ErrorCode::Parse);
  expect_error([] { parse_sequence("2,0"); }, ErrorCode::Parse, "positive");
  expect_error([] { parse_sequence("2,-5"); }, ErrorCode::Parse);
}

TEST_CASE("validate_sequence checks the three growth conditions per term") {
  const std::vector<SeqCheck> good = validate_sequence(parse_sequence("2,50,31752"));
  REQUIRE(good.size() == 3);
  for (const SeqCheck& c : good) {
    CHECK(c.d1);
    CHECK(c.d2);
    CHECK(c.d3);
    CHECK(c.all());
  }
  CHECK(sequence_ok(parse_sequence("2,50,31752")));

  // 8 = 2 * 2^2 passes the square condition but is far too small to clear
  // the sum condition after s_1 = 2.
  const std::vector<SeqCheck> bad = validate_sequence(parse_sequence("2,8"));
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].all());
  CHECK(bad[1].d1);
  CHECK_FALSE(bad[1].d2);
  CHECK_FALSE(sequence_ok(parse_sequence("2,8")));

  // 3 is not twice a perfect square.
  CHECK_FALSE(validate_sequence(parse_sequence("3"))[0].d1);
}

TEST_CASE("the doubled power tower satisfies every condition") {
  // 2 * 8^(8^n) for n = 1, 2.
  Seq tower;
  mpz_class first;
  mpz_ui_pow_ui(first.get_mpz_t(), 8, 8);
  tower.push_back(2 * first);
  mpz_class second;
  mpz_ui_pow_ui(second.get_mpz_t(), 8, 64);
  tower.push_back(2 * second);

  CHECK(tower[0] == 33554432);
  CHECK(sequence_ok(tower));
}

TEST_CASE("minimal_sequence grows greedily") {
  const Seq s = minimal_sequence(3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 2);
  CHECK(s[1] == 50);
  CHECK(s[2] == 31752);
  CHECK(sequence_ok(s));

  CHECK(minimal_sequence(1) == Seq{2});
  CHECK(minimal_sequence(0).empty());

  // Minimality of the third term: no smaller doubled square works.
  Seq probe = minimal_sequence(2);
  probe.push_back(2 * mpz_class(125) * 125);  // 31250, the doubled square just below
  CHECK_FALSE(sequence_ok(probe));
}

TEST_CASE("rho builds the cyclic run word") {
  const Seq s = minimal_sequence(3);
  CHECK(format_rle(rho(1, 3, s)) == "1^1 2^50 3^2");
  CHECK(format_rle(rho(3, 4, s)) == "1^3 2^31752 3^50 1^2");
  CHECK(format_rle(rho(2, 2, s)) == "1^2 2^2");
  CHECK(rho(1, 3, s).block_count() == 3);
  CHECK(rho(3, 4, s).block_count() == 4);

  expect_error([&] { rho(0, 3, s); }, ErrorCode::Range, "p");
  expect_error([&] { rho(1, 1, s); }, ErrorCode::Range);
  expect_error([&] { rho(1, 5, s); }, ErrorCode::Range);
}

TEST_CASE("is_singleton separates lonely words from paired ones") {
  CHECK(is_singleton(W("1122", 2), 2, 0));
  CHECK(is_singleton(W("1212", 2), 2, 0));
  CHECK_FALSE(is_singleton(W("1221", 2), 2, 0));
  CHECK_FALSE(is_singleton(W("2112", 2), 2, 0));
  CHECK(is_singleton(W("", 2), 2, 0));
  CHECK(is_singleton(W("1", 2), 2, 0));

  // Order 1 collapses every abelian class: only trivial classes are singletons.
  CHECK_FALSE(is_singleton(W("12", 2), 1, 0));
  CHECK(is_singleton(W("11", 2), 1, 0));

  expect_error([] { is_singleton(W("1122", 2), 2, 3); }, ErrorCode::Budget, "6");
}

TEST_CASE("the length-53 family word is alone in its abelian class") {
  const Seq s = minimal_sequence(2);
  const Word w = expand(rho(1, 3, s), 0);
  REQUIRE(w.size() == 53);
  CHECK(abelian_class_size(parikh(w)) == 70278);
  CHECK(is_singleton(w, 2, 0));
}

TEST_CASE("check_prop54 confirms domination maximality for family words") {
  const Seq s = minimal_sequence(2);

  const Prop54Report r13 = check_prop54(rho(1, 3, s), 0);
  CHECK(r13.holds);
  CHECK(r13.words_checked == 70277);
  CHECK_FALSE(r13.counterexample.has_value());

  const Prop54Report r22 = check_prop54(rho(2, 2, s), 0);
  CHECK(r22.holds);
  CHECK_FALSE(r22.counterexample.has_value());
}

TEST_CASE("check_prop54 reports a dominating word when one exists") {
  // 132 is dominated by 123: binom(123, 12) = binom(123, 23) = 1 while 132
  // scores (1, 0, 0) on the pair patterns (12, 23, 31).
  const Prop54Report r = check_prop54(parse_rle("1 3 2", 3), 0);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(format_word(*r.counterexample) == "123");

  expect_error([] { check_prop54(parse_rle("1 2", 2), 0); }, ErrorCode::Unsupported);
}
