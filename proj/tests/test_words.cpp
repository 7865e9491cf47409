#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holo/presentation.hpp"
#include "holo/word.hpp"
#include "oracles.hpp"

using namespace holo;

TEST_CASE("free reduction cancels inverse pairs") {
  Word x = Word::generator(1), y = Word::generator(2);
  CHECK((x * x.inverse()).is_identity());
  Word c = commutator(x, y);
  CHECK((c * c.inverse()).is_identity());
  CHECK(free_reduce({{c, false}, {c, true}}).is_identity());
}

TEST_CASE("nested commutator expands to the hand-reduced word") {
  Word x = Word::generator(1), y = Word::generator(2);
  Word w = commutator(x, commutator(x, y));
  // x x y x' y' x' y x y' x'  -- ten letters, no cancellation
  CHECK(w.length() == 10);
  Word expected;
  for (auto [g, e] : std::initializer_list<std::pair<int, int>>{
           {1, 1}, {1, 1}, {2, 1}, {1, -1}, {2, -1}, {1, -1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}})
    expected.append(g, e);
  CHECK(w == expected);
}

TEST_CASE("free_reduce is idempotent and multiplicative on exponent sums") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = oracle::random_word(rng, 3, 8);
    Word v = oracle::random_word(rng, 3, 8);
    Word uv = u * v;
    // reducing a reduced word changes nothing
    CHECK(free_reduce({{uv, false}}) == uv);
    for (int i = 1; i <= 3; ++i)
      CHECK(exponent_sum(uv, i) == exponent_sum(u, i) + exponent_sum(v, i));
  }
}

TEST_CASE("exponent sums") {
  // w_1 = x1^2 x2 x3^3 x4^5
  Word w = Word::generator(1, 2) * Word::generator(2) * Word::generator(3, 3) *
           Word::generator(4, 5);
  CHECK(exponent_sum(w, 4) == 5);
  CHECK(exponent_sum(w, 1) == 2);
  CHECK(exponent_sum(w, 6) == 0);
  Word c = commutator(Word::generator(1), Word::generator(2));
  CHECK(exponent_sum(c, 1) == 0);
  CHECK(exponent_sum(c, 2) == 0);
  CHECK(exponent_sum(Word{}, 1) == 0);
  CHECK_THROWS_AS(exponent_sum(w, 0), std::out_of_range);
}

TEST_CASE("presentation parsing") {
  SECTION("commutator syntax expands and reduces") {
    GroupPresentation p = parse_presentation("gens: x y; rels: [x,[x,y]]");
    REQUIRE(p.generator_count() == 2);
    REQUIRE(p.relator_count() == 1);
    CHECK(p.relators[0].length() == 10);
    CHECK(p.relators[0] ==
          commutator(Word::generator(1), commutator(Word::generator(1), Word::generator(2))));
  }
  SECTION("free group") {
    GroupPresentation p = parse_presentation("gens: x; rels:");
    CHECK(p.generator_count() == 1);
    CHECK(p.relator_count() == 0);
  }
  SECTION("explicit commutator word") {
    GroupPresentation p = parse_presentation("gens: x y; rels: x y x^-1 y^-1");
    REQUIRE(p.relator_count() == 1);
    CHECK(p.relators[0] == commutator(Word::generator(1), Word::generator(2)));
  }
  SECTION("powers and parentheses") {
    GroupPresentation p = parse_presentation("gens: a b; rels: (a b)^2 ; a^3");
    REQUIRE(p.relator_count() == 2);
    Word ab = Word::generator(1) * Word::generator(2);
    CHECK(p.relators[0] == ab * ab);
    CHECK(p.relators[1] == Word::generator(1, 3));
  }
  SECTION("names with digits and underscores") {
    GroupPresentation p = parse_presentation("gens: a_1 a_2 B9; rels: [a_1,B9]");
    CHECK(p.generator_names == std::vector<std::string>{"a_1", "a_2", "B9"});
    CHECK(p.relators[0] == commutator(Word::generator(1), Word::generator(3)));
  }
  SECTION("errors carry position") {
    CHECK_THROWS_AS(parse_presentation("gens: x; rels: z"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: ; rels:"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x x; rels:"), ParseError);
    try {
      parse_presentation("gens: x;\nrels: y");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.column > 1);
    }
  }
}

TEST_CASE("print / parse round-trip") {
  std::mt19937 rng(7);
  GroupPresentation base = parse_presentation("gens: a b c; rels:");
  for (int trial = 0; trial < 100; ++trial) {
    Word w = oracle::random_word(rng, 3, 10);
    std::string text = "gens: a b c; rels: " + word_str(w, base.generator_names);
    GroupPresentation p = parse_presentation(text);
    REQUIRE(p.relator_count() == 1);
    CHECK(p.relators[0] == w);
  }
}
