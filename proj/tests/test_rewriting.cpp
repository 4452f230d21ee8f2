#include <catch2/catch_amalgamated.hpp>

#include "strand/words.hpp"

using namespace strand;

TEST_CASE("word printing and parsing") {
  for (const std::string& s : {"Z", "W0 E H Z", "W2 W0 W0 E E W3 E H H H H Z",
                               "A2 W0 EP HO Z", "B1 EP HO HP Z"}) {
    CHECK(print_word(parse_word(s)) == s);
  }
}

TEST_CASE("single-polarity rewriting to normal form") {
  RewriteSystem b = make_system_B(), r = make_system_R();
  CHECK(print_word(rewrite_to_normal(parse_word("H W0 E H Z"), b)) ==
        "W1 E H H Z");
  CHECK(print_word(rewrite_to_normal(parse_word("W0 W1 E H H Z"), b)) ==
        "W1 W0 E H H Z");
  CHECK(print_word(rewrite_to_normal(parse_word("W0 W0 E H Z"), b)) ==
        "W0 W0 E H Z");
  CHECK(print_word(rewrite_to_normal(parse_word("W0 W0 E H Z"), r)) ==
        "W0 E H Z");
  // normalization is idempotent
  LWord w = rewrite_to_normal(parse_word("H H W0 W1 E E H Z"), b);
  CHECK(rewrite_to_normal(w, b) == w);
}

TEST_CASE("two-polarity rules commute links past fresh moves") {
  RewriteSystem g = make_system_G();
  CHECK(print_word(rewrite_to_normal(parse_word("HP W0 EP HP Z"), g)) ==
        "W1 EP HP HP Z");
  CHECK(print_word(rewrite_to_normal(parse_word("B1 EP HO HP Z"), g)) ==
        "EP B1 HO HP Z");
  CHECK(print_word(rewrite_to_normal(parse_word("A1 A1 EP EO Z"), g)) ==
        "A1 EP EO Z");
  CHECK(print_word(rewrite_to_normal(parse_word("B1 W0 EO HO HP Z"), g)) ==
        "W0 EO B1 HO HP Z");
  CHECK(print_word(rewrite_to_normal(parse_word("HO A1 EP EO Z"), g)) ==
        "A1 EP EO HO Z");
}

TEST_CASE("every rewrite step decreases the termination measure") {
  for (const RewriteSystem& sys :
       {make_system_B(), make_system_R(), make_system_G()}) {
    int steps = 0;
    enumerate_words(sys, 5, [&](const LWord& w) {
      for (const LWord& v : one_step_reducts(w, sys)) {
        CHECK(termination_measure(sys, v) < termination_measure(sys, w));
        ++steps;
      }
    });
    CHECK(steps > 0);
  }
}

TEST_CASE("typed enumeration counts") {
  int nb = 0, ng = 0;
  enumerate_words(make_system_B(), 3, [&](const LWord&) { ++nb; });
  enumerate_words(make_system_G(), 2, [&](const LWord&) { ++ng; });
  CHECK(nb == 17);
  CHECK(ng == 21);
}

TEST_CASE("typed enumeration only yields well-typed words") {
  for (const RewriteSystem& sys : {make_system_B(), make_system_G()}) {
    enumerate_words(sys, 4, [&](const LWord& w) {
      CHECK(word_type(w, sys).has_value());
    });
  }
}

TEST_CASE("bounded local confluence has no bad peaks") {
  CHECK(check_local_confluence(make_system_B(), 5).empty());
  CHECK(check_local_confluence(make_system_R(), 5).empty());
  CHECK(check_local_confluence(make_system_G(), 4).empty());
}

TEST_CASE("word typing rejects polarity violations") {
  RewriteSystem g = make_system_G();
  CHECK(word_type(parse_word("W0 EP HP Z"), g).has_value());
  CHECK_FALSE(word_type(parse_word("W0 EP HO Z"), g).has_value());
  CHECK(word_type(parse_word("A1 EP EO Z"), g).has_value());
  CHECK_FALSE(word_type(parse_word("A1 EO EP Z"), g).has_value());
  CHECK(word_type(parse_word("B1 HO HP Z"), g).has_value());
  CHECK_FALSE(word_type(parse_word("B1 HP HO Z"), g).has_value());
  CHECK_FALSE(word_type(parse_word("W0 E H Z"), g).has_value());
  CHECK_FALSE(word_type(parse_word("W0 EP HP"), g).has_value());
}
