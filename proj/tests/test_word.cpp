#include <doctest.h>

#include "wordrep/word.hpp"

using namespace wordrep;

namespace {
Letter L(const char* s) { return Letter::intern(s); }
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("alternates") {
    CHECK(alternates(W("xy"), L("x"), L("y")));
    CHECK(alternates(W("35423214"), L("3"), L("5")));   // restriction 353
    CHECK_FALSE(alternates(W("322414"), L("2"), L("4")));  // restriction 2244
    CHECK_FALSE(alternates(W("aabb"), L("a"), L("b")));
    CHECK(alternates(W("abab"), L("a"), L("b")));
    CHECK_THROWS_AS(alternates(W("ab"), L("a"), L("a")), std::invalid_argument);
    CHECK_THROWS_AS(alternates(W("ab"), L("a"), L("z")), std::invalid_argument);
}

TEST_CASE("restrict_to") {
    CHECK(restrict_to(W("35423214"), {L("1"), L("2")}) == W("221"));
    CHECK(restrict_to(W("abc"), {L("a"), L("b"), L("c")}) == W("abc"));
    CHECK(restrict_to(W("abc"), {}) == Word{});
}

TEST_CASE("initial and final permutations") {
    CHECK(initial_permutation(W("35423214")) == W("35421"));
    CHECK(initial_permutation(W("abc")) == W("abc"));
    CHECK(initial_permutation(W("aaa")) == W("a"));
    CHECK(final_permutation(W("35423214")) == W("53214"));
    CHECK(final_permutation(W("abc")) == W("abc"));
    CHECK(final_permutation(W("aba")) == W("ba"));
    CHECK_THROWS_AS(initial_permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(final_permutation({}), std::invalid_argument);
}

TEST_CASE("reverse") {
    CHECK(reversed(W("35423214")) == W("41232453"));
    CHECK(reversed({}) == Word{});
    CHECK(reversed(W("ab")) == W("ba"));
}

TEST_CASE("occurrence counting") {
    Word w = W("322414");
    CHECK(occurrences(w, L("3")) == 1);
    CHECK(occurrences(w, L("2")) == 2);
    CHECK(occurrences(w, L("z")) == 0);
    CHECK(occurrence_class(w, 2) == LetterSet{L("2"), L("4")});
    CHECK(occurrence_class(w, 1) == LetterSet{L("1"), L("3")});
    CHECK(occurrence_class(W("aa"), 3).empty());
    CHECK_THROWS_AS(occurrence_class(w, 0), std::invalid_argument);
}

TEST_CASE("occurrence extremes and uniformity") {
    CHECK(occurrence_extremes(W("322414")) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(occurrence_extremes(W("abc")) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(occurrence_extremes(W("aab")) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK_THROWS_AS(occurrence_extremes({}), std::invalid_argument);
    CHECK(uniformity(W("abab")) == 2);
    CHECK(uniformity(W("abc")) == 1);
    CHECK_FALSE(uniformity(W("aab")).has_value());
}

TEST_CASE("word parsing") {
    CHECK(W("3 5 4 2 3 2 1 4") == W("35423214"));
    CHECK(parse_word("ab").size() == 2);          // compact form splits
    CHECK(parse_word("alpha beta").size() == 2);  // spaced tokens stay whole
    CHECK(parse_word("alpha beta")[0].name() == "alpha");
    CHECK(format_word(W("abc")) == "a b c");
    CHECK_THROWS_AS(Letter::intern(""), ParseError);
    CHECK_THROWS_AS(parse_letter("a^"), ParseError);
    CHECK_THROWS_AS(parse_letter("(a^b"), ParseError);
}

TEST_CASE("pair token round trip") {
    Letter p = parse_letter("a^b");
    CHECK(p.name() == "a^b");
    Letter nested = parse_letter("(a^b)^c");
    CHECK(nested.name() == "(a^b)^c");
    Word w = parse_word("a^b (a^b)^c");
    CHECK(w.size() == 2);
    CHECK(format_word(w) == "a^b (a^b)^c");
}
