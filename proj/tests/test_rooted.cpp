#include <doctest.h>

#include "wordrep/products.hpp"
#include "wordrep/rooted.hpp"

using namespace wordrep;

namespace {
Letter L(const char* s) { return Letter::intern(s); }
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("label_occurrences") {
    auto labels = label_occurrences(W("322414"));
    REQUIRE(labels.size() == 6);
    CHECK(labels[0] == LabelledLetter{L("3"), 1});
    CHECK(labels[1] == LabelledLetter{L("2"), 1});
    CHECK(labels[2] == LabelledLetter{L("2"), 2});
    CHECK(labels[3] == LabelledLetter{L("4"), 1});
    CHECK(labels[4] == LabelledLetter{L("1"), 1});
    CHECK(labels[5] == LabelledLetter{L("4"), 2});
    CHECK(label_occurrences(W("aaa"))[2] == LabelledLetter{L("a"), 3});
    CHECK(label_occurrences({}).empty());
}

TEST_CASE("occurrence_substitute") {
    Letter v = L("v");
    // identity rules reproduce g^v(w)
    Word tagged = occurrence_substitute(
        W("abac"), [&](Letter x, std::size_t, std::size_t) -> std::optional<Word> {
            return Word{pair_vertex(x, v)};
        });
    CHECK(format_word(tagged) == "a^v b^v a^v c^v");

    // deleting rules produce the empty word
    Word empty = occurrence_substitute(
        W("abac"),
        [](Letter, std::size_t, std::size_t) -> std::optional<Word> { return Word{}; });
    CHECK(empty.empty());

    // a missing rule is an error
    CHECK_THROWS_AS(
        occurrence_substitute(W("aa"),
                              [](Letter, std::size_t i, std::size_t) -> std::optional<Word> {
                                  if (i > 1) return std::nullopt;
                                  return Word{};
                              }),
        std::invalid_argument);
}

TEST_CASE("construct_rooted_k2") {
    Graph k2 = graph_from_word(W("ab"));
    BoundReport r = construct_rooted_k2(k2, W("ab"));
    CHECK(r.achieved_length == 6);  // 2*2 + |O(w,1)| = 2
    CHECK(format_word(r.word) == "a^1 a^r a^1 b^1 b^r b^1");
    CHECK(r.verified_represents);  // P4
    CHECK(r.bound_value == 2 * 2 + 2);
    CHECK(r.bound_holds);

    Graph k3 = graph_from_word(W("abc"));
    BoundReport r3 = construct_rooted_k2(k3, W("abc"));
    CHECK(r3.achieved_length == 9);  // 2*3 + 3
    CHECK(r3.verified_represents);
}

TEST_CASE("rooted length accounting with repeated letters") {
    // b and c occur twice in the 2-uniform C4 word; singles contribute 3 each
    Graph p3 = graph_from_word(W("abac"));
    BoundReport r = construct_rooted_k2(p3, W("abac"));
    CHECK(r.achieved_length == 2 * 4 + 2);  // O(w,1) = {b, c}
    CHECK(r.verified_represents);
}

TEST_CASE("construct_rooted_kn") {
    Graph k2 = graph_from_word(W("ab"));
    BoundReport r = construct_rooted_kn(k2, W("ab"), 3);
    CHECK(r.achieved_length == 10);  // 3*2 + 2*2
    CHECK(r.verified_represents);

    // n = 2 reduces exactly to the K2 table
    CHECK(construct_rooted_kn(k2, W("ab"), 2).word ==
          construct_rooted_k2(k2, W("ab")).word);
    CHECK_THROWS_AS(construct_rooted_kn(k2, W("ab"), 1), std::invalid_argument);
}

TEST_CASE("construct_rooted_h") {
    Graph k2 = graph_from_word(W("ab"));
    Graph p3;  // d - e - f
    p3.add_edge(L("d"), L("e"));
    p3.add_edge(L("e"), L("f"));

    // end root: the length-4 representant dedf already mentions d first
    Word w_end = W("d e d f");
    REQUIRE(represents(w_end, p3));
    BoundReport r = construct_rooted_h(k2, W("ab"), p3, w_end, L("d"));
    CHECK(r.achieved_length == 18);  // 3*2 + 2*4 + 2*2
    CHECK(r.verified_represents);
    CHECK(r.bound_value == 3 * 2 + 2 * 4 + 2 * clique_number(k2));

    // middle root: needs a representant with e up front (2-uniform, length 6)
    Word w_mid = W("e d f e f d");
    REQUIRE(represents(w_mid, p3));
    BoundReport r2 = construct_rooted_h(k2, W("ab"), p3, w_mid, L("e"));
    CHECK(r2.achieved_length == 22);  // 3*2 + 2*6 + 2*2
    CHECK(r2.verified_represents);

    // the root has to lead pi(w_H); dedf puts d first, so rooting at e fails
    CHECK_THROWS_AS(construct_rooted_h(k2, W("ab"), p3, w_end, L("e")),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_rooted_h(k2, W("ab"), p3, w_end, L("zz")),
                    std::invalid_argument);
}

TEST_CASE("rooted restriction invariants") {
    Graph p3 = graph_from_word(W("abac"));
    BoundReport r = construct_rooted_kn(p3, W("abac"), 3);
    REQUIRE(r.verified_represents);

    // restriction to root fibers represents G under x^r -> x
    Letter root = L("r");
    LetterSet roots;
    for (Letter x : p3.vertices())
        roots.insert(pair_vertex(x, root));
    Word root_word = restrict_to(r.word, roots);
    Word unwrapped;
    for (Letter c : root_word)
        unwrapped.push_back(split_pair_vertex(c).first);
    CHECK(represents(unwrapped, p3));

    // restriction to one copy represents H (here K3) under x^v -> v
    Graph k3;
    k3.add_edge(root, L("1"));
    k3.add_edge(root, L("2"));
    k3.add_edge(L("1"), L("2"));
    for (Letter x : p3.vertices()) {
        LetterSet copy;
        for (Letter v : k3.vertices())
            copy.insert(pair_vertex(x, v));
        Word copy_word = restrict_to(r.word, copy);
        Word fibers;
        for (Letter c : copy_word)
            fibers.push_back(split_pair_vertex(c).second);
        CHECK(represents(fibers, k3));
    }
}
