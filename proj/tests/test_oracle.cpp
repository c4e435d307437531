#include <doctest.h>

#include "graph_families.hpp"
#include "naive_oracle.hpp"
#include "wordrep/oracle.hpp"

using namespace wordrep;

namespace {
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("min_length_word on small graphs") {
    SearchResult c4 = min_length_word(standard_graph(GraphKind::cycle, 4));
    REQUIRE(c4.status == SearchStatus::found);
    CHECK(c4.length == 6);
    CHECK(represents(c4.word, standard_graph(GraphKind::cycle, 4)));

    for (std::size_t n = 1; n <= 4; ++n) {
        SearchResult kn = min_length_word(standard_graph(GraphKind::complete, n));
        REQUIRE(kn.status == SearchStatus::found);
        CHECK(kn.length == n);
    }

    SearchResult p3 = min_length_word(graph_from_word(W("abac")));
    REQUIRE(p3.status == SearchStatus::found);
    CHECK(p3.length == 4);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
    SearchBudget tiny;
    tiny.max_states = 5;
    SearchResult res = min_length_word(standard_graph(GraphKind::cycle, 4), tiny);
    CHECK(res.status == SearchStatus::budget_exhausted);

    SearchBudget short_words;
    short_words.max_length = 5;  // l(C4) = 6 is out of reach
    SearchResult none = min_length_word(standard_graph(GraphKind::cycle, 4), short_words);
    CHECK(none.status == SearchStatus::not_found);
}

TEST_CASE("symmetry reduction finds the same length") {
    Graph c4 = standard_graph(GraphKind::cycle, 4);
    SearchBudget sym;
    sym.symmetry_reduction = true;
    SearchResult res = min_length_word(c4, sym);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.length == 6);
    CHECK(represents(res.word, c4));
}

TEST_CASE("representation_number") {
    CHECK(representation_number(standard_graph(GraphKind::complete, 3)).k == 1);
    CHECK(representation_number(standard_graph(GraphKind::complete, 4)).k == 1);
    CHECK(representation_number(standard_graph(GraphKind::cycle, 4)).k == 2);
    CHECK(representation_number(graph_from_word(W("abac"))).k == 2);

    SearchBudget tiny;
    tiny.max_states = 3;
    CHECK(representation_number(standard_graph(GraphKind::cycle, 4), tiny).status ==
          SearchStatus::budget_exhausted);
}

TEST_CASE("minimal_word_audit") {
    Graph c4 = standard_graph(GraphKind::cycle, 4);
    SearchResult res = min_length_word(c4);
    REQUIRE(res.status == SearchStatus::found);
    AuditRecord a = minimal_word_audit(c4, res.word);
    CHECK(a.l == 6);
    CHECK(a.singletons <= 2);
    CHECK(a.o_max - a.o_min <= 2);
    CHECK(a.lemma_kap_holds);
    CHECK(a.theorem_di_holds);

    Graph k3 = standard_graph(GraphKind::complete, 3);
    AuditRecord ak = minimal_word_audit(k3, W("1 2 3"));
    CHECK(ak.singletons == 3);
    CHECK(ak.clique_number == 3);
    CHECK(ak.o_max - ak.o_min == 0);

    Graph p3 = graph_from_word(W("abac"));
    AuditRecord ap = minimal_word_audit(p3, W("abac"));
    CHECK(ap.singletons == 2);
    CHECK(ap.clique_number == 2);
    CHECK(ap.theorem_di_holds);

    CHECK_THROWS_AS(minimal_word_audit(k3, W("aabb")), std::invalid_argument);
}

TEST_CASE("audit JSON is stable") {
    Graph k2 = standard_graph(GraphKind::complete, 2);
    AuditRecord a = minimal_word_audit(k2, W("1 2"));
    auto j = to_json(a);
    CHECK(j.dump() ==
          R"({"l":2,"word":["1","2"],"singletons":2,"clique_number":2,)"
          R"("o_min":1,"o_max":1,"diameter":1,)"
          R"("lemma_kap_holds":true,"theorem_di_holds":true})");
}

TEST_CASE("oracle agrees with the serial reference on tiny graphs") {
    // spot check; the full sweep over every <= 3-vertex graph runs in the
    // acceptance suite
    Graph p3 = graph_from_word(W("abac"));
    SearchResult fast = min_length_word(p3);
    auto slow = naive::min_length_word(p3, 2 * p3.size());
    REQUIRE(slow.word.has_value());
    CHECK(fast.length == slow.length);
    CHECK(fast.word == *slow.word);
}

TEST_CASE("graph family enumeration helper") {
    CHECK(families::connected_up_to_iso(1).size() == 1);
    CHECK(families::connected_up_to_iso(2).size() == 1);
    CHECK(families::connected_up_to_iso(3).size() == 2);
    CHECK(families::connected_up_to_iso(4).size() == 6);
}
