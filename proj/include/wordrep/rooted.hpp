// rooted.hpp -- occurrence-based word constructions for rooted products

#pragma once

#include <functional>

#include "wordrep/graph.hpp"
#include "wordrep/report.hpp"

namespace wordrep {

/// The i-th occurrence of letter x, as (x, i) with 1-based i.
struct LabelledLetter {
    Letter letter;
    std::size_t index;

    bool operator==(const LabelledLetter& o) const {
        return letter == o.letter && index == o.index;
    }
};

/// Position-preserving occurrence labelling of w.
std::vector<LabelledLetter> label_occurrences(const Word& w);

/// Replacement template for one labelled letter. Receives the letter, its
/// occurrence index, and its total occurrence count in the word; returns the
/// replacement word, or nullopt when no rule covers the pair (an error).
using OccurrenceRule =
    std::function<std::optional<Word>(Letter x, std::size_t index, std::size_t total)>;

/// Applies a string homomorphism to the labelled version of w, concatenating
/// replacement templates in position order. Throws when a rule is missing.
Word occurrence_substitute(const Word& w, const OccurrenceRule& rule);

/// G o K_2 with V(K_2) = {r, 1}, root r. Achieved length
/// 2|w_G| + |O(w_G, 1)|; bound 2|w_G| + kappa_G.
BoundReport construct_rooted_k2(const Graph& g, const Word& w_g);

/// G o K_n with V(K_n) = {r, 1, ..., n-1}, root r (n >= 2). Achieved length
/// n|w_G| + (n-1)|O(w_G, 1)|; bound n|w_G| + (n-1)kappa_G.
BoundReport construct_rooted_kn(const Graph& g, const Word& w_g, std::size_t n);

/// G o H rooted at `root`. Word is h(w_G) J^{w_H}(sigma(w_G)) with the
/// templates read off the rotation of pi(w_H) at the root. Achieved length
/// n|w_G| + |G||w_H| + (n-1)|O(w_G, 1)| with n = |H|; bound
/// |H||w_G| + |G||w_H| + (|H|-1)kappa_G.
BoundReport construct_rooted_h(const Graph& g, const Word& w_g,
                               const Graph& h, const Word& w_h, Letter root);

}  // namespace wordrep
