// cartesian.hpp -- morphism-based word constructions for Cartesian products

#pragma once

#include "wordrep/graph.hpp"
#include "wordrep/report.hpp"

namespace wordrep {

/// g^{w_H}(w_G): each letter u of w_G expands to u^{v_1}...u^{v_m} where
/// v_1...v_m = fiber_word. Output length |w_G| * |fiber_word|.
Word morphism_g(const Word& w_g, const Word& fiber_word);

/// J^{w_H}(w_G): for each fiber v in order, the whole of w_G tagged with v.
Word morphism_J(const Word& w_g, const Word& fiber_word);

/// Cyclic rotation of a permutation starting at 1-based position i.
Word rotation(const Word& w, std::size_t i);

/// If w = x U x Z where the first letter x recurs and U (the segment before
/// its second occurrence) contains all of V(G)\{x}, drops the leading x.
/// Otherwise returns w unchanged. Requires represents(w, g).
Word trim_front(const Word& w, const Graph& g);

/// Mirror of trim_front at the word's end.
Word trim_back(const Word& w, const Graph& g);

/// Front and back trims iterated to a fixpoint.
Word trim_fixpoint(const Word& w, const Graph& g);

/// G box K2 via g^{r(w_K2)}(pi(w_G)) J^2(pi(w_G)) g^{w_K2}(w_G) with two
/// front trims. Achieved length 2|w_G| + 3|G| - 2. Fibers are named 1, 2.
BoundReport construct_g_k2(const Graph& g, const Word& w_g);

/// K_n box K_2 via the explicit word of length 5n - 4 (n >= 2).
/// K_n vertices are 1..n, K_2 fibers are a, b.
BoundReport construct_kn_k2(std::size_t n);

/// G box K_n (n >= 3) via the rotation blocks h^2 J^2 ... h^n J^n h^1.
/// Achieved length n|w_G| + (n^2 - 1)|G|. Fibers are 1..n.
BoundReport construct_g_kn(const Graph& g, const Word& w_g, std::size_t n);

/// G box H via h^2 J^{v_2} ... h^n J^{v_n} h^1(w_G) J^{w_H}(sigma(w_G)).
/// When |G| < |H| the factors are swapped and pair coordinates transposed
/// back. Achieved length n|w_G| + m|w_H| + (n^2 - 1)m with m, n the sizes of
/// the larger and smaller factor.
BoundReport construct_g_h(const Graph& g, const Word& w_g,
                          const Graph& h, const Word& w_h);

/// Per-letter occurrence bound of the corollary: every letter of the
/// construct_g_h word occurs at most k1 + k2 + n times, where k1, k2 are the
/// uniformities of the input words and n = min(|G|, |H|).
bool occurrence_bound_check(const BoundReport& report, std::size_t k1,
                            std::size_t k2, std::size_t n);

}  // namespace wordrep
