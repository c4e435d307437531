// products.hpp -- Cartesian and rooted products of graphs

#pragma once

#include "wordrep/graph.hpp"

namespace wordrep {

/// The product-vertex letter `base^fiber`. Compound component names are
/// parenthesized so that nested products round-trip: `(a^b)^c`.
Letter pair_vertex(Letter base, Letter fiber);

/// Splits a pair-vertex letter back into (base, fiber).
std::pair<Letter, Letter> split_pair_vertex(Letter v);

/// G box H: vertices V(G) x V(H); (u,v)~(u',v') iff one coordinate is equal
/// and the other moves along an edge of its factor.
Graph cartesian_product(const Graph& g, const Graph& h);

/// G o H: |G| copies of H, the root of copy u identified with u; G-edges
/// join the identified roots. The identified root of copy u is named
/// `u^root`, like every other copy vertex.
Graph rooted_product(const Graph& g, const Graph& h, Letter root);

}  // namespace wordrep
