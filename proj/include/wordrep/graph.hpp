// graph.hpp -- simple undirected graphs and the word <-> graph bridge

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// Raised by diameter() on disconnected input.
struct DisconnectedGraphError : std::invalid_argument {
    DisconnectedGraphError() : std::invalid_argument("graph is not connected") {}
};

/// A finite simple undirected graph over named vertices. Vertex declaration
/// order is kept for deterministic serialization; equality ignores it and
/// compares vertex and edge sets.
class Graph {
public:
    Graph() = default;

    void add_vertex(Letter v);
    /// Adds an undirected edge, implicitly declaring missing endpoints.
    /// Self-loops are rejected.
    void add_edge(Letter a, Letter b);

    bool has_vertex(Letter v) const { return vset_.count(v) != 0; }
    bool has_edge(Letter a, Letter b) const;

    const std::vector<Letter>& vertices() const { return order_; }
    const LetterSet& vertex_set() const { return vset_; }
    const LetterSet& neighbors(Letter v) const;

    /// Edges as canonical (min, max) pairs in lexicographic order.
    std::vector<std::pair<Letter, Letter>> edges() const;

    std::size_t size() const { return order_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t degree(Letter v) const { return neighbors(v).size(); }

    bool operator==(const Graph& o) const {
        return vset_ == o.vset_ && edges_ == o.edges_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::vector<Letter> order_;
    LetterSet vset_;
    std::map<Letter, LetterSet> adj_;
    std::set<std::pair<Letter, Letter>> edges_;
};

/// The graph induced by w: vertices are the distinct letters, xy is an edge
/// iff x and y alternate in w. Rejects the empty word.
Graph graph_from_word(const Word& w);

/// True iff w is a word-representant of g: the alphabets match exactly and
/// the alternation relation of w equals E(g).
bool represents(const Word& w, const Graph& g);

/// kappa_G: size of a maximum clique, computed exactly by branch and bound.
std::size_t clique_number(const Graph& g);

/// Max over vertex pairs of shortest-path length (BFS per vertex).
/// Throws DisconnectedGraphError on disconnected input.
std::size_t diameter(const Graph& g);

bool is_connected(const Graph& g);

enum class GraphKind { complete, path, cycle };

/// The named graph with vertices labelled 1..n. Cycles need n >= 3.
Graph standard_graph(GraphKind kind, std::size_t n);

// --- text format -------------------------------------------------------------
// Line-oriented: '#' starts a comment; `vertex NAME` declares a vertex;
// `edge NAME NAME` declares an edge (implicitly declaring endpoints).

Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace wordrep
