#include "wordrep/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace wordrep {

void Graph::add_vertex(Letter v) {
    if (vset_.insert(v).second) {
        order_.push_back(v);
        adj_[v];
    }
}

void Graph::add_edge(Letter a, Letter b) {
    if (a == b)
        throw std::invalid_argument("self-loop on vertex '" + a.name() + "'");
    add_vertex(a);
    add_vertex(b);
    adj_[a].insert(b);
    adj_[b].insert(a);
    edges_.insert(std::minmax(a, b));
}

bool Graph::has_edge(Letter a, Letter b) const {
    return edges_.count(std::minmax(a, b)) != 0;
}

const LetterSet& Graph::neighbors(Letter v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument("unknown vertex '" + v.name() + "'");
    return it->second;
}

std::vector<std::pair<Letter, Letter>> Graph::edges() const {
    return {edges_.begin(), edges_.end()};
}

Graph graph_from_word(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("graph_from_word: empty word");
    Graph g;
    Word dom = initial_permutation(w);
    for (Letter v : dom)
        g.add_vertex(v);
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j)
            if (alternates(w, dom[i], dom[j]))
                g.add_edge(dom[i], dom[j]);
    return g;
}

bool represents(const Word& w, const Graph& g) {
    if (w.empty() || g.size() == 0)
        return false;
    if (alphabet(w) != g.vertex_set())
        return false;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (alternates(w, vs[i], vs[j]) != g.has_edge(vs[i], vs[j]))
                return false;
    return true;
}

namespace {

void extend_clique(const Graph& g, const std::vector<Letter>& candidates,
                   std::size_t depth, std::size_t& best) {
    if (depth + candidates.size() <= best)
        return;
    best = std::max(best, depth);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<Letter> next;
        const auto& nb = g.neighbors(candidates[i]);
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (nb.count(candidates[j]))
                next.push_back(candidates[j]);
        extend_clique(g, next, depth + 1, best);
    }
}

}  // namespace

std::size_t clique_number(const Graph& g) {
    if (g.size() == 0)
        throw std::invalid_argument("clique_number: empty graph");
    std::size_t best = 0;
    extend_clique(g, g.vertices(), 0, best);
    return best;
}

namespace {

// BFS distances from src; unreachable vertices are absent.
std::map<Letter, std::size_t> bfs_distances(const Graph& g, Letter src) {
    std::map<Letter, std::size_t> dist;
    dist[src] = 0;
    std::deque<Letter> queue{src};
    while (!queue.empty()) {
        Letter u = queue.front();
        queue.pop_front();
        for (Letter v : g.neighbors(u))
            if (!dist.count(v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.size() == 0)
        return true;
    return bfs_distances(g, g.vertices().front()).size() == g.size();
}

std::size_t diameter(const Graph& g) {
    if (g.size() == 0)
        throw std::invalid_argument("diameter: empty graph");
    std::size_t diam = 0;
    for (Letter v : g.vertices()) {
        auto dist = bfs_distances(g, v);
        if (dist.size() != g.size())
            throw DisconnectedGraphError();
        for (const auto& [u, d] : dist)
            diam = std::max(diam, d);
    }
    return diam;
}

Graph standard_graph(GraphKind kind, std::size_t n) {
    if (n < 1 || (kind == GraphKind::cycle && n < 3))
        throw std::invalid_argument("standard_graph: n out of range");
    std::vector<Letter> vs;
    vs.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        vs.push_back(Letter::intern(std::to_string(i)));
    Graph g;
    for (Letter v : vs)
        g.add_vertex(v);
    switch (kind) {
        case GraphKind::complete:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    g.add_edge(vs[i], vs[j]);
            break;
        case GraphKind::path:
            for (std::size_t i = 0; i + 1 < n; ++i)
                g.add_edge(vs[i], vs[i + 1]);
            break;
        case GraphKind::cycle:
            for (std::size_t i = 0; i < n; ++i)
                g.add_edge(vs[i], vs[(i + 1) % n]);
            break;
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword))
            continue;
        try {
            if (keyword == "vertex") {
                std::string name;
                if (!(ls >> name))
                    throw ParseError("vertex needs a name");
                g.add_vertex(parse_letter(name));
            } else if (keyword == "edge") {
                std::string a, b;
                if (!(ls >> a >> b))
                    throw ParseError("edge needs two endpoints");
                g.add_edge(parse_letter(a), parse_letter(b));
            } else {
                throw ParseError("unknown directive '" + keyword + "'");
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("trailing token '" + extra + "'");
        } catch (const ParseError& e) {
            throw ParseError(e.line ? std::string(e.what()) : std::string(e.what()), lineno);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
    std::string out;
    for (Letter v : g.vertices())
        out += "vertex " + v.name() + "\n";
    for (const auto& [a, b] : g.edges())
        out += "edge " + a.name() + " " + b.name() + "\n";
    return out;
}

}  // namespace wordrep
