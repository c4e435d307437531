#include "wordrep/products.hpp"

namespace wordrep {

namespace {

std::string wrap(const std::string& name) {
    return name.find('^') == std::string::npos ? name : "(" + name + ")";
}

}  // namespace

Letter pair_vertex(Letter base, Letter fiber) {
    return Letter::intern(wrap(base.name()) + "^" + wrap(fiber.name()));
}

std::pair<Letter, Letter> split_pair_vertex(Letter v) {
    const std::string& s = v.name();
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '^' && depth == 0) {
            auto strip = [](std::string_view part) {
                if (part.size() >= 2 && part.front() == '(' && part.back() == ')')
                    part = part.substr(1, part.size() - 2);
                return Letter::intern(part);
            };
            return {strip(std::string_view(s).substr(0, i)),
                    strip(std::string_view(s).substr(i + 1))};
        }
    }
    throw std::invalid_argument("not a pair vertex: '" + s + "'");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.size() == 0 || h.size() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    Graph p;
    for (Letter u : g.vertices())
        for (Letter v : h.vertices())
            p.add_vertex(pair_vertex(u, v));
    for (Letter u : g.vertices())
        for (const auto& [v, v2] : h.edges())
            p.add_edge(pair_vertex(u, v), pair_vertex(u, v2));
    for (Letter v : h.vertices())
        for (const auto& [u, u2] : g.edges())
            p.add_edge(pair_vertex(u, v), pair_vertex(u2, v));
    return p;
}

Graph rooted_product(const Graph& g, const Graph& h, Letter root) {
    if (g.size() == 0 || h.size() == 0)
        throw std::invalid_argument("rooted_product: empty factor");
    if (!h.has_vertex(root))
        throw std::invalid_argument("rooted_product: root '" + root.name() +
                                    "' is not a vertex of H");
    Graph p;
    for (Letter u : g.vertices())
        for (Letter v : h.vertices())
            p.add_vertex(pair_vertex(u, v));
    for (Letter u : g.vertices())
        for (const auto& [v, v2] : h.edges())
            p.add_edge(pair_vertex(u, v), pair_vertex(u, v2));
    for (const auto& [u, u2] : g.edges())
        p.add_edge(pair_vertex(u, root), pair_vertex(u2, root));
    return p;
}

}  // namespace wordrep
