#include "wordrep/rooted.hpp"

#include <algorithm>
#include <map>

#include "wordrep/cartesian.hpp"
#include "wordrep/products.hpp"

namespace wordrep {

std::vector<LabelledLetter> label_occurrences(const Word& w) {
    std::vector<LabelledLetter> out;
    out.reserve(w.size());
    std::map<Letter, std::size_t> seen;
    for (Letter c : w)
        out.push_back({c, ++seen[c]});
    return out;
}

Word occurrence_substitute(const Word& w, const OccurrenceRule& rule) {
    Word out;
    for (const auto& [x, i] : label_occurrences(w)) {
        auto replacement = rule(x, i, occurrences(w, x));
        if (!replacement)
            throw std::invalid_argument("occurrence_substitute: no rule for (" +
                                        x.name() + ", " + std::to_string(i) + ")");
        out.insert(out.end(), replacement->begin(), replacement->end());
    }
    return out;
}

namespace {

Word tag(Letter x, const Word& fibers) {
    Word out;
    out.reserve(fibers.size());
    for (Letter v : fibers)
        out.push_back(pair_vertex(x, v));
    return out;
}

BoundReport finish_report(std::string name, Word word, std::size_t bound,
                          const Graph& product, Letter root) {
    BoundReport r;
    r.construction = std::move(name);
    r.achieved_length = word.size();
    r.bound_value = bound;
    r.bound_holds = r.achieved_length <= bound;
    r.verified_represents = represents(word, product);
    r.word = std::move(word);
    r.root = root.name();
    return r;
}

}  // namespace

BoundReport construct_rooted_k2(const Graph& g, const Word& w_g) {
    return construct_rooted_kn(g, w_g, 2);
}

BoundReport construct_rooted_kn(const Graph& g, const Word& w_g, std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("construct_rooted_kn: n must be >= 2");
    if (!represents(w_g, g))
        throw std::invalid_argument("construct_rooted_kn: word does not represent G");

    Letter root = Letter::intern("r");
    Word non_root;
    for (std::size_t i = 1; i < n; ++i)
        non_root.push_back(Letter::intern(std::to_string(i)));

    // O = 1 and i = 2 share the template x^1..x^{n-1} x^r x^1..x^{n-1}
    Word wide = non_root;
    wide.push_back(root);
    wide.insert(wide.end(), non_root.begin(), non_root.end());
    Word tail{root};
    tail.insert(tail.end(), non_root.begin(), non_root.end());

    Word word = occurrence_substitute(
        w_g, [&](Letter x, std::size_t i, std::size_t total) -> std::optional<Word> {
            if (total == 1)
                return tag(x, wide);
            if (i == 1)
                return tag(x, Word{root});
            if (i == 2)
                return tag(x, wide);
            return tag(x, tail);
        });

    Graph h;
    h.add_vertex(root);
    for (Letter v : non_root)
        h.add_vertex(v);
    for (std::size_t i = 0; i < n - 1; ++i) {
        h.add_edge(root, non_root[i]);
        for (std::size_t j = i + 1; j < n - 1; ++j)
            h.add_edge(non_root[i], non_root[j]);
    }
    Graph product = rooted_product(g, h, root);

    std::size_t bound = n * w_g.size() + (n - 1) * clique_number(g);
    BoundReport r = finish_report(n == 2 ? "rooted-k2" : "rooted-kn",
                                  std::move(word), bound, product, root);
    r.g_vertices = g.size();
    r.h_vertices = n;
    r.wg_length = w_g.size();
    r.wh_length = n;
    return r;
}

BoundReport construct_rooted_h(const Graph& g, const Word& w_g,
                               const Graph& h, const Word& w_h, Letter root) {
    if (!h.has_vertex(root))
        throw std::invalid_argument("construct_rooted_h: root not in V(H)");
    if (!represents(w_g, g))
        throw std::invalid_argument("construct_rooted_h: word does not represent G");
    if (!represents(w_h, h))
        throw std::invalid_argument("construct_rooted_h: word does not represent H");

    Word pi_h = initial_permutation(w_h);
    std::size_t n = pi_h.size();
    // The substitution only glues correctly onto the trailing J block when the
    // root is the first letter of pi(w_H): for a fiber v that occurs before the
    // root in w_H, the template restriction to {v, root} ends with v while
    // w_H|_{v,root} starts with v, so the pair can never alternate. Demand a
    // representant with the root up front instead of silently failing.
    if (n > 1 && pi_h.front() != root)
        throw std::invalid_argument(
            "construct_rooted_h: root must be the first letter of pi(w_H); "
            "pick a representant of H that mentions the root first");

    // rotation of pi(w_H) starting at the root: v_r v_{r+1} .. v_n v_1 .. v_{r-1}
    Word at_root = pi_h;
    // template for O = 1 and i = 2: the rotation starting after the root,
    // concatenated twice, final letter dropped (2n - 1 letters, root once)
    Word after_root = n > 1 ? rotation(pi_h, 2) : pi_h;
    Word wide = after_root;
    wide.insert(wide.end(), after_root.begin(), after_root.end());
    wide.pop_back();

    Word word = occurrence_substitute(
        w_g, [&](Letter x, std::size_t i, std::size_t total) -> std::optional<Word> {
            if (total == 1)
                return tag(x, wide);
            if (i == 1)
                return tag(x, Word{root});
            if (i == 2)
                return tag(x, wide);
            return tag(x, at_root);
        });
    Word sigma_g = final_permutation(w_g);
    Word block = morphism_J(sigma_g, w_h);
    word.insert(word.end(), block.begin(), block.end());

    Graph product = rooted_product(g, h, root);
    std::size_t bound =
        n * w_g.size() + g.size() * w_h.size() + (n - 1) * clique_number(g);
    BoundReport r = finish_report("rooted-h", std::move(word), bound, product, root);
    r.g_vertices = g.size();
    r.h_vertices = n;
    r.wg_length = w_g.size();
    r.wh_length = w_h.size();
    return r;
}

}  // namespace wordrep
