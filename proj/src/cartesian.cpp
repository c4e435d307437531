#include "wordrep/cartesian.hpp"

#include <algorithm>

#include "wordrep/products.hpp"

namespace wordrep {

Word morphism_g(const Word& w_g, const Word& fiber_word) {
    if (w_g.empty() || fiber_word.empty())
        throw std::invalid_argument("morphism_g: empty input");
    Word out;
    out.reserve(w_g.size() * fiber_word.size());
    for (Letter u : w_g)
        for (Letter v : fiber_word)
            out.push_back(pair_vertex(u, v));
    return out;
}

Word morphism_J(const Word& w_g, const Word& fiber_word) {
    if (w_g.empty() || fiber_word.empty())
        throw std::invalid_argument("morphism_J: empty input");
    Word out;
    out.reserve(w_g.size() * fiber_word.size());
    for (Letter v : fiber_word)
        for (Letter u : w_g)
            out.push_back(pair_vertex(u, v));
    return out;
}

Word rotation(const Word& w, std::size_t i) {
    if (alphabet(w).size() != w.size())
        throw std::invalid_argument("rotation: word is not a permutation");
    if (i < 1 || i > w.size())
        throw std::invalid_argument("rotation: index out of range");
    Word out(w.begin() + (i - 1), w.end());
    out.insert(out.end(), w.begin(), w.begin() + (i - 1));
    return out;
}

Word trim_front(const Word& w, const Graph& g) {
    if (!represents(w, g))
        throw std::invalid_argument("trim_front: word does not represent the graph");
    Letter x = w.front();
    auto second = std::find(w.begin() + 1, w.end(), x);
    if (second == w.end())
        return w;
    LetterSet segment(w.begin() + 1, second);
    for (Letter v : g.vertices())
        if (v != x && !segment.count(v))
            return w;
    return Word(w.begin() + 1, w.end());
}

Word trim_back(const Word& w, const Graph& g) {
    return reversed(trim_front(reversed(w), g));
}

Word trim_fixpoint(const Word& w, const Graph& g) {
    Word cur = w;
    for (;;) {
        Word next = trim_back(trim_front(cur, g), g);
        if (next.size() == cur.size())
            return cur;
        cur = std::move(next);
    }
}

namespace {

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(Word& w, const Word& tail) {
    w.insert(w.end(), tail.begin(), tail.end());
}

BoundReport finish_report(std::string name, Word word, std::size_t bound,
                          const Graph& product) {
    BoundReport r;
    r.construction = std::move(name);
    r.achieved_length = word.size();
    r.bound_value = bound;
    r.bound_holds = r.achieved_length <= bound;
    r.verified_represents = represents(word, product);
    r.word = std::move(word);
    return r;
}

}  // namespace

BoundReport construct_g_k2(const Graph& g, const Word& w_g) {
    if (!represents(w_g, g))
        throw std::invalid_argument("construct_g_k2: word does not represent G");
    Word w_k2{Letter::intern("1"), Letter::intern("2")};
    Graph k2 = standard_graph(GraphKind::complete, 2);
    Graph product = cartesian_product(g, k2);

    Word pi = initial_permutation(w_g);
    Word word = concat({morphism_g(pi, reversed(w_k2)),
                        morphism_J(pi, Word{w_k2[1]}),
                        morphism_g(w_g, w_k2)});
    // the proof's two applications of the front-trim lemma
    word = trim_front(word, product);
    word = trim_front(word, product);

    std::size_t m = g.size();
    BoundReport r = finish_report("g-k2", std::move(word),
                                  2 * w_g.size() + 3 * m - 2, product);
    r.g_vertices = m;
    r.h_vertices = 2;
    r.wg_length = w_g.size();
    r.wh_length = 2;
    return r;
}

BoundReport construct_kn_k2(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("construct_kn_k2: n must be >= 2");
    Letter fa = Letter::intern("a");
    Letter fb = Letter::intern("b");
    std::vector<Letter> base;
    for (std::size_t i = 1; i <= n; ++i)
        base.push_back(Letter::intern(std::to_string(i)));

    // (2^b 2^a ... n^b n^a)(1^b ... n^b)(1^a 1^b ... (n-1)^a (n-1)^b)
    Word word;
    for (std::size_t i = 1; i < n; ++i) {
        word.push_back(pair_vertex(base[i], fb));
        word.push_back(pair_vertex(base[i], fa));
    }
    for (std::size_t i = 0; i < n; ++i)
        word.push_back(pair_vertex(base[i], fb));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        word.push_back(pair_vertex(base[i], fa));
        word.push_back(pair_vertex(base[i], fb));
    }

    Graph kn = standard_graph(GraphKind::complete, n);
    Graph k2;
    k2.add_edge(fa, fb);
    Graph product = cartesian_product(kn, k2);

    BoundReport r = finish_report("kn-k2", std::move(word), 5 * n - 4, product);
    r.g_vertices = n;
    r.h_vertices = 2;
    r.wg_length = n;
    r.wh_length = 2;
    return r;
}

BoundReport construct_g_kn(const Graph& g, const Word& w_g, std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("construct_g_kn: n must be >= 3");
    if (!represents(w_g, g))
        throw std::invalid_argument("construct_g_kn: word does not represent G");
    Word w_kn;
    for (std::size_t i = 1; i <= n; ++i)
        w_kn.push_back(Letter::intern(std::to_string(i)));

    Word pi = initial_permutation(w_g);
    Word word;
    for (std::size_t i = 2; i <= n; ++i) {
        append(word, morphism_g(pi, rotation(w_kn, i)));
        append(word, morphism_J(pi, Word{w_kn[i - 1]}));
    }
    append(word, morphism_g(w_g, w_kn));

    Graph product = cartesian_product(g, standard_graph(GraphKind::complete, n));
    std::size_t m = g.size();
    BoundReport r = finish_report("g-kn", std::move(word),
                                  n * w_g.size() + (n * n - 1) * m, product);
    r.g_vertices = m;
    r.h_vertices = n;
    r.wg_length = w_g.size();
    r.wh_length = n;
    return r;
}

BoundReport construct_g_h(const Graph& g, const Word& w_g,
                          const Graph& h, const Word& w_h) {
    if (!represents(w_g, g))
        throw std::invalid_argument("construct_g_h: word does not represent G");
    if (!represents(w_h, h))
        throw std::invalid_argument("construct_g_h: word does not represent H");

    if (g.size() < h.size()) {
        // the theorem assumes |G| >= |H|; swap and transpose the coordinates
        BoundReport r = construct_g_h(h, w_h, g, w_g);
        Word transposed;
        transposed.reserve(r.word.size());
        for (Letter c : r.word) {
            auto [base, fiber] = split_pair_vertex(c);
            transposed.push_back(pair_vertex(fiber, base));
        }
        r.verified_represents = represents(transposed, cartesian_product(g, h));
        r.word = std::move(transposed);
        std::swap(r.g_vertices, r.h_vertices);
        std::swap(r.wg_length, r.wh_length);
        return r;
    }

    Word pi_g = initial_permutation(w_g);
    Word sigma_g = final_permutation(w_g);
    Word pi_h = initial_permutation(w_h);
    std::size_t n = h.size();

    Word word;
    for (std::size_t i = 2; i <= n; ++i) {
        append(word, morphism_g(pi_g, rotation(pi_h, i)));
        append(word, morphism_J(pi_g, Word{pi_h[i - 1]}));
    }
    append(word, morphism_g(w_g, pi_h));
    append(word, morphism_J(sigma_g, w_h));

    Graph product = cartesian_product(g, h);
    std::size_t m = g.size();
    std::size_t bound = n * w_g.size() + m * w_h.size() + (n * n - 1) * m;
    BoundReport r = finish_report("g-h", std::move(word), bound, product);
    r.g_vertices = m;
    r.h_vertices = n;
    r.wg_length = w_g.size();
    r.wh_length = w_h.size();
    return r;
}

bool occurrence_bound_check(const BoundReport& report, std::size_t k1,
                            std::size_t k2, std::size_t n) {
    for (Letter c : alphabet(report.word))
        if (occurrences(report.word, c) > k1 + k2 + n)
            return false;
    return true;
}

}  // namespace wordrep
