#include "wordrep/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wordrep {

int oracle_thread_cap() {
    if (const char* env = std::getenv("WORDREP_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

std::vector<Letter> sorted_alphabet(const Graph& g) {
    std::vector<Letter> sigma(g.vertex_set().begin(), g.vertex_set().end());
    return sigma;
}

// Depth-first enumeration of all words of a fixed length over one
// first-letter subtree, in lexicographic order. Counts every node against
// its own allowance so that exhaustion is deterministic per subtree,
// independent of scheduling.
struct SubtreeSearch {
    const Graph& g;
    const std::vector<Letter>& sigma;
    std::size_t target_len;
    std::size_t allowance;

    std::size_t nodes = 0;
    bool exhausted = false;
    Word stack;
    std::vector<std::size_t> counts;  // per sigma index
    std::size_t missing = 0;

    SubtreeSearch(const Graph& g, const std::vector<Letter>& sigma,
                  std::size_t target_len, std::size_t allowance)
        : g(g), sigma(sigma), target_len(target_len), allowance(allowance),
          counts(sigma.size(), 0), missing(sigma.size()) {}

    void push(std::size_t idx) {
        if (counts[idx]++ == 0)
            --missing;
        stack.push_back(sigma[idx]);
    }

    void pop(std::size_t idx) {
        stack.pop_back();
        if (--counts[idx] == 0)
            ++missing;
    }

    std::optional<Word> run(std::size_t first) {
        push(first);
        std::optional<Word> hit;
        dfs(hit);
        pop(first);
        return hit;
    }

    bool dfs(std::optional<Word>& hit) {
        if (++nodes > allowance) {
            exhausted = true;
            return true;  // stop descending
        }
        if (stack.size() == target_len) {
            if (missing == 0 && represents(stack, g)) {
                hit = stack;
                return true;
            }
            return false;
        }
        // a suffix must still be able to introduce every missing letter
        if (target_len - stack.size() < missing)
            return false;
        for (std::size_t idx = 0; idx < sigma.size(); ++idx) {
            push(idx);
            bool done = dfs(hit);
            pop(idx);
            if (done)
                return true;
        }
        return false;
    }
};

struct LevelOutcome {
    std::optional<Word> hit;
    bool exhausted = false;
    std::size_t consumed = 0;
};

LevelOutcome search_level(const Graph& g, const std::vector<Letter>& sigma,
                          const std::vector<std::size_t>& firsts,
                          std::size_t target_len, std::size_t allowance) {
    std::vector<std::optional<Word>> hits(firsts.size());
    std::vector<std::size_t> consumed(firsts.size(), 0);
    std::vector<char> exhausted(firsts.size(), 0);

    const int cap = oracle_thread_cap();
    (void)cap;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(cap)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(firsts.size()); ++i) {
        SubtreeSearch search(g, sigma, target_len, allowance);
        hits[i] = search.run(firsts[i]);
        consumed[i] = search.nodes;
        exhausted[i] = search.exhausted;
    }

    LevelOutcome out;
    out.consumed = std::accumulate(consumed.begin(), consumed.end(), std::size_t{0});
    out.exhausted = std::find(exhausted.begin(), exhausted.end(), 1) != exhausted.end();
    for (const auto& h : hits)
        if (h) {
            out.hit = h;  // firsts are in lexicographic order; first hit wins
            break;
        }
    return out;
}

// Vertex orbits under the automorphism group, by brute force over
// permutations of the name-sorted vertex list. Desk scale only.
std::vector<std::size_t> orbit_representatives(const Graph& g,
                                               const std::vector<Letter>& sigma) {
    const std::size_t n = sigma.size();
    // The automorphisms form a group, so the orbit minimum of vertex i is
    // the minimum of perm[i] over all automorphisms.
    std::vector<std::size_t> orbit_min(n);
    std::iota(orbit_min.begin(), orbit_min.end(), 0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool automorphism = true;
        for (std::size_t i = 0; i < n && automorphism; ++i)
            for (std::size_t j = i + 1; j < n && automorphism; ++j)
                if (g.has_edge(sigma[i], sigma[j]) !=
                    g.has_edge(sigma[perm[i]], sigma[perm[j]]))
                    automorphism = false;
        if (automorphism)
            for (std::size_t i = 0; i < n; ++i)
                orbit_min[i] = std::min(orbit_min[i], perm[i]);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i)
        if (orbit_min[i] == i)
            reps.push_back(i);
    return reps;
}

}  // namespace

SearchResult min_length_word(const Graph& g, SearchBudget budget) {
    if (g.size() == 0)
        throw std::invalid_argument("min_length_word: empty graph");
    const std::vector<Letter> sigma = sorted_alphabet(g);
    const std::size_t max_len =
        budget.max_length ? budget.max_length : 2 * g.size();

    std::vector<std::size_t> firsts;
    if (budget.symmetry_reduction) {
        firsts = orbit_representatives(g, sigma);
    } else {
        firsts.resize(sigma.size());
        std::iota(firsts.begin(), firsts.end(), 0);
    }

    std::size_t consumed = 0;
    for (std::size_t len = g.size(); len <= max_len; ++len) {
        if (consumed >= budget.max_states)
            return {SearchStatus::budget_exhausted, {}, 0};
        LevelOutcome level =
            search_level(g, sigma, firsts, len, budget.max_states - consumed);
        consumed += level.consumed;
        if (level.exhausted)
            return {SearchStatus::budget_exhausted, {}, 0};
        if (level.hit)
            return {SearchStatus::found, *level.hit, len};
    }
    return {SearchStatus::not_found, {}, 0};
}

namespace {

// Lexicographic enumeration of k-uniform words via remaining counts.
struct UniformSearch {
    const Graph& g;
    const std::vector<Letter>& sigma;
    std::size_t k;
    std::size_t allowance;

    std::size_t nodes = 0;
    bool exhausted = false;
    Word stack;
    std::vector<std::size_t> remaining;

    UniformSearch(const Graph& g, const std::vector<Letter>& sigma, std::size_t k,
                  std::size_t allowance)
        : g(g), sigma(sigma), k(k), allowance(allowance),
          remaining(sigma.size(), k) {}

    bool dfs(std::optional<Word>& hit) {
        if (++nodes > allowance) {
            exhausted = true;
            return true;
        }
        if (stack.size() == k * sigma.size()) {
            if (represents(stack, g)) {
                hit = stack;
                return true;
            }
            return false;
        }
        for (std::size_t idx = 0; idx < sigma.size(); ++idx) {
            if (remaining[idx] == 0)
                continue;
            --remaining[idx];
            stack.push_back(sigma[idx]);
            bool done = dfs(hit);
            stack.pop_back();
            ++remaining[idx];
            if (done)
                return true;
        }
        return false;
    }
};

}  // namespace

RepnumResult representation_number(const Graph& g, SearchBudget budget) {
    if (g.size() == 0)
        throw std::invalid_argument("representation_number: empty graph");
    const std::vector<Letter> sigma = sorted_alphabet(g);
    std::size_t consumed = 0;
    for (std::size_t k = 1; k <= budget.max_uniform_k; ++k) {
        if (consumed >= budget.max_states)
            return {SearchStatus::budget_exhausted, 0, {}};
        UniformSearch search(g, sigma, k, budget.max_states - consumed);
        std::optional<Word> hit;
        search.dfs(hit);
        consumed += search.nodes;
        if (search.exhausted)
            return {SearchStatus::budget_exhausted, 0, {}};
        if (hit)
            return {SearchStatus::found, k, *hit};
    }
    return {SearchStatus::not_found, 0, {}};
}

AuditRecord minimal_word_audit(const Graph& g, const Word& w) {
    if (!represents(w, g))
        throw std::invalid_argument("minimal_word_audit: word does not represent G");
    AuditRecord a;
    a.l = w.size();
    a.word = w;
    a.singletons = occurrence_class(w, 1).size();
    a.clique_number = wordrep::clique_number(g);
    auto [lo, hi] = occurrence_extremes(w);
    a.o_min = lo;
    a.o_max = hi;
    a.diameter = wordrep::diameter(g);
    a.lemma_kap_holds = a.singletons <= a.clique_number;
    a.theorem_di_holds = a.o_max - a.o_min <= a.diameter;
    return a;
}

nlohmann::ordered_json to_json(const AuditRecord& a) {
    nlohmann::ordered_json j;
    j["l"] = a.l;
    auto letters = nlohmann::ordered_json::array();
    for (Letter c : a.word)
        letters.push_back(c.name());
    j["word"] = std::move(letters);
    j["singletons"] = a.singletons;
    j["clique_number"] = a.clique_number;
    j["o_min"] = a.o_min;
    j["o_max"] = a.o_max;
    j["diameter"] = a.diameter;
    j["lemma_kap_holds"] = a.lemma_kap_holds;
    j["theorem_di_holds"] = a.theorem_di_holds;
    return j;
}

}  // namespace wordrep
