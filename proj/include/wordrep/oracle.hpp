// oracle.hpp -- brute-force minimum-length search and minimal-word audits

#pragma once

#include "wordrep/graph.hpp"

#include <json.hpp>

namespace wordrep {

/// Caps on the exhaustive search. Exceeding max_states yields a distinct
/// budget-exhausted outcome, never a wrong answer.
struct SearchBudget {
    std::size_t max_length = 0;    // 0: defaults to 2|V|
    std::size_t max_uniform_k = 3;
    std::size_t max_states = 100'000'000;
    /// Restrict first letters to automorphism-orbit representatives.
    /// Off by default: the witness is then only canonical up to relabelling.
    bool symmetry_reduction = false;
};

enum class SearchStatus { found, not_found, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::not_found;
    Word word;           // valid when status == found
    std::size_t length = 0;
};

/// l(G) by iterative deepening from |V(G)| upward. Enumeration is
/// lexicographic over the name-sorted vertex alphabet; the first hit at the
/// minimal length is returned. The per-length sweep is partitioned by first
/// letter across OpenMP workers; the lexicographically least hit wins, so
/// the result is identical for any worker count.
SearchResult min_length_word(const Graph& g, SearchBudget budget = {});

struct RepnumResult {
    SearchStatus status = SearchStatus::not_found;
    std::size_t k = 0;   // valid when status == found
    Word word;
};

/// R(G): least k <= max_uniform_k such that a k-uniform word represents G.
RepnumResult representation_number(const Graph& g, SearchBudget budget = {});

/// The two structural inequalities checked on a certified minimal word:
/// |O(w,1)| <= kappa_G and O_max(w) - O_min(w) <= diam(G).
struct AuditRecord {
    std::size_t l = 0;
    Word word;
    std::size_t singletons = 0;
    std::size_t clique_number = 0;
    std::size_t o_min = 0;
    std::size_t o_max = 0;
    std::size_t diameter = 0;
    bool lemma_kap_holds = false;
    bool theorem_di_holds = false;
};

/// Requires w to represent connected g; throws otherwise.
AuditRecord minimal_word_audit(const Graph& g, const Word& w);

nlohmann::ordered_json to_json(const AuditRecord& a);

/// Worker cap from WORDREP_THREADS, else the machine parallelism.
int oracle_thread_cap();

}  // namespace wordrep
