// naive_oracle.hpp -- serial reference for the minimum-length search.
// Full enumeration in lexicographic order, no pruning, no parallelism.
// Kept independent of the library's search path on purpose.

#pragma once

#include <optional>

#include "wordrep/graph.hpp"

namespace wordrep::naive {

struct NaiveResult {
    std::optional<Word> word;
    std::size_t length = 0;
};

inline NaiveResult min_length_word(const Graph& g, std::size_t max_length) {
    std::vector<Letter> sigma(g.vertex_set().begin(), g.vertex_set().end());
    for (std::size_t len = 1; len <= max_length; ++len) {
        // odometer over all sigma^len words, lexicographic
        std::vector<std::size_t> digits(len, 0);
        for (;;) {
            Word w;
            w.reserve(len);
            for (std::size_t d : digits)
                w.push_back(sigma[d]);
            if (represents(w, g))
                return {w, len};
            std::size_t pos = len;
            while (pos > 0) {
                if (++digits[pos - 1] < sigma.size())
                    break;
                digits[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
        }
    }
    return {};
}

}  // namespace wordrep::naive
