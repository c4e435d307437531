// word.hpp -- letters, words and the letter-level operations on them

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordrep {

/// Input error carrying an optional 1-based line number (graph files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line(line) {}
    int line;
};

/// An interned vertex/letter token. Equality is by token identity;
/// ordering is lexicographic by token so that all outputs are deterministic.
class Letter {
public:
    /// Interns a token. Rejects empty tokens and tokens containing whitespace.
    static Letter intern(std::string_view name);

    const std::string& name() const;

    bool operator==(const Letter& o) const { return id_ == o.id_; }
    bool operator!=(const Letter& o) const { return id_ != o.id_; }
    bool operator<(const Letter& o) const;

    std::uint32_t id() const { return id_; }

private:
    explicit Letter(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

using Word = std::vector<Letter>;
using LetterSet = std::set<Letter>;

// --- letter-level operations -----------------------------------------------

/// True iff w restricted to {x,y} strictly alternates. Single scan, the
/// restriction is never materialized. Rejects x == y and letters absent
/// from w (malformed query).
bool alternates(const Word& w, Letter x, Letter y);

/// Subsequence of w keeping exactly the letters in s.
Word restrict_to(const Word& w, const LetterSet& s);

/// pi(w): distinct letters ordered by first occurrence. Rejects empty w.
Word initial_permutation(const Word& w);

/// sigma(w): distinct letters ordered by last occurrence. Rejects empty w.
Word final_permutation(const Word& w);

/// r(w): letters in reversed order.
Word reversed(const Word& w);

/// O_w(x): number of occurrences of x in w.
std::size_t occurrences(const Word& w, Letter x);

/// O(w,i): the set of letters occurring exactly i times. Rejects i == 0.
LetterSet occurrence_class(const Word& w, std::size_t i);

/// (O_min(w), O_max(w)). Rejects empty w.
std::pair<std::size_t, std::size_t> occurrence_extremes(const Word& w);

/// k if w is k-uniform, nullopt otherwise. Rejects empty w.
std::optional<std::size_t> uniformity(const Word& w);

/// Distinct letters of w as a set.
LetterSet alphabet(const Word& w);

// --- text format ------------------------------------------------------------

/// Parses a single vertex token. Plain tokens intern directly; compound
/// product-vertex tokens use `base^fiber` with parentheses around nested
/// compound parts, e.g. `(a^b)^c`.
Letter parse_letter(std::string_view token);

/// Parses a word: whitespace-separated tokens. A single multi-character
/// token with no `^` or parentheses is split into one-character letters
/// (`35423214` reads as eight letters).
Word parse_word(std::string_view text);

/// Letters joined by single spaces.
std::string format_word(const Word& w);

}  // namespace wordrep
