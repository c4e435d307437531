#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace wordrep {

namespace {

struct Interner {
    std::mutex mu;
    std::deque<std::string> names;  // stable references
    std::unordered_map<std::string, std::uint32_t> ids;
};

Interner& interner() {
    static Interner table;
    return table;
}

}  // namespace

Letter Letter::intern(std::string_view name) {
    if (name.empty())
        throw ParseError("empty letter token");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("letter token contains whitespace: '" + std::string(name) + "'");
    auto& t = interner();
    std::lock_guard lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end())
        return Letter(it->second);
    auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return Letter(id);
}

const std::string& Letter::name() const {
    auto& t = interner();
    std::lock_guard lock(t.mu);
    return t.names[id_];
}

bool Letter::operator<(const Letter& o) const {
    return id_ != o.id_ && name() < o.name();
}

bool alternates(const Word& w, Letter x, Letter y) {
    if (x == y)
        throw std::invalid_argument("alternates: letters must be distinct");
    bool seen_x = false, seen_y = false;
    std::optional<Letter> last;
    bool ok = true;
    for (Letter c : w) {
        if (c != x && c != y)
            continue;
        seen_x = seen_x || c == x;
        seen_y = seen_y || c == y;
        if (last && *last == c)
            ok = false;  // keep scanning to validate presence of both letters
        last = c;
    }
    if (!seen_x || !seen_y)
        throw std::invalid_argument("alternates: letter absent from word");
    return ok;
}

Word restrict_to(const Word& w, const LetterSet& s) {
    Word out;
    for (Letter c : w)
        if (s.count(c))
            out.push_back(c);
    return out;
}

Word initial_permutation(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("initial_permutation: empty word");
    Word out;
    LetterSet seen;
    for (Letter c : w)
        if (seen.insert(c).second)
            out.push_back(c);
    return out;
}

Word final_permutation(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("final_permutation: empty word");
    return reversed(initial_permutation(reversed(w)));
}

Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

std::size_t occurrences(const Word& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

LetterSet occurrence_class(const Word& w, std::size_t i) {
    if (i == 0)
        throw std::invalid_argument("occurrence_class: i must be >= 1");
    LetterSet out;
    for (Letter c : alphabet(w))
        if (occurrences(w, c) == i)
            out.insert(c);
    return out;
}

std::pair<std::size_t, std::size_t> occurrence_extremes(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("occurrence_extremes: empty word");
    std::size_t lo = w.size(), hi = 0;
    for (Letter c : alphabet(w)) {
        std::size_t k = occurrences(w, c);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    return {lo, hi};
}

std::optional<std::size_t> uniformity(const Word& w) {
    auto [lo, hi] = occurrence_extremes(w);
    if (lo == hi)
        return lo;
    return std::nullopt;
}

LetterSet alphabet(const Word& w) {
    return LetterSet(w.begin(), w.end());
}

namespace {

std::string_view strip_outer_parens(std::string_view tok) {
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        return tok;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < tok.size(); ++i) {
        if (tok[i] == '(') ++depth;
        if (tok[i] == ')') --depth;
        if (depth == 0)
            return tok;  // closing paren before the end; not a full wrap
    }
    return tok.substr(1, tok.size() - 2);
}

}  // namespace

Letter parse_letter(std::string_view token) {
    std::string_view tok = strip_outer_parens(token);
    int depth = 0;
    std::size_t caret = std::string_view::npos;
    for (std::size_t i = 0; i < tok.size(); ++i) {
        char c = tok[i];
        if (c == '(') ++depth;
        else if (c == ')') {
            if (--depth < 0)
                throw ParseError("unbalanced ')' in token '" + std::string(token) + "'");
        } else if (c == '^' && depth == 0 && caret == std::string_view::npos) {
            caret = i;
        }
    }
    if (depth != 0)
        throw ParseError("unbalanced '(' in token '" + std::string(token) + "'");
    if (caret == std::string_view::npos) {
        if (tok.find_first_of("()^") != std::string_view::npos)
            throw ParseError("malformed vertex token '" + std::string(token) + "'");
        return Letter::intern(tok);
    }
    if (caret == 0 || caret + 1 == tok.size())
        throw ParseError("malformed compound token '" + std::string(token) + "'");
    Letter base = parse_letter(tok.substr(0, caret));
    Letter fiber = parse_letter(tok.substr(caret + 1));
    auto wrap = [](const std::string& s) {
        return s.find('^') == std::string::npos ? s : "(" + s + ")";
    };
    return Letter::intern(wrap(base.name()) + "^" + wrap(fiber.name()));
}

Word parse_word(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    Word out;
    if (tokens.size() == 1 && tokens[0].size() > 1 &&
        tokens[0].find_first_of("()^") == std::string::npos) {
        for (char c : tokens[0])
            out.push_back(Letter::intern(std::string_view(&c, 1)));
        return out;
    }
    for (const auto& t : tokens)
        out.push_back(parse_letter(t));
    return out;
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

}  // namespace wordrep
