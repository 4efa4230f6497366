#include "hfauto/oracle.hpp"

#include <algorithm>
#include <iterator>

namespace hfauto::oracle {

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (std::uint32_t x = 0; x < alphabet_size; ++x) {
                Word w = out[i];
                w.push_back(Symbol{x});
                out.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return out;
}

WordSet bounded_language(const Dfa& m, std::size_t max_len) {
    WordSet out;
    for (const Word& w : all_words(m.alphabet.size(), max_len)) {
        if (dfa_accepts(m, w)) {
            out.insert(w);
        }
    }
    return out;
}

WordSet bounded_language(const Nfa& n, std::size_t max_len) {
    WordSet out;
    for (const Word& w : all_words(n.alphabet.size(), max_len)) {
        if (nfa_accepts(n, w)) {
            out.insert(w);
        }
    }
    return out;
}

WordSet bounded_right_language(const Dfa& m, const Hf& q, std::size_t max_len) {
    WordSet out;
    for (const Word& w : all_words(m.alphabet.size(), max_len)) {
        if (m.final.contains(dfa_nextl(m, q, w))) {
            out.insert(w);
        }
    }
    return out;
}

WordSet complement_words(const WordSet& l, std::size_t alphabet_size, std::size_t max_len) {
    WordSet out;
    for (const Word& w : all_words(alphabet_size, max_len)) {
        if (!l.contains(w)) {
            out.insert(w);
        }
    }
    return out;
}

WordSet intersect_words(const WordSet& a, const WordSet& b) {
    WordSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

WordSet union_words(const WordSet& a, const WordSet& b) {
    WordSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

WordSet concat_words(const WordSet& a, const WordSet& b, std::size_t max_len) {
    WordSet out;
    for (const Word& u : a) {
        for (const Word& v : b) {
            if (u.size() + v.size() <= max_len) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                out.insert(std::move(uv));
            }
        }
    }
    return out;
}

WordSet star_words(const WordSet& l, std::size_t max_len) {
    WordSet out{Word{}};
    // Fixpoint of out := out ∪ out·(l \ {ε}).
    for (;;) {
        WordSet next = out;
        for (const Word& u : out) {
            for (const Word& v : l) {
                if (!v.empty() && u.size() + v.size() <= max_len) {
                    Word uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    next.insert(std::move(uv));
                }
            }
        }
        if (next.size() == out.size()) {
            return out;
        }
        out = std::move(next);
    }
}

WordSet reverse_words(const WordSet& l) {
    WordSet out;
    for (const Word& w : l) {
        out.insert(Word(w.rbegin(), w.rend()));
    }
    return out;
}

bool regex_matches(const Regex& r, std::span<const Symbol> w) {
    switch (r.kind()) {
    case Regex::Kind::EmptySet:
        return false;
    case Regex::Kind::Epsilon:
        return w.empty();
    case Regex::Kind::Literal:
        return w.size() == 1 && w[0] == r.symbol();
    case Regex::Kind::Alt:
        return regex_matches(r.left(), w) || regex_matches(r.right(), w);
    case Regex::Kind::Concat:
        for (std::size_t i = 0; i <= w.size(); ++i) {
            if (regex_matches(r.left(), w.first(i)) && regex_matches(r.right(), w.subspan(i))) {
                return true;
            }
        }
        return false;
    case Regex::Kind::Star:
        if (w.empty()) {
            return true;
        }
        // First piece nonempty, so the recursion shrinks.
        for (std::size_t i = 1; i <= w.size(); ++i) {
            if (regex_matches(r.left(), w.first(i)) && regex_matches(r, w.subspan(i))) {
                return true;
            }
        }
        return false;
    }
    return false;
}

std::vector<Word> sorted(const WordSet& l) {
    std::vector<Word> out(l.begin(), l.end());
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

} // namespace hfauto::oracle
