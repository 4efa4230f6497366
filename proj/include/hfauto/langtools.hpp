#ifndef HFAUTO_LANGTOOLS_HPP
#define HFAUTO_LANGTOOLS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfauto/automata.hpp"
#include "hfauto/constructions.hpp"

namespace hfauto {

/// Shorter words first, then lexicographic by symbol index.
bool length_lex_less(const Word& u, const Word& v);

/// Accepted words of length <= max_len in length-lexicographic order.
std::vector<Word> enumerate_language(const Dfa& m, std::size_t max_len);
std::vector<Word> enumerate_language(const Nfa& n, std::size_t max_len);

/// Exact language equality: both halves of the symmetric difference have no
/// accessible final state.
bool dfa_equiv(const Dfa& m1, const Dfa& m2);

/// Least word (length-lex) accepted by exactly one machine, or nullopt if the
/// languages are equal.
std::optional<Word> distinguishing_word(const Dfa& m1, const Dfa& m2);

class Regex {
public:
    enum class Kind { EmptySet, Epsilon, Literal, Concat, Alt, Star };

    static Regex empty_set();
    static Regex epsilon();
    static Regex literal(Symbol x);
    static Regex concat(Regex a, Regex b);
    static Regex alt(Regex a, Regex b);
    static Regex star(Regex a);

    Kind kind() const noexcept;
    /// Literal only.
    Symbol symbol() const;
    /// Concat, Alt: left operand. Star: the repeated expression.
    const Regex& left() const;
    /// Concat, Alt only.
    const Regex& right() const;

    std::size_t depth() const noexcept;

    friend bool operator==(const Regex& a, const Regex& b);

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/**
 * Grammar, loosest binding first:
 *
 *     alt  := cat ('|' cat)*
 *     cat  := rep+
 *     rep  := atom '*'*
 *     atom := symbol | '(' alt ')' | 'ε' | 'eps' | '∅' | 'empty'
 *
 * Symbols are the single-character names of `alphabet`; the keywords take
 * precedence over symbols. Whitespace is ignored. Throws ParseError with the
 * byte offset of the first problem.
 */
Regex regex_parse(std::string_view text, const Alphabet& alphabet);

/// Fully parenthesised rendering; regex_parse inverts it.
std::string regex_render(const Regex& r, const Alphabet& alphabet);

/// Compiles through the closure constructions and minimises with brzozowski.
Dfa regex_compile(const Regex& r, const Alphabet& alphabet, PowersetOptions options = {});

} // namespace hfauto

#endif
