#ifndef HFAUTO_AUTOMATA_HPP
#define HFAUTO_AUTOMATA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfauto/hf.hpp"

namespace hfauto {

/// Index of a symbol in its automaton's alphabet.
struct Symbol {
    std::uint32_t id = 0;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

/// States are kept in ascending hf_cmp order.
using StateSet = std::set<Hf>;

/// Ordered, nonempty-by-validation list of symbol display names.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws InputError on duplicate or empty names.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    bool is_empty() const noexcept { return names_.empty(); }
    const std::string& name(Symbol x) const;
    std::optional<Symbol> find(std::string_view name) const;
    std::vector<Symbol> symbols() const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// True when every name is one character, so words can be written
    /// without separators.
    bool single_char() const noexcept;

    /// Parses a word: character by character for single-character alphabets,
    /// otherwise whitespace-separated names. Throws InputError on unknown
    /// symbols.
    Word word(std::string_view text) const;
    /// Inverse of word(); the empty word renders as "ε".
    std::string render(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

/// Throws InputError unless both alphabets are identical.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

/// Deterministic automaton with HF states. `nxt` is meant to be total on
/// states × alphabet; dfa_validate reports where it is not.
struct Dfa {
    Alphabet alphabet;
    StateSet states;
    Hf init;
    StateSet final;
    std::map<std::pair<Hf, Symbol>, Hf> nxt;

    /// Throws InputError if (q, x) has no transition.
    const Hf& next(const Hf& q, Symbol x) const;
    void set_next(const Hf& q, Symbol x, const Hf& p) { nxt.insert_or_assign({q, x}, p); }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Nondeterministic automaton with ε-transitions. Missing `nxt` entries mean
/// the empty set. `eps` pairs need not mention states.
struct Nfa {
    Alphabet alphabet;
    StateSet states;
    StateSet init;
    StateSet final;
    std::map<std::pair<Hf, Symbol>, StateSet> nxt;
    std::set<std::pair<Hf, Hf>> eps;

    /// Successors of q on x; empty when no entry exists.
    const StateSet& next(const Hf& q, Symbol x) const;
    void add_next(const Hf& q, Symbol x, const Hf& p) { nxt[{q, x}].insert(p); }

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// One failed well-formedness axiom with a witness.
struct Violation {
    std::string axiom;
    std::string witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& v);

/// Empty result means the automaton satisfies every axiom.
std::vector<Violation> dfa_validate(const Dfa& m);
std::vector<Violation> nfa_validate(const Nfa& n);

/// Throw InputError listing the violations, if any.
void require_valid(const Dfa& m);
void require_valid(const Nfa& n);

Hf dfa_nextl(const Dfa& m, const Hf& q, const Word& w);
bool dfa_accepts(const Dfa& m, const Word& w);
/// Both words drive the machine from its initial state to the same state.
bool eq_nextl_related(const Dfa& m, const Word& u, const Word& v);

/// Reflexive-transitive ε-closure of `q`, intersected with the states.
StateSet epsclo(const Nfa& n, const StateSet& q);
StateSet nfa_nextl(const Nfa& n, const StateSet& q, const Word& w);
bool nfa_accepts(const Nfa& n, const Word& w);

/// The DFA as an NFA: singleton init and transitions, no ε-edges.
Nfa embed_dfa(const Dfa& m);

Word reversed(const Word& w);

/// `[s1, s2, ...]` with each state in brace syntax.
std::string to_string(const StateSet& qs);

} // namespace hfauto

#endif
