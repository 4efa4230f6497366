#ifndef HFAUTO_TESTS_FIXTURES_HPP
#define HFAUTO_TESTS_FIXTURES_HPP

// Hand-written reference machines shared by the unit tests.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hfauto/automata.hpp"

namespace hfauto::fixtures {

inline Alphabet ab() { return Alphabet({"a", "b"}); }

inline Symbol sym(const Alphabet& al, const std::string& name) { return *al.find(name); }

/// Builds a DFA over ord_of(0..n-1) from rows {target on a, target on b}.
inline Dfa table_dfa(const Alphabet& al, const std::vector<std::vector<std::size_t>>& rows,
                     std::initializer_list<std::size_t> finals, std::size_t init = 0) {
    Dfa m;
    m.alphabet = al;
    m.init = ord_of(init);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.states.insert(ord_of(i));
        for (std::size_t x = 0; x < rows[i].size(); ++x) {
            m.set_next(ord_of(i), Symbol{static_cast<std::uint32_t>(x)}, ord_of(rows[i][x]));
        }
    }
    for (std::size_t f : finals) {
        m.final.insert(ord_of(f));
    }
    return m;
}

/// Even number of a's: state0 final, `a` toggles, `b` loops.
inline Dfa m_even() { return table_dfa(ab(), {{1, 0}, {0, 1}}, {0}); }

/// Ends with b.
inline Dfa m_endb() { return table_dfa(ab(), {{0, 1}, {0, 1}}, {1}); }

/// Exactly "a": start, accept, dead.
inline Dfa m_a() { return table_dfa(ab(), {{1, 2}, {2, 2}, {2, 2}}, {1}); }

/// Exactly "b".
inline Dfa m_b() { return table_dfa(ab(), {{2, 1}, {2, 2}, {2, 2}}, {1}); }

/// Exactly "ab": start, after a, after ab, dead.
inline Dfa m_exactly_ab() { return table_dfa(ab(), {{1, 3}, {3, 2}, {3, 3}, {3, 3}}, {2}); }

/// Accepts only ε.
inline Dfa m_epsilon() { return table_dfa(ab(), {{1, 1}, {1, 1}}, {0}); }

/// Every word, one state.
inline Dfa m_all() { return table_dfa(ab(), {{0, 0}}, {0}); }

/// Two duplicated accepting sinks (2 and 3); minimal size 3.
inline Dfa m_cloned_sink() { return table_dfa(ab(), {{1, 2}, {3, 0}, {2, 2}, {3, 3}}, {2, 3}); }

/// q0 -a-> q1 -a-> q2 over the one-letter alphabet.
inline Dfa m_chain3() { return table_dfa(Alphabet({"a"}), {{1}, {2}, {2}}, {2}); }

/// M_even plus the unreachable self-looping state ord_of(7).
inline Dfa m_even_with_junk() {
    Dfa m = m_even();
    m.states.insert(ord_of(7));
    m.set_next(ord_of(7), Symbol{0}, ord_of(7));
    m.set_next(ord_of(7), Symbol{1}, ord_of(7));
    return m;
}

/// a+ over {a, b}: s0 -a-> {s0, s1}, s1 final, nothing on b.
inline Nfa n_aplus() {
    Nfa n;
    n.alphabet = ab();
    n.states = {ord_of(0), ord_of(1)};
    n.init = {ord_of(0)};
    n.final = {ord_of(1)};
    n.add_next(ord_of(0), Symbol{0}, ord_of(0));
    n.add_next(ord_of(0), Symbol{0}, ord_of(1));
    return n;
}

} // namespace hfauto::fixtures

#endif
