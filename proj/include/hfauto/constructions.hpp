#ifndef HFAUTO_CONSTRUCTIONS_HPP
#define HFAUTO_CONSTRUCTIONS_HPP

#include <cstddef>

#include "hfauto/automata.hpp"

namespace hfauto {

enum class PowersetMode {
    /// Full below the bound, reachable above it.
    Auto,
    /// Image of every subset of the NFA states. Requires |states| <= full_bound.
    Full,
    /// Only ε-closed subsets reachable from the initial set.
    Reachable,
};

struct PowersetOptions {
    PowersetMode mode = PowersetMode::Auto;
    std::size_t full_bound = 12;
};

/// Subset construction with ε-closure. Each DFA state is from_elements of an
/// ε-closed set of NFA states; a state is final iff its set meets the NFA's
/// final states.
Dfa power_dfa(const Nfa& n, PowersetOptions options = {});

/// Arrows reversed, init and final swapped. Accepts the reversed language.
Nfa reverse_nfa(const Dfa& m);

/// Product over all pairs pair(q1, q2); accepts the intersection.
Dfa intersect_dfa(const Dfa& m1, const Dfa& m2);

Dfa complement_dfa(const Dfa& m);

/// complement(intersect(complement m1, complement m2)).
Dfa union_dfa(const Dfa& m1, const Dfa& m2);

/// Disjoint sum inl(states m1) ∪ inr(states m2) with ε-edges from every
/// inl(final m1) to inr(init m2).
Nfa concat_nfa(const Dfa& m1, const Dfa& m2);

/// inr(states m) plus the fresh state inl(∅), which is both initial and
/// final. ε-edges: inl(∅) -> inr(init m) and inr(f) -> inl(∅) for each final f.
Nfa star_nfa(const Dfa& m);

} // namespace hfauto

#endif
