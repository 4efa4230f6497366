#ifndef HFAUTO_MINIMIZE_HPP
#define HFAUTO_MINIMIZE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hfauto/automata.hpp"
#include "hfauto/constructions.hpp"

namespace hfauto {

/// Disjoint nonempty blocks covering a set of states, ordered by their least
/// element.
class Partition {
public:
    Partition() = default;
    /// Throws InputError if blocks overlap or one is empty.
    explicit Partition(std::vector<StateSet> blocks);

    const std::vector<StateSet>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    /// Index of the block containing q. Throws InputError if q is not covered.
    std::size_t block_of(const Hf& q) const;
    StateSet carrier() const;
    bool is_discrete() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<StateSet> blocks_;
    std::map<Hf, std::size_t> index_;
};

/// Bijection between the states of two DFAs that preserves init, final and
/// transitions.
struct StateMap {
    std::map<Hf, Hf> mapping;
    /// Set when the inputs had inaccessible states that were left out.
    bool ignored_unreachable = false;

    const Hf& operator()(const Hf& q) const;
};

/// States reachable from init, in ascending order.
StateSet accessible_states(const Dfa& m);
/// Length-lexicographically least word reaching each accessible state,
/// listed in that order (init first).
std::vector<std::pair<Hf, Word>> access_words(const Dfa& m);
/// Least word leading from init to q. Throws InputError if q is inaccessible.
Word path_to(const Dfa& m, const Hf& q);
Dfa accessible_dfa(const Dfa& m);

/// Moore refinement from {final, non-final} until stable: two states share a
/// block iff their right languages coincide.
Partition indistinguishability_partition(const Dfa& m);
/// Quotient by indistinguishability; each state is from_elements(block).
Dfa collapse_dfa(const Dfa& m);

bool is_minimal(const Dfa& m);
/// Index of the Myhill-Nerode relation of the language of m.
std::size_t min_states(const Dfa& m);

/// Myhill-Nerode automaton: states ord_of(0..n-1) numbered by the
/// length-lexicographic order of the least word in each class.
Dfa canonical_dfa(const Dfa& m);

/// Renames the accessible states to ord_of(0..n-1) in order of their least
/// access word and drops the rest. An isomorphism on accessible DFAs.
Dfa renumber_states(const Dfa& m);

/// u and v cannot be told apart by any common suffix, w.r.t. L(m).
bool eq_app_right_related(const Dfa& m, const Word& u, const Word& v);

/// Checks that h is a bijection states(m) -> states(n) preserving init,
/// final and transitions.
bool is_isomorphism(const Dfa& m, const Dfa& n, const std::map<Hf, Hf>& h);

/// The candidate map pairs states reached by the same word from both
/// initial states. Inaccessible states are dropped first (and flagged).
/// Throws InputError on alphabet mismatch.
std::optional<StateMap> find_isomorphism(const Dfa& m, const Dfa& n);

/// accessible(power(reverse(m))): accepts the reversed language, and is
/// minimal whenever m has no inaccessible states.
Dfa apr(const Dfa& m, PowersetOptions options = {});
/// apr(apr(m)): a minimal DFA for the language of m.
Dfa brzozowski(const Dfa& m, PowersetOptions options = {});

} // namespace hfauto

#endif
