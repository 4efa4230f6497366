#ifndef HFAUTO_RANDOM_HPP
#define HFAUTO_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "hfauto/automata.hpp"
#include "hfauto/langtools.hpp"

namespace hfauto {

/// Seeded generator with platform-independent bounded draws: mt19937_64 for
/// the bits, rejection sampling for ranges.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, n). n must be positive.
    std::size_t below(std::size_t n);
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability num/den.
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Alphabet "a", "b", ... of the given size (at most 26).
Alphabet letters(std::size_t size);

struct RandomDfaOptions {
    std::size_t min_states = 1;
    std::size_t max_states = 5;
    std::size_t alphabet_size = 2;
};

/// States ord_of(0..n-1) with n uniform in range, init ord_of(0), each state
/// final with probability 1/3, every transition target uniform.
Dfa random_dfa(Rng& rng, const RandomDfaOptions& options);

struct RandomNfaOptions {
    std::size_t min_states = 1;
    std::size_t max_states = 5;
    std::size_t alphabet_size = 2;
    std::size_t max_eps = 4;
};

/// States ord_of(0..n-1); init ord_of(0) plus each other state with
/// probability 1/5; final with probability 1/3; each (q, x, p) transition
/// present with probability 1/3; up to max_eps ε-edges with uniform
/// endpoints, where an endpoint is a non-state ord_of(n) with probability
/// 1/8.
Nfa random_nfa(Rng& rng, const RandomNfaOptions& options);

Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_len);

/// Random regex of depth at most max_depth over the first alphabet_size
/// symbols.
Regex random_regex(Rng& rng, std::size_t alphabet_size, std::size_t max_depth);

/// Applies 1-3 random language-preserving rewrites: renaming states,
/// splitting a state into clones, adding unreachable junk states,
/// double complement, self-product, determinising the DFA as an NFA.
Dfa random_equivalent_variant(Rng& rng, const Dfa& m);

} // namespace hfauto

#endif
