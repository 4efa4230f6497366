#include "hfauto/random.hpp"

#include <limits>

#include "hfauto/constructions.hpp"
#include "hfauto/error.hpp"

namespace hfauto {

std::size_t Rng::below(std::size_t n) {
    if (n == 0) {
        throw InputError("Rng::below(0)");
    }
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t bound = kMax - kMax % n;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= bound);
    return static_cast<std::size_t>(r % n);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finaliser
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Alphabet letters(std::size_t size) {
    if (size == 0 || size > 26) {
        throw InputError("letters: alphabet size must be in 1..26");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(std::move(names));
}

Dfa random_dfa(Rng& rng, const RandomDfaOptions& options) {
    const std::size_t n = rng.between(options.min_states, options.max_states);
    Dfa m;
    m.alphabet = letters(options.alphabet_size);
    m.init = ord_of(0);
    for (std::size_t i = 0; i < n; ++i) {
        m.states.insert(ord_of(i));
        if (rng.chance(1, 3)) {
            m.final.insert(ord_of(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (Symbol x : m.alphabet.symbols()) {
            m.set_next(ord_of(i), x, ord_of(rng.below(n)));
        }
    }
    return m;
}

Nfa random_nfa(Rng& rng, const RandomNfaOptions& options) {
    const std::size_t n = rng.between(options.min_states, options.max_states);
    Nfa a;
    a.alphabet = letters(options.alphabet_size);
    a.init.insert(ord_of(0));
    for (std::size_t i = 0; i < n; ++i) {
        a.states.insert(ord_of(i));
        if (i > 0 && rng.chance(1, 5)) {
            a.init.insert(ord_of(i));
        }
        if (rng.chance(1, 3)) {
            a.final.insert(ord_of(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (Symbol x : a.alphabet.symbols()) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rng.chance(1, 3)) {
                    a.add_next(ord_of(i), x, ord_of(j));
                }
            }
        }
    }
    auto endpoint = [&] { return rng.chance(1, 8) ? ord_of(n) : ord_of(rng.below(n)); };
    const std::size_t eps = rng.between(0, options.max_eps);
    for (std::size_t k = 0; k < eps; ++k) {
        Hf from = endpoint();
        a.eps.insert({from, endpoint()});
    }
    return a;
}

Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_len) {
    Word w(rng.between(0, max_len));
    for (auto& x : w) {
        x = Symbol{static_cast<std::uint32_t>(rng.below(alphabet_size))};
    }
    return w;
}

Regex random_regex(Rng& rng, std::size_t alphabet_size, std::size_t max_depth) {
    if (max_depth <= 1 || rng.chance(1, 4)) {
        std::size_t pick = rng.below(10);
        if (pick == 0) {
            return Regex::empty_set();
        }
        if (pick == 1) {
            return Regex::epsilon();
        }
        return Regex::literal(Symbol{static_cast<std::uint32_t>(rng.below(alphabet_size))});
    }
    switch (rng.below(3)) {
    case 0: {
        Regex a = random_regex(rng, alphabet_size, max_depth - 1);
        return Regex::concat(std::move(a), random_regex(rng, alphabet_size, max_depth - 1));
    }
    case 1: {
        Regex a = random_regex(rng, alphabet_size, max_depth - 1);
        return Regex::alt(std::move(a), random_regex(rng, alphabet_size, max_depth - 1));
    }
    default:
        return Regex::star(random_regex(rng, alphabet_size, max_depth - 1));
    }
}

namespace {

Hf fresh_state(const StateSet& used) {
    for (unsigned n = 0;; ++n) {
        Hf q = decode(n);
        if (!used.contains(q)) {
            return q;
        }
    }
}

Dfa rename_states(Rng& rng, const Dfa& m) {
    const Hf tag = ord_of(rng.between(1, 3));
    auto f = [&](const Hf& q) { return pair(tag, q); };
    Dfa r;
    r.alphabet = m.alphabet;
    r.init = f(m.init);
    for (const Hf& q : m.states) {
        r.states.insert(f(q));
    }
    for (const Hf& q : m.final) {
        r.final.insert(f(q));
    }
    for (const auto& [key, target] : m.nxt) {
        r.set_next(f(key.first), key.second, f(target));
    }
    return r;
}

Dfa split_state(Rng& rng, const Dfa& m) {
    std::vector<Hf> states(m.states.begin(), m.states.end());
    const Hf q = states[rng.below(states.size())];
    const Hf clone = fresh_state(m.states);
    Dfa r = m;
    r.states.insert(clone);
    if (m.final.contains(q)) {
        r.final.insert(clone);
    }
    for (Symbol x : m.alphabet.symbols()) {
        r.set_next(clone, x, m.next(q, x));
    }
    for (auto& [key, target] : r.nxt) {
        if (target == q && rng.chance(1, 2)) {
            target = clone;
        }
    }
    if (m.init == q && rng.chance(1, 2)) {
        r.init = clone;
    }
    return r;
}

Dfa add_junk(Rng& rng, const Dfa& m) {
    Dfa r = m;
    const std::size_t extra = rng.between(1, 2);
    std::vector<Hf> junk;
    for (std::size_t i = 0; i < extra; ++i) {
        Hf j = fresh_state(r.states);
        r.states.insert(j);
        junk.push_back(j);
        if (rng.chance(1, 2)) {
            r.final.insert(j);
        }
    }
    std::vector<Hf> all(r.states.begin(), r.states.end());
    for (const Hf& j : junk) {
        for (Symbol x : m.alphabet.symbols()) {
            r.set_next(j, x, all[rng.below(all.size())]);
        }
    }
    return r;
}

} // namespace

Dfa random_equivalent_variant(Rng& rng, const Dfa& m) {
    require_valid(m);
    Dfa r = m;
    const std::size_t steps = rng.between(1, 3);
    for (std::size_t i = 0; i < steps; ++i) {
        switch (rng.below(6)) {
        case 0:
            r = rename_states(rng, r);
            break;
        case 1:
            r = split_state(rng, r);
            break;
        case 2:
            r = add_junk(rng, r);
            break;
        case 3:
            r = complement_dfa(complement_dfa(r));
            break;
        case 4:
            if (r.states.size() <= 6) {
                r = intersect_dfa(r, r);
            } else {
                r = split_state(rng, r);
            }
            break;
        default:
            r = power_dfa(embed_dfa(r), {PowersetMode::Reachable});
            break;
        }
    }
    return r;
}

} // namespace hfauto
