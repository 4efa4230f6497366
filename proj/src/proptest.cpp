#include "hfauto/proptest.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "hfauto/error.hpp"
#include "hfauto/format.hpp"
#include "hfauto/langtools.hpp"
#include "hfauto/minimize.hpp"
#include "hfauto/oracle.hpp"
#include "hfauto/random.hpp"

namespace hfauto {

namespace {

using Verdict = std::optional<std::string>;
using oracle::bounded_language;

constexpr std::size_t kAlphabetSize = 2;
constexpr std::size_t kMaxEps = 4;
constexpr std::size_t kRegexDepth = 4;

struct Subject {
    Dfa m1;
    Dfa m2;
    Nfa n;
    Regex r = Regex::empty_set();
};

enum class Shape { Plain, Dfa1, Dfa2, Nfa1, Regex1 };

struct Context {
    std::size_t max_len;
    PowersetOptions powerset;
    std::function<Dfa(const Dfa&)> minimize;
};

using Check = Verdict (*)(const Subject&, Rng&, const Context&);

struct Property {
    const char* name;
    Shape shape;
    Check check;
};

Word cat(Word u, const Word& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
}

Hf pick_state(Rng& rng, const StateSet& states) {
    auto it = states.begin();
    std::advance(it, static_cast<long>(rng.below(states.size())));
    return *it;
}

StateSet random_subset(Rng& rng, const StateSet& states) {
    StateSet out;
    for (const Hf& q : states) {
        if (rng.chance(1, 2)) {
            out.insert(q);
        }
    }
    return out;
}

std::string show(const Alphabet& al, const Word& w) { return "\"" + al.render(w) + "\""; }

Verdict first_disagreement(const Alphabet& al, const std::vector<Word>& words,
                           const std::function<bool(const Word&)>& lhs,
                           const std::function<bool(const Word&)>& rhs) {
    for (const Word& w : words) {
        if (lhs(w) != rhs(w)) {
            return "disagree on " + show(al, w);
        }
    }
    return std::nullopt;
}

Verdict compare_languages(const Alphabet& al, const oracle::WordSet& got, const oracle::WordSet& want) {
    if (got == want) {
        return std::nullopt;
    }
    for (const Word& w : oracle::sorted(oracle::union_words(got, want))) {
        if (got.contains(w) != want.contains(w)) {
            return std::string(got.contains(w) ? "accepts " : "rejects ") + show(al, w);
        }
    }
    return "languages differ";
}

// ---- HF kernel ----

Verdict hf_roundtrip(const Subject&, Rng& rng, const Context&) {
    for (int i = 0; i < 20; ++i) {
        unsigned n = static_cast<unsigned>(rng.below(1U << 16));
        Hf x = decode(n);
        if (code(x) != n) {
            return "code(decode(" + std::to_string(n) + ")) differs";
        }
        if (from_elements(elements(x)) != x) {
            return "from_elements(elements(decode(" + std::to_string(n) + "))) differs";
        }
    }
    return std::nullopt;
}

Verdict hf_order(const Subject&, Rng& rng, const Context&) {
    for (int i = 0; i < 50; ++i) {
        unsigned a = static_cast<unsigned>(rng.below(1024));
        unsigned b = static_cast<unsigned>(rng.below(1024));
        Hf x = decode(a);
        Hf y = decode(b);
        std::string at = " at codes " + std::to_string(a) + ", " + std::to_string(b);
        if (hf_cmp(x, y) != (a <=> b)) {
            return "hf_cmp disagrees with code order" + at;
        }
        if ((x == y) != (a == b)) {
            return "equality disagrees with codes" + at;
        }
        if (mem(x, y) && hf_cmp(x, y) >= 0) {
            return "order does not extend membership" + at;
        }
        if (subset(x, y) && x != y && hf_cmp(x, y) >= 0) {
            return "order does not extend inclusion" + at;
        }
    }
    return std::nullopt;
}

Verdict hf_pairs(const Subject&, Rng& rng, const Context&) {
    for (int i = 0; i < 100; ++i) {
        Hf a = decode(rng.below(64));
        Hf b = decode(rng.below(64));
        Hf c = decode(rng.below(64));
        Hf d = decode(rng.below(64));
        if ((pair(a, b) == pair(c, d)) != (a == c && b == d)) {
            return "pair is not injective on " + to_string(a) + ", " + to_string(b);
        }
        if (pair_fst(pair(a, b)) != a || pair_snd(pair(a, b)) != b) {
            return "projections fail on " + to_string(pair(a, b));
        }
        if ((inl(a) == inl(c)) != (a == c) || (inr(a) == inr(c)) != (a == c)) {
            return "injections are not injective";
        }
        if (inl(a) == inr(b)) {
            return "inl and inr images meet at " + to_string(inl(a));
        }
    }
    return std::nullopt;
}

// ---- DFA and NFA semantics ----

Verdict append_law(const Subject& s, Rng& rng, const Context& ctx) {
    const Dfa& m = s.m1;
    for (int i = 0; i < 10; ++i) {
        Hf q = pick_state(rng, m.states);
        Word u = random_word(rng, kAlphabetSize, ctx.max_len);
        Word v = random_word(rng, kAlphabetSize, ctx.max_len);
        if (dfa_nextl(m, q, cat(u, v)) != dfa_nextl(m, dfa_nextl(m, q, u), v)) {
            return "fails from " + to_string(q) + " on " + show(m.alphabet, u) + " then " + show(m.alphabet, v);
        }
    }
    return std::nullopt;
}

Verdict nextl_closure(const Subject& s, Rng& rng, const Context& ctx) {
    const Dfa& m = s.m1;
    for (int i = 0; i < 10; ++i) {
        Hf q = pick_state(rng, m.states);
        Word w = random_word(rng, kAlphabetSize, ctx.max_len);
        if (!m.states.contains(dfa_nextl(m, q, w))) {
            return "leaves the states from " + to_string(q) + " on " + show(m.alphabet, w);
        }
    }
    return std::nullopt;
}

Verdict eq_nextl_right_invariant(const Subject& s, Rng& rng, const Context& ctx) {
    const Dfa& m = s.m1;
    for (int i = 0; i < 20; ++i) {
        Word u = random_word(rng, kAlphabetSize, ctx.max_len);
        Word v = i % 2 == 0 ? path_to(m, dfa_nextl(m, m.init, u)) : random_word(rng, kAlphabetSize, ctx.max_len);
        Word w = random_word(rng, kAlphabetSize, 3);
        if (!eq_nextl_related(m, u, u) || eq_nextl_related(m, u, v) != eq_nextl_related(m, v, u)) {
            return "not reflexive or symmetric at " + show(m.alphabet, u);
        }
        if (eq_nextl_related(m, u, v) && !eq_nextl_related(m, cat(u, w), cat(v, w))) {
            return "related " + show(m.alphabet, u) + ", " + show(m.alphabet, v) + " split by suffix " +
                   show(m.alphabet, w);
        }
    }
    return std::nullopt;
}

Verdict embedding(const Subject& s, Rng&, const Context& ctx) {
    Nfa n = embed_dfa(s.m1);
    if (!nfa_validate(n).empty()) {
        return "embedded DFA is not a valid NFA";
    }
    return compare_languages(s.m1.alphabet, bounded_language(n, ctx.max_len), bounded_language(s.m1, ctx.max_len));
}

Verdict epsclo_idempotent(const Subject& s, Rng& rng, const Context&) {
    const Nfa& n = s.n;
    for (int i = 0; i < 5; ++i) {
        StateSet q = random_subset(rng, n.states);
        StateSet c = epsclo(n, q);
        if (epsclo(n, c) != c) {
            return "closure of " + to_string(q) + " is not closed";
        }
        if (!std::includes(n.states.begin(), n.states.end(), c.begin(), c.end()) ||
            !std::includes(c.begin(), c.end(), q.begin(), q.end())) {
            return "closure of " + to_string(q) + " is " + to_string(c);
        }
    }
    return std::nullopt;
}

Verdict nextl_eps_closed(const Subject& s, Rng& rng, const Context& ctx) {
    const Nfa& n = s.n;
    for (int i = 0; i < 5; ++i) {
        StateSet q = random_subset(rng, n.states);
        Word w = random_word(rng, kAlphabetSize, ctx.max_len);
        StateSet r = nfa_nextl(n, q, w);
        if (epsclo(n, r) != r) {
            return "nextl from " + to_string(q) + " on " + show(n.alphabet, w) + " is not ε-closed";
        }
    }
    return std::nullopt;
}

// ---- constructions ----

Verdict power_wellformed(const Subject& s, Rng&, const Context& ctx) {
    Dfa d = power_dfa(s.n, ctx.powerset);
    if (!dfa_validate(d).empty()) {
        return "power_dfa output fails validation: " + dfa_validate(d).front().witness;
    }
    if (s.n.states.size() < 63 && d.states.size() > (std::size_t{1} << s.n.states.size())) {
        return "more than 2^n states";
    }
    for (const Hf& q : d.states) {
        StateSet members(q.elements().begin(), q.elements().end());
        if (epsclo(s.n, members) != members) {
            return "state " + to_string(q) + " is not an ε-closed set";
        }
    }
    return std::nullopt;
}

Verdict power_language(const Subject& s, Rng&, const Context& ctx) {
    Dfa d = power_dfa(s.n, ctx.powerset);
    return first_disagreement(
        s.n.alphabet, oracle::all_words(kAlphabetSize, ctx.max_len), [&](const Word& w) { return dfa_accepts(d, w); },
        [&](const Word& w) { return nfa_accepts(s.n, w); });
}

Verdict powerset_modes_agree(const Subject& s, Rng&, const Context& ctx) {
    if (s.n.states.size() > ctx.powerset.full_bound) {
        return std::nullopt;
    }
    PowersetOptions full = ctx.powerset;
    full.mode = PowersetMode::Full;
    PowersetOptions reach = ctx.powerset;
    reach.mode = PowersetMode::Reachable;
    Dfa a = power_dfa(s.n, full);
    Dfa b = power_dfa(s.n, reach);
    if (!dfa_equiv(a, b)) {
        return "full and reachable determinisations differ";
    }
    if (!find_isomorphism(collapse_dfa(accessible_dfa(a)), collapse_dfa(accessible_dfa(b)))) {
        return "minimised determinisations are not isomorphic";
    }
    return std::nullopt;
}

Verdict reversal(const Subject& s, Rng&, const Context& ctx) {
    Nfa r = reverse_nfa(s.m1);
    return first_disagreement(
        s.m1.alphabet, oracle::all_words(kAlphabetSize, ctx.max_len), [&](const Word& w) { return nfa_accepts(r, w); },
        [&](const Word& w) { return dfa_accepts(s.m1, reversed(w)); });
}

Verdict intersection(const Subject& s, Rng&, const Context& ctx) {
    return compare_languages(s.m1.alphabet, bounded_language(intersect_dfa(s.m1, s.m2), ctx.max_len),
                             oracle::intersect_words(bounded_language(s.m1, ctx.max_len),
                                                     bounded_language(s.m2, ctx.max_len)));
}

Verdict union_(const Subject& s, Rng&, const Context& ctx) {
    return compare_languages(
        s.m1.alphabet, bounded_language(union_dfa(s.m1, s.m2), ctx.max_len),
        oracle::union_words(bounded_language(s.m1, ctx.max_len), bounded_language(s.m2, ctx.max_len)));
}

Verdict complement(const Subject& s, Rng&, const Context& ctx) {
    return compare_languages(
        s.m1.alphabet, bounded_language(complement_dfa(s.m1), ctx.max_len),
        oracle::complement_words(bounded_language(s.m1, ctx.max_len), kAlphabetSize, ctx.max_len));
}

Verdict concat_split(const Subject& s, Rng&, const Context& ctx) {
    Nfa c = concat_nfa(s.m1, s.m2);
    auto splits = [&](const Word& w) {
        for (std::size_t k = 0; k <= w.size(); ++k) {
            Word u(w.begin(), w.begin() + static_cast<long>(k));
            Word v(w.begin() + static_cast<long>(k), w.end());
            if (dfa_accepts(s.m1, u) && dfa_accepts(s.m2, v)) {
                return true;
            }
        }
        return false;
    };
    return first_disagreement(s.m1.alphabet, oracle::all_words(kAlphabetSize, ctx.max_len),
                              [&](const Word& w) { return nfa_accepts(c, w); }, splits);
}

Verdict star(const Subject& s, Rng&, const Context& ctx) {
    return compare_languages(s.m1.alphabet, bounded_language(star_nfa(s.m1), ctx.max_len),
                             oracle::star_words(bounded_language(s.m1, ctx.max_len), ctx.max_len));
}

Verdict construction_sizes(const Subject& s, Rng&, const Context&) {
    const std::size_t a = s.m1.states.size();
    const std::size_t b = s.m2.states.size();
    Dfa i = intersect_dfa(s.m1, s.m2);
    Nfa c = concat_nfa(s.m1, s.m2);
    Nfa st = star_nfa(s.m1);
    if (!dfa_validate(i).empty() || !nfa_validate(c).empty() || !nfa_validate(st).empty() ||
        !dfa_validate(union_dfa(s.m1, s.m2)).empty() || !dfa_validate(complement_dfa(s.m1)).empty()) {
        return "a construction fails validation";
    }
    if (i.states.size() != a * b) {
        return "intersection has " + std::to_string(i.states.size()) + " states";
    }
    if (c.states.size() != a + b) {
        return "concatenation has " + std::to_string(c.states.size()) + " states";
    }
    if (st.states.size() != a + 1) {
        return "star has " + std::to_string(st.states.size()) + " states";
    }
    return std::nullopt;
}

// ---- minimisation ----

Verdict accessible(const Subject& s, Rng&, const Context& ctx) {
    Dfa a = accessible_dfa(s.m1);
    if (accessible_dfa(a) != a) {
        return "accessible_dfa is not idempotent";
    }
    if (accessible_states(a) != a.states) {
        return "inaccessible state left behind";
    }
    return compare_languages(s.m1.alphabet, bounded_language(a, ctx.max_len), bounded_language(s.m1, ctx.max_len));
}

Verdict partition_oracle(const Subject& s, Rng&, const Context&) {
    const Dfa& m = s.m1;
    Partition p = indistinguishability_partition(m);
    // Distinguishable states of an n-state DFA differ on some word shorter than n.
    const std::size_t bound = m.states.size();
    std::map<Hf, oracle::WordSet> right;
    for (const Hf& q : m.states) {
        right[q] = oracle::bounded_right_language(m, q, bound);
    }
    for (const Hf& q : m.states) {
        for (const Hf& r : m.states) {
            if ((p.block_of(q) == p.block_of(r)) != (right[q] == right[r])) {
                return "states " + to_string(q) + " and " + to_string(r) + " misclassified";
            }
        }
    }
    return std::nullopt;
}

Verdict collapse(const Subject& s, Rng&, const Context& ctx) {
    Dfa c = collapse_dfa(accessible_dfa(s.m1));
    if (!is_minimal(c)) {
        return "collapse of the accessible part is not minimal";
    }
    return compare_languages(s.m1.alphabet, bounded_language(c, ctx.max_len), bounded_language(s.m1, ctx.max_len));
}

Verdict minimal_apr(const Subject& s, Rng&, const Context& ctx) {
    Dfa r = apr(accessible_dfa(s.m1), ctx.powerset);
    if (!is_minimal(r)) {
        return "apr of an accessible DFA is not minimal";
    }
    return compare_languages(s.m1.alphabet, bounded_language(r, ctx.max_len),
                             oracle::reverse_words(bounded_language(s.m1, ctx.max_len)));
}

Verdict minimal_brzozowski(const Subject& s, Rng&, const Context& ctx) {
    Dfa b = ctx.minimize(s.m1);
    if (!is_minimal(b)) {
        return "output is not minimal";
    }
    if (auto w = distinguishing_word(b, s.m1)) {
        return "output differs from the input on " + show(s.m1.alphabet, *w);
    }
    if (!find_isomorphism(b, collapse_dfa(accessible_dfa(s.m1)))) {
        return "output is not isomorphic to the collapsed accessible part";
    }
    return std::nullopt;
}

Verdict minimal_unique(const Subject& s, Rng&, const Context& ctx) {
    Dfa a = collapse_dfa(accessible_dfa(s.m1));
    Dfa b = canonical_dfa(s.m1);
    Dfa c = ctx.minimize(s.m1);
    if (!find_isomorphism(a, b) || !find_isomorphism(b, c) || !find_isomorphism(a, c)) {
        return "minimal forms are not pairwise isomorphic";
    }
    return std::nullopt;
}

Verdict minimal_card_le(const Subject& s, Rng& rng, const Context& ctx) {
    Dfa v = random_equivalent_variant(rng, s.m1);
    if (!dfa_equiv(s.m1, v) || bounded_language(s.m1, ctx.max_len) != bounded_language(v, ctx.max_len)) {
        return "variant is not equivalent";
    }
    if (ctx.minimize(s.m1).states.size() > v.states.size()) {
        return "minimised input larger than a " + std::to_string(v.states.size()) + "-state equivalent";
    }
    if (ctx.minimize(v).states.size() > s.m1.states.size()) {
        return "minimised variant larger than the input";
    }
    return std::nullopt;
}

Verdict canonical_mn(const Subject& s, Rng&, const Context& ctx) {
    Dfa c = canonical_dfa(s.m1);
    if (!dfa_equiv(c, s.m1)) {
        return "canonical DFA accepts a different language";
    }
    if (c.states.size() != min_states(s.m1)) {
        return "canonical DFA has " + std::to_string(c.states.size()) + " states, index is " +
               std::to_string(min_states(s.m1));
    }
    if (!is_minimal(c)) {
        return "canonical DFA is not minimal";
    }
    return compare_languages(s.m1.alphabet, bounded_language(c, ctx.max_len), bounded_language(s.m1, ctx.max_len));
}

Verdict mn_refines(const Subject& s, Rng& rng, const Context& ctx) {
    const Dfa& m = s.m1;
    for (int i = 0; i < 20; ++i) {
        Word u = random_word(rng, kAlphabetSize, ctx.max_len);
        Word v = i % 2 == 0 ? path_to(m, dfa_nextl(m, m.init, u)) : random_word(rng, kAlphabetSize, ctx.max_len);
        if (eq_nextl_related(m, u, v) && !eq_app_right_related(m, u, v)) {
            return "state-related " + show(m.alphabet, u) + ", " + show(m.alphabet, v) + " are not language-related";
        }
    }
    return std::nullopt;
}

Verdict eq_app_right_invariant(const Subject& s, Rng& rng, const Context& ctx) {
    const Dfa& m = s.m1;
    for (int i = 0; i < 20; ++i) {
        Word u = random_word(rng, kAlphabetSize, ctx.max_len);
        Word v = random_word(rng, kAlphabetSize, ctx.max_len);
        Word w = random_word(rng, kAlphabetSize, 3);
        if (!eq_app_right_related(m, u, u) || eq_app_right_related(m, u, v) != eq_app_right_related(m, v, u)) {
            return "not reflexive or symmetric at " + show(m.alphabet, u);
        }
        if (eq_app_right_related(m, u, v) && !eq_app_right_related(m, cat(u, w), cat(v, w))) {
            return "related " + show(m.alphabet, u) + ", " + show(m.alphabet, v) + " split by suffix " +
                   show(m.alphabet, w);
        }
    }
    return std::nullopt;
}

Verdict l2_3(const Subject& s, Rng&, const Context&) {
    const Dfa& m = s.m1;
    StateSet acc = accessible_states(m);
    std::set<oracle::WordSet> classes;
    for (const Hf& q : acc) {
        classes.insert(oracle::bounded_right_language(m, q, m.states.size()));
    }
    if (classes.size() != min_states(m)) {
        return "index " + std::to_string(min_states(m)) + " but " + std::to_string(classes.size()) +
               " distinct right languages";
    }
    if (min_states(m) > acc.size()) {
        return "index exceeds the number of accessible states";
    }
    return std::nullopt;
}

// ---- language tools ----

Verdict equiv_vs_enumeration(const Subject& s, Rng&, const Context& ctx) {
    bool eq = dfa_equiv(s.m1, s.m2);
    const std::size_t bound = s.m1.states.size() * s.m2.states.size();
    if (eq) {
        if (bounded_language(s.m1, ctx.max_len) != bounded_language(s.m2, ctx.max_len)) {
            return "equivalent machines disagree below length " + std::to_string(ctx.max_len + 1);
        }
        if (bound <= 9 && bounded_language(s.m1, bound) != bounded_language(s.m2, bound)) {
            return "equivalent machines disagree below the product bound";
        }
        return std::nullopt;
    }
    if (bound <= 9 && bounded_language(s.m1, bound) == bounded_language(s.m2, bound)) {
        return "inequivalent machines agree up to the product bound";
    }
    auto w = distinguishing_word(s.m1, s.m2);
    if (!w || w->size() >= bound || dfa_accepts(s.m1, *w) == dfa_accepts(s.m2, *w)) {
        return "no separating word shorter than the product bound";
    }
    return std::nullopt;
}

Verdict distinguishing_word_least(const Subject& s, Rng&, const Context& ctx) {
    auto w = distinguishing_word(s.m1, s.m2);
    if (!w) {
        return compare_languages(s.m1.alphabet, bounded_language(s.m1, ctx.max_len),
                                 bounded_language(s.m2, ctx.max_len));
    }
    if (dfa_accepts(s.m1, *w) == dfa_accepts(s.m2, *w)) {
        return show(s.m1.alphabet, *w) + " does not separate the machines";
    }
    for (const Word& u : oracle::all_words(kAlphabetSize, w->size())) {
        if (!length_lex_less(u, *w)) {
            break;
        }
        if (dfa_accepts(s.m1, u) != dfa_accepts(s.m2, u)) {
            return "smaller word " + show(s.m1.alphabet, u) + " also separates";
        }
    }
    return std::nullopt;
}

Verdict format_roundtrip_dfa(const Subject& s, Rng&, const Context&) {
    Automaton back = parse_automaton(render_automaton(s.m1));
    if (!std::holds_alternative<Dfa>(back) || std::get<Dfa>(back) != s.m1) {
        return "render then parse changes the DFA";
    }
    return std::nullopt;
}

Verdict format_roundtrip_nfa(const Subject& s, Rng&, const Context&) {
    Automaton back = parse_automaton(render_automaton(s.n));
    if (!std::holds_alternative<Nfa>(back) || std::get<Nfa>(back) != s.n) {
        return "render then parse changes the NFA";
    }
    return std::nullopt;
}

Verdict regex_semantics(const Subject& s, Rng&, const Context& ctx) {
    Alphabet al = letters(kAlphabetSize);
    Dfa m = regex_compile(s.r, al, ctx.powerset);
    if (!is_minimal(m)) {
        return "compiled DFA is not minimal";
    }
    return first_disagreement(
        al, oracle::all_words(kAlphabetSize, ctx.max_len), [&](const Word& w) { return dfa_accepts(m, w); },
        [&](const Word& w) { return oracle::regex_matches(s.r, w); });
}

Verdict regex_roundtrip(const Subject& s, Rng&, const Context&) {
    Alphabet al = letters(kAlphabetSize);
    if (regex_parse(regex_render(s.r, al), al) != s.r) {
        return "parse of the rendering differs";
    }
    return std::nullopt;
}

const std::vector<Property>& properties() {
    static const std::vector<Property> table = {
        {"hf_roundtrip", Shape::Plain, hf_roundtrip},
        {"hf_order", Shape::Plain, hf_order},
        {"hf_pairs", Shape::Plain, hf_pairs},
        {"append_law", Shape::Dfa1, append_law},
        {"nextl_closure", Shape::Dfa1, nextl_closure},
        {"eq_nextl_right_invariant", Shape::Dfa1, eq_nextl_right_invariant},
        {"embedding", Shape::Dfa1, embedding},
        {"epsclo_idempotent", Shape::Nfa1, epsclo_idempotent},
        {"nextl_eps_closed", Shape::Nfa1, nextl_eps_closed},
        {"power_wellformed", Shape::Nfa1, power_wellformed},
        {"power_language", Shape::Nfa1, power_language},
        {"powerset_modes_agree", Shape::Nfa1, powerset_modes_agree},
        {"reversal", Shape::Dfa1, reversal},
        {"intersection", Shape::Dfa2, intersection},
        {"union", Shape::Dfa2, union_},
        {"complement", Shape::Dfa1, complement},
        {"concat_split", Shape::Dfa2, concat_split},
        {"star", Shape::Dfa1, star},
        {"construction_sizes", Shape::Dfa2, construction_sizes},
        {"accessible", Shape::Dfa1, accessible},
        {"partition_oracle", Shape::Dfa1, partition_oracle},
        {"collapse", Shape::Dfa1, collapse},
        {"minimal_APR", Shape::Dfa1, minimal_apr},
        {"minimal_Brzozowski", Shape::Dfa1, minimal_brzozowski},
        {"minimal_unique", Shape::Dfa1, minimal_unique},
        {"minimal_card_le", Shape::Dfa1, minimal_card_le},
        {"canonical_MN", Shape::Dfa1, canonical_mn},
        {"MN_refines_eq_app_right", Shape::Dfa1, mn_refines},
        {"eq_app_right_invariant", Shape::Dfa1, eq_app_right_invariant},
        {"L2_3", Shape::Dfa1, l2_3},
        {"equiv_vs_enumeration", Shape::Dfa2, equiv_vs_enumeration},
        {"distinguishing_word_least", Shape::Dfa2, distinguishing_word_least},
        {"format_roundtrip_dfa", Shape::Dfa1, format_roundtrip_dfa},
        {"format_roundtrip_nfa", Shape::Nfa1, format_roundtrip_nfa},
        {"regex_semantics", Shape::Regex1, regex_semantics},
        {"regex_roundtrip", Shape::Regex1, regex_roundtrip},
    };
    return table;
}

Verdict run_check(const Property& p, const Subject& s, std::uint64_t seed, const Context& ctx) {
    Rng rng(seed);
    try {
        return p.check(s, rng, ctx);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

// ---- shrinking ----

Dfa without_state(const Dfa& m, const Hf& q) {
    Dfa r;
    r.alphabet = m.alphabet;
    r.init = m.init;
    for (const Hf& p : m.states) {
        if (p != q) {
            r.states.insert(p);
        }
    }
    for (const Hf& f : m.final) {
        if (f != q) {
            r.final.insert(f);
        }
    }
    for (const auto& [key, target] : m.nxt) {
        if (key.first != q) {
            r.nxt[key] = target == q ? m.init : target;
        }
    }
    return r;
}

std::vector<Dfa> shrink_candidates(const Dfa& m) {
    std::vector<Dfa> out;
    for (auto it = m.states.rbegin(); it != m.states.rend(); ++it) {
        if (*it != m.init) {
            out.push_back(without_state(m, *it));
        }
    }
    for (const Hf& f : m.final) {
        Dfa r = m;
        r.final.erase(f);
        out.push_back(std::move(r));
    }
    for (const auto& [key, target] : m.nxt) {
        if (target != m.init) {
            Dfa r = m;
            r.nxt[key] = m.init;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Nfa> shrink_candidates(const Nfa& n) {
    std::vector<Nfa> out;
    if (n.states.size() > 1) {
        for (auto it = n.states.rbegin(); it != n.states.rend(); ++it) {
            const Hf& q = *it;
            Nfa r;
            r.alphabet = n.alphabet;
            for (const Hf& p : n.states) {
                if (p != q) {
                    r.states.insert(p);
                }
            }
            for (const Hf& p : n.init) {
                if (p != q) {
                    r.init.insert(p);
                }
            }
            for (const Hf& p : n.final) {
                if (p != q) {
                    r.final.insert(p);
                }
            }
            for (const auto& [key, targets] : n.nxt) {
                if (key.first == q) {
                    continue;
                }
                for (const Hf& t : targets) {
                    if (t != q) {
                        r.add_next(key.first, key.second, t);
                    }
                }
            }
            for (const auto& e : n.eps) {
                if (e.first != q && e.second != q) {
                    r.eps.insert(e);
                }
            }
            out.push_back(std::move(r));
        }
    }
    for (const auto& e : n.eps) {
        Nfa r = n;
        r.eps.erase(e);
        out.push_back(std::move(r));
    }
    for (const auto& [key, targets] : n.nxt) {
        for (const Hf& t : targets) {
            Nfa r = n;
            auto& ts = r.nxt[key];
            ts.erase(t);
            if (ts.empty()) {
                r.nxt.erase(key);
            }
            out.push_back(std::move(r));
        }
    }
    for (const Hf& f : n.final) {
        Nfa r = n;
        r.final.erase(f);
        out.push_back(std::move(r));
    }
    if (n.init.size() > 1) {
        for (const Hf& i : n.init) {
            Nfa r = n;
            r.init.erase(i);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Regex> shrink_candidates(const Regex& r) {
    std::vector<Regex> out;
    switch (r.kind()) {
    case Regex::Kind::Concat:
    case Regex::Kind::Alt:
        out.push_back(r.left());
        out.push_back(r.right());
        break;
    case Regex::Kind::Star:
        out.push_back(r.left());
        break;
    default:
        break;
    }
    if (r.kind() != Regex::Kind::EmptySet) {
        out.push_back(Regex::empty_set());
    }
    if (r.kind() != Regex::Kind::Epsilon && r.kind() != Regex::Kind::EmptySet) {
        out.push_back(Regex::epsilon());
    }
    // Shrink inside one operand while keeping the other.
    switch (r.kind()) {
    case Regex::Kind::Concat:
        for (const Regex& c : shrink_candidates(r.left())) {
            out.push_back(Regex::concat(c, r.right()));
        }
        for (const Regex& c : shrink_candidates(r.right())) {
            out.push_back(Regex::concat(r.left(), c));
        }
        break;
    case Regex::Kind::Alt:
        for (const Regex& c : shrink_candidates(r.left())) {
            out.push_back(Regex::alt(c, r.right()));
        }
        for (const Regex& c : shrink_candidates(r.right())) {
            out.push_back(Regex::alt(r.left(), c));
        }
        break;
    case Regex::Kind::Star:
        for (const Regex& c : shrink_candidates(r.left())) {
            out.push_back(Regex::star(c));
        }
        break;
    default:
        break;
    }
    return out;
}

std::vector<Subject> subject_candidates(const Subject& s, Shape shape) {
    std::vector<Subject> out;
    auto with = [&](auto field, const auto& value) {
        Subject t = s;
        t.*field = value;
        out.push_back(std::move(t));
    };
    switch (shape) {
    case Shape::Dfa1:
        for (const Dfa& c : shrink_candidates(s.m1)) {
            with(&Subject::m1, c);
        }
        break;
    case Shape::Dfa2:
        for (const Dfa& c : shrink_candidates(s.m1)) {
            with(&Subject::m1, c);
        }
        for (const Dfa& c : shrink_candidates(s.m2)) {
            with(&Subject::m2, c);
        }
        break;
    case Shape::Nfa1:
        for (const Nfa& c : shrink_candidates(s.n)) {
            with(&Subject::n, c);
        }
        break;
    case Shape::Regex1:
        for (const Regex& c : shrink_candidates(s.r)) {
            with(&Subject::r, c);
        }
        break;
    case Shape::Plain:
        break;
    }
    return out;
}

bool well_formed(const Subject& s, Shape shape) {
    switch (shape) {
    case Shape::Dfa1:
        return dfa_validate(s.m1).empty();
    case Shape::Dfa2:
        return dfa_validate(s.m1).empty() && dfa_validate(s.m2).empty();
    case Shape::Nfa1:
        return nfa_validate(s.n).empty();
    default:
        return true;
    }
}

/// Greedy: take the first smaller candidate that still fails, until none does.
std::pair<Subject, std::string> shrink(const Property& p, Subject s, std::string why, std::uint64_t seed,
                                       const Context& ctx) {
    std::size_t budget = 2000;
    bool progress = true;
    while (progress && budget > 0) {
        progress = false;
        for (const Subject& c : subject_candidates(s, p.shape)) {
            if (budget == 0) {
                break;
            }
            --budget;
            if (!well_formed(c, p.shape)) {
                continue;
            }
            if (auto v = run_check(p, c, seed, ctx)) {
                s = c;
                why = *v;
                progress = true;
                break;
            }
        }
    }
    return {std::move(s), std::move(why)};
}

std::vector<std::string> record_counterexample(const Property& p, const Subject& s, const ProptestConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> files;
    Alphabet al = letters(kAlphabetSize);
    switch (p.shape) {
    case Shape::Dfa1:
        files.emplace_back(std::string(p.name) + ".dfa", render_automaton(s.m1));
        break;
    case Shape::Dfa2:
        files.emplace_back(std::string(p.name) + ".1.dfa", render_automaton(s.m1));
        files.emplace_back(std::string(p.name) + ".2.dfa", render_automaton(s.m2));
        break;
    case Shape::Nfa1:
        files.emplace_back(std::string(p.name) + ".nfa", render_automaton(s.n));
        break;
    case Shape::Regex1:
        files.emplace_back(std::string(p.name) + ".regex", regex_render(s.r, al) + "\n");
        break;
    case Shape::Plain:
        return {};
    }
    std::vector<std::string> out;
    for (const auto& [name, body] : files) {
        if (cfg.counterexample_dir.empty()) {
            out.push_back(body);
            continue;
        }
        std::filesystem::create_directories(cfg.counterexample_dir);
        std::filesystem::path path = cfg.counterexample_dir / name;
        std::ofstream f(path, std::ios::binary);
        f << body;
        if (!f) {
            throw InputError("cannot write " + path.string());
        }
        out.push_back(path.string());
    }
    return out;
}

Subject generate(std::uint64_t seed, const ProptestConfig& cfg) {
    Rng rng(seed);
    const std::size_t hi = std::max<std::size_t>(cfg.max_states, 1);
    Subject s;
    s.m1 = random_dfa(rng, {1, hi, kAlphabetSize});
    s.m2 = random_dfa(rng, {1, hi, kAlphabetSize});
    s.n = random_nfa(rng, {1, hi, kAlphabetSize, kMaxEps});
    s.r = random_regex(rng, kAlphabetSize, kRegexDepth);
    return s;
}

const char* mode_name(PowersetMode mode) {
    switch (mode) {
    case PowersetMode::Full:
        return "full";
    case PowersetMode::Reachable:
        return "reachable";
    default:
        return "auto";
    }
}

} // namespace

bool ProptestReport::passed() const noexcept {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const PropertyOutcome& o) { return o.passed(); });
}

std::vector<std::string> proptest_property_names() {
    std::vector<std::string> out;
    for (const Property& p : properties()) {
        out.emplace_back(p.name);
    }
    return out;
}

ProptestReport run_proptest(const ProptestConfig& config) {
    Context ctx{config.max_len, config.powerset, config.minimizer};
    if (!ctx.minimize) {
        PowersetOptions opts = config.powerset;
        ctx.minimize = [opts](const Dfa& m) { return brzozowski(m, opts); };
    }

    const auto& props = properties();
    ProptestReport report;
    report.config = config;
    report.outcomes.resize(props.size());
    std::vector<std::optional<Subject>> first_subject(props.size());
    for (std::size_t k = 0; k < props.size(); ++k) {
        report.outcomes[k].name = props[k].name;
    }

    for (std::size_t i = 0; i < config.count; ++i) {
        const std::uint64_t case_seed = derive_seed(config.seed, i);
        Subject s = generate(case_seed, config);
        for (std::size_t k = 0; k < props.size(); ++k) {
            PropertyOutcome& o = report.outcomes[k];
            ++o.cases;
            const std::uint64_t seed = derive_seed(case_seed, k);
            if (auto v = run_check(props[k], s, seed, ctx)) {
                if (o.failures++ == 0) {
                    o.first_failure = i;
                    auto [small, why] = shrink(props[k], s, *v, seed, ctx);
                    o.detail = why;
                    o.counterexample = record_counterexample(props[k], small, config);
                }
            }
        }
    }
    return report;
}

void print_report(const ProptestReport& report, std::ostream& out) {
    const ProptestConfig& c = report.config;
    out << "proptest seed " << c.seed << ", " << c.count << " cases, up to " << c.max_states
        << " states, words up to length " << c.max_len << ", powerset " << mode_name(c.powerset.mode) << "\n";
    std::size_t failed = 0;
    for (const PropertyOutcome& o : report.outcomes) {
        if (o.passed()) {
            out << "PASS " << o.name << " (" << o.cases << " cases)\n";
            continue;
        }
        ++failed;
        out << "FAIL " << o.name << " (" << o.failures << " of " << o.cases << " cases); case " << o.first_failure
            << ": " << o.detail << "\n";
        for (const std::string& ce : o.counterexample) {
            if (c.counterexample_dir.empty()) {
                out << "  counterexample:\n" << ce;
            } else {
                out << "  counterexample: " << ce << "\n";
            }
        }
    }
    out << report.outcomes.size() - failed << " passed, " << failed << " failed\n";
}

} // namespace hfauto
