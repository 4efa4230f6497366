// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Language-level checks use the small word-set oracles below, which only run
// machines word by word; they never call the constructions being checked.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hfauto/constructions.hpp"
#include "hfauto/hf.hpp"
#include "hfauto/langtools.hpp"
#include "hfauto/minimize.hpp"
#include "hfauto/random.hpp"

using namespace hfauto;

namespace {

using Words = std::set<Word>;

std::vector<Word> words_upto(std::size_t k, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    for (std::size_t start = 0; start < out.size(); ++start) {
        if (out[start].size() == max_len) {
            continue;
        }
        for (std::uint32_t x = 0; x < k; ++x) {
            Word w = out[start];
            w.push_back(Symbol{x});
            out.push_back(std::move(w));
        }
    }
    return out;
}

Words accepted(const std::function<bool(const Word&)>& run, const std::vector<Word>& universe) {
    Words out;
    for (const Word& w : universe) {
        if (run(w)) {
            out.insert(w);
        }
    }
    return out;
}

Words lang(const Dfa& m, const std::vector<Word>& u) {
    return accepted([&](const Word& w) { return dfa_accepts(m, w); }, u);
}

Words lang(const Nfa& n, const std::vector<Word>& u) {
    return accepted([&](const Word& w) { return nfa_accepts(n, w); }, u);
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

bool in_star(const Words& l, const Word& w) {
    // ok[i]: the prefix of length i splits into nonempty pieces from l.
    std::vector<bool> ok(w.size() + 1, false);
    ok[0] = true;
    for (std::size_t j = 1; j <= w.size(); ++j) {
        for (std::size_t i = 0; i < j && !ok[j]; ++i) {
            ok[j] = ok[i] && l.contains(slice(w, i, j));
        }
    }
    return ok[w.size()];
}

// Brute-force matcher: tries every split for concatenation and star.
bool matches(const Regex& r, const Word& w) {
    switch (r.kind()) {
    case Regex::Kind::EmptySet:
        return false;
    case Regex::Kind::Epsilon:
        return w.empty();
    case Regex::Kind::Literal:
        return w.size() == 1 && w[0] == r.symbol();
    case Regex::Kind::Alt:
        return matches(r.left(), w) || matches(r.right(), w);
    case Regex::Kind::Concat:
        for (std::size_t k = 0; k <= w.size(); ++k) {
            if (matches(r.left(), slice(w, 0, k)) && matches(r.right(), slice(w, k, w.size()))) {
                return true;
            }
        }
        return false;
    case Regex::Kind::Star:
        if (w.empty()) {
            return true;
        }
        for (std::size_t k = 1; k <= w.size(); ++k) {
            if (matches(r.left(), slice(w, 0, k)) && matches(r, slice(w, k, w.size()))) {
                return true;
            }
        }
        return false;
    }
    return false;
}

Word cat(Word u, const Word& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
}

Word reversed_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string fail_reason;

    void require(bool cond, const std::string& why) {
        if (!cond && pass) {
            pass = false;
            fail_reason = why;
        }
    }
};

int failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.fail_reason = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
        o.require(false, "over the " + std::to_string(static_cast<int>(budget_s)) + " s budget");
    }
    if (!o.pass) {
        ++failures;
    }
    std::printf("%s [%d] %s: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
                o.pass ? "" : " -- ", o.fail_reason.c_str());
    std::fflush(stdout);
}

std::strong_ordering compare_codes(const Code& a, const Code& b) {
    if (a < b) {
        return std::strong_ordering::less;
    }
    return a == b ? std::strong_ordering::equal : std::strong_ordering::greater;
}

Outcome hf_kernel() {
    Outcome o;
    for (unsigned n = 0; n < (1U << 16) && o.pass; ++n) {
        Hf x = decode(n);
        o.require(code(x) == n, "code(decode(" + std::to_string(n) + ")) != n");
        o.require(decode(code(x)) == x && from_elements(elements(x)) == x, "round trip fails at " + std::to_string(n));
    }
    std::vector<Hf> xs;
    std::vector<Code> codes;
    for (unsigned n = 0; n < 1024; ++n) {
        xs.push_back(decode(n));
        codes.push_back(code(xs.back()));
    }
    std::size_t mem_pairs = 0, sub_pairs = 0;
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned b = 0; b < 256; ++b) {
            bool m = mem(xs[a], xs[b]);
            o.require(m == (a < 32 && ((b >> a) & 1U) != 0), "mem disagrees with the code bits");
            if (m) {
                ++mem_pairs;
                o.require(hf_cmp(xs[a], xs[b]) < 0, "order does not extend membership");
            }
            if (subset(xs[a], xs[b]) && a != b) {
                ++sub_pairs;
                o.require(hf_cmp(xs[a], xs[b]) < 0, "order does not extend inclusion");
            }
        }
    }
    for (unsigned a = 0; a < 1024; ++a) {
        for (unsigned b = 0; b < 1024; ++b) {
            if (hf_cmp(xs[a], xs[b]) != compare_codes(codes[a], codes[b])) {
                o.require(false, "hf_cmp disagrees at " + std::to_string(a) + ", " + std::to_string(b));
            }
        }
    }
    o.detail = "65536 round trips, " + std::to_string(mem_pairs) + " ∈-pairs and " + std::to_string(sub_pairs) +
               " ⊊-pairs below 256, 1048576 hf_cmp pairs below 1024";
    return o;
}

Outcome power_language() {
    Outcome o;
    Rng rng(derive_seed(2, 0));
    auto universe = words_upto(2, 6);
    for (int i = 0; i < 500 && o.pass; ++i) {
        Nfa n = random_nfa(rng, {1, 5, 2, 4});
        Dfa d = power_dfa(n);
        for (const Word& w : universe) {
            o.require(dfa_accepts(d, w) == nfa_accepts(n, w), "NFA " + std::to_string(i) + " disagrees");
        }
    }
    o.detail = "500 NFAs, 127 words each";
    return o;
}

Outcome closures() {
    Outcome o;
    Rng rng(derive_seed(3, 0));
    auto universe = words_upto(2, 5);
    for (int i = 0; i < 200 && o.pass; ++i) {
        Dfa m1 = random_dfa(rng, {1, 4, 2});
        Dfa m2 = random_dfa(rng, {1, 4, 2});
        Words l1 = lang(m1, universe);
        Words l2 = lang(m2, universe);
        std::string at = " on pair " + std::to_string(i);

        Words both, either, not1, concat, star;
        for (const Word& w : universe) {
            if (l1.contains(w) && l2.contains(w)) {
                both.insert(w);
            }
            if (l1.contains(w) || l2.contains(w)) {
                either.insert(w);
            }
            if (!l1.contains(w)) {
                not1.insert(w);
            }
            for (std::size_t k = 0; k <= w.size(); ++k) {
                if (l1.contains(slice(w, 0, k)) && l2.contains(slice(w, k, w.size()))) {
                    concat.insert(w);
                    break;
                }
            }
            if (in_star(l1, w)) {
                star.insert(w);
            }
        }
        o.require(lang(intersect_dfa(m1, m2), universe) == both, "intersection" + at);
        o.require(lang(union_dfa(m1, m2), universe) == either, "union" + at);
        o.require(lang(complement_dfa(m1), universe) == not1, "complement" + at);
        Nfa c = concat_nfa(m1, m2);
        Words lc = lang(c, universe);
        o.require(lc == concat, "concatenation" + at);
        // Split property: every accepted word is uS@uT with uS ∈ L1, uT ∈ L2.
        for (const Word& w : lc) {
            bool split = false;
            for (std::size_t k = 0; k <= w.size() && !split; ++k) {
                split = dfa_accepts(m1, slice(w, 0, k)) && dfa_accepts(m2, slice(w, k, w.size()));
            }
            o.require(split, "unsplittable concatenation word" + at);
        }
        o.require(lang(star_nfa(m1), universe) == star, "star" + at);
    }
    o.detail = "200 pairs, 63 words, 5 constructions and the split property";
    return o;
}

Outcome brzozowski_correct() {
    Outcome o;
    Rng rng(derive_seed(4, 0));
    for (int i = 0; i < 300 && o.pass; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        Dfa b = brzozowski(m);
        std::string at = " on DFA " + std::to_string(i);
        o.require(is_minimal(b), "not minimal" + at);
        o.require(dfa_equiv(b, m), "not equivalent" + at);
        o.require(find_isomorphism(b, collapse_dfa(accessible_dfa(m))).has_value(), "not isomorphic" + at);
    }
    o.detail = "300 DFAs minimal, equivalent and isomorphic to collapse∘accessible";
    return o;
}

Outcome card_bound() {
    Outcome o;
    Rng rng(derive_seed(5, 0));
    auto universe = words_upto(2, 6);
    std::size_t largest = 0;
    for (int i = 0; i < 100 && o.pass; ++i) {
        Dfa seed = random_dfa(rng, {1, 5, 2});
        Dfa a = random_equivalent_variant(rng, seed);
        Dfa b = random_equivalent_variant(rng, seed);
        largest = std::max({largest, a.states.size(), b.states.size()});
        std::string at = " on pair " + std::to_string(i);
        o.require(dfa_equiv(a, b) && lang(a, universe) == lang(b, universe), "variants differ" + at);
        o.require(brzozowski(a).states.size() <= b.states.size(), "brzozowski(a) larger than b" + at);
        o.require(brzozowski(b).states.size() <= a.states.size(), "brzozowski(b) larger than a" + at);
    }
    o.detail = "100 equivalent pairs, variants up to " + std::to_string(largest) + " states";
    return o;
}

Outcome myhill_nerode() {
    Outcome o;
    Rng rng(derive_seed(6, 0));
    std::size_t pairs = 0, related = 0, triples = 0, right_related = 0;
    for (int i = 0; i < 100 && o.pass; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        Dfa c = canonical_dfa(m);
        std::string at = " on DFA " + std::to_string(i);
        o.require(dfa_equiv(c, m), "canonical DFA not equivalent" + at);
        o.require(c.states.size() == min_states(m), "state count differs from the index" + at);
        for (int k = 0; k < 10; ++k) {
            Word u = random_word(rng, 2, 6);
            // Half the pairs reach the same state, so the implication is exercised.
            Word v = k % 2 == 0 ? path_to(m, dfa_nextl(m, m.init, u)) : random_word(rng, 2, 6);
            ++pairs;
            if (eq_nextl_related(m, u, v)) {
                ++related;
                o.require(eq_app_right_related(m, u, v), "eq_nextl does not refine eq_app_right" + at);
            }
        }
        for (int k = 0; k < 10; ++k) {
            Word u = random_word(rng, 2, 5);
            Word v = k % 2 == 0 ? path_to(m, dfa_nextl(m, m.init, u)) : random_word(rng, 2, 5);
            Word w = random_word(rng, 2, 4);
            ++triples;
            if (eq_app_right_related(m, u, v)) {
                ++right_related;
                o.require(eq_app_right_related(m, cat(u, w), cat(v, w)), "eq_app_right not right invariant" + at);
            }
        }
    }
    o.detail = "100 DFAs; " + std::to_string(pairs) + " pairs (" + std::to_string(related) + " state-related), " +
               std::to_string(triples) + " triples (" + std::to_string(right_related) + " related)";
    return o;
}

Outcome reversal() {
    Outcome o;
    Rng rng(derive_seed(7, 0));
    auto universe = words_upto(2, 6);
    for (int i = 0; i < 200 && o.pass; ++i) {
        Dfa m = random_dfa(rng, {1, 5, 2});
        Nfa r = reverse_nfa(m);
        for (const Word& w : universe) {
            o.require(nfa_accepts(r, w) == dfa_accepts(m, reversed_word(w)), "DFA " + std::to_string(i) + " disagrees");
        }
    }
    o.detail = "200 DFAs, 127 words each";
    return o;
}

Outcome regex_pipeline() {
    Outcome o;
    Rng rng(derive_seed(8, 0));
    Alphabet al = letters(2);
    auto universe = words_upto(2, 5);
    std::size_t max_states = 0;
    for (int i = 0; i < 200 && o.pass; ++i) {
        Regex r = random_regex(rng, 2, 4);
        o.require(r.depth() <= 4, "regex too deep");
        Dfa m = regex_compile(r, al);
        max_states = std::max(max_states, m.states.size());
        for (const Word& w : universe) {
            o.require(dfa_accepts(m, w) == matches(r, w), "regex " + regex_render(r, al) + " disagrees");
        }
    }
    o.detail = "200 regexes, 63 words each, compiled DFAs up to " + std::to_string(max_states) + " states";
    return o;
}

Outcome powerset_modes() {
    Outcome o;
    Rng rng(derive_seed(9, 0));
    std::size_t machines = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int i = 0; i < 30 && o.pass; ++i) {
            Nfa nfa = random_nfa(rng, {n, n, 2, 4});
            Dfa full = power_dfa(nfa, {PowersetMode::Full, 12});
            Dfa reach = power_dfa(nfa, {PowersetMode::Reachable});
            ++machines;
            std::string at = " on a " + std::to_string(n) + "-state NFA";
            o.require(dfa_equiv(full, reach), "modes not equivalent" + at);
            o.require(accessible_dfa(full) == reach, "reachable part differs" + at);
            o.require(find_isomorphism(brzozowski(full), brzozowski(reach)).has_value(),
                      "minimised results not isomorphic" + at);
        }
    }
    o.detail = std::to_string(machines) + " NFAs with 1-10 states";
    return o;
}

} // namespace

int main() {
    report(1, "HF kernel", 10, hf_kernel);
    report(2, "Power_language", 60, power_language);
    report(3, "closure constructions", 60, closures);
    report(4, "Brzozowski correctness", 120, brzozowski_correct);
    report(5, "minimal cardinality bound", 0, card_bound);
    report(6, "Myhill-Nerode", 0, myhill_nerode);
    report(7, "reversal semantics", 0, reversal);
    report(8, "regex pipeline", 0, regex_pipeline);
    report(9, "full vs reachable powerset", 0, powerset_modes);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
