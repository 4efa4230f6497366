#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hfauto/automata.hpp"
#include "hfauto/constructions.hpp"
#include "hfauto/error.hpp"
#include "hfauto/oracle.hpp"
#include "hfauto/random.hpp"

using namespace hfauto;
using namespace hfauto::fixtures;

namespace {

bool has_axiom(const std::vector<Violation>& vs, const std::string& axiom, const std::string& needle = "") {
    for (const auto& v : vs) {
        if (v.axiom == axiom && v.witness.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("alphabet words") {
    Alphabet al = ab();
    CHECK(al.word("") == Word{});
    CHECK(al.word("ab") == Word{Symbol{0}, Symbol{1}});
    CHECK(al.render(al.word("ba")) == "ba");
    CHECK(al.render({}) == "ε");
    CHECK_THROWS_AS(al.word("z"), InputError);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);

    Alphabet multi({"x1", "x2"});
    CHECK(multi.word("x2 x1") == Word{Symbol{1}, Symbol{0}});
    CHECK(multi.render(Word{Symbol{1}, Symbol{0}}) == "x2 x1");
}

TEST_CASE("dfa_validate") {
    CHECK(dfa_validate(m_even()).empty());

    Dfa bad_final = m_even();
    bad_final.final = {ord_of(5)};
    auto vs = dfa_validate(bad_final);
    REQUIRE(vs.size() == 1);
    CHECK(has_axiom(vs, "final", to_string(ord_of(5))));

    Dfa bad_nxt = m_even();
    bad_nxt.set_next(ord_of(1), Symbol{0}, ord_of(9));
    vs = dfa_validate(bad_nxt);
    REQUIRE(vs.size() == 1);
    CHECK(has_axiom(vs, "nxt", "(" + to_string(ord_of(1)) + ", a)"));

    Dfa bad_init = m_even();
    bad_init.init = ord_of(4);
    CHECK(has_axiom(dfa_validate(bad_init), "init"));

    Dfa partial = m_even();
    partial.nxt.erase({ord_of(0), Symbol{1}});
    CHECK(has_axiom(dfa_validate(partial), "nxt", "no transition"));

    Dfa no_letters = m_even();
    no_letters.alphabet = Alphabet{};
    CHECK(has_axiom(dfa_validate(no_letters), "alphabet"));

    CHECK_THROWS_AS(require_valid(bad_final), InputError);
}

TEST_CASE("dfa_nextl and acceptance on M_even") {
    Dfa m = m_even();
    Alphabet al = m.alphabet;
    CHECK(dfa_nextl(m, ord_of(0), {}) == ord_of(0));
    CHECK(dfa_nextl(m, ord_of(0), al.word("aa")) == ord_of(0));
    CHECK(dfa_nextl(m, ord_of(0), al.word("ab")) == ord_of(1));
    CHECK(dfa_accepts(m, {}));
    CHECK_FALSE(dfa_accepts(m, al.word("a")));
    CHECK(dfa_accepts(m, al.word("baab")));

    CHECK_THROWS_AS(dfa_nextl(m, ord_of(3), {}), InputError);
    CHECK_THROWS_AS(dfa_accepts(m, Word{Symbol{2}}), InputError);
}

TEST_CASE("eq_nextl_related") {
    Dfa m = m_even();
    Alphabet al = m.alphabet;
    CHECK(eq_nextl_related(m, {}, al.word("aa")));
    CHECK(eq_nextl_related(m, al.word("abba"), al.word("abba")));
    CHECK_FALSE(eq_nextl_related(m, al.word("a"), al.word("b")));
}

TEST_CASE("dfa run properties on random machines") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Dfa m = random_dfa(rng, {1, 5, 2});
        std::vector<Hf> states(m.states.begin(), m.states.end());
        Hf q = states[rng.below(states.size())];
        Word u = random_word(rng, 2, 5);
        Word v = random_word(rng, 2, 5);
        Word w = random_word(rng, 2, 4);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        REQUIRE(dfa_nextl(m, q, uv) == dfa_nextl(m, dfa_nextl(m, q, u), v));
        REQUIRE(m.states.contains(dfa_nextl(m, q, uv)));

        if (eq_nextl_related(m, u, v)) {
            Word uw = u, vw = v;
            uw.insert(uw.end(), w.begin(), w.end());
            vw.insert(vw.end(), w.begin(), w.end());
            REQUIRE(eq_nextl_related(m, uw, vw));
        }
    }
}

TEST_CASE("nfa_validate") {
    CHECK(nfa_validate(n_aplus()).empty());
    CHECK(nfa_validate(reverse_nfa(m_even())).empty());

    Nfa bad = n_aplus();
    bad.init.insert(ord_of(6));
    CHECK(has_axiom(nfa_validate(bad), "init", to_string(ord_of(6))));

    Nfa escapes = n_aplus();
    escapes.add_next(ord_of(1), Symbol{1}, ord_of(8));
    CHECK(has_axiom(nfa_validate(escapes), "nxt"));

    Nfa eps_out = n_aplus();
    eps_out.eps.insert({ord_of(0), ord_of(42)});
    eps_out.eps.insert({ord_of(43), ord_of(44)});
    CHECK(nfa_validate(eps_out).empty());
}

TEST_CASE("epsclo") {
    Nfa n = n_aplus();
    CHECK(epsclo(n, {}).empty());
    CHECK(epsclo(n, {ord_of(0)}) == StateSet{ord_of(0)});
    CHECK(epsclo(n, {ord_of(0), ord_of(9)}) == StateSet{ord_of(0)});

    // Through a non-state: 0 -> 9 -> 1 reaches 1, and 9 is dropped.
    n.eps = {{ord_of(0), ord_of(9)}, {ord_of(9), ord_of(1)}};
    CHECK(epsclo(n, {ord_of(0)}) == StateSet{ord_of(0), ord_of(1)});

    Dfa ms = m_a();
    Dfa mt = m_b();
    Nfa conc = concat_nfa(ms, mt);
    CHECK(epsclo(conc, {inl(ord_of(1))}) == StateSet{inl(ord_of(1)), inr(ord_of(0))});
}

TEST_CASE("nfa_nextl and acceptance on N_aplus") {
    Nfa n = n_aplus();
    Alphabet al = n.alphabet;
    CHECK(nfa_nextl(n, {ord_of(0)}, al.word("a")) == StateSet{ord_of(0), ord_of(1)});
    CHECK(nfa_nextl(n, {ord_of(0)}, al.word("aa")) == StateSet{ord_of(0), ord_of(1)});
    CHECK(nfa_nextl(n, {ord_of(0)}, al.word("ab")).empty());
    CHECK_FALSE(nfa_accepts(n, {}));
    CHECK(nfa_accepts(n, al.word("a")));
    CHECK(nfa_accepts(n, al.word("aaa")));
    CHECK_FALSE(nfa_accepts(n, al.word("aab")));
    CHECK_THROWS_AS(nfa_accepts(n, Word{Symbol{5}}), InputError);
}

TEST_CASE("epsclo and nfa_nextl properties on random NFAs") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        Nfa n = random_nfa(rng, {1, 5, 2, 4});
        StateSet q;
        for (const Hf& s : n.states) {
            if (rng.chance(1, 2)) {
                q.insert(s);
            }
        }
        StateSet c = epsclo(n, q);
        REQUIRE(epsclo(n, c) == c);
        for (const Hf& s : c) {
            REQUIRE(n.states.contains(s));
        }
        for (const Hf& s : q) {
            REQUIRE(c.contains(s));
        }
        // nextl on the empty word is the closure
        REQUIRE(nfa_nextl(n, q, {}) == c);
        Word w = random_word(rng, 2, 5);
        StateSet r = nfa_nextl(n, q, w);
        REQUIRE(epsclo(n, r) == r);
    }
}

TEST_CASE("a DFA embedded as an NFA accepts the same words") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Dfa m = random_dfa(rng, {1, 5, 2});
        Nfa n = embed_dfa(m);
        REQUIRE(nfa_validate(n).empty());
        REQUIRE(oracle::bounded_language(n, 6) == oracle::bounded_language(m, 6));
    }
}
