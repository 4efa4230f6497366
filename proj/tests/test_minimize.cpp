#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hfauto/constructions.hpp"
#include "hfauto/error.hpp"
#include "hfauto/langtools.hpp"
#include "hfauto/minimize.hpp"
#include "hfauto/oracle.hpp"
#include "hfauto/random.hpp"

using namespace hfauto;
using namespace hfauto::fixtures;
using oracle::bounded_language;
using oracle::bounded_right_language;

namespace {

Hf set_of(std::initializer_list<Hf> xs) { return from_elements(std::vector<Hf>(xs)); }

Word concat(Word u, const Word& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
}

} // namespace

TEST_CASE("accessible states and paths") {
    Dfa junk = m_even_with_junk();
    CHECK(accessible_states(junk) == StateSet{ord_of(0), ord_of(1)});
    CHECK(accessible_dfa(junk) == m_even());
    CHECK_THROWS_AS(path_to(junk, ord_of(7)), InputError);

    Dfa chain = m_chain3();
    CHECK(chain.alphabet.render(path_to(chain, ord_of(2))) == "aa");
    CHECK(path_to(chain, ord_of(0)).empty());

    Dfa ab_only = m_exactly_ab();
    auto aw = access_words(ab_only);
    REQUIRE(aw.size() == 4);
    CHECK(aw[0].first == ord_of(0));
    CHECK(ab_only.alphabet.render(aw[1].second) == "a");
    CHECK(ab_only.alphabet.render(aw[2].second) == "b");
    CHECK(aw[2].first == ord_of(3));
    CHECK(ab_only.alphabet.render(aw[3].second) == "ab");
}

TEST_CASE("path_to reaches its state on random machines") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        for (const auto& [q, w] : access_words(m)) {
            REQUIRE(dfa_nextl(m, m.init, w) == q);
            REQUIRE(path_to(m, q) == w);
        }
        Dfa a = accessible_dfa(m);
        REQUIRE(dfa_validate(a).empty());
        REQUIRE(bounded_language(a, 6) == bounded_language(m, 6));
        REQUIRE(accessible_states(a) == a.states);
    }
}

TEST_CASE("partition class") {
    Partition p({{ord_of(2)}, {ord_of(0), ord_of(3)}});
    CHECK(p.size() == 2);
    CHECK(p.blocks()[0] == StateSet{ord_of(0), ord_of(3)});
    CHECK(p.block_of(ord_of(2)) == 1);
    CHECK(p.carrier() == StateSet{ord_of(0), ord_of(2), ord_of(3)});
    CHECK_FALSE(p.is_discrete());
    CHECK_THROWS_AS(p.block_of(ord_of(1)), InputError);
    CHECK_THROWS_AS(Partition({{ord_of(0)}, {ord_of(0), ord_of(1)}}), InputError);
    CHECK_THROWS_AS(Partition(std::vector<StateSet>{StateSet{}}), InputError);
}

TEST_CASE("indistinguishability partition examples") {
    CHECK(indistinguishability_partition(m_even()).is_discrete());

    Partition cloned = indistinguishability_partition(m_cloned_sink());
    CHECK(cloned.size() == 3);
    CHECK(cloned.block_of(ord_of(2)) == cloned.block_of(ord_of(3)));

    // Every non-final state of M_a is dead after its first letter except the start.
    Partition pa = indistinguishability_partition(m_a());
    CHECK(pa.size() == 3);
}

TEST_CASE("indistinguishability matches bounded right languages") {
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        Dfa m = random_dfa(rng, {1, 5, 2});
        Partition p = indistinguishability_partition(m);
        REQUIRE(p.carrier() == m.states);
        // Distinguishable states differ on a word of length < |states|.
        std::size_t bound = 2 * m.states.size();
        for (const Hf& q : m.states) {
            for (const Hf& r : m.states) {
                bool same = p.block_of(q) == p.block_of(r);
                REQUIRE(same == (bounded_right_language(m, q, bound) == bounded_right_language(m, r, bound)));
            }
        }
    }
}

TEST_CASE("collapse_dfa") {
    Dfa c = collapse_dfa(m_cloned_sink());
    CHECK(dfa_validate(c).empty());
    CHECK(c.states.size() == 3);
    CHECK(c.states.contains(set_of({ord_of(2), ord_of(3)})));
    CHECK(dfa_equiv(c, m_cloned_sink()));
    CHECK(is_minimal(c));
    CHECK_FALSE(is_minimal(m_cloned_sink()));
    CHECK_FALSE(is_minimal(m_even_with_junk()));
    CHECK(is_minimal(m_even()));

    Rng rng(47);
    for (int i = 0; i < 200; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        Dfa cm = collapse_dfa(accessible_dfa(m));
        REQUIRE(dfa_validate(cm).empty());
        REQUIRE(is_minimal(cm));
        REQUIRE(cm.states.size() == min_states(m));
        REQUIRE(bounded_language(cm, 6) == bounded_language(m, 6));
    }
}

TEST_CASE("min_states") {
    CHECK(min_states(m_even()) == 2);
    CHECK(min_states(m_cloned_sink()) == 3);
    CHECK(min_states(m_exactly_ab()) == 4);
    CHECK(min_states(m_all()) == 1);

    // The empty language over a one-letter alphabet needs one state.
    Dfa nothing = table_dfa(Alphabet({"a"}), {{1}, {1}}, {});
    CHECK(min_states(nothing) == 1);
}

TEST_CASE("canonical_dfa") {
    Dfa c = canonical_dfa(m_even());
    CHECK(c.init == ord_of(0));
    CHECK(c.states == StateSet{ord_of(0), ord_of(1)});
    CHECK(c.final == StateSet{ord_of(0)});
    CHECK(c.next(ord_of(0), Symbol{0}) == ord_of(1));

    // Classes numbered by least representative: ε, a, b, ab.
    Dfa cab = canonical_dfa(m_exactly_ab());
    CHECK(cab.final == StateSet{ord_of(3)});
    CHECK(cab.next(ord_of(0), Symbol{1}) == ord_of(2));

    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        Dfa cm = canonical_dfa(m);
        REQUIRE(dfa_equiv(cm, m));
        REQUIRE(cm.states.size() == min_states(m));
        // Canonical form depends only on the language.
        REQUIRE(canonical_dfa(random_equivalent_variant(rng, m)) == cm);
    }
}

TEST_CASE("eq_app_right_related") {
    Dfa m = m_even();
    const Alphabet& al = m.alphabet;
    CHECK_FALSE(eq_app_right_related(m, al.word("a"), al.word("b")));
    CHECK(eq_app_right_related(m, al.word("aa"), al.word("b")));

    Rng rng(59);
    for (int i = 0; i < 1000; ++i) {
        Dfa d = random_dfa(rng, {1, 5, 2});
        Word u = random_word(rng, 2, 4);
        Word v = random_word(rng, 2, 4);
        Word w = random_word(rng, 2, 3);
        if (eq_app_right_related(d, u, v)) {
            REQUIRE(eq_app_right_related(d, concat(u, w), concat(v, w)));
        }
        // The state relation refines the language relation.
        if (eq_nextl_related(d, u, v)) {
            REQUIRE(eq_app_right_related(d, u, v));
        }
    }
}

TEST_CASE("find_isomorphism") {
    Dfa m = m_even();
    Dfa renamed;
    renamed.alphabet = m.alphabet;
    auto h = [](const Hf& q) { return pair(ord_of(5), q); };
    for (const Hf& q : m.states) {
        renamed.states.insert(h(q));
    }
    renamed.init = h(m.init);
    for (const Hf& q : m.final) {
        renamed.final.insert(h(q));
    }
    for (const auto& [key, target] : m.nxt) {
        renamed.set_next(h(key.first), key.second, h(target));
    }

    auto iso = find_isomorphism(m, renamed);
    REQUIRE(iso);
    CHECK_FALSE(iso->ignored_unreachable);
    CHECK((*iso)(ord_of(1)) == h(ord_of(1)));
    CHECK(is_isomorphism(m, renamed, iso->mapping));

    CHECK_FALSE(find_isomorphism(m, m_endb()));
    CHECK_FALSE(find_isomorphism(m, m_cloned_sink()));

    auto with_junk = find_isomorphism(m_even_with_junk(), m);
    REQUIRE(with_junk);
    CHECK(with_junk->ignored_unreachable);

    Dfa other = m;
    other.alphabet = Alphabet({"a", "c"});
    CHECK_THROWS_AS(find_isomorphism(m, other), InputError);

    std::map<Hf, Hf> bad{{ord_of(0), ord_of(1)}, {ord_of(1), ord_of(0)}};
    CHECK_FALSE(is_isomorphism(m, m, bad));
}

TEST_CASE("apr and brzozowski") {
    Dfa r = apr(m_exactly_ab());
    CHECK(is_minimal(r));
    CHECK(bounded_language(r, 5) == oracle::reverse_words(bounded_language(m_exactly_ab(), 5)));

    Dfa b = brzozowski(m_cloned_sink());
    CHECK(b.states.size() == 3);
    CHECK(is_minimal(b));
    CHECK(dfa_equiv(b, m_cloned_sink()));
    CHECK(find_isomorphism(b, collapse_dfa(m_cloned_sink())));

    CHECK(brzozowski(m_even_with_junk()).states.size() == 2);

    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        Dfa m = random_dfa(rng, {1, 6, 2});
        Dfa bm = brzozowski(m);
        REQUIRE(is_minimal(bm));
        REQUIRE(dfa_equiv(bm, m));
        REQUIRE(find_isomorphism(bm, collapse_dfa(accessible_dfa(m))));

        Dfa am = accessible_dfa(m);
        Dfa ra = apr(am);
        REQUIRE(is_minimal(ra));
    }
}
