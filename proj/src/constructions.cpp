#include "hfauto/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hfauto/error.hpp"

namespace hfauto {

namespace {

using Bits = boost::dynamic_bitset<>;

struct PowersetTables {
    std::vector<Hf> state_of;
    std::vector<Bits> closure;             // closure[i] = epsclo({q_i})
    std::vector<std::vector<Bits>> succ;   // succ[i][x] = epsclo(nxt(q_i, x))
    Bits final;
    Bits init;

    std::size_t size() const { return state_of.size(); }

    Bits to_bits(const StateSet& qs) const {
        Bits b(size());
        for (const Hf& q : qs) {
            b.set(index(q));
        }
        return b;
    }

    std::size_t index(const Hf& q) const {
        auto it = std::lower_bound(state_of.begin(), state_of.end(), q);
        return static_cast<std::size_t>(it - state_of.begin());
    }

    Hf to_hf(const Bits& b) const {
        std::vector<Hf> xs;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
            xs.push_back(state_of[i]);
        }
        return from_elements(std::move(xs));
    }
};

PowersetTables build_tables(const Nfa& n) {
    PowersetTables t;
    t.state_of.assign(n.states.begin(), n.states.end());
    const std::size_t k = t.size();
    for (const Hf& q : t.state_of) {
        t.closure.push_back(t.to_bits(epsclo(n, {q})));
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Bits> row;
        for (Symbol x : n.alphabet.symbols()) {
            Bits b(k);
            for (const Hf& p : n.next(t.state_of[i], x)) {
                b |= t.closure[t.index(p)];
            }
            row.push_back(std::move(b));
        }
        t.succ.push_back(std::move(row));
    }
    t.final = t.to_bits(n.final);
    t.init = t.to_bits(epsclo(n, n.init));
    return t;
}

} // namespace

Dfa power_dfa(const Nfa& n, PowersetOptions options) {
    require_valid(n);
    PowersetTables t = build_tables(n);
    const std::size_t k = t.size();

    bool full = options.mode == PowersetMode::Full ||
                (options.mode == PowersetMode::Auto && k <= options.full_bound);
    if (full && (k > options.full_bound || k >= 31)) {
        throw InputError("full powerset requested for " + std::to_string(k) +
                         " states, above the bound of " + std::to_string(options.full_bound));
    }

    // ε-closure distributes over union, so closures of sets are unions of
    // per-state closures.
    std::map<Bits, Hf> named;
    std::deque<Bits> work;
    auto visit = [&](const Bits& b) {
        if (!named.contains(b)) {
            named.emplace(b, t.to_hf(b));
            work.push_back(b);
        }
    };

    if (full) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Bits b(k);
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1U) {
                    b |= t.closure[i];
                }
            }
            visit(b);
        }
    } else {
        visit(t.init);
    }

    Dfa m;
    m.alphabet = n.alphabet;
    m.init = t.to_hf(t.init);
    while (!work.empty()) {
        Bits b = std::move(work.front());
        work.pop_front();
        const Hf q = named.at(b);
        for (Symbol x : n.alphabet.symbols()) {
            Bits next(k);
            for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
                next |= t.succ[i][x.id];
            }
            visit(next);
            m.set_next(q, x, named.at(next));
        }
    }
    for (const auto& [b, q] : named) {
        m.states.insert(q);
        if (b.intersects(t.final)) {
            m.final.insert(q);
        }
    }
    return m;
}

Nfa reverse_nfa(const Dfa& m) {
    require_valid(m);
    Nfa n;
    n.alphabet = m.alphabet;
    n.states = m.states;
    n.init = m.final;
    n.final = {m.init};
    for (const Hf& p : m.states) {
        for (Symbol x : m.alphabet.symbols()) {
            n.add_next(m.next(p, x), x, p);
        }
    }
    return n;
}

Dfa intersect_dfa(const Dfa& m1, const Dfa& m2) {
    require_same_alphabet(m1.alphabet, m2.alphabet);
    require_valid(m1);
    require_valid(m2);
    Dfa m;
    m.alphabet = m1.alphabet;
    m.init = pair(m1.init, m2.init);
    for (const Hf& q1 : m1.states) {
        for (const Hf& q2 : m2.states) {
            Hf q = pair(q1, q2);
            m.states.insert(q);
            if (m1.final.contains(q1) && m2.final.contains(q2)) {
                m.final.insert(q);
            }
            for (Symbol x : m.alphabet.symbols()) {
                m.set_next(q, x, pair(m1.next(q1, x), m2.next(q2, x)));
            }
        }
    }
    return m;
}

Dfa complement_dfa(const Dfa& m) {
    require_valid(m);
    Dfa c = m;
    c.final.clear();
    for (const Hf& q : m.states) {
        if (!m.final.contains(q)) {
            c.final.insert(q);
        }
    }
    return c;
}

Dfa union_dfa(const Dfa& m1, const Dfa& m2) {
    require_same_alphabet(m1.alphabet, m2.alphabet);
    return complement_dfa(intersect_dfa(complement_dfa(m1), complement_dfa(m2)));
}

Nfa concat_nfa(const Dfa& m1, const Dfa& m2) {
    require_same_alphabet(m1.alphabet, m2.alphabet);
    require_valid(m1);
    require_valid(m2);
    Nfa n;
    n.alphabet = m1.alphabet;
    for (const Hf& q : m1.states) {
        n.states.insert(inl(q));
        for (Symbol x : n.alphabet.symbols()) {
            n.add_next(inl(q), x, inl(m1.next(q, x)));
        }
    }
    for (const Hf& q : m2.states) {
        n.states.insert(inr(q));
        for (Symbol x : n.alphabet.symbols()) {
            n.add_next(inr(q), x, inr(m2.next(q, x)));
        }
    }
    n.init = {inl(m1.init)};
    for (const Hf& f : m2.final) {
        n.final.insert(inr(f));
    }
    for (const Hf& f : m1.final) {
        n.eps.insert({inl(f), inr(m2.init)});
    }
    return n;
}

Nfa star_nfa(const Dfa& m) {
    require_valid(m);
    const Hf hub = inl(empty());
    Nfa n;
    n.alphabet = m.alphabet;
    n.states.insert(hub);
    for (const Hf& q : m.states) {
        n.states.insert(inr(q));
        for (Symbol x : n.alphabet.symbols()) {
            n.add_next(inr(q), x, inr(m.next(q, x)));
        }
    }
    n.init = {hub};
    n.final = {hub};
    n.eps.insert({hub, inr(m.init)});
    for (const Hf& f : m.final) {
        n.eps.insert({inr(f), hub});
    }
    return n;
}

} // namespace hfauto
