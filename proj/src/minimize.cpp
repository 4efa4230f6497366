#include "hfauto/minimize.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hfauto/error.hpp"

namespace hfauto {

Partition::Partition(std::vector<StateSet> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(), [](const StateSet& a, const StateSet& b) {
        if (a.empty() || b.empty()) {
            return a.empty() && !b.empty();
        }
        return *a.begin() < *b.begin();
    });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty()) {
            throw InputError("partition: empty block");
        }
        for (const Hf& q : blocks_[i]) {
            if (!index_.emplace(q, i).second) {
                throw InputError("partition: state " + to_string(q) + " in two blocks");
            }
        }
    }
}

std::size_t Partition::block_of(const Hf& q) const {
    auto it = index_.find(q);
    if (it == index_.end()) {
        throw InputError("partition: state " + to_string(q) + " not covered");
    }
    return it->second;
}

StateSet Partition::carrier() const {
    StateSet out;
    for (const auto& b : blocks_) {
        out.insert(b.begin(), b.end());
    }
    return out;
}

bool Partition::is_discrete() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const StateSet& b) { return b.size() == 1; });
}

const Hf& StateMap::operator()(const Hf& q) const {
    auto it = mapping.find(q);
    if (it == mapping.end()) {
        throw InputError("state map: " + to_string(q) + " not in domain");
    }
    return it->second;
}

std::vector<std::pair<Hf, Word>> access_words(const Dfa& m) {
    require_valid(m);
    std::vector<std::pair<Hf, Word>> out;
    std::set<Hf> seen{m.init};
    out.emplace_back(m.init, Word{});
    // FIFO with symbols in order visits states by least word, length first.
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Symbol x : m.alphabet.symbols()) {
            const Hf& p = m.next(out[head].first, x);
            if (seen.insert(p).second) {
                Word w = out[head].second;
                w.push_back(x);
                out.emplace_back(p, std::move(w));
            }
        }
    }
    return out;
}

StateSet accessible_states(const Dfa& m) {
    StateSet out;
    for (auto& [q, w] : access_words(m)) {
        out.insert(q);
    }
    return out;
}

Word path_to(const Dfa& m, const Hf& q) {
    for (auto& [p, w] : access_words(m)) {
        if (p == q) {
            return w;
        }
    }
    throw InputError("path_to: state " + to_string(q) + " is not accessible");
}

Dfa accessible_dfa(const Dfa& m) {
    StateSet acc = accessible_states(m);
    Dfa a;
    a.alphabet = m.alphabet;
    a.init = m.init;
    a.states = acc;
    for (const Hf& q : m.final) {
        if (acc.contains(q)) {
            a.final.insert(q);
        }
    }
    for (const Hf& q : acc) {
        for (Symbol x : m.alphabet.symbols()) {
            a.set_next(q, x, m.next(q, x));
        }
    }
    return a;
}

Partition indistinguishability_partition(const Dfa& m) {
    require_valid(m);
    const std::vector<Hf> states(m.states.begin(), m.states.end());
    std::map<Hf, std::size_t> block;
    std::size_t count = 0;
    {
        std::map<bool, std::size_t> ids;
        for (const Hf& q : states) {
            auto [it, fresh] = ids.emplace(m.final.contains(q), ids.size());
            block[q] = it->second;
        }
        count = ids.size();
    }
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::map<Hf, std::size_t> refined;
        for (const Hf& q : states) {
            std::vector<std::size_t> sig{block.at(q)};
            for (Symbol x : m.alphabet.symbols()) {
                sig.push_back(block.at(m.next(q, x)));
            }
            auto [it, fresh] = ids.emplace(std::move(sig), ids.size());
            refined[q] = it->second;
        }
        block = std::move(refined);
        // Refinement only splits blocks, so an unchanged count means a fixpoint.
        if (ids.size() == count) {
            break;
        }
        count = ids.size();
    }
    std::vector<StateSet> blocks(count);
    for (const auto& [q, b] : block) {
        blocks[b].insert(q);
    }
    return Partition(std::move(blocks));
}

Dfa collapse_dfa(const Dfa& m) {
    Partition p = indistinguishability_partition(m);
    std::vector<Hf> names;
    for (const auto& b : p.blocks()) {
        names.push_back(from_elements(std::vector<Hf>(b.begin(), b.end())));
    }
    auto class_of = [&](const Hf& q) -> const Hf& { return names[p.block_of(q)]; };

    Dfa c;
    c.alphabet = m.alphabet;
    c.states.insert(names.begin(), names.end());
    c.init = class_of(m.init);
    for (const Hf& q : m.final) {
        c.final.insert(class_of(q));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        // Any representative will do: transitions respect the relation.
        const Hf& rep = *p.blocks()[i].begin();
        for (Symbol x : m.alphabet.symbols()) {
            c.set_next(names[i], x, class_of(m.next(rep, x)));
        }
    }
    return c;
}

bool is_minimal(const Dfa& m) {
    return accessible_states(m) == m.states && indistinguishability_partition(m).is_discrete();
}

std::size_t min_states(const Dfa& m) { return collapse_dfa(accessible_dfa(m)).states.size(); }

Dfa canonical_dfa(const Dfa& m) {
    const Dfa a = accessible_dfa(m);
    const Partition p = indistinguishability_partition(a);

    // Number classes by their least representative word.
    std::vector<std::size_t> ordinal(p.size(), p.size());
    std::vector<Word> rep;
    for (const auto& [q, w] : access_words(a)) {
        std::size_t b = p.block_of(q);
        if (ordinal[b] == p.size()) {
            ordinal[b] = rep.size();
            rep.push_back(w);
        }
    }
    auto class_of = [&](const Word& u) { return ord_of(ordinal[p.block_of(dfa_nextl(a, a.init, u))]); };

    Dfa c;
    c.alphabet = m.alphabet;
    c.init = class_of({});
    for (std::size_t i = 0; i < rep.size(); ++i) {
        Hf q = ord_of(i);
        c.states.insert(q);
        if (dfa_accepts(a, rep[i])) {
            c.final.insert(q);
        }
        for (Symbol x : m.alphabet.symbols()) {
            Word ux = rep[i];
            ux.push_back(x);
            c.set_next(q, x, class_of(ux));
        }
    }
    return c;
}

Dfa renumber_states(const Dfa& m) {
    std::map<Hf, Hf> name;
    for (const auto& [q, w] : access_words(m)) {
        name.emplace(q, ord_of(name.size()));
    }
    Dfa r;
    r.alphabet = m.alphabet;
    r.init = name.at(m.init);
    for (const auto& [q, n] : name) {
        r.states.insert(n);
        if (m.final.contains(q)) {
            r.final.insert(n);
        }
        for (Symbol x : m.alphabet.symbols()) {
            r.set_next(n, x, name.at(m.next(q, x)));
        }
    }
    return r;
}

bool eq_app_right_related(const Dfa& m, const Word& u, const Word& v) {
    const Dfa a = accessible_dfa(m);
    const Partition p = indistinguishability_partition(a);
    return p.block_of(dfa_nextl(a, a.init, u)) == p.block_of(dfa_nextl(a, a.init, v));
}

bool is_isomorphism(const Dfa& m, const Dfa& n, const std::map<Hf, Hf>& h) {
    if (h.size() != m.states.size() || m.states.size() != n.states.size()) {
        return false;
    }
    StateSet image;
    for (const Hf& q : m.states) {
        auto it = h.find(q);
        if (it == h.end() || !n.states.contains(it->second)) {
            return false;
        }
        image.insert(it->second);
    }
    if (image != n.states) {
        return false;
    }
    auto hit = h.find(m.init);
    if (hit->second != n.init) {
        return false;
    }
    StateSet final_image;
    for (const Hf& q : m.final) {
        final_image.insert(h.at(q));
    }
    if (final_image != n.final) {
        return false;
    }
    for (const Hf& q : m.states) {
        for (Symbol x : m.alphabet.symbols()) {
            if (h.at(m.next(q, x)) != n.next(h.at(q), x)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<StateMap> find_isomorphism(const Dfa& m0, const Dfa& n0) {
    require_same_alphabet(m0.alphabet, n0.alphabet);
    require_valid(m0);
    require_valid(n0);
    StateMap result;
    Dfa m = m0;
    Dfa n = n0;
    if (accessible_states(m) != m.states) {
        m = accessible_dfa(m);
        result.ignored_unreachable = true;
    }
    if (accessible_states(n) != n.states) {
        n = accessible_dfa(n);
        result.ignored_unreachable = true;
    }
    if (m.states.size() != n.states.size()) {
        return std::nullopt;
    }

    std::map<Hf, Hf>& h = result.mapping;
    std::map<Hf, Hf> inverse;
    std::deque<Hf> work{m.init};
    h.emplace(m.init, n.init);
    inverse.emplace(n.init, m.init);
    while (!work.empty()) {
        Hf q = std::move(work.front());
        work.pop_front();
        const Hf& hq = h.at(q);
        for (Symbol x : m.alphabet.symbols()) {
            const Hf& p = m.next(q, x);
            const Hf& hp = n.next(hq, x);
            auto it = h.find(p);
            if (it != h.end()) {
                if (it->second != hp) {
                    return std::nullopt;
                }
                continue;
            }
            if (!inverse.emplace(hp, p).second) {
                return std::nullopt;
            }
            h.emplace(p, hp);
            work.push_back(p);
        }
    }
    if (!is_isomorphism(m, n, h)) {
        return std::nullopt;
    }
    return result;
}

Dfa apr(const Dfa& m, PowersetOptions options) {
    return accessible_dfa(power_dfa(reverse_nfa(m), options));
}

// The first pass already yields an accessible machine, which is all the
// second pass needs to produce a minimal one.
Dfa brzozowski(const Dfa& m, PowersetOptions options) {
    return apr(apr(m, options), options);
}

} // namespace hfauto
