#include "hfauto/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "hfauto/error.hpp"

namespace hfauto {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) {
            throw InputError("alphabet: empty symbol name");
        }
        if (!seen.insert(n).second) {
            throw InputError("alphabet: duplicate symbol '" + n + "'");
        }
    }
}

const std::string& Alphabet::name(Symbol x) const {
    if (x.id >= names_.size()) {
        throw InputError("symbol id " + std::to_string(x.id) + " outside alphabet");
    }
    return names_[x.id];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return Symbol{static_cast<std::uint32_t>(i)};
        }
    }
    return std::nullopt;
}

std::vector<Symbol> Alphabet::symbols() const {
    std::vector<Symbol> xs;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        xs.push_back(Symbol{static_cast<std::uint32_t>(i)});
    }
    return xs;
}

bool Alphabet::single_char() const noexcept {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

Word Alphabet::word(std::string_view text) const {
    Word w;
    auto lookup = [&](std::string_view tok) {
        auto x = find(tok);
        if (!x) {
            throw InputError("symbol '" + std::string(tok) + "' not in alphabet");
        }
        w.push_back(*x);
    };
    bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (single_char() && !spaced) {
        for (char c : text) {
            lookup(std::string_view(&c, 1));
        }
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        if (j > i) {
            lookup(text.substr(i, j - i));
        }
        i = j;
    }
    return w;
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) {
        return "ε";
    }
    std::string out;
    bool sep = !single_char();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (sep && i > 0) {
            out.push_back(' ');
        }
        out += name(w[i]);
    }
    return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (!(a == b)) {
        throw InputError("alphabet mismatch between operands");
    }
}

const Hf& Dfa::next(const Hf& q, Symbol x) const {
    auto it = nxt.find({q, x});
    if (it == nxt.end()) {
        throw InputError("no transition from " + to_string(q) + " on symbol id " + std::to_string(x.id));
    }
    return it->second;
}

const StateSet& Nfa::next(const Hf& q, Symbol x) const {
    static const StateSet kNone;
    auto it = nxt.find({q, x});
    return it == nxt.end() ? kNone : it->second;
}

std::string to_string(const Violation& v) { return v.axiom + ": " + v.witness; }

std::vector<Violation> dfa_validate(const Dfa& m) {
    std::vector<Violation> out;
    if (m.alphabet.is_empty()) {
        out.push_back({"alphabet", "alphabet is empty"});
    }
    if (!m.states.contains(m.init)) {
        out.push_back({"init", "init " + to_string(m.init) + " not in states"});
    }
    for (const Hf& q : m.final) {
        if (!m.states.contains(q)) {
            out.push_back({"final", "final state " + to_string(q) + " not in states"});
        }
    }
    for (const Hf& q : m.states) {
        for (Symbol x : m.alphabet.symbols()) {
            auto it = m.nxt.find({q, x});
            if (it == m.nxt.end()) {
                out.push_back({"nxt", "(" + to_string(q) + ", " + m.alphabet.name(x) + ") has no transition"});
            } else if (!m.states.contains(it->second)) {
                out.push_back({"nxt", "(" + to_string(q) + ", " + m.alphabet.name(x) + ") -> " +
                                          to_string(it->second) + " escapes states"});
            }
        }
    }
    for (const auto& [key, target] : m.nxt) {
        if (key.second.id >= m.alphabet.size()) {
            out.push_back({"nxt", "transition from " + to_string(key.first) + " on symbol id " +
                                      std::to_string(key.second.id) + " outside alphabet"});
        }
    }
    return out;
}

std::vector<Violation> nfa_validate(const Nfa& n) {
    std::vector<Violation> out;
    if (n.alphabet.is_empty()) {
        out.push_back({"alphabet", "alphabet is empty"});
    }
    for (const Hf& q : n.init) {
        if (!n.states.contains(q)) {
            out.push_back({"init", "initial state " + to_string(q) + " not in states"});
        }
    }
    for (const Hf& q : n.final) {
        if (!n.states.contains(q)) {
            out.push_back({"final", "final state " + to_string(q) + " not in states"});
        }
    }
    for (const auto& [key, targets] : n.nxt) {
        if (key.second.id >= n.alphabet.size()) {
            out.push_back({"nxt", "transition from " + to_string(key.first) + " on symbol id " +
                                      std::to_string(key.second.id) + " outside alphabet"});
            continue;
        }
        if (!n.states.contains(key.first)) {
            continue;
        }
        for (const Hf& p : targets) {
            if (!n.states.contains(p)) {
                out.push_back({"nxt", "(" + to_string(key.first) + ", " + n.alphabet.name(key.second) +
                                          ") -> " + to_string(p) + " escapes states"});
            }
        }
    }
    return out;
}

namespace {

[[noreturn]] void throw_invalid(const char* kind, const std::vector<Violation>& vs) {
    std::string msg = std::string("invalid ") + kind + ":";
    for (const auto& v : vs) {
        msg += "\n  " + to_string(v);
    }
    throw InputError(msg);
}

void check_symbol(const Alphabet& a, Symbol x) {
    if (x.id >= a.size()) {
        throw InputError("symbol id " + std::to_string(x.id) + " outside alphabet");
    }
}

} // namespace

void require_valid(const Dfa& m) {
    if (auto vs = dfa_validate(m); !vs.empty()) {
        throw_invalid("DFA", vs);
    }
}

void require_valid(const Nfa& n) {
    if (auto vs = nfa_validate(n); !vs.empty()) {
        throw_invalid("NFA", vs);
    }
}

Hf dfa_nextl(const Dfa& m, const Hf& q, const Word& w) {
    if (!m.states.contains(q)) {
        throw InputError("nextl: unknown state " + to_string(q));
    }
    Hf p = q;
    for (Symbol x : w) {
        check_symbol(m.alphabet, x);
        p = m.next(p, x);
    }
    return p;
}

bool dfa_accepts(const Dfa& m, const Word& w) { return m.final.contains(dfa_nextl(m, m.init, w)); }

bool eq_nextl_related(const Dfa& m, const Word& u, const Word& v) {
    return dfa_nextl(m, m.init, u) == dfa_nextl(m, m.init, v);
}

StateSet epsclo(const Nfa& n, const StateSet& q) {
    if (n.eps.empty()) {
        StateSet out;
        for (const Hf& s : q) {
            if (n.states.contains(s)) {
                out.insert(s);
            }
        }
        return out;
    }
    // Closure runs over the raw ε relation, which may pass through non-states.
    std::set<Hf> seen(q.begin(), q.end());
    std::deque<Hf> work(q.begin(), q.end());
    while (!work.empty()) {
        Hf s = std::move(work.front());
        work.pop_front();
        for (auto it = n.eps.lower_bound({s, Hf{}}); it != n.eps.end() && it->first == s; ++it) {
            if (seen.insert(it->second).second) {
                work.push_back(it->second);
            }
        }
    }
    StateSet out;
    for (const Hf& s : seen) {
        if (n.states.contains(s)) {
            out.insert(s);
        }
    }
    return out;
}

StateSet nfa_nextl(const Nfa& n, const StateSet& q, const Word& w) {
    StateSet cur = epsclo(n, q);
    for (Symbol x : w) {
        check_symbol(n.alphabet, x);
        StateSet step;
        for (const Hf& s : cur) {
            const StateSet& ts = n.next(s, x);
            step.insert(ts.begin(), ts.end());
        }
        cur = epsclo(n, step);
    }
    return cur;
}

bool nfa_accepts(const Nfa& n, const Word& w) {
    StateSet reached = nfa_nextl(n, n.init, w);
    return std::any_of(reached.begin(), reached.end(), [&](const Hf& q) { return n.final.contains(q); });
}

Nfa embed_dfa(const Dfa& m) {
    Nfa n;
    n.alphabet = m.alphabet;
    n.states = m.states;
    n.init = {m.init};
    n.final = m.final;
    for (const auto& [key, target] : m.nxt) {
        n.nxt[key].insert(target);
    }
    return n;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::string to_string(const StateSet& qs) {
    std::string out = "[";
    bool first = true;
    for (const Hf& q : qs) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += to_string(q);
    }
    out += "]";
    return out;
}

} // namespace hfauto
