#include "hfauto/format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hfauto/error.hpp"

namespace hfauto {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

bool is_hf_shorthand(std::string_view tok) {
    return tok.size() > 1 && tok[0] == '#' && std::isdigit(static_cast<unsigned char>(tok[1]));
}

/// Whitespace-separated tokens; brace groups may contain whitespace.
std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (line[i] == '{') {
            int depth = 0;
            for (; i < line.size(); ++i) {
                if (line[i] == '{') {
                    ++depth;
                } else if (line[i] == '}' && --depth == 0) {
                    ++i;
                    break;
                }
            }
            if (depth != 0) {
                fail(lineno, "unbalanced braces");
            }
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
        }
        std::string tok(line.substr(start, i - start));
        if (tok[0] == '#' && !is_hf_shorthand(tok)) {
            break;
        }
        out.push_back(std::move(tok));
    }
    return out;
}

Hf parse_state(const std::string& tok, std::size_t lineno) {
    try {
        return parse_hf(tok);
    } catch (const ParseError& e) {
        fail(lineno, std::string("bad HF literal '") + tok + "': " + e.what());
    }
}

} // namespace

Automaton parse_automaton(std::string_view text) {
    std::optional<bool> is_dfa;
    std::optional<Alphabet> alphabet;
    StateSet states;
    std::vector<Hf> inits;
    StateSet finals;
    std::map<std::pair<Hf, Symbol>, StateSet> trans;
    std::set<std::pair<Hf, Hf>> eps;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;

        auto toks = tokenize(line, lineno);
        if (toks.empty()) {
            continue;
        }
        const std::string& kw = toks[0];
        auto arity = [&](std::size_t n) {
            if (toks.size() != n + 1) {
                fail(lineno, "'" + kw + "' expects " + std::to_string(n) + " argument(s)");
            }
        };
        if (kw == "kind") {
            arity(1);
            if (is_dfa) {
                fail(lineno, "duplicate 'kind'");
            }
            if (toks[1] != "dfa" && toks[1] != "nfa") {
                fail(lineno, "kind must be 'dfa' or 'nfa'");
            }
            is_dfa = toks[1] == "dfa";
            continue;
        }
        if (!is_dfa) {
            fail(lineno, "'kind' must come first");
        }
        if (kw == "alphabet") {
            if (alphabet) {
                fail(lineno, "duplicate 'alphabet'");
            }
            try {
                alphabet = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
            } catch (const InputError& e) {
                fail(lineno, e.what());
            }
        } else if (kw == "state") {
            arity(1);
            states.insert(parse_state(toks[1], lineno));
        } else if (kw == "init") {
            arity(1);
            if (*is_dfa && !inits.empty()) {
                fail(lineno, "a dfa has exactly one 'init'");
            }
            inits.push_back(parse_state(toks[1], lineno));
        } else if (kw == "final") {
            arity(1);
            finals.insert(parse_state(toks[1], lineno));
        } else if (kw == "trans") {
            arity(3);
            if (!alphabet) {
                fail(lineno, "'alphabet' must precede 'trans'");
            }
            auto x = alphabet->find(toks[2]);
            if (!x) {
                fail(lineno, "symbol '" + toks[2] + "' not in alphabet");
            }
            Hf from = parse_state(toks[1], lineno);
            auto& targets = trans[{from, *x}];
            if (*is_dfa && !targets.empty()) {
                fail(lineno, "duplicate transition for a dfa");
            }
            targets.insert(parse_state(toks[3], lineno));
        } else if (kw == "eps") {
            arity(2);
            if (*is_dfa) {
                fail(lineno, "'eps' is only allowed in an nfa");
            }
            eps.insert({parse_state(toks[1], lineno), parse_state(toks[2], lineno)});
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
    }

    if (!is_dfa) {
        fail(lineno, "missing 'kind'");
    }
    if (!alphabet) {
        fail(lineno, "missing 'alphabet'");
    }
    if (*is_dfa) {
        if (inits.empty()) {
            fail(lineno, "a dfa needs an 'init'");
        }
        Dfa m;
        m.alphabet = *alphabet;
        m.states = std::move(states);
        m.init = inits.front();
        m.final = std::move(finals);
        for (auto& [key, targets] : trans) {
            m.nxt.emplace(key, *targets.begin());
        }
        return m;
    }
    Nfa n;
    n.alphabet = *alphabet;
    n.states = std::move(states);
    n.init.insert(inits.begin(), inits.end());
    n.final = std::move(finals);
    n.nxt = std::move(trans);
    n.eps = std::move(eps);
    return n;
}

namespace {

void render_header(std::ostringstream& out, const char* kind, const Alphabet& a, const StateSet& states) {
    out << "kind " << kind << '\n' << "alphabet";
    for (const auto& name : a.names()) {
        out << ' ' << name;
    }
    out << '\n';
    for (const Hf& q : states) {
        out << "state " << to_string(q) << '\n';
    }
}

} // namespace

std::string render_automaton(const Dfa& m) {
    std::ostringstream out;
    render_header(out, "dfa", m.alphabet, m.states);
    out << "init " << to_string(m.init) << '\n';
    for (const Hf& q : m.final) {
        out << "final " << to_string(q) << '\n';
    }
    for (const auto& [key, target] : m.nxt) {
        out << "trans " << to_string(key.first) << ' ' << m.alphabet.name(key.second) << ' ' << to_string(target)
            << '\n';
    }
    return out.str();
}

std::string render_automaton(const Nfa& n) {
    std::ostringstream out;
    render_header(out, "nfa", n.alphabet, n.states);
    for (const Hf& q : n.init) {
        out << "init " << to_string(q) << '\n';
    }
    for (const Hf& q : n.final) {
        out << "final " << to_string(q) << '\n';
    }
    for (const auto& [key, targets] : n.nxt) {
        for (const Hf& p : targets) {
            out << "trans " << to_string(key.first) << ' ' << n.alphabet.name(key.second) << ' ' << to_string(p)
                << '\n';
        }
    }
    for (const auto& [p, q] : n.eps) {
        out << "eps " << to_string(p) << ' ' << to_string(q) << '\n';
    }
    return out.str();
}

std::string render_automaton(const Automaton& a) {
    return std::visit([](const auto& m) { return render_automaton(m); }, a);
}

Automaton load_automaton(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

void save_automaton(const std::filesystem::path& path, const Automaton& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << render_automaton(a);
    if (!out) {
        throw InputError("write failed for " + path.string());
    }
}

namespace {

std::string quoted(const Hf& q) { return '"' + to_string(q) + '"'; }

void dot_states(std::ostringstream& out, const StateSet& states, const StateSet& final, const StateSet& init) {
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    for (const Hf& q : states) {
        out << "  " << quoted(q);
        if (final.contains(q)) {
            out << " [shape=doublecircle]";
        }
        out << ";\n";
    }
    std::size_t i = 0;
    for (const Hf& q : init) {
        out << "  __init" << i << " [shape=point];\n";
        out << "  __init" << i << " -> " << quoted(q) << ";\n";
        ++i;
    }
}

void dot_edges(std::ostringstream& out, const std::map<std::pair<Hf, Hf>, std::vector<std::string>>& edges) {
    for (const auto& [ends, labels] : edges) {
        std::string label;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            label += (i ? "," : "") + labels[i];
        }
        out << "  " << quoted(ends.first) << " -> " << quoted(ends.second) << " [label=\"" << label << "\"];\n";
    }
}

} // namespace

std::string to_dot(const Dfa& m) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    dot_states(out, m.states, m.final, {m.init});
    std::map<std::pair<Hf, Hf>, std::vector<std::string>> edges;
    for (const auto& [key, target] : m.nxt) {
        edges[{key.first, target}].push_back(m.alphabet.name(key.second));
    }
    dot_edges(out, edges);
    out << "}\n";
    return out.str();
}

std::string to_dot(const Nfa& n) {
    std::ostringstream out;
    out << "digraph nfa {\n";
    dot_states(out, n.states, n.final, n.init);
    std::map<std::pair<Hf, Hf>, std::vector<std::string>> edges;
    for (const auto& [key, targets] : n.nxt) {
        for (const Hf& p : targets) {
            edges[{key.first, p}].push_back(n.alphabet.name(key.second));
        }
    }
    dot_edges(out, edges);
    for (const auto& [p, q] : n.eps) {
        out << "  " << quoted(p) << " -> " << quoted(q) << " [style=dashed, label=\"ε\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace hfauto
