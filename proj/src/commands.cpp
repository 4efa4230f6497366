#include "hfauto/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "hfauto/error.hpp"
#include "hfauto/format.hpp"
#include "hfauto/langtools.hpp"
#include "hfauto/minimize.hpp"

namespace hfauto {

namespace {

/// Runs `body`, turning input problems into exit code 2.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitError;
}

void require_valid_or_throw(const Automaton& a) {
    std::visit([](const auto& m) { require_valid(m); }, a);
}

Dfa as_dfa(const Automaton& a, PowersetOptions options) {
    if (const Dfa* m = std::get_if<Dfa>(&a)) {
        return *m;
    }
    return power_dfa(std::get<Nfa>(a), options);
}

std::size_t state_count(const Automaton& a) {
    return std::visit([](const auto& m) { return m.states.size(); }, a);
}

std::string states_phrase(std::size_t n) { return std::to_string(n) + (n == 1 ? " state" : " states"); }

const char* kind_name(const Automaton& a) { return std::holds_alternative<Dfa>(a) ? "dfa" : "nfa"; }

Word parse_word(const Alphabet& al, std::string_view text) {
    if ((text == "ε" || text == "eps") && !al.find(std::string(text))) {
        return {};
    }
    return al.word(text);
}

void write_text(const path& file, const std::string& text) {
    std::ofstream f(file, std::ios::binary);
    f << text;
    if (!f) {
        throw InputError("cannot write " + file.string());
    }
}

Alphabet parse_alphabet(std::string_view text) {
    std::vector<std::string> names;
    if (text.find_first_of(" \t,") != std::string_view::npos) {
        std::string cleaned(text);
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream in(cleaned);
        for (std::string tok; in >> tok;) {
            names.push_back(tok);
        }
    } else {
        for (char c : text) {
            names.emplace_back(1, c);
        }
    }
    return Alphabet(std::move(names));
}

using Transform = std::function<Automaton(const Automaton&, PowersetOptions)>;

const Dfa& dfa_operand(const Automaton& a, std::string_view op) {
    if (const Dfa* m = std::get_if<Dfa>(&a)) {
        return *m;
    }
    throw InputError(std::string(op) + " needs a DFA; determinize the NFA first");
}

const std::vector<std::pair<std::string, Transform>>& transforms() {
    static const std::vector<std::pair<std::string, Transform>> table = {
        {"determinize",
         [](const Automaton& a, PowersetOptions o) -> Automaton {
             if (const Nfa* n = std::get_if<Nfa>(&a)) {
                 return power_dfa(*n, o);
             }
             return power_dfa(embed_dfa(std::get<Dfa>(a)), o);
         }},
        {"reverse",
         [](const Automaton& a, PowersetOptions) -> Automaton { return reverse_nfa(dfa_operand(a, "reverse")); }},
        {"complement",
         [](const Automaton& a, PowersetOptions) -> Automaton {
             return complement_dfa(dfa_operand(a, "complement"));
         }},
        {"accessible",
         [](const Automaton& a, PowersetOptions) -> Automaton {
             return accessible_dfa(dfa_operand(a, "accessible"));
         }},
        {"collapse",
         [](const Automaton& a, PowersetOptions) -> Automaton { return collapse_dfa(dfa_operand(a, "collapse")); }},
        {"canonical",
         [](const Automaton& a, PowersetOptions) -> Automaton {
             return canonical_dfa(dfa_operand(a, "canonical"));
         }},
        {"brzozowski",
         [](const Automaton& a, PowersetOptions o) -> Automaton {
             return brzozowski(dfa_operand(a, "brzozowski"), o);
         }},
    };
    return table;
}

} // namespace

int cmd_check(const path& file, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Automaton a = load_automaton(file);
        auto violations = std::visit(
            [](const auto& m) {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Dfa>) {
                    return dfa_validate(m);
                } else {
                    return nfa_validate(m);
                }
            },
            a);
        if (violations.empty()) {
            out << "ok\n";
            return kExitOk;
        }
        for (const Violation& v : violations) {
            out << "violation " << to_string(v) << "\n";
        }
        return kExitNo;
    });
}

int cmd_run(const path& file, std::string_view word, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Automaton a = load_automaton(file);
        require_valid_or_throw(a);
        bool accepted = false;
        if (const Dfa* m = std::get_if<Dfa>(&a)) {
            Word w = parse_word(m->alphabet, word);
            Hf q = m->init;
            out << to_string(q);
            for (Symbol x : w) {
                q = m->next(q, x);
                out << " → " << to_string(q);
            }
            accepted = m->final.contains(q);
        } else {
            const Nfa& n = std::get<Nfa>(a);
            Word w = parse_word(n.alphabet, word);
            StateSet qs = epsclo(n, n.init);
            out << to_string(qs);
            for (Symbol x : w) {
                qs = nfa_nextl(n, qs, Word{x});
                out << " → " << to_string(qs);
            }
            accepted = std::any_of(qs.begin(), qs.end(), [&](const Hf& q) { return n.final.contains(q); });
        }
        out << "\n" << (accepted ? "accept" : "reject") << "\n";
        return accepted ? kExitOk : kExitNo;
    });
}

std::vector<std::string> transform_ops() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : transforms()) {
        out.push_back(name);
    }
    return out;
}

int cmd_transform(const path& file, std::string_view op, const path& out_file, PowersetOptions options,
                  std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto& table = transforms();
        auto it = std::find_if(table.begin(), table.end(), [&](const auto& entry) { return entry.first == op; });
        if (it == table.end()) {
            throw InputError("unknown transform '" + std::string(op) + "'");
        }
        Automaton a = load_automaton(file);
        require_valid_or_throw(a);
        Automaton r = it->second(a, options);
        std::ostream& note = out_file.empty() ? err : out;
        note << op << ": " << kind_name(a) << " with " << states_phrase(state_count(a)) << " -> " << kind_name(r)
             << " with " << states_phrase(state_count(r)) << "\n";
        if (out_file.empty()) {
            out << render_automaton(r);
        } else {
            save_automaton(out_file, r);
        }
        return kExitOk;
    });
}

int cmd_equiv(const path& a, const path& b, PowersetOptions options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Automaton x = load_automaton(a);
        Automaton y = load_automaton(b);
        require_valid_or_throw(x);
        require_valid_or_throw(y);
        Dfa m1 = as_dfa(x, options);
        Dfa m2 = as_dfa(y, options);
        require_same_alphabet(m1.alphabet, m2.alphabet);
        if (auto w = distinguishing_word(m1, m2)) {
            out << "differs on " << m1.alphabet.render(*w) << "\n";
            return kExitNo;
        }
        out << "equivalent\n";
        return kExitOk;
    });
}

int cmd_iso(const path& a, const path& b, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Automaton x = load_automaton(a);
        Automaton y = load_automaton(b);
        require_valid_or_throw(x);
        require_valid_or_throw(y);
        auto iso = find_isomorphism(dfa_operand(x, "iso"), dfa_operand(y, "iso"));
        if (!iso) {
            out << "not isomorphic\n";
            return kExitNo;
        }
        if (iso->ignored_unreachable) {
            err << "note: inaccessible states were left out\n";
        }
        for (const auto& [q, h] : iso->mapping) {
            out << to_string(q) << " ↦ " << to_string(h) << "\n";
        }
        return kExitOk;
    });
}

int cmd_regex(std::string_view expr, std::string_view alphabet, const path& out_file, PowersetOptions options,
              std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Alphabet al = parse_alphabet(alphabet);
        Regex r = regex_parse(expr, al);
        // Brzozowski leaves deeply nested state names; ordinals read better.
        Dfa m = renumber_states(regex_compile(r, al, options));
        std::ostream& note = out_file.empty() ? err : out;
        note << regex_render(r, al) << ": " << states_phrase(m.states.size()) << "\n";
        if (out_file.empty()) {
            out << render_automaton(m);
        } else {
            save_automaton(out_file, m);
        }
        return kExitOk;
    });
}

int cmd_dot(const path& file, const path& out_file, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Automaton a = load_automaton(file);
        std::string dot = std::visit([](const auto& m) { return to_dot(m); }, a);
        if (out_file.empty()) {
            out << dot;
        } else {
            write_text(out_file, dot);
        }
        return kExitOk;
    });
}

int cmd_proptest(const ProptestConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ProptestReport report = run_proptest(config);
        print_report(report, out);
        return report.passed() ? kExitOk : kExitNo;
    });
}

} // namespace hfauto
