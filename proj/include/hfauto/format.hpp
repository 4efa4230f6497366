#ifndef HFAUTO_FORMAT_HPP
#define HFAUTO_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "hfauto/automata.hpp"

namespace hfauto {

using Automaton = std::variant<Dfa, Nfa>;

/**
 * Line-oriented automaton text format:
 *
 *     # comment
 *     kind dfa|nfa
 *     alphabet a b ...
 *     state <hf>            (one per state)
 *     init <hf>             (exactly once for a DFA, repeatable for an NFA)
 *     final <hf>
 *     trans <hf> <symbol> <hf>
 *     eps <hf> <hf>         (NFA only)
 *
 * HF literals use brace syntax or `#n` for decode(n). A `#` that does not
 * start such a literal begins a comment. The parser checks syntax only:
 * undeclared states are kept so that validation can report them.
 * Throws ParseError carrying the 1-based line number.
 */
Automaton parse_automaton(std::string_view text);

std::string render_automaton(const Dfa& m);
std::string render_automaton(const Nfa& n);
std::string render_automaton(const Automaton& a);

/// Throws InputError if the file cannot be read or written.
Automaton load_automaton(const std::filesystem::path& path);
void save_automaton(const std::filesystem::path& path, const Automaton& a);

/// Graphviz digraph: final states doubled, one entry arrow per initial
/// state, parallel symbols merged into one label, ε-edges dashed.
std::string to_dot(const Dfa& m);
std::string to_dot(const Nfa& n);

} // namespace hfauto

#endif
