#ifndef HFAUTO_ORACLE_HPP
#define HFAUTO_ORACLE_HPP

// Brute-force, word-level reference semantics. Nothing here goes through the
// constructions or minimisation code, so these can check them.

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "hfauto/automata.hpp"
#include "hfauto/langtools.hpp"

namespace hfauto::oracle {

using WordSet = std::set<Word>;

/// Every word of length <= max_len, in length-lex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len);

/// Words of length <= max_len accepted by running the machine on each one.
WordSet bounded_language(const Dfa& m, std::size_t max_len);
WordSet bounded_language(const Nfa& n, std::size_t max_len);
/// Words w, |w| <= max_len, with nextl(q, w) final.
WordSet bounded_right_language(const Dfa& m, const Hf& q, std::size_t max_len);

WordSet complement_words(const WordSet& l, std::size_t alphabet_size, std::size_t max_len);
WordSet intersect_words(const WordSet& a, const WordSet& b);
WordSet union_words(const WordSet& a, const WordSet& b);
/// {uv : u in a, v in b, |uv| <= max_len}.
WordSet concat_words(const WordSet& a, const WordSet& b, std::size_t max_len);
/// Words of length <= max_len that split into pieces from l.
WordSet star_words(const WordSet& l, std::size_t max_len);
WordSet reverse_words(const WordSet& l);

/// Recursive matcher over all splits of w.
bool regex_matches(const Regex& r, std::span<const Symbol> w);

/// Length-lex ordered copy.
std::vector<Word> sorted(const WordSet& l);

} // namespace hfauto::oracle

#endif
