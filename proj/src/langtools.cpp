#include "hfauto/langtools.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "hfauto/error.hpp"
#include "hfauto/minimize.hpp"

namespace hfauto {

bool length_lex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        return u.size() < v.size();
    }
    return u < v;
}

std::vector<Word> enumerate_language(const Dfa& m, std::size_t max_len) {
    require_valid(m);
    std::vector<Word> out;
    // Extending each level in order keeps the whole list length-lex sorted.
    std::vector<std::pair<Word, Hf>> level{{Word{}, m.init}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [w, q] : level) {
            if (m.final.contains(q)) {
                out.push_back(w);
            }
        }
        if (len == max_len) {
            break;
        }
        std::vector<std::pair<Word, Hf>> next;
        next.reserve(level.size() * m.alphabet.size());
        for (const auto& [w, q] : level) {
            for (Symbol x : m.alphabet.symbols()) {
                Word wx = w;
                wx.push_back(x);
                next.emplace_back(std::move(wx), m.next(q, x));
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<Word> enumerate_language(const Nfa& n, std::size_t max_len) {
    require_valid(n);
    std::vector<Word> out;
    std::vector<std::pair<Word, StateSet>> level{{Word{}, epsclo(n, n.init)}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [w, qs] : level) {
            if (std::any_of(qs.begin(), qs.end(), [&](const Hf& q) { return n.final.contains(q); })) {
                out.push_back(w);
            }
        }
        if (len == max_len) {
            break;
        }
        std::vector<std::pair<Word, StateSet>> next;
        for (const auto& [w, qs] : level) {
            for (Symbol x : n.alphabet.symbols()) {
                Word wx = w;
                wx.push_back(x);
                next.emplace_back(std::move(wx), nfa_nextl(n, qs, Word{x}));
            }
        }
        level = std::move(next);
    }
    return out;
}

namespace {

bool accepts_nothing(const Dfa& m) {
    StateSet acc = accessible_states(m);
    return std::none_of(acc.begin(), acc.end(), [&](const Hf& q) { return m.final.contains(q); });
}

} // namespace

bool dfa_equiv(const Dfa& m1, const Dfa& m2) {
    require_same_alphabet(m1.alphabet, m2.alphabet);
    return accepts_nothing(intersect_dfa(m1, complement_dfa(m2))) &&
           accepts_nothing(intersect_dfa(complement_dfa(m1), m2));
}

std::optional<Word> distinguishing_word(const Dfa& m1, const Dfa& m2) {
    require_same_alphabet(m1.alphabet, m2.alphabet);
    require_valid(m1);
    require_valid(m2);
    using Node = std::pair<Hf, Hf>;
    std::set<Node> seen{{m1.init, m2.init}};
    std::deque<std::pair<Node, Word>> work{{{m1.init, m2.init}, Word{}}};
    // BFS queue order is length-lex order of the words, so the first
    // disagreement found is the least one.
    while (!work.empty()) {
        auto [node, w] = std::move(work.front());
        work.pop_front();
        if (m1.final.contains(node.first) != m2.final.contains(node.second)) {
            return w;
        }
        for (Symbol x : m1.alphabet.symbols()) {
            Node next{m1.next(node.first, x), m2.next(node.second, x)};
            if (seen.insert(next).second) {
                Word wx = w;
                wx.push_back(x);
                work.emplace_back(std::move(next), std::move(wx));
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regex

struct Regex::Node {
    Kind kind;
    Symbol symbol;
    Regex left;
    Regex right;
    std::size_t depth;
};

namespace {

const char* const kEpsUtf8 = "\xCE\xB5";
const char* const kEmptyUtf8 = "\xE2\x88\x85";

} // namespace

Regex Regex::empty_set() { return Regex(std::make_shared<const Node>(Node{Kind::EmptySet, {}, Regex(nullptr), Regex(nullptr), 1})); }
Regex Regex::epsilon() { return Regex(std::make_shared<const Node>(Node{Kind::Epsilon, {}, Regex(nullptr), Regex(nullptr), 1})); }
Regex Regex::literal(Symbol x) { return Regex(std::make_shared<const Node>(Node{Kind::Literal, x, Regex(nullptr), Regex(nullptr), 1})); }

Regex Regex::concat(Regex a, Regex b) {
    std::size_t d = 1 + std::max(a.depth(), b.depth());
    return Regex(std::make_shared<const Node>(Node{Kind::Concat, {}, std::move(a), std::move(b), d}));
}

Regex Regex::alt(Regex a, Regex b) {
    std::size_t d = 1 + std::max(a.depth(), b.depth());
    return Regex(std::make_shared<const Node>(Node{Kind::Alt, {}, std::move(a), std::move(b), d}));
}

Regex Regex::star(Regex a) {
    std::size_t d = 1 + a.depth();
    return Regex(std::make_shared<const Node>(Node{Kind::Star, {}, std::move(a), Regex(nullptr), d}));
}

Regex::Kind Regex::kind() const noexcept { return node_ ? node_->kind : Kind::EmptySet; }

Symbol Regex::symbol() const {
    if (kind() != Kind::Literal) {
        throw InputError("regex: not a literal");
    }
    return node_->symbol;
}

const Regex& Regex::left() const {
    if (kind() != Kind::Concat && kind() != Kind::Alt && kind() != Kind::Star) {
        throw InputError("regex: node has no operand");
    }
    return node_->left;
}

const Regex& Regex::right() const {
    if (kind() != Kind::Concat && kind() != Kind::Alt) {
        throw InputError("regex: node has no right operand");
    }
    return node_->right;
}

std::size_t Regex::depth() const noexcept { return node_ ? node_->depth : 1; }

bool operator==(const Regex& a, const Regex& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
    case Regex::Kind::EmptySet:
    case Regex::Kind::Epsilon:
        return true;
    case Regex::Kind::Literal:
        return a.symbol() == b.symbol();
    case Regex::Kind::Star:
        return a.left() == b.left();
    case Regex::Kind::Concat:
    case Regex::Kind::Alt:
        return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

namespace {

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {
        if (!alphabet.single_char()) {
            throw InputError("regex: alphabet symbols must be single characters");
        }
    }

    Regex parse() {
        Regex r = parse_alt();
        skip_ws();
        if (pos_ < text_.size()) {
            fail(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected character");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("regex syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return c != '|' && c != ')' && c != '*';
    }

    bool eat(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Regex parse_alt() {
        Regex r = parse_cat();
        for (;;) {
            skip_ws();
            if (!eat("|")) {
                return r;
            }
            r = Regex::alt(std::move(r), parse_cat());
        }
    }

    Regex parse_cat() {
        if (!at_atom_start()) {
            fail("expected an expression");
        }
        Regex r = parse_rep();
        while (at_atom_start()) {
            r = Regex::concat(std::move(r), parse_rep());
        }
        return r;
    }

    Regex parse_rep() {
        Regex r = parse_atom();
        for (;;) {
            skip_ws();
            if (!eat("*")) {
                return r;
            }
            r = Regex::star(std::move(r));
        }
    }

    Regex parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        if (eat("(")) {
            Regex r = parse_alt();
            skip_ws();
            if (!eat(")")) {
                fail("expected ')'");
            }
            return r;
        }
        if (eat(kEpsUtf8) || eat("eps")) {
            return Regex::epsilon();
        }
        if (eat(kEmptyUtf8) || eat("empty")) {
            return Regex::empty_set();
        }
        auto x = alphabet_.find(text_.substr(pos_, 1));
        if (!x) {
            fail("'" + std::string(text_.substr(pos_, 1)) + "' is not in the alphabet");
        }
        ++pos_;
        return Regex::literal(*x);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

void render_regex(const Regex& r, const Alphabet& a, std::string& out) {
    switch (r.kind()) {
    case Regex::Kind::EmptySet:
        out += kEmptyUtf8;
        return;
    case Regex::Kind::Epsilon:
        out += kEpsUtf8;
        return;
    case Regex::Kind::Literal:
        out += a.name(r.symbol());
        return;
    case Regex::Kind::Star:
        out += '(';
        render_regex(r.left(), a, out);
        out += "*)";
        return;
    case Regex::Kind::Concat:
    case Regex::Kind::Alt:
        out += '(';
        render_regex(r.left(), a, out);
        if (r.kind() == Regex::Kind::Alt) {
            out += '|';
        }
        render_regex(r.right(), a, out);
        out += ')';
        return;
    }
}

Dfa base_dfa(const Alphabet& alphabet, std::optional<Symbol> literal, bool accept_eps) {
    // ord_of(0) start, ord_of(1) dead, ord_of(2) after the literal.
    Dfa m;
    m.alphabet = alphabet;
    const Hf start = ord_of(0);
    const Hf dead = ord_of(1);
    const Hf done = ord_of(2);
    m.init = start;
    m.states = {start, dead};
    for (Symbol x : alphabet.symbols()) {
        m.set_next(start, x, dead);
        m.set_next(dead, x, dead);
    }
    if (accept_eps) {
        m.final.insert(start);
    }
    if (literal) {
        m.states.insert(done);
        m.final.insert(done);
        m.set_next(start, *literal, done);
        for (Symbol x : alphabet.symbols()) {
            m.set_next(done, x, dead);
        }
    }
    return m;
}

Dfa compile(const Regex& r, const Alphabet& a, PowersetOptions options) {
    Dfa m;
    switch (r.kind()) {
    case Regex::Kind::EmptySet:
        m = base_dfa(a, std::nullopt, false);
        break;
    case Regex::Kind::Epsilon:
        m = base_dfa(a, std::nullopt, true);
        break;
    case Regex::Kind::Literal:
        if (r.symbol().id >= a.size()) {
            throw InputError("regex literal outside alphabet");
        }
        m = base_dfa(a, r.symbol(), false);
        break;
    case Regex::Kind::Alt:
        m = union_dfa(compile(r.left(), a, options), compile(r.right(), a, options));
        break;
    case Regex::Kind::Concat:
        m = power_dfa(concat_nfa(compile(r.left(), a, options), compile(r.right(), a, options)), options);
        break;
    case Regex::Kind::Star:
        m = power_dfa(star_nfa(compile(r.left(), a, options)), options);
        break;
    }
    // Minimising every subterm keeps the products and powersets small.
    return brzozowski(m, options);
}

} // namespace

Regex regex_parse(std::string_view text, const Alphabet& alphabet) { return RegexParser(text, alphabet).parse(); }

std::string regex_render(const Regex& r, const Alphabet& alphabet) {
    std::string out;
    render_regex(r, alphabet, out);
    return out;
}

Dfa regex_compile(const Regex& r, const Alphabet& alphabet, PowersetOptions options) {
    if (alphabet.is_empty()) {
        throw InputError("regex: empty alphabet");
    }
    return compile(r, alphabet, options);
}

} // namespace hfauto
