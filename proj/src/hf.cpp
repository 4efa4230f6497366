#include "hfauto/hf.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "hfauto/error.hpp"

namespace hfauto {

struct Hf::Node {
    std::vector<Hf> children;
    std::size_t hash;
};

namespace {

constexpr std::size_t kEmptyHash = 0x51ed270b27a1c0d5ULL;

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
    return h;
}

} // namespace

// Every live set has exactly one node, so equality is pointer identity and
// comparison never descends into a shared prefix. Nodes leave the table when
// their last owner goes away.
class Hf::Table {
public:
    static Table& instance() {
        static Table* table = new Table;
        return *table;
    }

    std::shared_ptr<const Node> intern(std::vector<Hf> children, std::size_t h) {
        std::lock_guard lock(mutex_);
        auto [lo, hi] = nodes_.equal_range(h);
        for (auto it = lo; it != hi; ++it) {
            if (it->second.raw->children == children) {
                if (auto live = it->second.weak.lock()) {
                    return live;
                }
            }
        }
        Node* raw = new Node{std::move(children), h};
        std::shared_ptr<const Node> node(raw, [this](const Node* n) { release(n); });
        nodes_.emplace(h, Entry{raw, node});
        return node;
    }

private:
    struct Entry {
        const Node* raw;
        std::weak_ptr<const Node> weak;
    };

    void release(const Node* n) {
        {
            std::lock_guard lock(mutex_);
            auto [lo, hi] = nodes_.equal_range(n->hash);
            for (auto it = lo; it != hi; ++it) {
                if (it->second.raw == n) {
                    nodes_.erase(it);
                    break;
                }
            }
        }
        // Outside the lock: dropping children may release further nodes.
        delete n;
    }

    std::mutex mutex_;
    std::unordered_multimap<std::size_t, Entry> nodes_;
};

Hf Hf::from_elements(std::vector<Hf> xs) {
    if (xs.empty()) {
        return Hf{};
    }
    std::sort(xs.begin(), xs.end(), [](const Hf& a, const Hf& b) { return hf_cmp(a, b) > 0; });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::size_t h = kEmptyHash;
    for (const Hf& c : xs) {
        h = mix(h, c.hash());
    }
    h = mix(h, xs.size());
    return Hf(Table::instance().intern(std::move(xs), h));
}

std::span<const Hf> Hf::elements() const noexcept {
    if (!node_) {
        return {};
    }
    return node_->children;
}

std::size_t Hf::cardinality() const noexcept { return node_ ? node_->children.size() : 0; }

bool Hf::contains(const Hf& a) const {
    auto xs = elements();
    // descending order
    auto it = std::lower_bound(xs.begin(), xs.end(), a,
                               [](const Hf& x, const Hf& key) { return hf_cmp(x, key) > 0; });
    return it != xs.end() && *it == a;
}

std::size_t Hf::hash() const noexcept { return node_ ? node_->hash : kEmptyHash; }

bool operator==(const Hf& a, const Hf& b) { return a.node_ == b.node_; }

std::strong_ordering operator<=>(const Hf& a, const Hf& b) { return hf_cmp(a, b); }

std::strong_ordering hf_cmp(const Hf& a, const Hf& b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    auto xs = a.elements();
    auto ys = b.elements();
    std::size_t n = std::min(xs.size(), ys.size());
    // Highest differing "bit" decides, exactly as for the codes.
    for (std::size_t i = 0; i < n; ++i) {
        auto c = hf_cmp(xs[i], ys[i]);
        if (c != 0) {
            return c;
        }
    }
    return xs.size() <=> ys.size();
}

Hf empty() { return Hf{}; }

Hf from_elements(std::vector<Hf> xs) { return Hf::from_elements(std::move(xs)); }

std::vector<Hf> elements(const Hf& x) {
    auto xs = x.elements();
    return {xs.begin(), xs.end()};
}

bool mem(const Hf& a, const Hf& b) { return b.contains(a); }

bool subset(const Hf& a, const Hf& b) {
    if (a.cardinality() > b.cardinality()) {
        return false;
    }
    return std::all_of(a.elements().begin(), a.elements().end(),
                       [&](const Hf& x) { return b.contains(x); });
}

Code code(const Hf& x) {
    constexpr unsigned kMaxBit = 1U << 26;
    Code result = 0;
    for (const Hf& y : x.elements()) {
        Code e = code(y);
        if (e >= kMaxBit) {
            throw std::overflow_error("HF code too large to materialise");
        }
        boost::multiprecision::bit_set(result, static_cast<unsigned>(e));
    }
    return result;
}

Hf decode(const Code& n) {
    if (n < 0) {
        throw InputError("decode: negative code");
    }
    if (n == 0) {
        return Hf{};
    }
    std::vector<Hf> xs;
    std::size_t top = boost::multiprecision::msb(n);
    for (std::size_t i = 0; i <= top; ++i) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
            xs.push_back(decode(Code(i)));
        }
    }
    return Hf::from_elements(std::move(xs));
}

Hf pair(const Hf& a, const Hf& b) {
    return from_elements({from_elements({a}), from_elements({a, b})});
}

namespace {

std::optional<std::pair<Hf, Hf>> unpair(const Hf& p) {
    auto xs = p.elements();
    if (xs.size() == 1) {
        if (xs[0].cardinality() != 1) {
            return std::nullopt;
        }
        const Hf& a = xs[0].elements()[0];
        return std::pair{a, a};
    }
    if (xs.size() != 2) {
        return std::nullopt;
    }
    // {a} has the smaller code since it is a proper subset of {a,b}.
    const Hf& single = xs[1];
    const Hf& twin = xs[0];
    if (single.cardinality() != 1 || twin.cardinality() != 2) {
        return std::nullopt;
    }
    const Hf& a = single.elements()[0];
    if (!twin.contains(a)) {
        return std::nullopt;
    }
    const Hf& b = twin.elements()[0] == a ? twin.elements()[1] : twin.elements()[0];
    return std::pair{a, b};
}

} // namespace

bool is_pair(const Hf& p) { return unpair(p).has_value(); }

Hf pair_fst(const Hf& p) {
    auto ab = unpair(p);
    if (!ab) {
        throw InputError("not an HF pair: " + to_string(p));
    }
    return ab->first;
}

Hf pair_snd(const Hf& p) {
    auto ab = unpair(p);
    if (!ab) {
        throw InputError("not an HF pair: " + to_string(p));
    }
    return ab->second;
}

Hf ord_of(std::size_t n) {
    Hf x;
    std::vector<Hf> xs;
    for (std::size_t i = 0; i < n; ++i) {
        // x ∪ {x}: x is the largest element so far, so this stays descending.
        xs.insert(xs.begin(), x);
        x = Hf::from_elements(xs);
    }
    return x;
}

Hf inl(const Hf& a) { return pair(ord_of(0), a); }
Hf inr(const Hf& b) { return pair(ord_of(1), b); }

std::optional<SumTag> tag_of(const Hf& x) {
    auto ab = unpair(x);
    if (!ab) {
        return std::nullopt;
    }
    if (ab->first == ord_of(0)) {
        return SumTag::Left;
    }
    if (ab->first == ord_of(1)) {
        return SumTag::Right;
    }
    return std::nullopt;
}

Hf untag(const Hf& x) {
    if (!tag_of(x)) {
        throw InputError("not a tagged sum value: " + to_string(x));
    }
    return pair_snd(x);
}

namespace {

void render(const Hf& x, std::string& out) {
    out.push_back('{');
    bool first = true;
    for (const Hf& y : x.elements()) {
        if (!first) {
            out.push_back(',');
        }
        first = false;
        render(y, out);
    }
    out.push_back('}');
}

class HfParser {
public:
    explicit HfParser(std::string_view text) : text_(text) {}

    Hf parse_all() {
        skip_ws();
        Hf x = parse_value();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("HF literal, offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    Hf parse_value() {
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        if (text_[pos_] == '#') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected digits after '#'");
            }
            return decode(Code(std::string(text_.substr(start, pos_ - start))));
        }
        if (text_[pos_] != '{') {
            fail("expected '{' or '#'");
        }
        ++pos_;
        std::vector<Hf> xs;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '}') {
            ++pos_;
            return Hf{};
        }
        for (;;) {
            skip_ws();
            xs.push_back(parse_value());
            skip_ws();
            if (pos_ >= text_.size()) {
                fail("unterminated set");
            }
            if (text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (text_[pos_] == '}') {
                ++pos_;
                break;
            }
            fail("expected ',' or '}'");
        }
        return Hf::from_elements(std::move(xs));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const Hf& x) {
    std::string out;
    render(x, out);
    return out;
}

Hf parse_hf(std::string_view text) { return HfParser(text).parse_all(); }

} // namespace hfauto
