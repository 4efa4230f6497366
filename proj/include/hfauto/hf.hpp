#ifndef HFAUTO_HF_HPP
#define HFAUTO_HF_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hfauto {

/// Ackermann code of an HF set: an exact natural number.
using Code = boost::multiprecision::cpp_int;

/**
 * A hereditarily finite set.
 *
 * Stored canonically as the sequence of its elements in strictly descending
 * order under hf_cmp, so structural equality is extensional equality. Values
 * are immutable and hash-consed: equal sets share one node, and copies are
 * safe to use from several threads.
 */
class Hf {
public:
    /// The empty set.
    Hf() = default;

    /// Builds the set of the distinct members of `xs`.
    static Hf from_elements(std::vector<Hf> xs);

    /// Elements in descending hf_cmp order.
    std::span<const Hf> elements() const noexcept;

    std::size_t cardinality() const noexcept;
    bool is_empty() const noexcept { return node_ == nullptr; }
    bool contains(const Hf& a) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Hf& a, const Hf& b);
    friend std::strong_ordering operator<=>(const Hf& a, const Hf& b);
    friend std::strong_ordering hf_cmp(const Hf& a, const Hf& b);

private:
    struct Node;
    class Table;
    explicit Hf(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

Hf empty();
Hf from_elements(std::vector<Hf> xs);
std::vector<Hf> elements(const Hf& x);
bool mem(const Hf& a, const Hf& b);
bool subset(const Hf& a, const Hf& b);

/// f(x) = sum of 2^f(y) over the elements y of x.
Code code(const Hf& x);
/// Inverse of code: the elements are the decoded set-bit positions of n.
Hf decode(const Code& n);

/// Orders exactly as code(a) <=> code(b), without materialising codes.
std::strong_ordering hf_cmp(const Hf& a, const Hf& b);

/// Kuratowski pair {{a},{a,b}}.
Hf pair(const Hf& a, const Hf& b);
bool is_pair(const Hf& p);
/// Throws InputError if `p` is not a pair.
Hf pair_fst(const Hf& p);
Hf pair_snd(const Hf& p);

/// Von Neumann ordinal n = {0, ..., n-1}.
Hf ord_of(std::size_t n);

enum class SumTag { Left, Right };

Hf inl(const Hf& a);
Hf inr(const Hf& b);
/// Tag of a tagged-sum value, or nullopt when `x` is not inl/inr of anything.
std::optional<SumTag> tag_of(const Hf& x);
/// Payload of inl(a)/inr(b). Throws InputError on untagged input.
Hf untag(const Hf& x);

/// Brace rendering with elements in descending order: code 3 is `{{{}},{}}`.
std::string to_string(const Hf& x);
/// Parses brace syntax; `#n` stands for decode(n) anywhere a set may appear.
/// Throws ParseError carrying the byte offset of the problem.
Hf parse_hf(std::string_view text);

} // namespace hfauto

template <>
struct std::hash<hfauto::Hf> {
    std::size_t operator()(const hfauto::Hf& x) const noexcept { return x.hash(); }
};

#endif
