#ifndef HFAUTO_ERROR_HPP
#define HFAUTO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfauto {

/// Raised for malformed input: unknown states, out-of-alphabet symbols,
/// alphabet mismatches between operands, invalid automata.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text-level syntax error. `position` is a byte offset for single-line
/// inputs (HF literals, regexes) and a 1-based line number for files.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hfauto

#endif
