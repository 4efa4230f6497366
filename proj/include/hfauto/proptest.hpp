#ifndef HFAUTO_PROPTEST_HPP
#define HFAUTO_PROPTEST_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hfauto/automata.hpp"
#include "hfauto/constructions.hpp"

namespace hfauto {

struct ProptestConfig {
    std::uint64_t seed = 42;
    std::size_t count = 100;
    std::size_t max_states = 5;
    std::size_t max_len = 6;
    PowersetOptions powerset{};
    /// Where shrunk counterexamples are written. Empty: render them inline.
    std::filesystem::path counterexample_dir;
    /// Minimiser under test; brzozowski when unset.
    std::function<Dfa(const Dfa&)> minimizer;
};

struct PropertyOutcome {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// First failing case index and what went wrong, after shrinking.
    std::size_t first_failure = 0;
    std::string detail;
    /// Counterexample file paths, or the inline rendering.
    std::vector<std::string> counterexample;

    bool passed() const noexcept { return failures == 0; }
};

struct ProptestReport {
    ProptestConfig config;
    std::vector<PropertyOutcome> outcomes;

    bool passed() const noexcept;
};

/// Case i draws its machines, words and regexes from derive_seed(seed, i),
/// so a report depends only on the configuration.
ProptestReport run_proptest(const ProptestConfig& config);

void print_report(const ProptestReport& report, std::ostream& out);

/// Names of every property, in report order.
std::vector<std::string> proptest_property_names();

} // namespace hfauto

#endif
