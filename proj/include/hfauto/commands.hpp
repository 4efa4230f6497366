#ifndef HFAUTO_COMMANDS_HPP
#define HFAUTO_COMMANDS_HPP

// The hfauto subcommands as functions returning exit codes:
// 0 success / accept / equivalent, 1 negative verdict, 2 usage or input error.
// Normal output goes to `out`, diagnostics to `err`.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hfauto/constructions.hpp"
#include "hfauto/proptest.hpp"

namespace hfauto {

using std::filesystem::path;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

int cmd_check(const path& file, std::ostream& out, std::ostream& err);

/// Prints the visited states joined by " → ", then accept or reject.
int cmd_run(const path& file, std::string_view word, std::ostream& out, std::ostream& err);

/// The operations accepted by cmd_transform.
std::vector<std::string> transform_ops();

/// Writes the result to `out_file`, or to `out` when it is empty. The state
/// counts go to `out` in the first case and to `err` in the second.
int cmd_transform(const path& file, std::string_view op, const path& out_file, PowersetOptions options,
                  std::ostream& out, std::ostream& err);

/// NFA operands are determinised first.
int cmd_equiv(const path& a, const path& b, PowersetOptions options, std::ostream& out, std::ostream& err);

int cmd_iso(const path& a, const path& b, std::ostream& out, std::ostream& err);

/// `alphabet` is either space-separated names or a run of one-letter names.
int cmd_regex(std::string_view expr, std::string_view alphabet, const path& out_file, PowersetOptions options,
              std::ostream& out, std::ostream& err);

int cmd_dot(const path& file, const path& out_file, std::ostream& out, std::ostream& err);

int cmd_proptest(const ProptestConfig& config, std::ostream& out, std::ostream& err);

} // namespace hfauto

#endif
