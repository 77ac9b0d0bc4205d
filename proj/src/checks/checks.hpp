// A replayable battery of deterministic verification checks covering every
// published value and identity the library is built around.  The CLI
// `selfcheck` subcommand and the acceptance harness both run this battery.
#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace shw::checks {

// Thrown by a check body on the first mismatch; the message pinpoints the
// failing value.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;            // short slug used in report lines
    std::string summary;         // one-line statement of what is verified
    std::function<void()> body;  // throws CheckFailure on the first mismatch
};

// The fixed battery, in report order.
const std::vector<Check>& all_checks();

// Runs the full battery, streaming one "[ i/n] name ... PASS|FAIL" line per
// check to `out` (failure details follow on an indented line).  Returns the
// number of failures.
unsigned run_all(std::ostream& out);

}  // namespace shw::checks
