// Helpers for driving the command-line binary from tests: locate it through
// the SHW_CLI_PATH environment variable and capture exit status plus combined
// stdout/stderr of one invocation.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace shw::testing {

inline std::string cli_path() {
    const char* path = std::getenv("SHW_CLI_PATH");
    if (path == nullptr || *path == '\0') {
        throw std::runtime_error("SHW_CLI_PATH is not set; run through ctest");
    }
    return path;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs `cli_path() + " " + args` through the shell with stderr folded into
// stdout.
inline CommandResult run_cli(const std::string& args) {
    const std::string command = "\"" + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("failed to spawn: " + command);
    }
    CommandResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace shw::testing
