#pragma once

// Runs the command-line binary and compares its text against golden files.

#include <sys/wait.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_runner {

struct Outcome {
    std::string out;
    int exit_code = -1;
};

inline std::string quote(const std::string& arg) {
    std::string q = "'";
    for (char c : arg) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

/// Runs `LIE_IDEAL_CLI args...`, capturing stdout; stderr is discarded.
inline Outcome run(std::initializer_list<std::string> args) {
    std::string cmd = quote(LIE_IDEAL_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Outcome result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(GOLDEN_DIR) + "/" + name); }

/// Drops all whitespace and writes "<{...}>" as "<...>", so the two printed
/// spellings of the generator list compare equal.
inline std::string normalize(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    for (std::size_t pos; (pos = out.find("<{")) != std::string::npos;) {
        const auto close = out.find("}>", pos);
        if (close == std::string::npos) break;
        out.erase(close, 1);
        out.erase(pos + 1, 1);
    }
    return out;
}

}  // namespace cli_runner
