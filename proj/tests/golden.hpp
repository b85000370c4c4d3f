#pragma once

// Golden CLI transcripts. Each file holds one "$ subrec ..." line, the
// expected combined stdout and stderr, and a final "[exit N]" line.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace subrec::testing {

struct Transcript {
    std::string name;
    std::string command;
    std::string expected;  // whole file
};

inline std::vector<Transcript> load_transcripts(const std::filesystem::path& dir) {
    std::vector<Transcript> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        Transcript t{entry.path().stem().string(), {}, buf.str()};
        t.command = t.expected.substr(2, t.expected.find('\n') - 2);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

/// Runs the transcript's command from `workdir` with the given binary and
/// returns the transcript it produces.
inline std::string replay(const Transcript& t, const std::string& binary, const std::string& workdir) {
    static const std::regex word(R"((^|\s)subrec(\s|$))");
    const std::string cmd = std::regex_replace(t.command, word, "$1'" + binary + "'$2", std::regex_constants::format_first_only);
    const std::string shell = "unset SUBREC_BUDGET_STEPS; cd '" + workdir + "' && " + cmd + " 2>&1";
    std::string output;
    FILE* pipe = popen(shell.c_str(), "r");
    if (!pipe) return "popen failed\n";
    std::array<char, 4096> chunk;
    std::size_t n;
    while ((n = std::fread(chunk.data(), 1, chunk.size(), pipe)) > 0) output.append(chunk.data(), n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return "$ " + t.command + "\n" + output + "[exit " + std::to_string(code) + "]\n";
}

}  // namespace subrec::testing
