#pragma once

// Shared helpers for the test suites.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include "ucost/model.hpp"

namespace testsupport {

inline ucost::ModelParameters table2_baseline() {
    return {1.102, 0.88, 0.4, 0.5, 0.1, ucost::EconomyKind::frail, 0.045, 0.01, 0.25};
}

inline ucost::ModelParameters table2_scenario1() {
    auto p = table2_baseline();
    p.eta = 0.142;
    return p;
}

inline ucost::ModelParameters table2_scenario2() {
    auto p = table2_scenario1();
    p.lambda = 0.84;
    return p;
}

// Random valid parameters over the documented draw region: gamma in
// [1.01, 1.3], lambda in [0.5, 1], alpha in [0.2, 0.6], sigma in [0.3, 0.7],
// eta in [0, 0.3], both economy kinds; delta, g_n, s_bar stay at baseline.
inline ucost::ModelParameters random_parameters(std::mt19937_64& rng) {
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>{}(rng);
    };
    ucost::ModelParameters p = table2_baseline();
    p.gamma = uniform(1.01, 1.3);
    p.lambda = uniform(0.5, 1.0);
    p.alpha = uniform(0.2, 0.6);
    p.sigma = uniform(0.3, 0.7);
    p.eta = uniform(0.0, 0.3);
    p.kind = (rng() & 1) ? ucost::EconomyKind::robust : ucost::EconomyKind::frail;
    return p;
}

// Writes content to a unique file under the build's temp dir and removes it
// on destruction.
class TempFile {
public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".txt") {
        static int counter = 0;
        path_ = std::string("ucost_test_") + std::to_string(++counter) + suffix;
        std::ofstream out(path_);
        out << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout (append "2>&1" to also get stderr).
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport
