#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace cliffgrass::verify {

struct Check {
    std::string id;
    bool passed = false;
    std::string witness;  // serialized counterexample, empty when passed
    std::string note;     // finding attached to a passing check (e.g. a
                          // detected misprint in the published display)
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::chrono::milliseconds elapsed{0};

    bool passed() const;
    std::size_t failed_count() const;
};

/// The seven runnable suites, in the order "all" executes them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

VerificationReport run_suite(const std::string& name, std::uint64_t seed);

/// Runs one suite, or every suite when name == "all".
std::vector<VerificationReport> run(const std::string& name, std::uint64_t seed);

}  // namespace cliffgrass::verify
