#ifndef DEMROOTS_SUITES_HPP
#define DEMROOTS_SUITES_HPP

#include <string>
#include <vector>

namespace demroots::suites {

struct CheckLine {
    std::string label;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    int bound;
    unsigned long long seed;
    std::vector<CheckLine> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Names accepted by run_suite (besides "all", which the caller expands).
std::vector<std::string> suite_names();

// Re-derives a named batch of results from the source material at the given
// bound; deterministic given (name, bound, seed).
SuiteResult run_suite(const std::string& name, int bound, unsigned long long seed);

} // namespace demroots::suites

#endif
