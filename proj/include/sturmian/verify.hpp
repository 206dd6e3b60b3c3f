#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/slope.hpp"

namespace sturmian {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first failure, or a short summary
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Run the whole invariant battery for one slope: word identities, the
/// structure laws for factors, and closed-form-vs-scan equivalence for
/// palindromes, conjugates and singular words. max_n bounds the singular /
/// conjugate depth; prefix_len bounds the scanned material.
VerifyReport verify_slope(const Slope& s, std::int64_t max_n, std::size_t prefix_len);

} // namespace sturmian
