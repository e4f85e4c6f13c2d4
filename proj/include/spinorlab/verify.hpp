#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spinorlab {

enum class VerifyScale { Quick, Default };

struct VerifyOptions {
    VerifyScale scale = VerifyScale::Default;
    std::vector<std::string> only;  // empty: every check
};

struct CheckResult {
    std::string name;
    std::string description;
    bool passed = false;
    long cases = 0;
    /// Ordered key/value facts; values are already JSON literals.
    std::vector<std::pair<std::string, std::string>> details;
};

struct VerifyReport {
    std::string scale;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Deterministic: no timings, fixed key order.
    std::string to_json() const;
    std::string to_text() const;
};

/// Registered check names in execution order.
std::vector<std::string> check_names();

/// Throws UsageError for an unknown name in options.only.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace spinorlab
