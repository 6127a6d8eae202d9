#pragma once

#include <string>
#include <vector>

namespace vocal {

struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;  // short failure context, empty on success
};

/// Runs the full verification suite (14 checks) and returns one result per
/// check, ordered by id. Every comparison is exact.
std::vector<CheckResult> runAcceptanceChecks();

}  // namespace vocal
