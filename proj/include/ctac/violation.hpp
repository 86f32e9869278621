#pragma once

#include <string>
#include <vector>

namespace ctac {

enum class Severity { warning, error };

// Validation findings are data, not exceptions, so callers can report every
// problem in one pass.
struct Violation {
    Severity severity = Severity::error;
    std::string message;
};

inline bool has_errors(const std::vector<Violation>& vs) {
    for (const auto& v : vs)
        if (v.severity == Severity::error) return true;
    return false;
}

}  // namespace ctac
