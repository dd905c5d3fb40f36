#pragma once

#include <string>
#include <vector>

namespace minlink {

struct Violation {
    std::string code;
    std::string message;
    std::string location;
};

/// Report-style validation outcome. `notes` are informational only.
struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> notes;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const {
        for (const auto& v : violations) {
            if (v.code == code) {
                return true;
            }
        }
        return false;
    }
    void add(std::string code, std::string message, std::string location = {}) {
        violations.push_back({std::move(code), std::move(message), std::move(location)});
    }
};

}  // namespace minlink
