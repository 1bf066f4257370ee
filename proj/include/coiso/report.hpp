#pragma once

#include <string>
#include <vector>

namespace coiso {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // short diagnostic for failures, empty otherwise
};

/// Accumulated validation result. Failures are entries, never exceptions,
/// so callers can report every broken identity at once.
struct Report {
    std::string subject;
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void require(std::string name, bool pass, std::string witness = {}) {
        checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
    }

    void merge(const std::string& prefix, const Report& other) {
        for (const auto& c : other.checks)
            checks.push_back({prefix + c.name, c.pass, c.witness});
    }

    std::vector<Check> failures() const {
        std::vector<Check> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c);
        return out;
    }

    std::string summary() const {
        std::string s = subject.empty() ? std::string("report") : subject;
        s += ": ";
        s += ok() ? "ok" : "FAILED";
        for (const auto& c : checks) {
            if (!c.pass) {
                s += "\n  fail: " + c.name;
                if (!c.witness.empty()) s += " [" + c.witness + "]";
            }
        }
        return s;
    }
};

}  // namespace coiso
