#pragma once

#include <string>
#include <vector>

namespace whkit {

/// One verified property. `ref` is a stable slug naming the proposition
/// family the check belongs to, so logs can be grepped by topic.
struct CheckResult {
    std::string name;
    std::string ref;
    bool pass = false;
    std::string witness;  // serialized counterexample or note, empty when passing
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    void add(std::string name, std::string ref, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), std::move(ref), pass, std::move(witness)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    bool passed(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.pass;
        return false;
    }
};

}  // namespace whkit
