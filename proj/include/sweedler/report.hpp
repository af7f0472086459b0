#pragma once

#include <string>
#include <vector>

namespace sweedler {

/// Outcome of one named axiom or property check. When a check fails the
/// witness pins down where: typically a basis index plus both evaluated sides.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const CheckResult& c : other.checks)
            checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.pass, c.witness});
    }

    const CheckResult* find(const std::string& name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string str() const {
        std::string out;
        for (const CheckResult& c : checks) {
            out += (c.pass ? "  ok   " : "  FAIL ") + c.name;
            if (!c.pass && !c.witness.empty()) out += "\n         " + c.witness;
            out += "\n";
        }
        return out;
    }
};

}  // namespace sweedler
