#pragma once

#include <string>
#include <vector>

namespace zec {

// How a condition was established. Methods never overstate: a numeric
// pass is never labeled exact.
enum class Method { Exact, Numeric, ByConstruction, TheoryCited };

std::string method_name(Method m);

struct ConditionEntry {
    std::string id;        // "a".."f", "a'", "b'", "witness", ...
    std::string description;
    Method method = Method::Numeric;
    bool passed = false;
    // When false the entry is reported as evidence only: the condition is
    // outside what this tool can establish and does not gate overall success.
    bool certified = true;
    std::string evidence;  // free-form: residuals, case counts, verdicts
};

struct Certificate {
    int schema_version = 1;
    std::string instance;
    std::string tool_version;
    int d_a = 0;
    int d_e = 0;
    int d_b = 0;
    uint64_t seed = 0;
    std::vector<ConditionEntry> conditions;

    bool all_passed() const {
        for (const auto& c : conditions)
            if (!c.passed) return false;
        return !conditions.empty();
    }
    // Success over entries the tool actually certifies; evidence-only
    // entries (certified == false) are reported but do not gate.
    bool all_certified_passed() const {
        bool any = false;
        for (const auto& c : conditions) {
            if (!c.certified) continue;
            if (!c.passed) return false;
            any = true;
        }
        return any;
    }
    const ConditionEntry* find(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id) return &c;
        return nullptr;
    }
};

inline constexpr const char* kToolVersion = "zec 1.0.0";

}  // namespace zec
