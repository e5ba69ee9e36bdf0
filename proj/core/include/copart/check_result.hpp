#pragma once

#include <optional>
#include <string>

namespace copart {

/// Outcome of a finite verification sweep.
struct CheckResult {
    enum class Verdict { pass, fail, vacuous };

    Verdict verdict = Verdict::pass;
    /// First index (exponent, N, size, ...) at which the check failed.
    std::optional<long long> counterexample;
    std::string detail;

    bool passed() const { return verdict != Verdict::fail; }

    static CheckResult ok(std::string detail = {}) { return {Verdict::pass, std::nullopt, std::move(detail)}; }
    static CheckResult vacuous(std::string detail) { return {Verdict::vacuous, std::nullopt, std::move(detail)}; }
    static CheckResult failed(long long where, std::string detail)
    {
        return {Verdict::fail, where, std::move(detail)};
    }
};

inline const char* to_string(CheckResult::Verdict v)
{
    switch (v) {
    case CheckResult::Verdict::pass:
        return "pass";
    case CheckResult::Verdict::fail:
        return "fail";
    case CheckResult::Verdict::vacuous:
        return "vacuous";
    }
    return "unknown";
}

}  // namespace copart
