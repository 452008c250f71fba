#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covact {

enum class CheckStatus {
    pass,
    fail,
    inconclusive,          // rule backend lacked data, or window too small
    precondition_failed,   // prerequisites of the check not met
    expected_fail_confirmed
};

std::string to_string(CheckStatus s);

/// One counterexample: the inputs fed to an identity plus both evaluated sides.
struct Witness {
    std::string clause;               // which axiom/identity, e.g. "(iv)"
    std::vector<std::string> inputs;  // serialized input tuple
    std::string lhs, rhs;
};

/// Structured result of an axiom suite. fail / expected_fail always carry
/// at least one witness; "pass" on a rule backend means pass on the window.
struct CheckReport {
    std::string suite;
    CheckStatus status = CheckStatus::pass;
    std::vector<Witness> witnesses;
    std::string window;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;

    bool passed() const { return status == CheckStatus::pass; }
    void note(std::string s) { notes.push_back(std::move(s)); }
    void fail_with(Witness w) {
        status = CheckStatus::fail;
        witnesses.push_back(std::move(w));
    }
    /// Combines a sub-result: fail dominates, then precondition_failed,
    /// then inconclusive; witnesses and notes accumulate.
    void absorb(const CheckReport& sub);

    std::string text() const; // one-line human-readable summary
};

} // namespace covact
