#include "covact/report.hpp"

#include <sstream>

namespace covact {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
        case CheckStatus::precondition_failed: return "precondition_failed";
        case CheckStatus::expected_fail_confirmed: return "expected_fail_confirmed";
    }
    return "?";
}

namespace {
int severity(CheckStatus s) {
    switch (s) {
        case CheckStatus::fail: return 4;
        case CheckStatus::precondition_failed: return 3;
        case CheckStatus::inconclusive: return 2;
        case CheckStatus::expected_fail_confirmed: return 1;
        case CheckStatus::pass: return 0;
    }
    return 0;
}
} // namespace

void CheckReport::absorb(const CheckReport& sub) {
    if (severity(sub.status) > severity(status)) status = sub.status;
    for (const auto& w : sub.witnesses) witnesses.push_back(w);
    for (const auto& n : sub.notes) notes.push_back(n);
}

std::string CheckReport::text() const {
    std::ostringstream os;
    os << suite << ": " << to_string(status);
    if (!window.empty()) os << "  [window " << window << "]";
    if (!witnesses.empty()) {
        const auto& w = witnesses.front();
        os << "  witness";
        if (!w.clause.empty()) os << " " << w.clause;
        os << " (";
        for (std::size_t i = 0; i < w.inputs.size(); ++i) {
            if (i) os << ", ";
            os << w.inputs[i];
        }
        os << "): lhs=" << w.lhs << " rhs=" << w.rhs;
    }
    return os.str();
}

} // namespace covact
