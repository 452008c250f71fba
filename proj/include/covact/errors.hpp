#pragma once

#include <stdexcept>
#include <string>

namespace covact {

/// Caller misuse: dimension mismatches, bad parameters, malformed input.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A rule-backend computation left the declared key universe, or a
/// window-bound search (local units, realization) ran out of room.
class WindowExhausted : public std::runtime_error {
public:
    explicit WindowExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant that should hold by construction failed
/// (e.g. multiplier compatibility); carries the witness in the message.
class InternalInconsistency : public std::runtime_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::runtime_error(what) {}
};

/// Requested operation needs structure the input does not provide
/// (e.g. extending a comultiplication without invertible T1).
class UnsupportedStructure : public std::runtime_error {
public:
    explicit UnsupportedStructure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace covact
