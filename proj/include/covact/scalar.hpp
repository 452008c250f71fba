#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "covact/errors.hpp"

namespace covact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// The base field: the rationals, or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::int64_t p = 0; // modulus, prime kind only

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(std::int64_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// An exact field element. Rationals are reduced fractions of arbitrary
/// precision; prime-field values are canonical residues in [0, p).
/// There is no floating point anywhere in the kernel.
class Scalar {
public:
    Scalar() = default; // rational zero
    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, std::int64_t n);
    static Scalar from_rational(const FieldSpec& f, const BigRational& q);
    /// Parses "n", "n/d" (rationals) or "n", "n mod p" (prime fields).
    static Scalar parse(const FieldSpec& f, const std::string& s);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // exact; division by zero throws
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Serialized form: "n" / "n/d" for rationals, "r mod p" for prime fields.
    std::string str() const;

    /// Residue value (prime fields only).
    std::int64_t residue() const;
    /// Rational value (rationals only).
    const BigRational& rational() const;

private:
    FieldSpec field_;
    BigRational q_;      // rational value
    std::int64_t r_ = 0; // prime-field residue

    void check_same_field(const Scalar& o) const;
};

} // namespace covact
