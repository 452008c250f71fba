#include "covact/scalar.hpp"

#include <regex>

namespace covact {

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p < 2) throw UsageError("prime field modulus must be >= 2, got " + std::to_string(p));
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw UsageError("prime field modulus " + std::to_string(p) + " is not prime");
    if (p > (std::int64_t{1} << 31))
        throw UsageError("prime field modulus too large: " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::str() const {
    return kind == Kind::rationals ? "Q" : "F_" + std::to_string(p);
}

namespace {
std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; m is assumed prime and 0 < a < m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    return mod_reduce(t, m);
}
} // namespace

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldSpec::Kind::prime)
        s.r_ = mod_reduce(n, f.p);
    else
        s.q_ = n;
    return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const BigRational& q) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldSpec::Kind::prime) {
        BigInt num = numerator(q) % f.p;
        BigInt den = denominator(q) % f.p;
        auto n = mod_reduce(num.convert_to<std::int64_t>(), f.p);
        auto d = mod_reduce(den.convert_to<std::int64_t>(), f.p);
        if (d == 0) throw UsageError("rational " + q.str() + " has no image in F_" + std::to_string(f.p));
        s.r_ = mod_reduce(n * mod_inverse(d, f.p), f.p);
    } else {
        s.q_ = q;
    }
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
    static const std::regex mod_re(R"(^\s*(-?\d+)\s+mod\s+(\d+)\s*$)");
    static const std::regex frac_re(R"(^\s*(-?\d+)\s*(/\s*(-?\d+))?\s*$)");
    std::smatch m;
    if (std::regex_match(s, m, mod_re)) {
        if (f.kind != FieldSpec::Kind::prime)
            throw UsageError("scalar '" + s + "' uses residue notation over " + f.str());
        if (std::stoll(m[2]) != f.p)
            throw UsageError("scalar '" + s + "' modulus differs from field " + f.str());
        return from_int(f, std::stoll(m[1]));
    }
    if (std::regex_match(s, m, frac_re)) {
        BigInt num(m[1].str());
        BigInt den = m[3].matched ? BigInt(m[3].str()) : BigInt(1);
        if (den == 0) throw UsageError("scalar '" + s + "' has zero denominator");
        return from_rational(f, BigRational(num, den));
    }
    throw UsageError("cannot parse scalar '" + s + "' over " + f.str());
}

bool Scalar::is_zero() const {
    return field_.kind == FieldSpec::Kind::prime ? r_ == 0 : q_.is_zero();
}

bool Scalar::is_one() const {
    return field_.kind == FieldSpec::Kind::prime ? r_ == 1 % field_.p : q_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw UsageError("scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldSpec::Kind::prime)
        s.r_ = mod_reduce(r_ + o.r_, field_.p);
    else
        s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldSpec::Kind::prime)
        s.r_ = mod_reduce(r_ * o.r_, field_.p);
    else
        s.q_ = BigRational(q_ * o.q_);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldSpec::Kind::prime)
        s.r_ = mod_reduce(-r_, field_.p);
    else
        s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw UsageError("division by zero in " + field_.str());
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldSpec::Kind::prime)
        s.r_ = mod_inverse(r_, field_.p);
    else
        s.q_ = BigRational(1) / q_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldSpec::Kind::prime ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldSpec::Kind::prime)
        return std::to_string(r_) + " mod " + std::to_string(field_.p);
    return q_.str();
}

std::int64_t Scalar::residue() const {
    if (field_.kind != FieldSpec::Kind::prime) throw UsageError("residue() on rational scalar");
    return r_;
}

const BigRational& Scalar::rational() const {
    if (field_.kind != FieldSpec::Kind::rationals) throw UsageError("rational() on prime-field scalar");
    return q_;
}

} // namespace covact
