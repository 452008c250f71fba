#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "covact/scalar.hpp"

namespace covact {

/// Basis label: an integer, a symbolic name, or a tuple of labels
/// (tensor bases and structured families like e_p d^q use tuples).
/// Totally ordered so every element has one canonical written form.
class BasisKey {
public:
    using Tuple = std::vector<BasisKey>;

    BasisKey() : v_(std::int64_t{0}) {}
    BasisKey(std::int64_t n) : v_(n) {}
    BasisKey(int n) : v_(std::int64_t{n}) {}
    BasisKey(std::string s) : v_(std::move(s)) {}
    BasisKey(const char* s) : v_(std::string(s)) {}
    BasisKey(Tuple t) : v_(std::move(t)) {}

    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_string() const { return std::holds_alternative<std::string>(v_); }
    bool is_tuple() const { return std::holds_alternative<Tuple>(v_); }

    std::int64_t as_int() const;
    const std::string& as_string() const;
    const Tuple& as_tuple() const;

    /// Tuple legs; a non-tuple key is its own single leg.
    std::size_t arity() const { return is_tuple() ? as_tuple().size() : 1; }
    const BasisKey& leg(std::size_t i) const;

    bool operator==(const BasisKey& o) const { return v_ == o.v_; }
    bool operator!=(const BasisKey& o) const { return !(v_ == o.v_); }
    bool operator<(const BasisKey& o) const;

    std::string str() const;

private:
    std::variant<std::int64_t, std::string, Tuple> v_;
};

BasisKey tensor_key(std::span<const BasisKey> legs);
BasisKey tensor_key(const BasisKey& a, const BasisKey& b);
BasisKey tensor_key(const BasisKey& a, const BasisKey& b, const BasisKey& c);

/// Finitely supported scalar combination of basis keys, kept canonical:
/// no stored zero coefficients, terms ordered by key.
class Element {
public:
    using Terms = std::map<BasisKey, Scalar>;

    Element() = default;
    Element(const BasisKey& k, const Scalar& c) { add(k, c); }

    static Element zero() { return Element(); }
    static Element unit(const BasisKey& k, const FieldSpec& f) { return Element(k, Scalar::one(f)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c·k, erasing the term if the total cancels.
    void add(const BasisKey& k, const Scalar& c);
    void add(const Element& o);
    Scalar coeff(const BasisKey& k, const FieldSpec& f) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Scalar& c) const;
    Element operator-() const;
    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(terms_ == o.terms_); }

    std::string str() const;

private:
    Terms terms_;
};

/// Linear extension of a key-level map to elements.
Element lift(const Element& x, const std::function<Element(const BasisKey&)>& f);

/// Bilinear extension of a key-pair-level map.
Element lift2(const Element& x, const Element& y,
              const std::function<Element(const BasisKey&, const BasisKey&)>& f);

// ---- tensor-leg utilities -------------------------------------------------
//
// Elements over tuple keys are tensors; the tuple positions are the legs.
// Covered identities are assembled by mapping, permuting, contracting and
// multiplying individual legs.

/// Pure tensor of elements: each part contributes exactly one leg, keys
/// preserved as-is (nested keys stay nested; use ungroup_leg to splice).
Element tensor_product(std::span<const Element> parts);
Element tensor_product(const Element& a, const Element& b);
Element tensor_product(const Element& a, const Element& b, const Element& c);

/// Applies f linearly to the contiguous legs [first, first+count) of every
/// key. Image keys are inserted as out_arity legs: for out_arity 1 the key
/// goes in unchanged (nested or not); otherwise it must be a tuple of
/// exactly out_arity legs, which are spliced flat into place.
Element map_legs(const Element& t, std::size_t first, std::size_t count, std::size_t out_arity,
                 const std::function<Element(std::span<const BasisKey>)>& f);

/// Splices the tuple key at position leg into its components (one level).
Element ungroup_leg(const Element& t, std::size_t leg);

/// Reorders legs: result leg i is input leg perm[i].
Element permute_legs(const Element& t, std::span<const std::size_t> perm);

/// Contracts leg `leg` with a functional (counit-style), dropping the leg.
Element contract_leg(const Element& t, std::size_t leg,
                     const std::function<Scalar(const BasisKey&)>& f);

/// Keeps only the given legs (in the given order), scaling by nothing;
/// other legs must already have been contracted. Helper for tests.
Element select_legs(const Element& t, std::span<const std::size_t> legs);

/// Regroups flat legs into nested keys: each group of indices becomes one
/// leg (a single-index group stays atomic). Inverse of one flattening step.
Element group_legs(const Element& t, const std::vector<std::vector<std::size_t>>& groups);

} // namespace covact
