#pragma once

#include "covact/algebra.hpp"

namespace covact {

/// Key-level linear map, extended linearly over elements.
struct LinearMap {
    std::function<Element(const BasisKey&)> rule;
    Element operator()(const Element& x) const { return lift(x, rule); }
};

/// A multiplier: the ordered pair of its left and right action maps on a
/// carrier space, never a materialized infinite sum. For carrier A this is
/// M(A); for A⊗Y acted on through the first leg it is M0(A⊗Y).
class Multiplier {
public:
    Multiplier() = default;
    Multiplier(std::function<Element(const Element&)> left,
               std::function<Element(const Element&)> right)
        : left_(std::move(left)), right_(std::move(right)) {}

    /// X·b
    Element left(const Element& b) const { return left_(b); }
    /// a·X
    Element right(const Element& a) const { return right_(a); }

    static Multiplier identity();
    static Multiplier scalar_multiple(const Multiplier& m, const Scalar& c);

private:
    std::function<Element(const Element&)> left_, right_;
};

/// Canonical embedding of an algebra element: left/right multiplication.
Multiplier embed(const Element& x, const AlgebraPtr& carrier);

/// Multiplier product (X,Y) -> (X̄∘Ȳ, Y̿∘X̿).
Multiplier mul(const Multiplier& X, const Multiplier& Y);

Multiplier add(const Multiplier& X, const Multiplier& Y);

/// Lifts a multiplier on a single-leg carrier to one acting through leg
/// `leg` of tensor elements, leaving the other legs untouched.
Multiplier on_leg(const Multiplier& m, std::size_t leg, const FieldSpec& field);

/// Acts with X through its declared leg on a tensor element from the given
/// side; thin wrapper left here because the call sites read like the math.
Element completion_action(const Multiplier& X_on_leg, const Element& t, bool from_left);

/// Compatibility a·(X·b) = (a·X)·b on all sample pairs; throws
/// InternalInconsistency with a witness if violated.
void require_compatible(const Multiplier& X, const Algebra& carrier,
                        const std::vector<Element>& samples, const std::string& what);

/// Local-unit reconstruction: candidate x = X·e for a window local unit e,
/// verified two-sided against the probe window; nullopt when X is not
/// realized by an element over this window.
std::optional<Element> realize(const Multiplier& X, const AlgebraPtr& carrier);

/// The idempotent E of a partial comodule algebra, with its A⊗M(Y)-covered
/// forms: (b⊗1)E and E(b⊗1) as finite sums of (element of A) ⊗ (multiplier
/// on Y).
struct IdempotentE {
    Multiplier act; // on the 2-leg carrier A⊗Y
    using CoveredTerm = std::pair<Element, Multiplier>;
    std::function<std::vector<CoveredTerm>(const Element& b)> cover_left;  // (b⊗1)E
    std::function<std::vector<CoveredTerm>(const Element& b)> cover_right; // E(b⊗1)
};

/// E·E = E on the probe window of the carrier; throws on violation.
void require_idempotent(const IdempotentE& E, const Algebra& A, const Algebra& Y);

} // namespace covact
