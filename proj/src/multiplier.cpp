#include "covact/multiplier.hpp"

namespace covact {

Multiplier Multiplier::identity() {
    return Multiplier([](const Element& b) { return b; }, [](const Element& a) { return a; });
}

Multiplier Multiplier::scalar_multiple(const Multiplier& m, const Scalar& c) {
    return Multiplier([m, c](const Element& b) { return m.left(b).scaled(c); },
                      [m, c](const Element& a) { return m.right(a).scaled(c); });
}

Multiplier embed(const Element& x, const AlgebraPtr& carrier) {
    return Multiplier([x, carrier](const Element& b) { return carrier->multiply(x, b); },
                      [x, carrier](const Element& a) { return carrier->multiply(a, x); });
}

Multiplier mul(const Multiplier& X, const Multiplier& Y) {
    return Multiplier([X, Y](const Element& b) { return X.left(Y.left(b)); },
                      [X, Y](const Element& a) { return Y.right(X.right(a)); });
}

Multiplier add(const Multiplier& X, const Multiplier& Y) {
    return Multiplier([X, Y](const Element& b) { return X.left(b) + Y.left(b); },
                      [X, Y](const Element& a) { return X.right(a) + Y.right(a); });
}

Multiplier on_leg(const Multiplier& m, std::size_t leg, const FieldSpec& field) {
    auto through = [m, leg, field](const Element& t, bool from_left) {
        return map_legs(t, leg, 1, 1, [&](std::span<const BasisKey> ks) {
            Element single(ks[0], Scalar::one(field));
            return from_left ? m.left(single) : m.right(single);
        });
    };
    return Multiplier([through](const Element& t) { return through(t, true); },
                      [through](const Element& t) { return through(t, false); });
}

Element completion_action(const Multiplier& X_on_leg, const Element& t, bool from_left) {
    return from_left ? X_on_leg.left(t) : X_on_leg.right(t);
}

void require_compatible(const Multiplier& X, const Algebra& carrier,
                        const std::vector<Element>& samples, const std::string& what) {
    for (const auto& a : samples)
        for (const auto& b : samples) {
            Element lhs = carrier.multiply(a, X.left(b));
            Element rhs = carrier.multiply(X.right(a), b);
            if (lhs != rhs)
                throw InternalInconsistency(what + ": multiplier compatibility fails at a=" +
                                            a.str() + ", b=" + b.str() + ": a(Xb)=" + lhs.str() +
                                            " vs (aX)b=" + rhs.str());
        }
}

std::optional<Element> realize(const Multiplier& X, const AlgebraPtr& carrier) {
    std::vector<Element> window_elems;
    for (const auto& k : carrier->window) window_elems.push_back(carrier->basis_element(k));
    // The local unit may need keys outside the sampling window (rule
    // backends); verification probes must then reach strictly further than
    // the candidate's support, or unrealizable multipliers with locally
    // matching actions would slip through.
    std::vector<BasisKey> search = carrier->probe_window();
    auto e = find_local_unit(*carrier, window_elems, search);
    if (!e)
        throw WindowExhausted("realize: no local unit for the window of " + carrier->name);
    Element candidate = X.left(*e);
    std::vector<BasisKey> probes = carrier->extend_window ? carrier->extend_window(search)
                                                          : carrier->window;
    for (const auto& k : probes) {
        Element b = carrier->basis_element(k);
        if (X.left(b) != carrier->multiply(candidate, b)) return std::nullopt;
        if (X.right(b) != carrier->multiply(b, candidate)) return std::nullopt;
    }
    return candidate;
}

void require_idempotent(const IdempotentE& E, const Algebra& A, const Algebra& Y) {
    for (const auto& ka : A.probe_window())
        for (const auto& ky : Y.window) {
            Element t(tensor_key(ka, ky), Scalar::one(A.field));
            if (E.act.left(E.act.left(t)) != E.act.left(t) ||
                E.act.right(E.act.right(t)) != E.act.right(t))
                throw InternalInconsistency("E is not idempotent at " + t.str());
        }
}

} // namespace covact
