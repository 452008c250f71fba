#include "covact/basis.hpp"

#include <sstream>

namespace covact {

std::int64_t BasisKey::as_int() const {
    if (!is_int()) throw UsageError("basis key " + str() + " is not an integer");
    return std::get<std::int64_t>(v_);
}

const std::string& BasisKey::as_string() const {
    if (!is_string()) throw UsageError("basis key " + str() + " is not a symbol");
    return std::get<std::string>(v_);
}

const BasisKey::Tuple& BasisKey::as_tuple() const {
    if (!is_tuple()) throw UsageError("basis key " + str() + " is not a tuple");
    return std::get<Tuple>(v_);
}

const BasisKey& BasisKey::leg(std::size_t i) const {
    if (!is_tuple()) {
        if (i != 0) throw UsageError("leg index " + std::to_string(i) + " on atomic key");
        return *this;
    }
    const auto& t = as_tuple();
    if (i >= t.size()) throw UsageError("leg index " + std::to_string(i) + " out of range");
    return t[i];
}

bool BasisKey::operator<(const BasisKey& o) const {
    if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
    return v_ < o.v_;
}

std::string BasisKey::str() const {
    if (is_int()) return std::to_string(std::get<std::int64_t>(v_));
    if (is_string()) return std::get<std::string>(v_);
    std::ostringstream os;
    os << '(';
    const auto& t = std::get<Tuple>(v_);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i].str();
    }
    os << ')';
    return os.str();
}

BasisKey tensor_key(std::span<const BasisKey> legs) {
    return BasisKey(BasisKey::Tuple(legs.begin(), legs.end()));
}
BasisKey tensor_key(const BasisKey& a, const BasisKey& b) {
    return BasisKey(BasisKey::Tuple{a, b});
}
BasisKey tensor_key(const BasisKey& a, const BasisKey& b, const BasisKey& c) {
    return BasisKey(BasisKey::Tuple{a, b, c});
}

void Element::add(const BasisKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add(const Element& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
}

Scalar Element::coeff(const BasisKey& k, const FieldSpec& f) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(f) : it->second;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r.add(o);
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c.str() << ")*";
        os << k.str();
    }
    return os.str();
}

Element lift(const Element& x, const std::function<Element(const BasisKey&)>& f) {
    Element r;
    for (const auto& [k, c] : x.terms()) r.add(f(k).scaled(c));
    return r;
}

Element lift2(const Element& x, const Element& y,
              const std::function<Element(const BasisKey&, const BasisKey&)>& f) {
    Element r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) r.add(f(kx, ky).scaled(cx * cy));
    return r;
}

Element tensor_product(std::span<const Element> parts) {
    if (parts.empty()) throw UsageError("tensor_product of no legs");
    Element cur;
    for (const auto& [k, c] : parts[0].terms()) cur.add(BasisKey(BasisKey::Tuple{k}), c);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        Element next;
        for (const auto& [k1, c1] : cur.terms())
            for (const auto& [k2, c2] : parts[i].terms()) {
                BasisKey::Tuple t = k1.as_tuple();
                t.push_back(k2);
                next.add(BasisKey(std::move(t)), c1 * c2);
            }
        cur = std::move(next);
    }
    return cur;
}

Element tensor_product(const Element& a, const Element& b) {
    const Element parts[] = {a, b};
    return tensor_product(std::span<const Element>(parts, 2));
}
Element tensor_product(const Element& a, const Element& b, const Element& c) {
    const Element parts[] = {a, b, c};
    return tensor_product(std::span<const Element>(parts, 3));
}

Element map_legs(const Element& t, std::size_t first, std::size_t count, std::size_t out_arity,
                 const std::function<Element(std::span<const BasisKey>)>& f) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        if (!k.is_tuple() || k.as_tuple().size() < first + count)
            throw UsageError("map_legs: key " + k.str() + " lacks legs [" +
                             std::to_string(first) + "," + std::to_string(first + count) + ")");
        const auto& legs = k.as_tuple();
        Element img = f(std::span<const BasisKey>(legs.data() + first, count));
        for (const auto& [ik, ic] : img.terms()) {
            BasisKey::Tuple out;
            out.reserve(legs.size() - count + out_arity);
            for (std::size_t i = 0; i < first; ++i) out.push_back(legs[i]);
            if (out_arity == 1) {
                out.push_back(ik);
            } else {
                if (!ik.is_tuple() || ik.as_tuple().size() != out_arity)
                    throw UsageError("map_legs: image key " + ik.str() + " is not a " +
                                     std::to_string(out_arity) + "-leg tuple");
                for (const auto& leg : ik.as_tuple()) out.push_back(leg);
            }
            for (std::size_t i = first + count; i < legs.size(); ++i) out.push_back(legs[i]);
            r.add(BasisKey(std::move(out)), c * ic);
        }
    }
    return r;
}

Element ungroup_leg(const Element& t, std::size_t leg) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        const auto& legs = k.as_tuple();
        if (leg >= legs.size()) throw UsageError("ungroup_leg: leg out of range");
        BasisKey::Tuple out;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i != leg) {
                out.push_back(legs[i]);
                continue;
            }
            for (const auto& sub : legs[i].as_tuple()) out.push_back(sub);
        }
        r.add(BasisKey(std::move(out)), c);
    }
    return r;
}

Element permute_legs(const Element& t, std::span<const std::size_t> perm) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        const auto& legs = k.as_tuple();
        if (legs.size() != perm.size()) throw UsageError("permute_legs: arity mismatch");
        BasisKey::Tuple out;
        out.reserve(perm.size());
        for (auto i : perm) out.push_back(legs[i]);
        r.add(BasisKey(std::move(out)), c);
    }
    return r;
}

Element contract_leg(const Element& t, std::size_t leg,
                     const std::function<Scalar(const BasisKey&)>& f) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        const auto& legs = k.as_tuple();
        if (leg >= legs.size()) throw UsageError("contract_leg: leg out of range");
        Scalar w = f(legs[leg]) * c;
        if (w.is_zero()) continue;
        if (legs.size() == 2) {
            r.add(legs[1 - leg], w);
            continue;
        }
        BasisKey::Tuple out;
        out.reserve(legs.size() - 1);
        for (std::size_t i = 0; i < legs.size(); ++i)
            if (i != leg) out.push_back(legs[i]);
        r.add(BasisKey(std::move(out)), w);
    }
    return r;
}

Element group_legs(const Element& t, const std::vector<std::vector<std::size_t>>& groups) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        const auto& in = k.as_tuple();
        BasisKey::Tuple out;
        out.reserve(groups.size());
        for (const auto& g : groups) {
            if (g.size() == 1) {
                out.push_back(in.at(g[0]));
            } else {
                BasisKey::Tuple sub;
                sub.reserve(g.size());
                for (auto i : g) sub.push_back(in.at(i));
                out.push_back(BasisKey(std::move(sub)));
            }
        }
        r.add(out.size() == 1 ? out[0] : BasisKey(std::move(out)), c);
    }
    return r;
}

Element select_legs(const Element& t, std::span<const std::size_t> legs) {
    Element r;
    for (const auto& [k, c] : t.terms()) {
        const auto& in = k.as_tuple();
        BasisKey::Tuple out;
        for (auto i : legs) out.push_back(in.at(i));
        r.add(out.size() == 1 ? out[0] : BasisKey(std::move(out)), c);
    }
    return r;
}

} // namespace covact
