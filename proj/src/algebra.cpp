#include "covact/algebra.hpp"

#include <array>
#include <sstream>

namespace covact {

Element Algebra::multiply(const Element& x, const Element& y) const {
    Element r = lift2(x, y, key_product);
    if (backend == Backend::rule && valid) {
        for (const auto& [k, c] : r.terms()) {
            if (!valid(k))
                throw WindowExhausted("algebra " + name + ": product key " + k.str() +
                                      " left the key universe");
        }
    }
    return r;
}

std::vector<BasisKey> Algebra::probe_window() const {
    if (backend == Backend::rule && extend_window) return extend_window(window);
    return window;
}

std::string Algebra::window_text() const {
    std::ostringstream os;
    os << name << ":" << (is_dense() ? "full basis " : "window ") << window.size() << " keys";
    return os.str();
}

CheckReport check_associativity(const Algebra& alg,
                                const std::vector<std::array<BasisKey, 3>>& samples) {
    CheckReport rep;
    rep.suite = "algebra.assoc:" + alg.name;
    rep.window = alg.window_text();
    auto run = [&](const BasisKey& a, const BasisKey& b, const BasisKey& c) {
        Element ab_c = alg.multiply(alg.multiply(alg.basis_element(a), alg.basis_element(b)),
                                    alg.basis_element(c));
        Element a_bc = alg.multiply(alg.basis_element(a),
                                    alg.multiply(alg.basis_element(b), alg.basis_element(c)));
        if (ab_c != a_bc)
            rep.fail_with({"(ab)c=a(bc)", {a.str(), b.str(), c.str()}, ab_c.str(), a_bc.str()});
    };
    if (!samples.empty()) {
        for (const auto& t : samples) run(t[0], t[1], t[2]);
        return rep;
    }
    for (const auto& a : alg.window)
        for (const auto& b : alg.window)
            for (const auto& c : alg.window) run(a, b, c);
    return rep;
}

CheckReport check_nondegenerate(const Algebra& alg, const std::vector<BasisKey>& window_in) {
    CheckReport rep;
    rep.suite = "algebra.nondegenerate:" + alg.name;
    const auto& window = window_in.empty() ? alg.window : window_in;
    rep.window = alg.window_text();
    std::vector<BasisKey> probes = alg.probe_window();
    if (&window != &alg.window) probes = window; // explicit window: probe it as-is

    // Stack coordinates of a·b over all probes b (then b·a): a nonzero kernel
    // vector is an annihilator on the window.
    for (int side = 0; side < 2; ++side) {
        std::vector<Element> images;
        std::vector<std::vector<Element>> per_candidate(window.size());
        for (std::size_t i = 0; i < window.size(); ++i) {
            for (const auto& b : probes) {
                Element p = side == 0
                                ? alg.multiply(alg.basis_element(window[i]), alg.basis_element(b))
                                : alg.multiply(alg.basis_element(b), alg.basis_element(window[i]));
                per_candidate[i].push_back(p);
                images.push_back(p);
            }
        }
        KeyIndex out = KeyIndex::from_support(images);
        const std::size_t dim_out = std::max<std::size_t>(out.size(), 1) * probes.size();
        Matrix m(dim_out, window.size(), alg.field);
        for (std::size_t i = 0; i < window.size(); ++i) {
            std::size_t row0 = 0;
            for (const auto& img : per_candidate[i]) {
                auto v = out.vec(img, alg.field);
                for (std::size_t r = 0; r < v.size(); ++r) m.at(row0 + r, i) = v[r];
                row0 += std::max<std::size_t>(out.size(), 1);
            }
        }
        auto kern = Rref(m).kernel_basis();
        if (!kern.empty()) {
            KeyIndex win_idx(window);
            Element witness = win_idx.unvec(kern.front());
            rep.fail_with({side == 0 ? "left annihilator" : "right annihilator",
                           {witness.str()},
                           witness.str(),
                           "0"});
        }
    }
    return rep;
}

std::optional<Element> find_local_unit(const Algebra& alg, const std::vector<Element>& targets,
                                       const std::vector<BasisKey>& search) {
    if (targets.empty()) return Element::zero();
    const auto& window = search.empty() ? alg.window : search;
    // Unknown e = sum c_k·k over the window; equations e·t = t and t·e = t.
    std::vector<std::vector<Element>> cols(window.size());
    std::vector<Element> support_pool;
    for (std::size_t i = 0; i < window.size(); ++i) {
        Element k = alg.basis_element(window[i]);
        for (const auto& t : targets) {
            cols[i].push_back(alg.multiply(k, t));
            cols[i].push_back(alg.multiply(t, k));
            support_pool.push_back(cols[i][cols[i].size() - 2]);
            support_pool.push_back(cols[i].back());
        }
    }
    for (const auto& t : targets) support_pool.push_back(t);
    KeyIndex out = KeyIndex::from_support(support_pool);
    const std::size_t block = out.size();
    Matrix m(block * targets.size() * 2, window.size(), alg.field);
    std::vector<Scalar> rhs(block * targets.size() * 2, Scalar::zero(alg.field));
    for (std::size_t i = 0; i < window.size(); ++i) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
            auto left = out.vec(cols[i][2 * j], alg.field);
            auto right = out.vec(cols[i][2 * j + 1], alg.field);
            for (std::size_t r = 0; r < block; ++r) {
                m.at((2 * j) * block + r, i) = left[r];
                m.at((2 * j + 1) * block + r, i) = right[r];
            }
        }
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
        auto tv = out.vec(targets[j], alg.field);
        for (std::size_t r = 0; r < block; ++r) {
            rhs[(2 * j) * block + r] = tv[r];
            rhs[(2 * j + 1) * block + r] = tv[r];
        }
    }
    auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    return KeyIndex(window).unvec(*sol);
}

AlgebraPtr tensor_algebra(const std::vector<AlgebraPtr>& parts, const std::string& name) {
    if (parts.empty()) throw UsageError("tensor_algebra of no factors");
    for (const auto& p : parts)
        if (!(p->field == parts[0]->field))
            throw UsageError("tensor_algebra: mixed fields " + p->field.str() + " vs " +
                             parts[0]->field.str());
    auto t = std::make_shared<Algebra>();
    t->name = name;
    t->field = parts[0]->field;
    t->backend = Algebra::Backend::dense;
    for (const auto& p : parts)
        if (!p->is_dense()) t->backend = Algebra::Backend::rule;
    t->commutative = true;
    for (const auto& p : parts) t->commutative = t->commutative && p->commutative;

    std::vector<std::vector<BasisKey>> legs;
    for (const auto& p : parts) legs.push_back(p->window);
    t->window = KeyIndex::product(legs).keys();

    std::vector<AlgebraPtr> factors = parts;
    t->key_product = [factors](const BasisKey& a, const BasisKey& b) {
        if (a.arity() != factors.size() || b.arity() != factors.size())
            throw UsageError("tensor product: arity mismatch for " + a.str() + ", " + b.str());
        std::vector<Element> leg_products;
        leg_products.reserve(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i)
            leg_products.push_back(
                factors[i]->multiply(factors[i]->basis_element(a.leg(i)),
                                     factors[i]->basis_element(b.leg(i))));
        return tensor_product(leg_products);
    };
    bool any_valid = false;
    for (const auto& p : parts) any_valid = any_valid || static_cast<bool>(p->valid);
    if (any_valid) {
        t->valid = [factors](const BasisKey& k) {
            for (std::size_t i = 0; i < factors.size(); ++i)
                if (factors[i]->valid && !factors[i]->valid(k.leg(i))) return false;
            return true;
        };
    }
    return t;
}

KeyIndex::KeyIndex(std::vector<BasisKey> keys) : keys_(std::move(keys)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (!pos_.emplace(keys_[i], i).second)
            throw UsageError("KeyIndex: duplicate key " + keys_[i].str());
    }
}

std::optional<std::size_t> KeyIndex::find(const BasisKey& k) const {
    auto it = pos_.find(k);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
}

std::vector<Scalar> KeyIndex::vec(const Element& x, const FieldSpec& f) const {
    std::vector<Scalar> v(keys_.size(), Scalar::zero(f));
    for (const auto& [k, c] : x.terms()) {
        auto i = find(k);
        if (!i) throw UsageError("element term " + k.str() + " outside key index");
        v[*i] = c;
    }
    return v;
}

Element KeyIndex::unvec(const std::vector<Scalar>& v) const {
    if (v.size() != keys_.size()) throw UsageError("unvec: length mismatch");
    Element x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(keys_[i], v[i]);
    return x;
}

KeyIndex KeyIndex::from_support(std::span<const Element> xs) {
    std::map<BasisKey, std::size_t> seen;
    std::vector<BasisKey> keys;
    for (const auto& x : xs)
        for (const auto& [k, c] : x.terms())
            if (seen.emplace(k, 0).second) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    return KeyIndex(std::move(keys));
}

KeyIndex KeyIndex::product(const std::vector<std::vector<BasisKey>>& legs) {
    std::vector<BasisKey> keys;
    std::vector<std::size_t> idx(legs.size(), 0);
    if (legs.empty()) return KeyIndex(std::vector<BasisKey>{});
    for (const auto& l : legs)
        if (l.empty()) return KeyIndex(std::vector<BasisKey>{});
    for (;;) {
        BasisKey::Tuple t;
        for (std::size_t i = 0; i < legs.size(); ++i) t.push_back(legs[i][idx[i]]);
        keys.push_back(BasisKey(std::move(t)));
        std::size_t i = legs.size();
        while (i > 0) {
            --i;
            if (++idx[i] < legs[i].size()) break;
            idx[i] = 0;
            if (i == 0) return KeyIndex(std::move(keys));
        }
    }
}

} // namespace covact
