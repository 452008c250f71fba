#include "covact/gallery.hpp"

#include <array>
#include <map>

namespace covact {

Group cyclic_group(std::int64_t n) {
    if (n < 1) throw UsageError("cyclic group order must be positive");
    Group g;
    g.name = "Z" + std::to_string(n);
    for (std::int64_t i = 0; i < n; ++i) g.elements.push_back(BasisKey(i));
    g.mul = [n](const BasisKey& a, const BasisKey& b) {
        return BasisKey((a.as_int() + b.as_int()) % n);
    };
    g.inverse = [n](const BasisKey& a) { return BasisKey((n - a.as_int()) % n); };
    g.identity = BasisKey(std::int64_t{0});
    g.abelian = true;
    return g;
}

Group symmetric_group_s3() {
    // permutations of {0,1,2}; composition applies the right factor first
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, // e
        {1, 0, 2}, // (12)
        {2, 1, 0}, // (13)
        {0, 2, 1}, // (23)
        {1, 2, 0}, // (123)
        {2, 0, 1}, // (132)
    }};
    static const std::array<const char*, 6> labels = {"e", "(12)", "(13)", "(23)", "(123)",
                                                      "(132)"};
    auto index_of = [](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw InternalInconsistency("S3 table lookup failed");
    };
    Group g;
    g.name = "S3";
    for (auto* l : labels) g.elements.push_back(BasisKey(l));
    auto label_index = [](const BasisKey& k) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (k.as_string() == labels[i]) return i;
        throw UsageError("unknown S3 element " + k.str());
    };
    g.mul = [label_index, index_of](const BasisKey& a, const BasisKey& b) {
        const auto& pa = perms[label_index(a)];
        const auto& pb = perms[label_index(b)];
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = pa[pb[i]];
        return BasisKey(labels[index_of(c)]);
    };
    g.inverse = [label_index, index_of](const BasisKey& a) {
        const auto& pa = perms[label_index(a)];
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[pa[i]] = i;
        return BasisKey(labels[index_of(inv)]);
    };
    g.identity = BasisKey("e");
    g.abelian = false;
    return g;
}

MHopfPtr make_function_algebra(const Group& g, const FieldSpec& f) {
    auto alg = std::make_shared<Algebra>();
    alg->name = "A_" + g.name;
    alg->field = f;
    alg->backend = Algebra::Backend::dense;
    alg->window = g.elements;
    alg->commutative = true;
    alg->key_product = [f](const BasisKey& a, const BasisKey& b) {
        return a == b ? Element(a, Scalar::one(f)) : Element::zero();
    };
    Group gr = g;
    auto delta = [gr, f](const BasisKey& k) {
        // Delta(delta_k) = sum over factorizations a·b = k
        Element d;
        for (const auto& a : gr.elements)
            d.add(tensor_key(a, gr.mul(gr.inverse(a), k)), Scalar::one(f));
        return d;
    };
    // a·b = k means b = a^{-1}k, so the sum above runs over a.
    auto counit = [gr, f](const BasisKey& k) {
        return k == gr.identity ? Scalar::one(f) : Scalar::zero(f);
    };
    auto antipode = [gr, f](const BasisKey& k) { return Element(gr.inverse(k), Scalar::one(f)); };
    return make_dense_mhopf(AlgebraPtr(alg), delta, counit, antipode);
}

MHopfPtr make_group_algebra(const Group& g, const FieldSpec& f) {
    auto alg = std::make_shared<Algebra>();
    alg->name = "k" + g.name;
    alg->field = f;
    alg->backend = Algebra::Backend::dense;
    alg->window = g.elements;
    alg->commutative = g.abelian;
    Group gr = g;
    alg->key_product = [gr, f](const BasisKey& a, const BasisKey& b) {
        return Element(gr.mul(a, b), Scalar::one(f));
    };
    auto delta = [f](const BasisKey& k) { return Element(tensor_key(k, k), Scalar::one(f)); };
    auto counit = [f](const BasisKey&) { return Scalar::one(f); };
    auto antipode = [gr, f](const BasisKey& k) { return Element(gr.inverse(k), Scalar::one(f)); };
    return make_dense_mhopf(AlgebraPtr(alg), delta, counit, antipode);
}

namespace {

// Bases g^i x^j with xg = q·gx, g^G = 1, x^X = 0; covers Sweedler (G=X=2,
// q=-1) and Taft order 3 (G=X=3, q a primitive cube root).
struct QTaftFamily {
    FieldSpec f;
    Scalar q;
    std::int64_t order; // G = X = order
    std::vector<std::string> labels;

    QTaftFamily(const FieldSpec& f_, const Scalar& q_, std::int64_t order_)
        : f(f_), q(q_), order(order_) {
        for (std::int64_t i = 0; i < order; ++i)
            for (std::int64_t j = 0; j < order; ++j) labels.push_back(label(i, j));
    }
    std::string label(std::int64_t i, std::int64_t j) const {
        std::string s;
        if (i == 1) s += "g";
        if (i > 1) s += "g^" + std::to_string(i);
        if (j >= 1) {
            if (!s.empty()) s += "*";
            s += j == 1 ? "x" : "x^" + std::to_string(j);
        }
        return s.empty() ? "1" : s;
    }
    std::pair<std::int64_t, std::int64_t> degrees(const BasisKey& k) const {
        for (std::int64_t i = 0; i < order; ++i)
            for (std::int64_t j = 0; j < order; ++j)
                if (k.as_string() == label(i, j)) return {i, j};
        throw UsageError("unknown basis key " + k.str());
    }
    Scalar qpow(std::int64_t n) const {
        Scalar r = Scalar::one(f);
        for (std::int64_t i = 0; i < n; ++i) r = r * q;
        return r;
    }
    Element product(const BasisKey& a, const BasisKey& b) const {
        auto [i, jd] = degrees(a);
        auto [k, l] = degrees(b);
        if (jd + l >= order) return Element::zero(); // x is nilpotent
        // x^j g^k = q^{jk} g^k x^j
        return Element(BasisKey(label((i + k) % order, jd + l)), qpow(jd * k));
    }
};

MHopfPtr make_qtaft(const FieldSpec& f, const Scalar& q, std::int64_t order,
                    const std::string& name) {
    auto fam = std::make_shared<QTaftFamily>(f, q, order);
    auto alg = std::make_shared<Algebra>();
    alg->name = name;
    alg->field = f;
    alg->backend = Algebra::Backend::dense;
    for (const auto& l : fam->labels) alg->window.push_back(BasisKey(l));
    alg->commutative = false;
    alg->key_product = [fam](const BasisKey& a, const BasisKey& b) { return fam->product(a, b); };
    AlgebraPtr algp(alg);

    auto t2 = tensor_algebra({algp, algp}, name + "⊗" + name);
    // Delta is multiplicative: Delta(g)=g⊗g, Delta(x)=x⊗1+g⊗x.
    Element dg(tensor_key(BasisKey(fam->label(1, 0)), BasisKey(fam->label(1, 0))),
               Scalar::one(f));
    Element dx;
    dx.add(tensor_key(BasisKey(fam->label(0, 1)), BasisKey(fam->label(0, 0))), Scalar::one(f));
    dx.add(tensor_key(BasisKey(fam->label(1, 0)), BasisKey(fam->label(0, 1))), Scalar::one(f));
    auto delta = [fam, t2, dg, dx, f](const BasisKey& k) {
        auto [i, j] = fam->degrees(k);
        Element acc(tensor_key(BasisKey("1"), BasisKey("1")), Scalar::one(f));
        for (std::int64_t n = 0; n < i; ++n) acc = t2->multiply(acc, dg);
        for (std::int64_t n = 0; n < j; ++n) acc = t2->multiply(acc, dx);
        return acc;
    };
    auto counit = [fam, f](const BasisKey& k) {
        return fam->degrees(k).second == 0 ? Scalar::one(f) : Scalar::zero(f);
    };
    // S(g) = g^{-1}, S(x) = -g^{-1}x, extended antimultiplicatively.
    auto antipode = [fam, algp, f](const BasisKey& k) {
        auto [i, j] = fam->degrees(k);
        Element sg(BasisKey(fam->label((fam->order - 1) % fam->order, 0)), Scalar::one(f));
        Element sx = algp->multiply(sg, Element(BasisKey(fam->label(0, 1)), -Scalar::one(f)));
        Element acc(BasisKey("1"), Scalar::one(f));
        for (std::int64_t n = 0; n < j; ++n) acc = algp->multiply(acc, sx);
        for (std::int64_t n = 0; n < i; ++n) acc = algp->multiply(acc, sg);
        return acc;
    };
    return make_dense_mhopf(algp, delta, counit, antipode);
}

} // namespace

MHopfPtr make_sweedler(const FieldSpec& f) {
    Scalar minus_one = -Scalar::one(f);
    if (minus_one == Scalar::one(f))
        throw UsageError("Sweedler algebra needs characteristic != 2");
    return make_qtaft(f, minus_one, 2, "H4");
}

MHopfPtr make_taft(const FieldSpec& f, const Scalar& q) {
    Scalar q3 = q * q * q;
    if (!q3.is_one() || q.is_one())
        throw UsageError("Taft parameter must be a primitive cube root of unity");
    Scalar three = Scalar::from_int(f, 3);
    if (three.is_zero()) throw UsageError("Taft order 3 needs characteristic != 3");
    return make_qtaft(f, q, 3, "T3");
}

MHopfPtr make_function_algebra_Z(const FieldSpec& f, std::int64_t window_radius) {
    if (window_radius < 1) throw UsageError("A_Z window radius must be >= 1");
    auto alg = std::make_shared<Algebra>();
    alg->name = "A_Z";
    alg->field = f;
    alg->backend = Algebra::Backend::rule;
    for (std::int64_t p = -window_radius; p <= window_radius; ++p)
        alg->window.push_back(BasisKey(p));
    alg->commutative = true;
    alg->key_product = [f](const BasisKey& a, const BasisKey& b) {
        return a == b ? Element(a, Scalar::one(f)) : Element::zero();
    };
    alg->valid = [](const BasisKey& k) {
        return k.is_int() && std::abs(k.as_int()) <= 1000000;
    };
    std::int64_t r = window_radius;
    alg->extend_window = [r](const std::vector<BasisKey>& keys) {
        std::int64_t lo = 0, hi = 0;
        for (const auto& k : keys) {
            lo = std::min(lo, k.as_int());
            hi = std::max(hi, k.as_int());
        }
        std::vector<BasisKey> out;
        for (std::int64_t p = lo - r - 1; p <= hi + r + 1; ++p) out.push_back(BasisKey(p));
        return out;
    };

    auto h = std::make_shared<MHopf>();
    h->alg = AlgebraPtr(alg);
    Scalar one = Scalar::one(f);
    // Delta(delta_a)(p,q) = delta_a(p+q), covered on one leg at a time.
    h->comul.dR = [f, one](const BasisKey& a, const BasisKey& b) {
        return Element(tensor_key(BasisKey(a.as_int() - b.as_int()), b), one);
    };
    h->comul.dRp = [f, one](const BasisKey& a, const BasisKey& b) {
        return Element(tensor_key(b, BasisKey(a.as_int() - b.as_int())), one);
    };
    h->comul.dL = h->comul.dRp; // commutative: (b⊗1)Δ(a) = Δ(a)(b⊗1)
    h->comul.dLp = h->comul.dR;
    h->counit_key = [f](const BasisKey& k) {
        return k.as_int() == 0 ? Scalar::one(f) : Scalar::zero(f);
    };
    AlgebraPtr algp = h->alg;
    h->antipode_key = [algp, f](const BasisKey& k) {
        return embed(Element(BasisKey(-k.as_int()), Scalar::one(f)), algp);
    };
    TInverses inv;
    inv.R1 = [one](const BasisKey& u, const BasisKey& v) {
        return Element(tensor_key(BasisKey(u.as_int() + v.as_int()), v), one);
    };
    inv.R2 = [one](const BasisKey& u, const BasisKey& v) {
        return Element(tensor_key(u, BasisKey(u.as_int() + v.as_int())), one);
    };
    inv.R1f = inv.R1; // σΔ = Δ here
    inv.R2f = inv.R2;
    h->declared_inverses = std::move(inv);
    return h;
}

// ---- the e_p d^q algebra ----------------------------------------------------
//
// Multiplier words c^m d^k (m in Z, k in N) with the commutation rules
//   d c = λ^{-1} c d,   c^m e_r = λ^{mr} e_r c^m,   d^k e_r = e_{r+k} d^k.
// Every element of A is a combination of e_p d^q = "word with an e factor";
// Delta(e_p d^q) = Delta(e_p)·(d⊗c + 1⊗d)^q is expanded into word pairs and
// the infinite sum Delta(e_p) = Σ e_r ⊗ e_{p-r} is contracted by whichever
// covering fixes the free index.

namespace {

struct Word {
    std::int64_t m = 0; // c-power
    std::int64_t k = 0; // d-power
    bool operator<(const Word& o) const { return std::tie(m, k) < std::tie(o.m, o.k); }
};

struct Epdq {
    FieldSpec f;
    Scalar lambda;

    Scalar lpow(std::int64_t n) const {
        Scalar base = n >= 0 ? lambda : lambda.inverse();
        std::int64_t e = n >= 0 ? n : -n;
        Scalar r = Scalar::one(f);
        for (std::int64_t i = 0; i < e; ++i) r = r * base;
        return r;
    }

    // c^m1 d^k1 · c^m2 d^k2
    std::pair<Scalar, Word> wmul(const Word& a, const Word& b) const {
        return {lpow(-a.k * b.m), Word{a.m + b.m, a.k + b.k}};
    }
    // c^m d^k · e_r d^s
    std::pair<Scalar, BasisKey> we(const Word& w, std::int64_t r, std::int64_t s) const {
        return {lpow(w.m * (r + w.k)), epdq_key(r + w.k, w.k + s)};
    }
    // e_p d^q · c^m d^k
    std::pair<Scalar, BasisKey> ew(std::int64_t p, std::int64_t q, const Word& w) const {
        return {lpow(w.m * (p - q)), epdq_key(p, q + w.k)};
    }

    // (d⊗c + 1⊗d)^q as a combination of word pairs
    std::map<std::pair<Word, Word>, Scalar> delta_d_power(std::int64_t q) const {
        std::map<std::pair<Word, Word>, Scalar> acc;
        acc[{Word{0, 0}, Word{0, 0}}] = Scalar::one(f);
        for (std::int64_t step = 0; step < q; ++step) {
            std::map<std::pair<Word, Word>, Scalar> next;
            for (const auto& [pair, c] : acc) {
                // times d⊗c
                {
                    auto [c1, w1] = wmul(pair.first, Word{0, 1});
                    auto [c2, w2] = wmul(pair.second, Word{1, 0});
                    auto key = std::make_pair(w1, w2);
                    auto it = next.emplace(key, Scalar::zero(f)).first;
                    it->second = it->second + c * c1 * c2;
                }
                // times 1⊗d
                {
                    auto [c2, w2] = wmul(pair.second, Word{0, 1});
                    auto key = std::make_pair(pair.first, w2);
                    auto it = next.emplace(key, Scalar::zero(f)).first;
                    it->second = it->second + c * c2;
                }
            }
            acc = std::move(next);
        }
        return acc;
    }

    // S and S^{-1} on words, antimultiplicative with S(c) = c^{-1},
    // S(d) = -λ·c^{-1}d, S^{-1}(d) = -c^{-1}d.
    std::pair<Scalar, Word> word_antipode(const Word& w, bool inverse) const {
        Scalar coeff = Scalar::one(f);
        Word acc{0, 0};
        Word sd{-1, 1};
        Scalar sd_coeff = inverse ? -Scalar::one(f) : -lambda;
        for (std::int64_t i = 0; i < w.k; ++i) {
            auto [c, nw] = wmul(acc, sd);
            coeff = coeff * c * sd_coeff;
            acc = nw;
        }
        auto [c, nw] = wmul(acc, Word{-w.m, 0});
        coeff = coeff * c;
        acc = nw;
        return {coeff, acc};
    }
};

std::pair<std::int64_t, std::int64_t> epdq_degrees(const BasisKey& k) {
    if (!k.is_tuple() || k.as_tuple().size() != 2)
        throw UsageError("e_p d^q key expected, got " + k.str());
    return {k.leg(0).as_int(), k.leg(1).as_int()};
}

} // namespace

BasisKey epdq_key(std::int64_t p, std::int64_t q) {
    return tensor_key(BasisKey(p), BasisKey(q));
}

MHopfPtr make_epdq(const FieldSpec& f, const Scalar& lambda, std::int64_t pmax,
                   std::int64_t qmax) {
    if (lambda.is_zero()) throw UsageError("epdq: lambda must be nonzero");
    if (pmax < 1 || qmax < 0) throw UsageError("epdq: bad window bounds");
    auto ep = std::make_shared<Epdq>(Epdq{f, lambda});

    auto alg = std::make_shared<Algebra>();
    alg->name = "epdq";
    alg->field = f;
    alg->backend = Algebra::Backend::rule;
    for (std::int64_t p = -pmax; p <= pmax; ++p)
        for (std::int64_t q = 0; q <= qmax; ++q) alg->window.push_back(epdq_key(p, q));
    alg->commutative = false;
    alg->key_product = [f](const BasisKey& a, const BasisKey& b) {
        auto [p, q] = epdq_degrees(a);
        auto [r, s] = epdq_degrees(b);
        // e_p d^q e_r d^s = [p = r+q] e_p d^{q+s}
        return p == r + q ? Element(epdq_key(p, q + s), Scalar::one(f)) : Element::zero();
    };
    alg->valid = [](const BasisKey& k) {
        if (!k.is_tuple() || k.as_tuple().size() != 2) return false;
        auto p = k.leg(0).as_int(), q = k.leg(1).as_int();
        return q >= 0 && std::abs(p) <= 10000 && q <= 1000;
    };
    std::int64_t qm = qmax;
    alg->extend_window = [qm](const std::vector<BasisKey>& keys) {
        std::int64_t lo = 0, hi = 0, qhi = 0;
        for (const auto& k : keys) {
            lo = std::min(lo, k.leg(0).as_int());
            hi = std::max(hi, k.leg(0).as_int());
            qhi = std::max(qhi, k.leg(1).as_int());
        }
        std::vector<BasisKey> out;
        for (std::int64_t p = lo - qm - 1; p <= hi + qm + 1; ++p)
            for (std::int64_t q = 0; q <= qhi; ++q) out.push_back(epdq_key(p, q));
        return out;
    };
    AlgebraPtr algp(alg);

    auto h = std::make_shared<MHopf>();
    h->alg = algp;

    // The four covered actions of Delta(e_p d^q); the contraction index of
    // Delta(e_p) is forced by the covering in each case.
    h->comul.dR = [ep](const BasisKey& a, const BasisKey& b) {
        auto [p, q] = epdq_degrees(a);
        auto [r, s] = epdq_degrees(b);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [c2, right] = ep->we(pair.second, r, s);
            std::int64_t rho = p - right.leg(0).as_int();
            Scalar c1 = ep->lpow(pair.first.m * rho);
            out.add(tensor_key(epdq_key(rho, pair.first.k), right), c * c1 * c2);
        }
        return out;
    };
    h->comul.dRp = [ep](const BasisKey& a, const BasisKey& b) {
        auto [p, q] = epdq_degrees(a);
        auto [r, s] = epdq_degrees(b);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [c1, left] = ep->we(pair.first, r, s);
            std::int64_t rho = left.leg(0).as_int();
            Scalar c2 = ep->lpow(pair.second.m * (p - rho));
            out.add(tensor_key(left, epdq_key(p - rho, pair.second.k)), c * c1 * c2);
        }
        return out;
    };
    h->comul.dL = [ep](const BasisKey& a, const BasisKey& b) {
        auto [p, q] = epdq_degrees(a);
        auto [r, s] = epdq_degrees(b);
        std::int64_t t = p - r + s; // forced by b·e_rho != 0
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [c1, left] = ep->ew(r, s, pair.first);
            Scalar c2 = ep->lpow(pair.second.m * t);
            out.add(tensor_key(left, epdq_key(t, pair.second.k)), c * c1 * c2);
        }
        return out;
    };
    h->comul.dLp = [ep](const BasisKey& a, const BasisKey& b) {
        auto [p, q] = epdq_degrees(a);
        auto [r, s] = epdq_degrees(b);
        std::int64_t t = p + s - r; // forced
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            Scalar c1 = ep->lpow(pair.first.m * t);
            auto [c2, right] = ep->ew(r, s, pair.second);
            out.add(tensor_key(epdq_key(t, pair.first.k), right), c * c1 * c2);
        }
        return out;
    };
    h->counit_key = [f](const BasisKey& k) {
        auto [p, q] = epdq_degrees(k);
        return (p == 0 && q == 0) ? Scalar::one(f) : Scalar::zero(f);
    };
    h->antipode_key = [ep, algp](const BasisKey& k) {
        auto [p, q] = epdq_degrees(k);
        auto [c, w] = ep->word_antipode(Word{0, q}, false); // S(d^q)
        auto [c2, key] = ep->we(w, -p, 0);                  // ·e_{-p}
        return embed(Element(key, c * c2), algp);
    };

    TInverses inv;
    // R1(u⊗v) = u_(1) ⊗ S(u_(2))·v and mirrored forms; each contraction
    // index is forced by the covering leg.
    // R1(u⊗v) = u_(1) ⊗ S(u_(2))·v; the contraction index of Delta(e_p) is
    // forced to p+r by S(w2)e_{rho-p}·v != 0. Mirrored reasoning below.
    inv.R1 = [ep](const BasisKey& u, const BasisKey& v) {
        auto [p, q] = epdq_degrees(u);
        auto [r, s] = epdq_degrees(v);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            const std::int64_t rho = p + r;
            Scalar c1 = ep->lpow(pair.first.m * rho); // e_rho·w1
            auto [cs, ws] = ep->word_antipode(pair.second, false);
            auto [c2, mid] = ep->we(ws, r, 0); // S(w2)·e_r = e_{r+ks} d^{ks}
            auto [pm, km] = epdq_degrees(mid);
            // mid·v = e_{pm} d^{km+s} since pm = r+km always matches
            out.add(tensor_key(epdq_key(rho, pair.first.k), epdq_key(pm, km + s)),
                    c * c1 * cs * c2);
        }
        return out;
    };
    // R2(u⊗v) = u·S(v_(1)) ⊗ v_(2)
    inv.R2 = [ep](const BasisKey& u, const BasisKey& v) {
        auto [r, s] = epdq_degrees(u);
        auto [p, q] = epdq_degrees(v);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [cs, ws] = ep->word_antipode(pair.first, false);
            const std::int64_t rho = ws.k + s - r; // forced by u·S(w1)e_{-rho} != 0
            auto [c1, mid] = ep->we(ws, -rho, 0);  // S(w1)·e_{-rho}
            (void)mid;                             // u·mid = e_r d^{s+ks}
            Scalar c2 = ep->lpow(pair.second.m * (p - rho)); // e_{p-rho}·w2
            out.add(tensor_key(epdq_key(r, s + ws.k), epdq_key(p - rho, pair.second.k)),
                    c * cs * c1 * c2);
        }
        return out;
    };
    // R1f(u⊗v) = u_(2) ⊗ S^{-1}(u_(1))·v
    inv.R1f = [ep](const BasisKey& u, const BasisKey& v) {
        auto [p, q] = epdq_degrees(u);
        auto [r, s] = epdq_degrees(v);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [ci, wi] = ep->word_antipode(pair.first, true);
            auto [c1, mid] = ep->we(wi, r, 0); // S^{-1}(w1)·e_r (rho = -r forced)
            auto [pm, km] = epdq_degrees(mid);
            Scalar c2 = ep->lpow(pair.second.m * (p + r)); // e_{p+r}·w2
            out.add(tensor_key(epdq_key(p + r, pair.second.k), epdq_key(pm, km + s)),
                    c * ci * c1 * c2);
        }
        return out;
    };
    // R2f(u⊗v) = u·S^{-1}(v_(2)) ⊗ v_(1)
    inv.R2f = [ep](const BasisKey& u, const BasisKey& v) {
        auto [r, s] = epdq_degrees(u);
        auto [p, q] = epdq_degrees(v);
        Element out;
        for (const auto& [pair, c] : ep->delta_d_power(q)) {
            auto [ci, wi] = ep->word_antipode(pair.second, true);
            const std::int64_t rho = r + p - wi.k - s; // forced by u·S^{-1}(w2)e_{rho-p} != 0
            auto [c1, mid] = ep->we(wi, rho - p, 0);
            (void)mid; // u·mid = e_r d^{s+ki}
            Scalar c2 = ep->lpow(pair.first.m * rho); // e_rho·w1
            out.add(tensor_key(epdq_key(r, s + wi.k), epdq_key(rho, pair.first.k)),
                    c * ci * c1 * c2);
        }
        return out;
    };
    h->declared_inverses = std::move(inv);
    return h;
}

Multiplier epdq_c_lambda(const MHopfPtr& A, const Scalar& lambda, bool inverse) {
    FieldSpec f = A->field();
    Scalar l = inverse ? lambda.inverse() : lambda;
    auto lpow = [f, l](std::int64_t n) {
        Scalar base = n >= 0 ? l : l.inverse();
        std::int64_t e = n >= 0 ? n : -n;
        Scalar r = Scalar::one(f);
        for (std::int64_t i = 0; i < e; ++i) r = r * base;
        return r;
    };
    // c·e_p d^q = λ^p e_p d^q, e_p d^q·c = λ^{p-q} e_p d^q
    auto left = [lpow](const Element& x) {
        Element r;
        for (const auto& [k, c] : x.terms()) r.add(k, c * lpow(k.leg(0).as_int()));
        return r;
    };
    auto right = [lpow](const Element& x) {
        Element r;
        for (const auto& [k, c] : x.terms())
            r.add(k, c * lpow(k.leg(0).as_int() - k.leg(1).as_int()));
        return r;
    };
    return Multiplier(left, right);
}

MHopfPtr make_base_field_algebra(const FieldSpec& f) {
    auto alg = std::make_shared<Algebra>();
    alg->name = "k";
    alg->field = f;
    alg->backend = Algebra::Backend::dense;
    alg->window = {BasisKey("1")};
    alg->commutative = true;
    alg->key_product = [f](const BasisKey& a, const BasisKey&) {
        return Element(a, Scalar::one(f));
    };
    AlgebraPtr algp(alg);
    auto delta = [f](const BasisKey& k) { return Element(tensor_key(k, k), Scalar::one(f)); };
    auto counit = [f](const BasisKey&) { return Scalar::one(f); };
    auto antipode = [f](const BasisKey& k) { return Element(k, Scalar::one(f)); };
    return make_dense_mhopf(algp, delta, counit, antipode);
}

Multiplier subset_indicator(const MHopfPtr& function_algebra,
                            const std::vector<BasisKey>& subset) {
    FieldSpec f = function_algebra->field();
    std::map<BasisKey, bool> in;
    for (const auto& k : subset) in[k] = true;
    auto act = [in, f](const Element& x) {
        Element r;
        for (const auto& [k, c] : x.terms())
            if (in.count(k)) r.add(k, c);
        return r;
    };
    return Multiplier(act, act);
}

Multiplier tensor_multiplier(const Multiplier& h1, const Multiplier& h2, const FieldSpec& f) {
    return mul(on_leg(h1, 0, f), on_leg(h2, 1, f)); // legs commute
}

} // namespace covact
