#include "covact/mhopf.hpp"

#include <random>
#include <sstream>

namespace covact {

TupleWindow make_tuples(const std::vector<const std::vector<BasisKey>*>& lists,
                        const Sampling& s) {
    TupleWindow w;
    w.seed = s.seed;
    std::size_t product = 1;
    for (const auto* l : lists) product *= l->size();
    std::ostringstream os;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (i) os << "x";
        os << lists[i]->size();
    }
    if (s.cap == 0 || product <= s.cap) {
        os << " exhaustive (" << product << " tuples)";
        w.description = os.str();
        if (product == 0) return w;
        std::vector<std::size_t> idx(lists.size(), 0);
        for (;;) {
            std::vector<BasisKey> t;
            t.reserve(lists.size());
            for (std::size_t i = 0; i < lists.size(); ++i) t.push_back((*lists[i])[idx[i]]);
            w.tuples.push_back(std::move(t));
            std::size_t i = lists.size();
            for (;;) {
                if (i == 0) return w;
                --i;
                if (++idx[i] < lists[i]->size()) break;
                idx[i] = 0;
            }
        }
    }
    os << " sampled " << s.cap << "/" << product << " seed " << s.seed;
    w.description = os.str();
    std::mt19937_64 rng(s.seed);
    for (std::size_t n = 0; n < s.cap; ++n) {
        std::vector<BasisKey> t;
        t.reserve(lists.size());
        for (const auto* l : lists)
            t.push_back((*l)[std::uniform_int_distribution<std::size_t>(0, l->size() - 1)(rng)]);
        w.tuples.push_back(std::move(t));
    }
    return w;
}

Scalar MHopf::counit(const Element& x) const {
    Scalar acc = Scalar::zero(field());
    for (const auto& [k, c] : x.terms()) acc = acc + counit_key(k) * c;
    return acc;
}

Element MHopf::antipode_left_mul(const Element& u, const Element& v) const {
    Element r;
    for (const auto& [k, c] : u.terms()) r.add(antipode_key(k).left(v).scaled(c));
    return r;
}

Element MHopf::antipode_right_mul(const Element& u, const Element& v) const {
    Element r;
    for (const auto& [k, c] : v.terms()) r.add(antipode_key(k).right(u).scaled(c));
    return r;
}

namespace {
Element flip2(const Element& t) {
    const std::size_t perm[] = {1, 0};
    return permute_legs(t, perm);
}

Element apply_pairwise(const Element& t, const CoveredComultiplication::KeyFn& f) {
    Element r;
    for (const auto& [k, c] : t.terms()) r.add(f(k.leg(0), k.leg(1)).scaled(c));
    return r;
}
} // namespace

// Dense matrices of the four canonical maps over window×window, factored
// once for rank queries and decompositions.
struct MHopf::DenseCache {
    bool usable = false;
    KeyIndex pairs;
    std::optional<Rref> r1, r2, r1f, r2f;
    TRanks ranks;
    std::optional<TInverses> inv;
};

const MHopf::DenseCache* MHopf::dense_cache() const {
    std::call_once(once_, [this] {
        auto c = std::make_shared<DenseCache>();
        if (alg->is_dense()) {
            c->pairs = KeyIndex::product({alg->window, alg->window});
            const std::size_t n = c->pairs.size();
            c->ranks.dim = n;
            auto build = [&](auto col_of) {
                Matrix m(n, n, alg->field);
                for (std::size_t j = 0; j < n; ++j) {
                    const BasisKey& pk = c->pairs.keys()[j];
                    Element col = col_of(pk.leg(0), pk.leg(1));
                    auto v = c->pairs.vec(col, alg->field);
                    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = v[i];
                }
                return Rref(std::move(m));
            };
            c->r1 = build([&](const BasisKey& a, const BasisKey& b) { return comul.dR(a, b); });
            c->r2 = build([&](const BasisKey& a, const BasisKey& b) { return comul.dL(b, a); });
            c->r1f = build(
                [&](const BasisKey& a, const BasisKey& b) { return flip2(comul.dRp(a, b)); });
            c->r2f = build(
                [&](const BasisKey& a, const BasisKey& b) { return flip2(comul.dLp(b, a)); });
            c->ranks.t1 = c->r1->rank();
            c->ranks.t2 = c->r2->rank();
            c->ranks.t1f = c->r1f->rank();
            c->ranks.t2f = c->r2f->rank();
            c->usable = true;
            if (c->ranks.t1 == n && c->ranks.t2 == n && c->ranks.t1f == n && c->ranks.t2f == n) {
                DenseCache* cp = c.get();
                FieldSpec f = alg->field;
                auto solve_with = [cp, f](const Rref& rr, const BasisKey& u, const BasisKey& v) {
                    Element t(tensor_key(u, v), Scalar::one(f));
                    auto sol = rr.solve(cp->pairs.vec(t, f));
                    if (!sol) throw UnsupportedStructure("T decomposition failed");
                    return cp->pairs.unvec(*sol);
                };
                TInverses inv;
                inv.R1 = [cp, solve_with](const BasisKey& u, const BasisKey& v) {
                    return solve_with(*cp->r1, u, v);
                };
                inv.R2 = [cp, solve_with](const BasisKey& u, const BasisKey& v) {
                    return solve_with(*cp->r2, u, v);
                };
                inv.R1f = [cp, solve_with](const BasisKey& u, const BasisKey& v) {
                    return solve_with(*cp->r1f, u, v);
                };
                inv.R2f = [cp, solve_with](const BasisKey& u, const BasisKey& v) {
                    return solve_with(*cp->r2f, u, v);
                };
                c->inv = std::move(inv);
            }
        }
        cache_ = std::move(c);
    });
    return cache_.get();
}

std::optional<MHopf::TRanks> MHopf::t_ranks() const {
    const auto* c = dense_cache();
    if (!c->usable) return std::nullopt;
    return c->ranks;
}

const TInverses* MHopf::t_inverses() const {
    if (declared_inverses) return &*declared_inverses;
    if (!alg->is_dense()) return nullptr;
    const auto* c = dense_cache();
    if (!c->usable || !c->inv) return nullptr;
    return &*c->inv;
}

Element MHopf::apply_T1(const Element& t) const { return apply_pairwise(t, comul.dR); }
Element MHopf::apply_T2(const Element& t) const {
    return apply_pairwise(t,
                          [this](const BasisKey& a, const BasisKey& b) { return comul.dL(b, a); });
}
Element MHopf::apply_T1f(const Element& t) const {
    return apply_pairwise(
        t, [this](const BasisKey& a, const BasisKey& b) { return flip2(comul.dRp(a, b)); });
}
Element MHopf::apply_T2f(const Element& t) const {
    return apply_pairwise(
        t, [this](const BasisKey& a, const BasisKey& b) { return flip2(comul.dLp(b, a)); });
}

Element MHopf::apply_R1(const Element& t) const {
    const auto* inv = t_inverses();
    if (!inv) throw UnsupportedStructure("no T1 inverse available on " + name());
    return apply_pairwise(t, inv->R1);
}

Element MHopf::apply_R2(const Element& t) const {
    const auto* inv = t_inverses();
    if (!inv) throw UnsupportedStructure("no T2 inverse available on " + name());
    return apply_pairwise(t, inv->R2);
}

CoveredComultiplication covered_from_classical(const AlgebraPtr& alg,
                                               std::function<Element(const BasisKey&)> delta) {
    CoveredComultiplication c;
    auto leg_mul = [alg](const Element& t, std::size_t leg, const BasisKey& x, bool from_left) {
        Element xe = alg->basis_element(x);
        return map_legs(t, leg, 1, 1, [&](std::span<const BasisKey> ks) {
            Element k = alg->basis_element(ks[0]);
            return from_left ? alg->multiply(xe, k) : alg->multiply(k, xe);
        });
    };
    c.dR = [delta, leg_mul](const BasisKey& a, const BasisKey& b) {
        return leg_mul(delta(a), 1, b, false);
    };
    c.dRp = [delta, leg_mul](const BasisKey& a, const BasisKey& b) {
        return leg_mul(delta(a), 0, b, false);
    };
    c.dL = [delta, leg_mul](const BasisKey& a, const BasisKey& b) {
        return leg_mul(delta(a), 0, b, true);
    };
    c.dLp = [delta, leg_mul](const BasisKey& a, const BasisKey& b) {
        return leg_mul(delta(a), 1, b, true);
    };
    return c;
}

MHopfPtr make_dense_mhopf(const AlgebraPtr& alg, std::function<Element(const BasisKey&)> delta,
                          std::function<Scalar(const BasisKey&)> counit,
                          std::function<Element(const BasisKey&)> antipode_elem) {
    auto h = std::make_shared<MHopf>();
    h->alg = alg;
    h->comul = covered_from_classical(alg, std::move(delta));
    h->counit_key = std::move(counit);
    auto s = std::move(antipode_elem);
    h->antipode_key = [alg, s](const BasisKey& k) { return embed(s(k), alg); };
    return h;
}

Multiplier extend_delta(const MHopf& H, const Multiplier& h) {
    const FieldSpec f = H.field();
    const MHopf* Hp = &H;
    if (H.t_inverses()) {
        // Δ(h)·t for t = ΣΔ(a_i)(1⊗b_i) is ΣΔ(h·a_i)(1⊗b_i); mirrored on
        // the right through T2.
        auto left = [Hp, h, f](const Element& t) {
            Element dec = Hp->apply_R1(t);
            Element r;
            for (const auto& [k, c] : dec.terms()) {
                Element ha = h.left(Element(k.leg(0), Scalar::one(f)));
                r.add(Hp->dR(ha, Element(k.leg(1), Scalar::one(f))).scaled(c));
            }
            return r;
        };
        auto right = [Hp, h, f](const Element& t) {
            Element dec = Hp->apply_R2(t);
            Element r;
            for (const auto& [k, c] : dec.terms()) {
                Element bh = h.right(Element(k.leg(1), Scalar::one(f)));
                r.add(Hp->dL(bh, Element(k.leg(0), Scalar::one(f))).scaled(c));
            }
            return r;
        };
        return Multiplier(left, right);
    }
    auto x = realize(h, H.alg);
    if (!x)
        throw UnsupportedStructure("extend_delta on " + H.name() +
                                   ": no T inverses and multiplier is not realized");
    Element xe = *x;
    auto left = [Hp, xe, f](const Element& t) {
        Element r;
        for (const auto& [k, c] : t.terms()) {
            Element z = Hp->dRp(xe, Element(k.leg(0), Scalar::one(f)));
            z = map_legs(z, 1, 1, 1, [&](std::span<const BasisKey> ks) {
                return Hp->alg->multiply(Hp->alg->basis_element(ks[0]),
                                         Hp->alg->basis_element(k.leg(1)));
            });
            r.add(z.scaled(c));
        }
        return r;
    };
    auto right = [Hp, xe, f](const Element& t) {
        Element r;
        for (const auto& [k, c] : t.terms()) {
            Element z = Hp->dLp(xe, Element(k.leg(1), Scalar::one(f)));
            z = map_legs(z, 0, 1, 1, [&](std::span<const BasisKey> ks) {
                return Hp->alg->multiply(Hp->alg->basis_element(k.leg(0)),
                                         Hp->alg->basis_element(ks[0]));
            });
            r.add(z.scaled(c));
        }
        return r;
    };
    return Multiplier(left, right);
}

MHopfPtr tensor_mha(const MHopfPtr& X, const MHopfPtr& Y, const std::string& name) {
    auto h = std::make_shared<MHopf>();
    h->alg = tensor_algebra({X->alg, Y->alg}, name);
    h->regular_hint = X->regular_hint && Y->regular_hint;

    auto compose = [](CoveredComultiplication::KeyFn fx, CoveredComultiplication::KeyFn fy) {
        return [fx, fy](const BasisKey& a, const BasisKey& b) {
            Element zx = fx(a.leg(0), b.leg(0));
            Element zy = fy(a.leg(1), b.leg(1));
            Element t4 = ungroup_leg(ungroup_leg(tensor_product(zx, zy), 1), 0);
            const std::size_t perm[] = {0, 2, 1, 3};
            return group_legs(permute_legs(t4, perm), {{0, 1}, {2, 3}});
        };
    };
    h->comul.dR = compose(X->comul.dR, Y->comul.dR);
    h->comul.dRp = compose(X->comul.dRp, Y->comul.dRp);
    h->comul.dL = compose(X->comul.dL, Y->comul.dL);
    h->comul.dLp = compose(X->comul.dLp, Y->comul.dLp);

    h->counit_key = [X, Y](const BasisKey& k) {
        return X->counit_key(k.leg(0)) * Y->counit_key(k.leg(1));
    };
    if (X->has_antipode() && Y->has_antipode()) {
        FieldSpec f = X->field();
        h->antipode_key = [X, Y, f](const BasisKey& k) {
            Multiplier sx = on_leg(X->antipode_key(k.leg(0)), 0, f);
            Multiplier sy = on_leg(Y->antipode_key(k.leg(1)), 1, f);
            return mul(sx, sy);
        };
    }
    auto compose_inv = [X, Y](auto pick) {
        return CoveredComultiplication::KeyFn([X, Y, pick](const BasisKey& u, const BasisKey& v) {
            const TInverses* ix = X->t_inverses();
            const TInverses* iy = Y->t_inverses();
            if (!ix || !iy) throw UnsupportedStructure("tensor factor lacks T inverses");
            Element rx = pick(*ix)(u.leg(0), v.leg(0));
            Element ry = pick(*iy)(u.leg(1), v.leg(1));
            Element t4 = ungroup_leg(ungroup_leg(tensor_product(rx, ry), 1), 0);
            const std::size_t perm[] = {0, 2, 1, 3};
            return group_legs(permute_legs(t4, perm), {{0, 1}, {2, 3}});
        });
    };
    TInverses inv;
    inv.R1 = compose_inv([](const TInverses& i) { return i.R1; });
    inv.R2 = compose_inv([](const TInverses& i) { return i.R2; });
    inv.R1f = compose_inv([](const TInverses& i) { return i.R1f; });
    inv.R2f = compose_inv([](const TInverses& i) { return i.R2f; });
    h->declared_inverses = std::move(inv);
    return h;
}

// ---- suites ----------------------------------------------------------------

CheckReport check_coassociativity(const MHopf& H, const Sampling& s) {
    CheckReport rep;
    rep.suite = "mhopf.coassoc:" + H.name();
    const auto& win = H.alg->window;
    auto tw = make_tuples({&win, &win, &win}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = H.field();
    for (const auto& t : tw.tuples) {
        Element a = H.unit_elem(t[0]), b = H.unit_elem(t[1]), c = H.unit_elem(t[2]);
        // (a⊗1⊗1)·(Δ⊗ι)(Δ(b)(1⊗c))
        Element lhs = map_legs(H.dR(b, c), 0, 1, 2, [&](std::span<const BasisKey> ks) {
            return H.dL(Element(ks[0], Scalar::one(f)), a);
        });
        // ((ι⊗Δ)((a⊗1)Δ(b)))·(1⊗1⊗c)
        Element rhs = map_legs(H.dL(b, a), 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return H.dR(Element(ks[0], Scalar::one(f)), c);
        });
        if (lhs != rhs) {
            rep.fail_with({"covered coassociativity",
                           {t[0].str(), t[1].str(), t[2].str()},
                           lhs.str(),
                           rhs.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_counit(const MHopf& H, const Sampling& s) {
    CheckReport rep;
    rep.suite = "mhopf.counit:" + H.name();
    const auto& win = H.alg->window;
    auto tw = make_tuples({&win, &win}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& t : tw.tuples) {
        Element a = H.unit_elem(t[0]), b = H.unit_elem(t[1]);
        Element ab = H.alg->multiply(a, b);
        Element lhs = contract_leg(H.dR(a, b), 0, H.counit_key);
        if (lhs != ab) {
            rep.fail_with(
                {"(eps x i)T1 = ab", {t[0].str(), t[1].str()}, lhs.str(), ab.str()});
            break;
        }
        Element rhs = contract_leg(H.dL(b, a), 1, H.counit_key);
        if (rhs != ab) {
            rep.fail_with(
                {"(i x eps)T2 = ab", {t[0].str(), t[1].str()}, rhs.str(), ab.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_antipode(const MHopf& H, const Sampling& s) {
    CheckReport rep;
    rep.suite = "mhopf.antipode:" + H.name();
    if (!H.has_antipode()) {
        rep.status = CheckStatus::inconclusive;
        rep.note("no antipode supplied");
        return rep;
    }
    const auto& win = H.alg->window;
    auto tw = make_tuples({&win, &win}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& t : tw.tuples) {
        Element a = H.unit_elem(t[0]), b = H.unit_elem(t[1]);
        Element lhs;
        Element t1v = H.dR(a, b);
        for (const auto& [k, c] : t1v.terms())
            lhs.add(H.antipode_key(k.leg(0)).left(Element(k.leg(1), c)));
        Element want = b.scaled(H.counit(a));
        if (lhs != want) {
            rep.fail_with(
                {"m(S x i)T1 = eps(a)b", {t[0].str(), t[1].str()}, lhs.str(), want.str()});
            break;
        }
        Element rhs;
        Element t2v = H.dL(b, a);
        for (const auto& [k, c] : t2v.terms())
            rhs.add(H.antipode_key(k.leg(1)).right(Element(k.leg(0), c)));
        Element want2 = a.scaled(H.counit(b));
        if (rhs != want2) {
            rep.fail_with(
                {"m(i x S)T2 = eps(b)a", {t[0].str(), t[1].str()}, rhs.str(), want2.str()});
            break;
        }
    }
    return rep;
}

namespace {
CheckReport check_bijectivity_of(const MHopf& H, const Sampling& s, bool flipped,
                                 const std::string& suite) {
    CheckReport rep;
    rep.suite = suite;
    if (auto ranks = H.t_ranks()) {
        std::size_t ra = flipped ? ranks->t1f : ranks->t1;
        std::size_t rb = flipped ? ranks->t2f : ranks->t2;
        rep.window = H.alg->window_text();
        rep.note((flipped ? std::string("flipped ") : std::string()) + "T1 rank " +
                 std::to_string(ra) + "/" + std::to_string(ranks->dim) + ", T2 rank " +
                 std::to_string(rb) + "/" + std::to_string(ranks->dim));
        if (ra != ranks->dim || rb != ranks->dim)
            rep.fail_with({flipped ? "flipped T bijective" : "T bijective",
                           {},
                           "rank " + std::to_string(std::min(ra, rb)),
                           "rank " + std::to_string(ranks->dim)});
        return rep;
    }
    const TInverses* inv = H.t_inverses();
    if (!inv) {
        rep.status = CheckStatus::inconclusive;
        rep.note("rule backend without declared inverse rules");
        return rep;
    }
    const auto& win = H.alg->window;
    auto tw = make_tuples({&win, &win}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    auto bck = [&](const Element& t) { return apply_pairwise(t, flipped ? inv->R1f : inv->R1); };
    auto bck2 = [&](const Element& t) { return apply_pairwise(t, flipped ? inv->R2f : inv->R2); };
    for (const auto& t : tw.tuples) {
        Element pure(tensor_key(t[0], t[1]), Scalar::one(H.field()));
        Element fb = flipped ? H.apply_T1f(bck(pure)) : H.apply_T1(bck(pure));
        Element bf = bck(flipped ? H.apply_T1f(pure) : H.apply_T1(pure));
        if (fb != pure || bf != pure) {
            rep.fail_with({"T1 inverse both ways", {t[0].str(), t[1].str()}, fb.str(), pure.str()});
            break;
        }
        Element fb2 = flipped ? H.apply_T2f(bck2(pure)) : H.apply_T2(bck2(pure));
        Element bf2 = bck2(flipped ? H.apply_T2f(pure) : H.apply_T2(pure));
        if (fb2 != pure || bf2 != pure) {
            rep.fail_with(
                {"T2 inverse both ways", {t[0].str(), t[1].str()}, fb2.str(), pure.str()});
            break;
        }
    }
    return rep;
}
} // namespace

CheckReport check_bijective_T(const MHopf& H, const Sampling& s) {
    return check_bijectivity_of(H, s, false, "mhopf.t_bijective:" + H.name());
}

CheckReport check_regular(const MHopf& H, const Sampling& s) {
    return check_bijectivity_of(H, s, true, "mhopf.regular:" + H.name());
}

std::vector<CheckReport> run_hopf_suite(const MHopf& H, const Sampling& s) {
    std::vector<CheckReport> reps;
    reps.push_back(check_associativity(*H.alg));
    reps.push_back(check_nondegenerate(*H.alg));
    reps.push_back(check_coassociativity(H, s));
    reps.push_back(check_counit(H, s));
    reps.push_back(check_antipode(H, s));
    reps.push_back(check_bijective_T(H, s));
    if (H.regular_hint) reps.push_back(check_regular(H, s));
    return reps;
}

} // namespace covact
