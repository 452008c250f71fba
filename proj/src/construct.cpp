#include "covact/construct.hpp"

namespace covact {

CoactionPtr build_h_coaction(const HCoactionSpec& spec) {
    auto cc = std::make_shared<ComoduleCoalgebra>();
    cc->Y = spec.Y;
    cc->A = spec.A;
    cc->kind = spec.claim;
    cc->rho_is_homomorphism = true;
    cc->name = spec.name;
    Multiplier h = spec.h;
    MHopfPtr A = spec.A;
    FieldSpec f = spec.A->field();
    cc->coact.rR = [h, A, f](const BasisKey& y, const BasisKey& a) {
        return tensor_product(h.left(A->unit_elem(a)), Element(y, Scalar::one(f)));
    };
    cc->coact.rL = [h, A, f](const BasisKey& y, const BasisKey& a) {
        return tensor_product(h.right(A->unit_elem(a)), Element(y, Scalar::one(f)));
    };
    return cc;
}

CheckReport check_h_conditions(const Multiplier& h, const MHopf& A, const Sampling& s) {
    CheckReport rep;
    rep.suite = "construct.h_conditions:" + A.name();
    const FieldSpec f = A.field();
    const auto& win = A.alg->window;

    // (i) eps extends to h: eps(h·a) = eps(h)·eps(a) for one consistent eps(h)
    std::optional<Scalar> eps_h;
    for (const auto& k : win) {
        Scalar ea = A.counit_key(k);
        if (ea.is_zero()) {
            // multiplicativity of the extension forces eps(h·a) = 0 here
            Scalar eha = A.counit(h.left(A.unit_elem(k)));
            if (!eha.is_zero())
                rep.fail_with({"(i) eps extension consistent", {k.str()}, eha.str(), "0"});
            continue;
        }
        Scalar cand = A.counit(h.left(A.unit_elem(k))) / ea;
        if (!eps_h) {
            eps_h = cand;
        } else if (!(*eps_h == cand)) {
            rep.fail_with({"(i) eps extension consistent", {k.str()}, cand.str(), eps_h->str()});
            break;
        }
    }
    if (!eps_h) {
        rep.status = CheckStatus::inconclusive;
        rep.note("no window element with nonzero counit");
        return rep;
    }
    rep.note("eps(h) = " + eps_h->str());
    if (rep.status == CheckStatus::pass && !eps_h->is_one())
        rep.fail_with({"(i) eps(h) = 1", {}, eps_h->str(), Scalar::one(f).str()});

    Multiplier dh;
    try {
        dh = extend_delta(A, h);
    } catch (const UnsupportedStructure& e) {
        rep.status = CheckStatus::inconclusive;
        rep.note(std::string("Delta extension unavailable: ") + e.what());
        return rep;
    }

    auto tw = make_tuples({&win, &win}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    bool cond2 = true, cond3 = true;
    for (const auto& t : tw.tuples) {
        Element a = A.unit_elem(t[0]), b = A.unit_elem(t[1]);
        Element hahb = tensor_product(h.left(a), h.left(b));
        Element ahbh = tensor_product(h.right(a), h.right(b));
        // (ii) h⊗h = (h⊗1)Δ(h), both actions
        Element lhs2 = map_legs(dh.left(tensor_product(a, b)), 0, 1, 1,
                                [&](std::span<const BasisKey> ks) {
                                    return h.left(A.unit_elem(ks[0]));
                                });
        Element rhs2 = dh.right(tensor_product(h.right(a), b));
        if (cond2 && (lhs2 != hahb || rhs2 != ahbh)) {
            cond2 = false;
            rep.fail_with({"(ii) h⊗h = (h⊗1)Delta(h)",
                           {t[0].str(), t[1].str()},
                           lhs2 != hahb ? lhs2.str() : rhs2.str(),
                           lhs2 != hahb ? hahb.str() : ahbh.str()});
        }
        // (iii) h⊗h = Δ(h)(h⊗1), both actions
        Element lhs3 = dh.left(tensor_product(h.left(a), b));
        Element rhs3 = map_legs(dh.right(tensor_product(a, b)), 0, 1, 1,
                                [&](std::span<const BasisKey> ks) {
                                    return h.right(A.unit_elem(ks[0]));
                                });
        if (cond3 && (lhs3 != hahb || rhs3 != ahbh)) {
            cond3 = false;
            rep.fail_with({"(iii) h⊗h = Delta(h)(h⊗1)",
                           {t[0].str(), t[1].str()},
                           lhs3 != hahb ? lhs3.str() : rhs3.str(),
                           lhs3 != hahb ? hahb.str() : ahbh.str()});
        }
        if (!cond2 && !cond3) break;
    }

    // derived: h² = h
    bool idem = true;
    for (const auto& k : win) {
        Element a = A.unit_elem(k);
        if (h.left(h.left(a)) != h.left(a) || h.right(h.right(a)) != h.right(a)) {
            idem = false;
            break;
        }
    }
    rep.note(std::string("h^2 = h on window: ") + (idem ? "yes" : "no"));
    return rep;
}

IdempotentE make_h_idempotent(const Multiplier& h, const MHopfPtr& A, const MHopfPtr& Y) {
    IdempotentE E;
    FieldSpec f = A->field();
    E.act = on_leg(h, 0, f);
    Multiplier id = Multiplier::identity();
    E.cover_left = [h, id](const Element& b) {
        return std::vector<IdempotentE::CoveredTerm>{{h.right(b), id}};
    };
    E.cover_right = [h, id](const Element& b) {
        return std::vector<IdempotentE::CoveredTerm>{{h.left(b), id}};
    };
    require_idempotent(E, *A->alg, *Y->alg);
    return E;
}

Element build_z_element(ZFamily family, const Scalar& alpha, const MHopfPtr& H) {
    const FieldSpec f = H->field();
    Scalar one = Scalar::one(f);
    if (family == ZFamily::sweedler) {
        Scalar half = (one + one).inverse();
        Element z;
        z.add(BasisKey("1"), half);
        z.add(BasisKey("g"), half);
        z.add(BasisKey("g*x"), alpha);
        return z;
    }
    // taft: (1+g+g^2)/3 + ((q-1)α·gx + (q²-1)α·g²x - 3qα²·gx²)/3
    Scalar three = Scalar::from_int(f, 3);
    Scalar third = three.inverse();
    // recover q from the algebra: q = coefficient of gx in x·g
    Element xg = H->alg->multiply(H->alg->basis_element(BasisKey("x")),
                                  H->alg->basis_element(BasisKey("g")));
    Scalar q = xg.coeff(BasisKey("g*x"), f);
    Element z;
    z.add(BasisKey("1"), third);
    z.add(BasisKey("g"), third);
    z.add(BasisKey("g^2"), third);
    z.add(BasisKey("g*x"), third * (q - one) * alpha);
    z.add(BasisKey("g^2*x"), third * (q * q - one) * alpha);
    z.add(BasisKey("g*x^2"), -q * alpha * alpha);
    return z;
}

ProjectionSpec make_key_projection(const MHopfPtr& Z, const std::vector<BasisKey>& Y_basis) {
    ProjectionSpec ps;
    ps.Z = Z;
    ps.Y_basis = Y_basis;
    FieldSpec f = Z->field();
    std::map<BasisKey, bool> in;
    for (const auto& k : Y_basis) in[k] = true;
    ps.pi.rule = [in, f](const BasisKey& k) {
        return in.count(k) ? Element(k, Scalar::one(f)) : Element::zero();
    };
    return ps;
}

CheckReport check_projection(const ProjectionSpec& ps, const Sampling& s) {
    CheckReport rep;
    rep.suite = "construct.projection:" + ps.name;
    const auto& wz = ps.Z->alg->window;
    const FieldSpec f = ps.Z->field();

    for (const auto& z : wz) {
        Element pz = ps.pi(ps.Z->unit_elem(z));
        if (ps.pi(pz) != pz) {
            rep.fail_with({"idempotent", {z.str()}, ps.pi(pz).str(), pz.str()});
            break;
        }
        for (const auto& [k, c] : pz.terms()) {
            bool ok = false;
            for (const auto& y : ps.Y_basis) ok = ok || y == k;
            if (!ok) {
                rep.fail_with({"image in Y", {z.str()}, pz.str(), "span(Y)"});
                break;
            }
        }
    }
    for (const auto& y : ps.Y_basis) {
        Element ye = ps.Z->unit_elem(y);
        if (ps.pi(ye) != ye) {
            rep.fail_with({"fixes Y", {y.str()}, ps.pi(ye).str(), ye.str()});
            break;
        }
    }
    auto tw = make_tuples({&wz, &wz}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& t : tw.tuples) {
        Element a = ps.Z->unit_elem(t[0]), b = ps.Z->unit_elem(t[1]);
        Element lhs = ps.pi(ps.Z->alg->multiply(a, b));
        Element rhs = ps.Z->alg->multiply(ps.pi(a), ps.pi(b));
        if (lhs != rhs) {
            rep.fail_with({"multiplicative", {t[0].str(), t[1].str()}, lhs.str(), rhs.str()});
            break;
        }
    }
    // comultiplicative in both covered forms
    for (const auto& z : wz) {
        bool fail = false;
        for (const auto& y : ps.Y_basis) {
            Element pz = ps.pi(ps.Z->unit_elem(z));
            Element ye = ps.Z->unit_elem(y);
            Element lhs1 = ps.Z->dR(pz, ye);
            Element rhs1 = map_legs(
                map_legs(ps.Z->dR(ps.Z->unit_elem(z), ye), 0, 1, 1,
                         [&](std::span<const BasisKey> ks) { return ps.pi.rule(ks[0]); }),
                1, 1, 1, [&](std::span<const BasisKey> ks) { return ps.pi.rule(ks[0]); });
            if (lhs1 != rhs1) {
                rep.fail_with({"comultiplicative (1⊗y)", {z.str(), y.str()}, lhs1.str(),
                               rhs1.str()});
                fail = true;
                break;
            }
            Element lhs2 = ps.Z->dRp(pz, ye);
            Element rhs2 = map_legs(
                map_legs(ps.Z->dRp(ps.Z->unit_elem(z), ye), 0, 1, 1,
                         [&](std::span<const BasisKey> ks) { return ps.pi.rule(ks[0]); }),
                1, 1, 1, [&](std::span<const BasisKey> ks) { return ps.pi.rule(ks[0]); });
            if (lhs2 != rhs2) {
                rep.fail_with({"comultiplicative (y⊗1)", {z.str(), y.str()}, lhs2.str(),
                               rhs2.str()});
                fail = true;
                break;
            }
        }
        if (fail) break;
    }
    return rep;
}

MHopfPtr restrict_mhopf(const MHopfPtr& Z, const std::vector<BasisKey>& Y_basis,
                        const std::string& name) {
    auto alg = std::make_shared<Algebra>();
    alg->name = name;
    alg->field = Z->field();
    alg->backend = Algebra::Backend::dense;
    alg->window = Y_basis;
    alg->commutative = Z->alg->commutative;
    AlgebraPtr Zalg = Z->alg;
    std::map<BasisKey, bool> in;
    for (const auto& k : Y_basis) in[k] = true;
    alg->key_product = [Zalg, in, name](const BasisKey& a, const BasisKey& b) {
        Element p = Zalg->key_product(a, b);
        for (const auto& [k, c] : p.terms())
            if (!in.count(k))
                throw UsageError(name + " is not closed under the product: " + a.str() + "·" +
                                 b.str() + " = " + p.str());
        return p;
    };
    auto h = std::make_shared<MHopf>();
    h->alg = AlgebraPtr(alg);
    h->comul = Z->comul; // the coproduct of Z restricted to the subalgebra
    h->counit_key = Z->counit_key;
    h->antipode_key = Z->antipode_key;
    h->regular_hint = Z->regular_hint;
    return h;
}

CoactionPtr build_induced_coaction(const CoactionPtr& cc_global, const ProjectionSpec& ps,
                                   const MHopfPtr& Y_sub, const std::string& name) {
    auto cc = std::make_shared<ComoduleCoalgebra>();
    cc->Y = Y_sub;
    cc->A = cc_global->A;
    cc->kind = CoactionKind::partial;
    cc->rho_is_homomorphism = cc_global->rho_is_homomorphism;
    cc->name = name;
    CoactionPtr base = cc_global;
    LinearMap pi = ps.pi;
    cc->coact.rR = [base, pi](const BasisKey& y, const BasisKey& a) {
        return map_legs(base->coact.rR(y, a), 1, 1, 1,
                        [&](std::span<const BasisKey> ks) { return pi.rule(ks[0]); });
    };
    cc->coact.rL = [base, pi](const BasisKey& y, const BasisKey& a) {
        return map_legs(base->coact.rL(y, a), 1, 1, 1,
                        [&](std::span<const BasisKey> ks) { return pi.rule(ks[0]); });
    };
    return cc;
}

CheckReport check_induction_hypotheses(const ComoduleCoalgebra& cc_global,
                                       const ProjectionSpec& ps, const Element& t,
                                       QuantifyOver domain, const Sampling& s) {
    CheckReport rep;
    rep.suite = "construct.induction:" + ps.name;
    const FieldSpec f = cc_global.A->field();
    if (!cc_global.Y->counit(t).is_one()) {
        rep.status = CheckStatus::precondition_failed;
        rep.note("eps_Y(t) != 1 for t = " + t.str());
        return rep;
    }
    rep.absorb(check_projection(ps, s));

    const std::vector<BasisKey>& dom =
        domain == QuantifyOver::Y ? ps.Y_basis : cc_global.Y->alg->window;
    rep.note(std::string("clauses (ii)/(iii) quantified over ") +
             (domain == QuantifyOver::Y ? "Y" : "Z"));
    const auto& wa = cc_global.A->alg->window;

    auto ipiT = [&](const Element& z, const Element& a) {
        return map_legs(cc_global.map_T(z, a), 1, 1, 1,
                        [&](std::span<const BasisKey> ks) { return ps.pi.rule(ks[0]); });
    };

    auto tw = make_tuples({&dom, &wa}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& tup : tw.tuples) {
        Element z = cc_global.Y->unit_elem(tup[0]);
        Element a = cc_global.A->unit_elem(tup[1]);
        Element lhs = ipiT(ps.pi(z), a);
        Element rhs = ipiT(z, a);
        if (lhs != rhs) {
            rep.fail_with({"(ii)", {tup[0].str(), tup[1].str()}, lhs.str(), rhs.str()});
            break;
        }
    }
    for (const auto& tup : tw.tuples) {
        Element z = cc_global.Y->unit_elem(tup[0]);
        Element a = cc_global.A->unit_elem(tup[1]);
        Element lhs = ipiT(ps.pi(z), a);
        // Δ_Z(z)(t⊗1) covers z_(1); eps_Y(pi(z_(1)t)) scales (ι⊗pi)T(z_(2)⊗a)
        Element rhs;
        Element zcov = cc_global.Y->dRp(z, t);
        for (const auto& [k, c] : zcov.terms()) {
            Scalar w = cc_global.Y->counit(ps.pi(cc_global.Y->unit_elem(k.leg(0))));
            if (w.is_zero()) continue;
            rhs.add(ipiT(cc_global.Y->unit_elem(k.leg(1)), a).scaled(c * w));
        }
        if (lhs != rhs) {
            rep.fail_with({"(iii)", {tup[0].str(), tup[1].str()}, lhs.str(), rhs.str()});
            break;
        }
    }
    return rep;
}

CoactionPtr build_group_coaction(const MHopfPtr& AG, const MHopfPtr& kN, const Group& G,
                                 const std::vector<BasisKey>& N, const std::string& name) {
    auto cc = std::make_shared<ComoduleCoalgebra>();
    cc->Y = kN;
    cc->A = AG;
    cc->kind = CoactionKind::global;
    cc->rho_is_homomorphism = true;
    cc->name = name;
    FieldSpec f = AG->field();
    std::map<BasisKey, bool> in;
    for (const auto& k : N) in[k] = true;
    Group g = G;
    auto rr = [g, in, f](const BasisKey& y, const BasisKey& a) {
        // rho(y)(delta_s⊗1) = [s in N]·delta_s ⊗ ys
        if (!in.count(a)) return Element::zero();
        return Element(tensor_key(a, g.mul(y, a)), Scalar::one(f));
    };
    cc->coact.rR = rr;
    cc->coact.rL = rr; // A_G is commutative
    return cc;
}

} // namespace covact
