#include "covact/coaction.hpp"

namespace covact {

Element ComoduleCoalgebra::map_T(const Element& y, const Element& a) const {
    return lift2(y, a, coact.rR);
}

Element ComoduleCoalgebra::map_Tbar(const Element& a, const Element& y) const {
    return lift2(y, a, coact.rL);
}

Element ComoduleCoalgebra::rho_times(const Element& y, const Element& t) const {
    // ρ(y)·(u⊗v) = [ρ(y)(u⊗1)]·(1⊗v)
    Element r;
    const FieldSpec f = A->field();
    for (const auto& [k, c] : t.terms()) {
        Element z = map_T(y, Element(k.leg(0), Scalar::one(f)));
        z = map_legs(z, 1, 1, 1, [&](std::span<const BasisKey> ks) {
            return Y->alg->multiply(Y->alg->basis_element(ks[0]), Y->alg->basis_element(k.leg(1)));
        });
        r.add(z.scaled(c));
    }
    return r;
}

Element ComoduleCoalgebra::times_rho(const Element& t, const Element& y) const {
    // (u⊗v)·ρ(y) = (1⊗v)·[(u⊗1)ρ(y)]
    Element r;
    const FieldSpec f = A->field();
    for (const auto& [k, c] : t.terms()) {
        Element z = map_Tbar(Element(k.leg(0), Scalar::one(f)), y);
        z = map_legs(z, 1, 1, 1, [&](std::span<const BasisKey> ks) {
            return Y->alg->multiply(Y->alg->basis_element(k.leg(1)), Y->alg->basis_element(ks[0]));
        });
        r.add(z.scaled(c));
    }
    return r;
}

Element ComoduleCoalgebra::window_unit_Y() const {
    std::vector<Element> targets;
    for (const auto& k : Y->alg->window) targets.push_back(Y->alg->basis_element(k));
    auto e = find_local_unit(*Y->alg, targets);
    if (!e)
        throw WindowExhausted("no local unit for the window of " + Y->name());
    return *e;
}

Element covered_z23(const ComoduleCoalgebra& cc, const Element& eY, const BasisKey& y,
                    const BasisKey& a, const BasisKey& yp, bool left_cover) {
    const FieldSpec f = cc.A->field();
    // Δ_Y(y)(e⊗1) covers the free first leg; the y' covering passes through
    // the Y-output leg of T.
    Element pairs = cc.Y->dRp(cc.Y->unit_elem(y), eY);
    Element out;
    for (const auto& [k, c] : pairs.terms()) {
        Element t = cc.map_T(cc.Y->unit_elem(k.leg(1)), cc.A->unit_elem(a));
        t = map_legs(t, 1, 1, 1, [&](std::span<const BasisKey> ks) {
            Element w = cc.Y->alg->basis_element(ks[0]);
            Element ype = cc.Y->alg->basis_element(yp);
            return left_cover ? cc.Y->alg->multiply(ype, w) : cc.Y->alg->multiply(w, ype);
        });
        // assemble y_(1) ⊗ (A-leg) ⊗ (Y-leg)
        for (const auto& [tk, tc] : t.terms())
            out.add(tensor_key(k.leg(0), tk.leg(0), tk.leg(1)), c * tc);
    }
    return out;
}

std::pair<std::size_t, std::size_t> t_matrix_rank(const ComoduleCoalgebra& cc) {
    const auto& wy = cc.Y->alg->window;
    const auto& wa = cc.A->alg->window;
    const FieldSpec f = cc.A->field();
    std::vector<Element> images;
    std::vector<std::pair<BasisKey, BasisKey>> domain;
    for (const auto& y : wy)
        for (const auto& a : wa) {
            domain.emplace_back(y, a);
            images.push_back(cc.coact.rR(y, a));
        }
    KeyIndex out = KeyIndex::from_support(images);
    Matrix m(std::max<std::size_t>(out.size(), 1), domain.size(), f);
    for (std::size_t j = 0; j < domain.size(); ++j) {
        auto v = out.vec(images[j], f);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
    }
    return {rank(m), domain.size()};
}

namespace {

struct Ctx {
    const ComoduleCoalgebra& cc;
    const FieldSpec f;
    const std::vector<BasisKey>& wy;
    const std::vector<BasisKey>& wa;
    explicit Ctx(const ComoduleCoalgebra& c)
        : cc(c), f(c.A->field()), wy(c.Y->alg->window), wa(c.A->alg->window) {}
    Element ye(const BasisKey& k) const { return cc.Y->unit_elem(k); }
    Element ae(const BasisKey& k) const { return cc.A->unit_elem(k); }
};

} // namespace

CheckReport check_global_comodule(const ComoduleCoalgebra& cc, const Sampling& s) {
    Ctx x(cc);
    CheckReport rep;
    rep.suite = "coaction.global:" + cc.name;

    // injectivity of ρ: stack rR(y, a_i) over all window a_i
    {
        std::vector<Element> images;
        for (const auto& y : x.wy) {
            Element stacked;
            for (std::size_t i = 0; i < x.wa.size(); ++i) {
                // shift each probe block into its own leg-0 namespace by
                // tagging with the probe index
                Element img = cc.coact.rR(y, x.wa[i]);
                for (const auto& [k, c] : img.terms())
                    stacked.add(tensor_key(BasisKey(static_cast<std::int64_t>(i)), k), c);
            }
            images.push_back(stacked);
        }
        KeyIndex idx = KeyIndex::from_support(images);
        Matrix m(std::max<std::size_t>(idx.size(), 1), images.size(), x.f);
        for (std::size_t j = 0; j < images.size(); ++j) {
            auto v = idx.vec(images[j], x.f);
            for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
        }
        auto kern = Rref(m).kernel_basis();
        if (!kern.empty()) {
            Element w = KeyIndex(x.wy).unvec(kern.front());
            rep.fail_with({"rho injective", {w.str()}, "rho(" + w.str() + ") = 0", "0"});
        }
    }

    const bool have_inverses = cc.A->t_inverses() != nullptr;
    if (!have_inverses) {
        rep.status = CheckStatus::inconclusive;
        rep.note("A lacks T inverses; covered coassociativity not evaluated");
    }

    auto tw = make_tuples({&x.wy, &x.wa, &x.wa}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& t : tw.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kb = t[2];
        Element y = x.ye(ky), a = x.ae(ka), b = x.ae(kb);

        // counit law (ε_A⊗ι)ρ(y) = y through both coverings
        Element cl = contract_leg(cc.map_T(y, a), 0, cc.A->counit_key);
        Element want = y.scaled(cc.A->counit(a));
        if (cl != want) {
            rep.fail_with({"(epsA⊗i)rho = id", {ky.str(), ka.str()}, cl.str(), want.str()});
            break;
        }
        Element cr = contract_leg(cc.map_Tbar(a, y), 0, cc.A->counit_key);
        if (cr != want) {
            rep.fail_with({"(epsA⊗i)rho = id (left)", {ky.str(), ka.str()}, cr.str(), want.str()});
            break;
        }

        if (!have_inverses) continue;

        // (ι⊗ρ)(ρ(y)(a⊗1))(1⊗b⊗1) = (Δ_A⊗ι)(ρ(y))(a⊗b⊗1)
        Element lhsR = map_legs(cc.map_T(y, a), 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_T(x.ye(ks[0]), b);
        });
        Element rhsR;
        Element dec = cc.A->apply_R1(tensor_product(a, b));
        for (const auto& [k, c] : dec.terms()) {
            Element inner = cc.map_T(y, x.ae(k.leg(0)));
            rhsR.add(map_legs(inner, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                         return cc.A->dR(x.ae(ks[0]), x.ae(k.leg(1)));
                     }).scaled(c));
        }
        if (lhsR != rhsR) {
            rep.fail_with({"covered coassociativity (right)",
                           {ky.str(), ka.str(), kb.str()},
                           lhsR.str(),
                           rhsR.str()});
            break;
        }

        // (1⊗b⊗1)(ι⊗ρ)((a⊗1)ρ(y)) = (a⊗b⊗1)(Δ_A⊗ι)(ρ(y))
        Element lhsL = map_legs(cc.map_Tbar(a, y), 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_Tbar(b, x.ye(ks[0]));
        });
        Element rhsL;
        Element dec2 = cc.A->apply_R2(tensor_product(a, b));
        for (const auto& [k, c] : dec2.terms()) {
            Element inner = cc.map_Tbar(x.ae(k.leg(1)), y);
            rhsL.add(map_legs(inner, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                         return cc.A->dL(x.ae(ks[0]), x.ae(k.leg(0)));
                     }).scaled(c));
        }
        if (lhsL != rhsL) {
            rep.fail_with({"covered coassociativity (left)",
                           {ky.str(), ka.str(), kb.str()},
                           lhsL.str(),
                           rhsL.str()});
            break;
        }
    }

    // comodule-coalgebra compatibility shares Def 3.2(iii); run it too
    {
        CheckReport sub = check_partial_axioms(cc, s);
        for (auto& w : sub.witnesses)
            if (w.clause == "(iii)" || w.clause == "(iii-left)" || w.clause == "(ii)")
                rep.fail_with(w);
    }
    return rep;
}

CheckReport check_partial_axioms(const ComoduleCoalgebra& cc, const Sampling& s) {
    Ctx x(cc);
    CheckReport rep;
    rep.suite = "coaction.partial:" + cc.name;
    Element eY = cc.window_unit_Y();
    rep.note("Delta_Y free leg covered by local unit " + eY.str());

    // (i) counit law
    {
        auto tw = make_tuples({&x.wy, &x.wa}, s);
        for (const auto& t : tw.tuples) {
            Element y = x.ye(t[0]), a = x.ae(t[1]);
            Element want = y.scaled(cc.A->counit(a));
            Element cl = contract_leg(cc.map_T(y, a), 0, cc.A->counit_key);
            if (cl != want) {
                rep.fail_with({"(i)", {t[0].str(), t[1].str()}, cl.str(), want.str()});
                break;
            }
            Element cr = contract_leg(cc.map_Tbar(a, y), 0, cc.A->counit_key);
            if (cr != want) {
                rep.fail_with({"(i)", {t[0].str(), t[1].str()}, cr.str(), want.str()});
                break;
            }
        }
    }

    auto tw = make_tuples({&x.wy, &x.wa, &x.wy}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;

    // (ii) the covered tensors close as finite elements of Y⊗A⊗Y — they are
    // computed, and their leg types are fixed by construction
    for (const auto& t : tw.tuples) {
        (void)covered_z23(cc, eY, t[0], t[1], t[2], false);
        (void)covered_z23(cc, eY, t[0], t[1], t[2], true);
    }

    // (iii): y^(-1)a ⊗ Δ_Y(y^(0))(1⊗y') = (T⊗ι)((ι⊗T)(Δ_Y(y)⊗a)(1⊗1⊗y'))
    for (const auto& t : tw.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kyp = t[2];
        Element lhs = map_legs(cc.map_T(x.ye(ky), x.ae(ka)), 1, 1, 2,
                               [&](std::span<const BasisKey> ks) {
                                   return cc.Y->dR(x.ye(ks[0]), x.ye(kyp));
                               });
        Element z = covered_z23(cc, eY, ky, ka, kyp, false);
        Element rhs = map_legs(z, 0, 2, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_T(x.ye(ks[0]), x.ae(ks[1]));
        });
        if (lhs != rhs) {
            rep.fail_with({"(iii)", {ky.str(), ka.str(), kyp.str()}, lhs.str(), rhs.str()});
            break;
        }
        // left-covered mirror
        Element lhsL = map_legs(cc.map_T(x.ye(ky), x.ae(ka)), 1, 1, 2,
                                [&](std::span<const BasisKey> ks) {
                                    return cc.Y->dLp(x.ye(ks[0]), x.ye(kyp));
                                });
        Element zL = covered_z23(cc, eY, ky, ka, kyp, true);
        Element rhsL = map_legs(zL, 0, 2, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_T(x.ye(ks[0]), x.ae(ks[1]));
        });
        if (lhsL != rhsL) {
            rep.fail_with({"(iii-left)", {ky.str(), ka.str(), kyp.str()}, lhsL.str(), rhsL.str()});
            break;
        }
    }

    // (iv): y^(-1)a_(1) ⊗ y^(0)(-1)a_(2)a' ⊗ y^(0)(0)y'
    //     = x^(-1)b_(1)·eps_Y(x^(0)) ⊗ b_(2)a' ⊗ w
    auto tw4 = make_tuples({&x.wy, &x.wa, &x.wa, &x.wy}, s);
    for (const auto& t : tw4.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kap = t[2], &kyp = t[3];
        // left side per the composition identity
        Element step1;
        Element da = cc.A->dR(x.ae(ka), x.ae(kap));
        for (const auto& [k, c] : da.terms()) {
            Element ty = cc.map_T(x.ye(ky), x.ae(k.leg(0)));
            step1.add(tensor_product(ty, x.ae(k.leg(1))).scaled(c));
        }
        step1 = ungroup_leg(step1, 0); // (A, Y, A)
        Element step2 = map_legs(step1, 1, 2, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_T(x.ye(ks[0]), x.ae(ks[1]));
        }); // (A, A, Y)
        Element lhs = map_legs(step2, 2, 1, 1, [&](std::span<const BasisKey> ks) {
            return cc.Y->alg->multiply(x.ye(ks[0]), x.ye(kyp));
        });
        // right side from the item-(ii) tensor x⊗b⊗w
        Element z = covered_z23(cc, eY, ky, ka, kyp, false);
        Element rhs = map_legs(z, 0, 2, 2, [&](std::span<const BasisKey> ks) {
            const BasisKey& xk = ks[0];
            const BasisKey& bk = ks[1];
            Element out;
            Element db = cc.A->dR(x.ae(bk), x.ae(kap));
            for (const auto& [dk, dc] : db.terms()) {
                Element contracted =
                    contract_leg(cc.map_T(x.ye(xk), x.ae(dk.leg(0))), 1, cc.Y->counit_key);
                out.add(tensor_product(contracted, x.ae(dk.leg(1))).scaled(dc));
            }
            return ungroup_leg(ungroup_leg(out, 1), 0);
        });
        if (lhs != rhs) {
            rep.fail_with(
                {"(iv)", {ky.str(), ka.str(), kap.str(), kyp.str()}, lhs.str(), rhs.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_symmetric_axioms(const ComoduleCoalgebra& cc, const Sampling& s) {
    Ctx x(cc);
    CheckReport rep;
    rep.suite = "coaction.symmetric:" + cc.name;
    Element eY = cc.window_unit_Y();
    rep.note("Delta_Y free leg covered by local unit " + eY.str());

    auto tw = make_tuples({&x.wy, &x.wa, &x.wy}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;

    // (v): (T̄⊗ι)(a⊗Δ_Y(y))(1⊗y'⊗1) closes in A⊗Y⊗Y
    for (const auto& t : tw.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kyp = t[2];
        Element pairs = cc.Y->dRp(x.ye(ky), eY);
        for (const auto& [k, c] : pairs.terms()) {
            Element tb = cc.map_Tbar(x.ae(ka), x.ye(k.leg(0)));
            tb = map_legs(tb, 1, 1, 1, [&](std::span<const BasisKey> ks) {
                return cc.Y->alg->multiply(x.ye(ks[0]), x.ye(kyp));
            });
            (void)tb;
        }
    }

    // (vi), both sides covered by b on the first leg
    auto tw3 = make_tuples({&x.wy, &x.wa, &x.wa}, s);
    for (const auto& t : tw3.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kb = t[2];
        // LHS: a_(1)y^(-1) ⊗ a_(2)y^(0)(-1) ⊗ y^(0)(0), covered (b⊗1⊗1)
        Element lhs = map_legs(cc.A->dL(x.ae(ka), x.ae(kb)), 0, 2, 3,
                               [&](std::span<const BasisKey> ks) {
                                   Element inner = cc.map_Tbar(x.ae(ks[0]), x.ye(ky));
                                   return map_legs(inner, 1, 1, 2,
                                                   [&](std::span<const BasisKey> ks2) {
                                                       return cc.map_Tbar(x.ae(ks[1]),
                                                                          x.ye(ks2[0]));
                                                   });
                               });
        // RHS: (ba y_(1)^(-1))_(1) y_(2)^(-1) eps(y_(2)^(0)) ⊗ (..)_(2) ⊗ y_(1)^(0)
        Element rhs;
        Element dyp = cc.Y->dRp(x.ye(ky), eY);
        for (const auto& [k, c] : dyp.terms()) {
            Element t1 = cc.map_Tbar(x.ae(ka), x.ye(k.leg(0)));        // u⊗v
            Element t2 = map_legs(t1, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                return cc.A->dL(x.ae(ks[0]), x.ae(kb));                // p'⊗q'
            });                                                        // (A,A,Y)
            Element t3 = map_legs(t2, 0, 1, 1, [&](std::span<const BasisKey> ks) {
                return contract_leg(cc.map_Tbar(x.ae(ks[0]), x.ye(k.leg(1))), 1,
                                    cc.Y->counit_key);
            });
            rhs.add(t3.scaled(c));
        }
        if (lhs != rhs) {
            rep.fail_with({"(vi)", {ky.str(), ka.str(), kb.str()}, lhs.str(), rhs.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_globality(const ComoduleCoalgebra& cc, const Sampling& s) {
    Ctx x(cc);
    CheckReport rep;
    rep.suite = "coaction.globality:" + cc.name;
    rep.note("prerequisite: partial and symmetric suites (run separately)");
    auto tw = make_tuples({&x.wy, &x.wa}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    for (const auto& t : tw.tuples) {
        Element y = x.ye(t[0]), a = x.ae(t[1]);
        Element want = a.scaled(cc.Y->counit(y));
        Element lhs = contract_leg(cc.map_T(y, a), 1, cc.Y->counit_key);
        if (lhs != want) {
            rep.fail_with(
                {"(i⊗epsY)rho(y)·a = epsY(y)a", {t[0].str(), t[1].str()}, lhs.str(), want.str()});
            break;
        }
        Element rhs = contract_leg(cc.map_Tbar(a, y), 1, cc.Y->counit_key);
        if (rhs != want) {
            rep.fail_with(
                {"a·(i⊗epsY)rho(y) = epsY(y)a", {t[0].str(), t[1].str()}, rhs.str(), want.str()});
            break;
        }
    }

    // Cross-check: the flipped-coassociativity equivalence. Both statements
    // are evaluated on the window and must agree with each other.
    if (cc.A->t_inverses()) {
        bool lemma_holds = true, coassoc_holds = true;
        auto tw3 = make_tuples({&x.wy, &x.wa, &x.wa}, s);
        for (const auto& t : tw3.tuples) {
            const BasisKey &ky = t[0], &ka = t[1], &kb = t[2];
            // lemma form: LHS of axiom (vi) vs (Δ_A⊗ι)T̄ covered by b
            Element lhs = map_legs(cc.A->dL(x.ae(ka), x.ae(kb)), 0, 2, 3,
                                   [&](std::span<const BasisKey> ks) {
                                       Element inner = cc.map_Tbar(x.ae(ks[0]), x.ye(ky));
                                       return map_legs(inner, 1, 1, 2,
                                                       [&](std::span<const BasisKey> ks2) {
                                                           return cc.map_Tbar(x.ae(ks[1]),
                                                                              x.ye(ks2[0]));
                                                       });
                                   });
            Element rhs = map_legs(cc.map_Tbar(x.ae(ka), x.ye(ky)), 0, 1, 2,
                                   [&](std::span<const BasisKey> ks) {
                                       return cc.A->dL(x.ae(ks[0]), x.ae(kb));
                                   });
            if (lhs != rhs) lemma_holds = false;

            Element clhs = map_legs(cc.map_T(x.ye(ky), x.ae(ka)), 1, 1, 2,
                                    [&](std::span<const BasisKey> ks) {
                                        return cc.map_T(x.ye(ks[0]), x.ae(kb));
                                    });
            Element crhs;
            Element dec = cc.A->apply_R1(tensor_product(x.ae(ka), x.ae(kb)));
            for (const auto& [k, c] : dec.terms()) {
                Element inner = cc.map_T(x.ye(ky), x.ae(k.leg(0)));
                crhs.add(map_legs(inner, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                             return cc.A->dR(x.ae(ks[0]), x.ae(k.leg(1)));
                         }).scaled(c));
            }
            if (clhs != crhs) coassoc_holds = false;
            if (!lemma_holds && !coassoc_holds) break;
        }
        rep.note(std::string("flipped-coassociativity form: ") +
                 (lemma_holds ? "holds" : "fails"));
        rep.note(std::string("coassociativity form: ") + (coassoc_holds ? "holds" : "fails"));
        if (lemma_holds != coassoc_holds)
            rep.fail_with({"equivalence cross-check",
                           {},
                           lemma_holds ? "flipped form holds" : "flipped form fails",
                           coassoc_holds ? "coassociativity holds" : "coassociativity fails"});
    } else {
        rep.note("equivalence cross-check skipped: A lacks T inverses");
    }
    return rep;
}

CheckReport check_comodule_algebra(const PartialComoduleAlgebra& pca, const Sampling& s) {
    const ComoduleCoalgebra& cc = *pca.cc;
    Ctx x(cc);
    CheckReport rep;
    rep.suite = "coaction.comodule_algebra:" + cc.name;

    // ρ multiplicative
    {
        auto tw = make_tuples({&x.wy, &x.wy, &x.wa}, s);
        rep.window = tw.description;
        rep.seed = tw.seed;
        for (const auto& t : tw.tuples) {
            Element yy = cc.Y->alg->multiply(x.ye(t[0]), x.ye(t[1]));
            Element lhs = cc.map_T(yy, x.ae(t[2]));
            Element rhs = cc.rho_times(x.ye(t[0]), cc.map_T(x.ye(t[1]), x.ae(t[2])));
            if (lhs != rhs) {
                rep.fail_with({"rho homomorphism",
                               {t[0].str(), t[1].str(), t[2].str()},
                               lhs.str(),
                               rhs.str()});
                break;
            }
        }
    }

    // (i) span inclusions against the E-images
    {
        std::vector<Element> left_images, right_images, t_images, tbar_images;
        for (const auto& ka : x.wa)
            for (const auto& ky : x.wy) {
                Element pure(tensor_key(ka, ky), Scalar::one(x.f));
                left_images.push_back(pca.E.act.left(pure));
                right_images.push_back(pca.E.act.right(pure));
            }
        for (const auto& ky : x.wy)
            for (const auto& ka : x.wa) {
                t_images.push_back(cc.coact.rR(ky, ka));
                tbar_images.push_back(cc.coact.rL(ky, ka));
            }
        std::vector<Element> all;
        for (auto* v : {&left_images, &right_images, &t_images, &tbar_images})
            for (const auto& e : *v) all.push_back(e);
        KeyIndex idx = KeyIndex::from_support(all);
        auto vecs = [&](const std::vector<Element>& es) {
            std::vector<std::vector<Scalar>> r;
            for (const auto& e : es) r.push_back(idx.vec(e, x.f));
            return r;
        };
        auto lspan = vecs(left_images);
        auto rspan = vecs(right_images);
        std::size_t i = 0;
        for (const auto& ky : x.wy) {
            for (const auto& ka : x.wa) {
                if (!in_span(idx.vec(t_images[i], x.f), lspan, x.f)) {
                    rep.fail_with({"(i) rho(Y)(A⊗1) ⊆ E(A⊗Y)",
                                   {ky.str(), ka.str()},
                                   t_images[i].str(),
                                   "outside span of E(A⊗Y)"});
                    break;
                }
                if (!in_span(idx.vec(tbar_images[i], x.f), rspan, x.f)) {
                    rep.fail_with({"(i) (A⊗1)rho(Y) ⊆ (A⊗Y)E",
                                   {ky.str(), ka.str()},
                                   tbar_images[i].str(),
                                   "outside span of (A⊗Y)E"});
                    break;
                }
                ++i;
            }
            if (i < x.wa.size() * (1 + (&ky - &x.wy[0])) && rep.status == CheckStatus::fail)
                break;
        }
    }

    const bool have_inverses = cc.A->t_inverses() != nullptr;
    if (!have_inverses) {
        rep.status = CheckStatus::inconclusive;
        rep.note("A lacks T inverses; clauses (ii)/(iii) skipped");
        return rep;
    }

    // (ii)/(iii) with both coverings, plus absorption Eρ = ρ = ρE
    auto tw3 = make_tuples({&x.wy, &x.wa, &x.wa}, s);
    for (const auto& t : tw3.tuples) {
        const BasisKey &ky = t[0], &ka = t[1], &kb = t[2];
        Element y = x.ye(ky), a = x.ae(ka), b = x.ae(kb);

        auto rhsR_at = [&](const Element& a1, const Element& b1) {
            // (Δ_A⊗ι)(ρ(y))(a1⊗b1⊗1)
            Element out;
            Element dec = cc.A->apply_R1(tensor_product(a1, b1));
            for (const auto& [k, c] : dec.terms()) {
                Element inner = cc.map_T(y, x.ae(k.leg(0)));
                out.add(map_legs(inner, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                            return cc.A->dR(x.ae(ks[0]), x.ae(k.leg(1)));
                        }).scaled(c));
            }
            return out;
        };
        auto rhsL_at = [&](const Element& a1, const Element& b1) {
            // (a1⊗b1⊗1)(Δ_A⊗ι)(ρ(y))
            Element out;
            Element dec = cc.A->apply_R2(tensor_product(a1, b1));
            for (const auto& [k, c] : dec.terms()) {
                Element inner = cc.map_Tbar(x.ae(k.leg(1)), y);
                out.add(map_legs(inner, 0, 1, 2, [&](std::span<const BasisKey> ks) {
                            return cc.A->dL(x.ae(ks[0]), x.ae(k.leg(0)));
                        }).scaled(c));
            }
            return out;
        };

        Element lhsR = map_legs(cc.map_T(y, a), 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_T(x.ye(ks[0]), b);
        });
        Element lhsL = map_legs(cc.map_Tbar(a, y), 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return cc.map_Tbar(b, x.ye(ks[0]));
        });

        // (ii) right: lhsR = (1⊗E)[(Δ⊗ι)ρ(y)(a⊗b⊗1)]
        Element r2 = map_legs(rhsR_at(a, b), 1, 2, 2, [&](std::span<const BasisKey> ks) {
            return pca.E.act.left(Element(tensor_key(ks[0], ks[1]), Scalar::one(x.f)));
        });
        if (lhsR != r2) {
            rep.fail_with({"(ii)", {ky.str(), ka.str(), kb.str()}, lhsR.str(), r2.str()});
            break;
        }
        // (ii) left: lhsL = Σ_j μ_j-on-leg3-left of (a⊗c_j⊗1)(Δ⊗ι)ρ(y)
        Element r2l;
        for (const auto& [cj, mu] : pca.E.cover_left(b)) {
            Element base = rhsL_at(a, cj);
            r2l.add(on_leg(mu, 2, x.f).left(base));
        }
        if (lhsL != r2l) {
            rep.fail_with({"(ii-left)", {ky.str(), ka.str(), kb.str()}, lhsL.str(), r2l.str()});
            break;
        }

        if (cc.kind != CoactionKind::partial) {
            // (iii) right: lhsR = Σ_j [(Δ⊗ι)ρ(y)(a⊗c_j⊗1)]·μ_j-on-leg3
            Element r3;
            for (const auto& [cj, mu] : pca.E.cover_right(b)) {
                Element base = rhsR_at(a, cj);
                r3.add(on_leg(mu, 2, x.f).right(base));
            }
            if (lhsR != r3) {
                rep.fail_with({"(iii)", {ky.str(), ka.str(), kb.str()}, lhsR.str(), r3.str()});
                break;
            }
            // (iii) left: lhsL = [(a⊗b⊗1)(Δ⊗ι)ρ(y)]·(1⊗E)
            Element r3l = map_legs(rhsL_at(a, b), 1, 2, 2, [&](std::span<const BasisKey> ks) {
                return pca.E.act.right(Element(tensor_key(ks[0], ks[1]), Scalar::one(x.f)));
            });
            if (lhsL != r3l) {
                rep.fail_with({"(iii-left)", {ky.str(), ka.str(), kb.str()}, lhsL.str(),
                               r3l.str()});
                break;
            }
        }

        // absorption Eρ(y) = ρ(y) and ρ(y)E = ρ(y)
        Element tR = cc.map_T(y, a);
        if (pca.E.act.left(tR) != tR) {
            rep.fail_with({"E·rho = rho", {ky.str(), ka.str()}, pca.E.act.left(tR).str(),
                           tR.str()});
            break;
        }
        Element tL = cc.map_Tbar(a, y);
        if (pca.E.act.right(tL) != tL) {
            rep.fail_with({"rho·E = rho", {ky.str(), ka.str()}, pca.E.act.right(tL).str(),
                           tL.str()});
            break;
        }
    }
    return rep;
}

std::vector<CheckReport> check_bialgebra(const PartialComoduleAlgebra& pca, const Sampling& s) {
    std::vector<CheckReport> reps;
    reps.push_back(check_partial_axioms(*pca.cc, s));
    if (pca.cc->kind != CoactionKind::partial)
        reps.push_back(check_symmetric_axioms(*pca.cc, s));
    reps.push_back(check_comodule_algebra(pca, s));
    CheckReport combined;
    combined.suite = "coaction.bialgebra:" + pca.cc->name;
    for (const auto& r : reps) combined.absorb(r);
    combined.witnesses.clear();
    combined.note(pca.cc->kind == CoactionKind::symmetric_partial
                      ? "symmetric partial comodule bialgebra claim"
                      : "partial comodule bialgebra claim");
    reps.push_back(combined);
    return reps;
}

} // namespace covact
