#include "covact/smash.hpp"

namespace covact {

namespace {
Element pair_elem(const BasisKey& k, const FieldSpec& f) {
    return Element(k, Scalar::one(f));
}

// flat (l0,l1,l2,l3) -> ((l0,l1),(l2,l3))
Element pair_up(const Element& flat4) {
    return group_legs(flat4, {{0, 1}, {2, 3}});
}
} // namespace

Scalar Smash::eps_bar(const Element& x) const {
    Scalar acc = Scalar::zero(field());
    for (const auto& [k, c] : x.terms())
        acc = acc + cc->Y->counit_key(k.leg(0)) * cc->A->counit_key(k.leg(1)) * c;
    return acc;
}

Element Smash::tbar1(const Element& x, const Element& w) const {
    const FieldSpec f = field();
    Element out;
    for (const auto& [xk, xc] : x.terms())
        for (const auto& [wk, wc] : w.terms()) {
            // Δ_A(a)(1⊗a'') pairs, then the item-(ii) tensor in legs 1-3
            Element da = cc->A->dR(cc->A->unit_elem(xk.leg(1)), cc->A->unit_elem(wk.leg(1)));
            for (const auto& [dk, dc] : da.terms()) {
                Element z = covered_z23(*cc, eY, xk.leg(0), dk.leg(0), wk.leg(0), false);
                for (const auto& [zk, zc] : z.terms())
                    out.add(BasisKey(BasisKey::Tuple{
                                BasisKey(BasisKey::Tuple{zk.leg(0), zk.leg(1)}),
                                BasisKey(BasisKey::Tuple{zk.leg(2), dk.leg(1)})}),
                            xc * wc * dc * zc);
            }
        }
    return out;
}

Element Smash::tbar2(const Element& w, const Element& x) const {
    const FieldSpec f = field();
    Element out;
    for (const auto& [xk, xc] : x.terms())
        for (const auto& [wk, wc] : w.terms()) {
            // y'y_(1) ⊗ a'y_(2)^(-1)a_(1) ⊗ y_(2)^(0) ⊗ a_(2)
            Element dy = cc->Y->dL(cc->Y->unit_elem(xk.leg(0)), cc->Y->unit_elem(wk.leg(0)));
            for (const auto& [yk, yc] : dy.terms()) {
                Element tb = cc->map_Tbar(cc->A->unit_elem(wk.leg(1)),
                                          cc->Y->unit_elem(yk.leg(1)));
                for (const auto& [tk, tc] : tb.terms()) {
                    Element da = cc->A->dL(cc->A->unit_elem(xk.leg(1)),
                                           cc->A->unit_elem(tk.leg(0)));
                    for (const auto& [dk, dc] : da.terms())
                        out.add(BasisKey(BasisKey::Tuple{
                                    BasisKey(BasisKey::Tuple{yk.leg(0), dk.leg(0)}),
                                    BasisKey(BasisKey::Tuple{tk.leg(1), dk.leg(1)})}),
                                xc * wc * yc * tc * dc);
                }
            }
        }
    return out;
}

Element Smash::delta_bar_right(const Element& x, const Element& v) const {
    const FieldSpec f = field();
    Element out;
    for (const auto& [vk, vc] : v.terms()) {
        Element tt = tbar1(x, pair_elem(vk.leg(1), f));
        tt = map_legs(tt, 0, 1, 1, [&](std::span<const BasisKey> ks) {
            return YA->multiply(YA->basis_element(ks[0]), YA->basis_element(vk.leg(0)));
        });
        out.add(tt.scaled(vc));
    }
    return out;
}

Element Smash::delta_bar_left(const Element& v, const Element& x) const {
    const FieldSpec f = field();
    Element out;
    for (const auto& [vk, vc] : v.terms()) {
        Element tt = tbar2(pair_elem(vk.leg(0), f), x);
        tt = map_legs(tt, 1, 1, 1, [&](std::span<const BasisKey> ks) {
            return YA->multiply(YA->basis_element(vk.leg(1)), YA->basis_element(ks[0]));
        });
        out.add(tt.scaled(vc));
    }
    return out;
}

Element Smash::delta_bar_cov_first(const Element& x, const Element& u) const {
    // Δ̄(y⊗a)((y'⊗a')⊗1²) = y_(1)y' ⊗ y_(2)^(-1)a_(1)a' ⊗ y_(2)^(0) ⊗ a_(2)
    Element out;
    for (const auto& [xk, xc] : x.terms())
        for (const auto& [uk, uc] : u.terms()) {
            Element dy = cc->Y->dRp(cc->Y->unit_elem(xk.leg(0)), cc->Y->unit_elem(uk.leg(0)));
            Element da = cc->A->dRp(cc->A->unit_elem(xk.leg(1)), cc->A->unit_elem(uk.leg(1)));
            for (const auto& [yk, yc] : dy.terms())
                for (const auto& [ak, ac] : da.terms()) {
                    Element t = cc->map_T(cc->Y->unit_elem(yk.leg(1)),
                                          cc->A->unit_elem(ak.leg(0)));
                    for (const auto& [tk, tc] : t.terms())
                        out.add(BasisKey(BasisKey::Tuple{
                                    BasisKey(BasisKey::Tuple{yk.leg(0), tk.leg(0)}),
                                    BasisKey(BasisKey::Tuple{tk.leg(1), ak.leg(1)})}),
                                xc * uc * yc * ac * tc);
                }
        }
    return out;
}

Element Smash::delta_bar_cov_second(const Element& u, const Element& x) const {
    // (1²⊗(y'⊗a'))Δ̄(y⊗a) = (1⊗1⊗y')(ι⊗T)(Δ_Y(y)⊗a_(1)) ⊗ a'a_(2)
    Element out;
    for (const auto& [xk, xc] : x.terms())
        for (const auto& [uk, uc] : u.terms()) {
            Element da = cc->A->dLp(cc->A->unit_elem(xk.leg(1)), cc->A->unit_elem(uk.leg(1)));
            for (const auto& [dk, dc] : da.terms()) {
                Element z = covered_z23(*cc, eY, xk.leg(0), dk.leg(0), uk.leg(0), true);
                for (const auto& [zk, zc] : z.terms())
                    out.add(BasisKey(BasisKey::Tuple{
                                BasisKey(BasisKey::Tuple{zk.leg(0), zk.leg(1)}),
                                BasisKey(BasisKey::Tuple{zk.leg(2), dk.leg(1)})}),
                            xc * uc * dc * zc);
            }
        }
    return out;
}

Smash make_smash(const CoactionPtr& cc) {
    Smash ss;
    ss.cc = cc;
    ss.YA = tensor_algebra({cc->Y->alg, cc->A->alg},
                           cc->Y->name() + "⋊" + cc->A->name());
    ss.YAYA = tensor_algebra({ss.YA, ss.YA}, ss.YA->name + "⊗" + ss.YA->name);
    ss.eY = cc->window_unit_Y();
    return ss;
}

CheckReport check_compat_bar(const Smash& ss, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.compat:" + ss.name();
    const auto& wx = ss.YA->window;
    const auto& wp = ss.YAYA->window;
    Sampling eff = s;
    if (eff.cap == 0) eff.cap = 4096;
    auto tw = make_tuples({&wx, &wp, &wp}, eff);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = ss.field();
    for (const auto& t : tw.tuples) {
        Element x = pair_elem(t[0], f);
        Element u = pair_elem(t[1], f);
        Element v = pair_elem(t[2], f);
        Element lhs = ss.YAYA->multiply(u, ss.delta_bar_right(x, v));
        Element rhs = ss.YAYA->multiply(ss.delta_bar_left(u, x), v);
        if (lhs != rhs) {
            rep.fail_with({"u(Δ̄(x)v) = (uΔ̄(x))v",
                           {t[0].str(), t[1].str(), t[2].str()},
                           lhs.str(),
                           rhs.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_coassoc_bar(const Smash& ss, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.coassoc:" + ss.name();
    const auto& w = ss.YA->window;
    auto tw = make_tuples({&w, &w, &w}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = ss.field();
    for (const auto& t : tw.tuples) {
        Element u = pair_elem(t[0], f); // (y'⊗a')
        Element x = pair_elem(t[1], f); // (y⊗a)
        Element w2 = pair_elem(t[2], f); // (y''⊗a'')
        // (ι⊗Δ̄)((u⊗1²)Δ̄(x))(1⁴⊗w2)
        Element X = ss.tbar2(u, x);
        Element lhs = map_legs(X, 1, 1, 2, [&](std::span<const BasisKey> ks) {
            return ss.tbar1(pair_elem(ks[0], f), w2);
        });
        // (u⊗1⁴)(Δ̄⊗ι)(Δ̄(x)(1²⊗w2))
        Element Z = ss.tbar1(x, w2);
        Element rhs = map_legs(Z, 0, 1, 2, [&](std::span<const BasisKey> ks) {
            return ss.tbar2(u, pair_elem(ks[0], f));
        });
        if (lhs != rhs) {
            rep.fail_with({"covered coassociativity of Δ̄",
                           {t[0].str(), t[1].str(), t[2].str()},
                           lhs.str(),
                           rhs.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_hom_bar(const Smash& ss, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.hom:" + ss.name();
    // precondition: A commutative
    const auto& wa = ss.cc->A->alg->window;
    for (const auto& a : wa)
        for (const auto& b : wa) {
            Element ab = ss.cc->A->alg->multiply(ss.cc->A->unit_elem(a), ss.cc->A->unit_elem(b));
            Element ba = ss.cc->A->alg->multiply(ss.cc->A->unit_elem(b), ss.cc->A->unit_elem(a));
            if (ab != ba) {
                rep.status = CheckStatus::precondition_failed;
                rep.note("A is not commutative: " + a.str() + "·" + b.str() + " != " + b.str() +
                         "·" + a.str());
                return rep;
            }
        }
    const auto& w = ss.YA->window;
    auto tw = make_tuples({&w, &w, &w}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = ss.field();
    for (const auto& t : tw.tuples) {
        Element cov = pair_elem(t[0], f); // (y''⊗a'')
        Element x = pair_elem(t[1], f);
        Element xp = pair_elem(t[2], f);
        Element prod = ss.YA->multiply(x, xp);
        Element lhs = ss.tbar2(cov, prod);
        Element rhs = ss.delta_bar_left(ss.tbar2(cov, x), xp);
        if (lhs != rhs) {
            rep.fail_with({"(cov⊗1²)Δ̄(xx') = (cov⊗1²)Δ̄(x)Δ̄(x')",
                           {t[0].str(), t[1].str(), t[2].str()},
                           lhs.str(),
                           rhs.str()});
            break;
        }
        Element lhs2 = ss.tbar1(prod, cov);
        Element rhs2 = ss.delta_bar_right(x, ss.tbar1(xp, cov));
        if (lhs2 != rhs2) {
            rep.fail_with({"Δ̄(xx')(1²⊗cov) = Δ̄(x)Δ̄(x')(1²⊗cov)",
                           {t[0].str(), t[1].str(), t[2].str()},
                           lhs2.str(),
                           rhs2.str()});
            break;
        }
    }
    return rep;
}

CheckReport eps_bar_left(const Smash& ss, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.counit_left:" + ss.name();
    const auto& w = ss.YA->window;
    auto tw = make_tuples({&w, &w}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = ss.field();
    for (const auto& t : tw.tuples) {
        Element x = pair_elem(t[0], f), u = pair_elem(t[1], f);
        Element lhs = contract_leg(ss.tbar1(x, u), 0, [&](const BasisKey& k) {
            return ss.cc->Y->counit_key(k.leg(0)) * ss.cc->A->counit_key(k.leg(1));
        });
        Element want = ss.YA->multiply(x, u);
        if (lhs != want) {
            rep.fail_with({"(ε̄⊗ι)Δ̄ = ι", {t[0].str(), t[1].str()}, lhs.str(), want.str()});
            break;
        }
    }
    return rep;
}

CheckReport eps_bar_right(const Smash& ss, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.counit_right:" + ss.name();
    const auto& w = ss.YA->window;
    auto tw = make_tuples({&w, &w}, s);
    rep.window = tw.description;
    rep.seed = tw.seed;
    const FieldSpec f = ss.field();
    for (const auto& t : tw.tuples) {
        Element u = pair_elem(t[0], f), x = pair_elem(t[1], f);
        Element lhs = contract_leg(ss.tbar2(u, x), 1, [&](const BasisKey& k) {
            return ss.cc->Y->counit_key(k.leg(0)) * ss.cc->A->counit_key(k.leg(1));
        });
        Element want = ss.YA->multiply(u, x);
        if (lhs != want) {
            rep.fail_with({"(ι⊗ε̄)Δ̄ = ι", {t[0].str(), t[1].str()}, lhs.str(), want.str()});
            break;
        }
    }
    return rep;
}

CheckReport check_smash_T_bijective(const Smash& ss) {
    CheckReport rep;
    rep.suite = "smash.t_bijective:" + ss.name();
    const FieldSpec f = ss.field();
    KeyIndex pairs(ss.YAYA->window);
    const std::size_t n = pairs.size();
    auto rank_of = [&](auto fn) {
        Matrix m(n, n, f);
        for (std::size_t j = 0; j < n; ++j) {
            const BasisKey& k = pairs.keys()[j];
            Element col = fn(pair_elem(k.leg(0), f), pair_elem(k.leg(1), f));
            auto v = pairs.vec(col, f);
            for (std::size_t i = 0; i < n; ++i) m.at(i, j) = v[i];
        }
        return rank(m);
    };
    std::size_t r1 = rank_of([&](const Element& a, const Element& b) { return ss.tbar1(a, b); });
    std::size_t r2 = rank_of([&](const Element& a, const Element& b) { return ss.tbar2(a, b); });
    rep.note("T̄1 rank " + std::to_string(r1) + "/" + std::to_string(n) + ", T̄2 rank " +
             std::to_string(r2) + "/" + std::to_string(n));
    if (r1 != n || r2 != n)
        rep.fail_with({"T̄ maps bijective", {}, "rank " + std::to_string(std::min(r1, r2)),
                       "rank " + std::to_string(n)});
    return rep;
}

CbSpace build_Cb(const Smash& ss, const Element& b) {
    if (!ss.eps_bar(b).is_one())
        throw UsageError("build_Cb: ε̄(b) must be 1, got " + ss.eps_bar(b).str());
    const FieldSpec f = ss.field();
    std::vector<Element> spanning;
    for (const auto& x : ss.YA->window) {
        Element img = contract_leg(ss.tbar1(pair_elem(x, f), b), 1, [&](const BasisKey& k) {
            return ss.cc->Y->counit_key(k.leg(0)) * ss.cc->A->counit_key(k.leg(1));
        });
        spanning.push_back(img);
    }
    KeyIndex idx(ss.YA->window);
    Matrix m(spanning.size(), idx.size(), f);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        auto v = idx.vec(spanning[i], f);
        for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = v[j];
    }
    CbSpace cb;
    cb.b_witness = b;
    for (const auto& row : Rref(m).echelon_rows()) cb.basis.push_back(idx.unvec(row));
    return cb;
}

CheckReport check_Cb(const Smash& ss, const CbSpace& cb, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.cb:" + ss.name();
    rep.note("dim C_b = " + std::to_string(cb.basis.size()));
    const FieldSpec f = ss.field();
    KeyIndex idx(ss.YA->window);
    std::vector<std::vector<Scalar>> span_vecs;
    for (const auto& c : cb.basis) span_vecs.push_back(idx.vec(c, f));

    // (i) subalgebra
    for (const auto& c1 : cb.basis)
        for (const auto& c2 : cb.basis) {
            Element p = ss.YA->multiply(c1, c2);
            if (!in_span(idx.vec(p, f), span_vecs, f)) {
                rep.fail_with({"(i) closed under product", {c1.str(), c2.str()}, p.str(),
                               "span(C_b)"});
                break;
            }
        }

    // (ii) the four coverings of Δ̄ by C_b land in C_b⊗C_b
    std::vector<Element> cbcb;
    for (const auto& c1 : cb.basis)
        for (const auto& c2 : cb.basis) cbcb.push_back(tensor_product(c1, c2));
    KeyIndex idx2 = KeyIndex::from_support(cbcb);
    std::vector<std::vector<Scalar>> span2;
    for (const auto& e : cbcb) span2.push_back(idx2.vec(e, f));
    auto in_cbcb = [&](const Element& e, const char* clause, const Element& c1,
                       const Element& c2) {
        std::vector<Scalar> v;
        try {
            v = idx2.vec(e, f);
        } catch (const UsageError&) {
            rep.fail_with({clause, {c1.str(), c2.str()}, e.str(), "support outside C_b⊗C_b"});
            return;
        }
        if (!in_span(v, span2, f))
            rep.fail_with({clause, {c1.str(), c2.str()}, e.str(), "span(C_b⊗C_b)"});
    };
    for (const auto& c1 : cb.basis)
        for (const auto& c2 : cb.basis) {
            if (rep.status == CheckStatus::fail) break;
            in_cbcb(ss.tbar1(c1, c2), "(ii) Δ̄(C)(1²⊗C)", c1, c2);
            in_cbcb(ss.tbar2(c2, c1), "(ii) (C⊗1²)Δ̄(C)", c1, c2);
            in_cbcb(ss.delta_bar_cov_first(c1, c2), "(ii) Δ̄(C)(C⊗1²)", c1, c2);
            in_cbcb(ss.delta_bar_cov_second(c2, c1), "(ii) (1²⊗C)Δ̄(C)", c1, c2);
        }

    // (iii) two-sided counit on C_b
    auto ebar_key = [&](const BasisKey& k) {
        return ss.cc->Y->counit_key(k.leg(0)) * ss.cc->A->counit_key(k.leg(1));
    };
    for (const auto& c : cb.basis)
        for (const auto& u : cb.basis) {
            Element left = contract_leg(ss.tbar1(c, u), 0, ebar_key);
            Element wantl = ss.YA->multiply(c, u);
            if (left != wantl) {
                rep.fail_with({"(iii) left counit", {c.str(), u.str()}, left.str(), wantl.str()});
                break;
            }
            Element right = contract_leg(ss.tbar2(u, c), 1, ebar_key);
            Element wantr = ss.YA->multiply(u, c);
            if (right != wantr) {
                rep.fail_with(
                    {"(iii) right counit", {c.str(), u.str()}, right.str(), wantr.str()});
                break;
            }
        }
    return rep;
}

CheckReport check_iso_YhA(const Smash& ss, const Multiplier& h, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.iso_yha:" + ss.name();
    const FieldSpec f = ss.field();
    const MHopf& A = *ss.cc->A;
    const MHopf& Y = *ss.cc->Y;

    // hA as an echelonized subspace of A
    std::vector<Element> h_images;
    for (const auto& k : A.alg->window) h_images.push_back(h.left(A.unit_elem(k)));
    KeyIndex idxA(A.alg->window);
    Matrix m(h_images.size(), idxA.size(), f);
    for (std::size_t i = 0; i < h_images.size(); ++i) {
        auto v = idxA.vec(h_images[i], f);
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
    }
    std::vector<Element> hA;
    for (const auto& row : Rref(m).echelon_rows()) hA.push_back(idxA.unvec(row));
    rep.note("dim hA = " + std::to_string(hA.size()));
    std::vector<std::vector<Scalar>> haha;
    {
        std::vector<Element> prods;
        for (const auto& u : hA)
            for (const auto& v : hA) prods.push_back(tensor_product(u, v));
        // span of hA⊗hA inside A⊗A coordinates
        KeyIndex idx2 = KeyIndex::product({A.alg->window, A.alg->window});
        for (const auto& p : prods) haha.push_back(idx2.vec(p, f));
        // (i) hA is a multiplier Hopf subalgebra: the covered coproducts of
        // hA land in hA⊗hA, and Δ(ha)(1⊗hb) = ha_(1)⊗ha_(2)b
        for (const auto& u : hA) {
            for (const auto& v : hA) {
                Element cov = A.dR(u, v);
                if (!in_span(idx2.vec(cov, f), haha, f)) {
                    rep.fail_with({"(i) Δ(hA)(1⊗hA) ⊆ hA⊗hA", {u.str(), v.str()}, cov.str(),
                                   "span(hA⊗hA)"});
                    break;
                }
            }
            if (rep.status == CheckStatus::fail) break;
        }
        auto tw = make_tuples({&A.alg->window, &A.alg->window}, s);
        for (const auto& t : tw.tuples) {
            Element a = A.unit_elem(t[0]), b = A.unit_elem(t[1]);
            Element lhs = A.dR(h.left(a), h.left(b));
            Element rhs = map_legs(map_legs(A.dR(a, b), 0, 1, 1,
                                            [&](std::span<const BasisKey> ks) {
                                                return h.left(A.unit_elem(ks[0]));
                                            }),
                                   1, 1, 1, [&](std::span<const BasisKey> ks) {
                                       return h.left(A.unit_elem(ks[0]));
                                   });
            if (lhs != rhs) {
                rep.fail_with({"(i) Δ(ha)(1⊗hb) = ha_(1)⊗ha_(2)b",
                               {t[0].str(), t[1].str()},
                               lhs.str(),
                               rhs.str()});
                break;
            }
        }
    }

    // φ(y⊗a) = y⊗ha intertwines products
    auto phi = [&](const Element& x) {
        return map_legs(x, 0, 1, 1, [&](std::span<const BasisKey> ks) {
            const BasisKey& pk = ks[0];
            Element ha = h.left(A.unit_elem(pk.leg(1)));
            Element out;
            for (const auto& [ak, ac] : ha.terms())
                out.add(tensor_key(pk.leg(0), ak), ac);
            return out;
        });
    };
    const auto& w = ss.YA->window;
    {
        auto tw = make_tuples({&w, &w}, s);
        rep.window = tw.description;
        for (const auto& t : tw.tuples) {
            Element x = pair_elem(t[0], f), xp = pair_elem(t[1], f);
            Element lhs = phi(ss.YA->multiply(x, xp));
            Element rhs = ss.YA->multiply(phi(x), phi(xp));
            if (lhs != rhs) {
                rep.fail_with(
                    {"product transported", {t[0].str(), t[1].str()}, lhs.str(), rhs.str()});
                break;
            }
        }
    }

    // Δ̄(φ(x)) acts as the componentwise coproduct of Y⊗hA
    {
        Sampling eff = s;
        if (eff.cap == 0) eff.cap = 2048;
        auto tw = make_tuples({&w, &ss.YAYA->window}, eff);
        for (const auto& t : tw.tuples) {
            Element x = pair_elem(t[0], f);
            Element v = pair_elem(t[1], f);
            Element lhs = ss.delta_bar_right(phi(x), v);
            // (ι⊗τ⊗ι)(Δ_Y(y)⊗(h⊗h)Δ_A(a))·v
            const BasisKey& yk = t[0].leg(0);
            const BasisKey& ak = t[0].leg(1);
            const BasisKey& u1 = t[1].leg(0);
            const BasisKey& u2 = t[1].leg(1);
            Element zy = map_legs(Y.dRp(Y.unit_elem(yk), Y.unit_elem(u1.leg(0))), 1, 1, 1,
                                  [&](std::span<const BasisKey> ks) {
                                      return Y.alg->multiply(Y.unit_elem(ks[0]),
                                                             Y.unit_elem(u2.leg(0)));
                                  });
            Element za = map_legs(A.dRp(A.unit_elem(ak), A.unit_elem(u1.leg(1))), 1, 1, 1,
                                  [&](std::span<const BasisKey> ks) {
                                      return A.alg->multiply(A.unit_elem(ks[0]),
                                                             A.unit_elem(u2.leg(1)));
                                  });
            for (int leg = 0; leg < 2; ++leg)
                za = map_legs(za, leg, 1, 1, [&](std::span<const BasisKey> ks) {
                    return h.left(A.unit_elem(ks[0]));
                });
            Element t4 = ungroup_leg(ungroup_leg(tensor_product(zy, za), 1), 0);
            const std::size_t perm[] = {0, 2, 1, 3};
            Element rhs = pair_up(permute_legs(t4, perm));
            if (lhs != rhs) {
                rep.fail_with({"Δ̄ componentwise on Y⊗hA",
                               {t[0].str(), t[1].str()},
                               lhs.str(),
                               rhs.str()});
                break;
            }
        }
    }

    // counits agree on the image
    for (const auto& k : w) {
        Element x = pair_elem(k, f);
        if (!(ss.eps_bar(phi(x)) == ss.eps_bar(x))) {
            rep.fail_with({"counit transported", {k.str()}, ss.eps_bar(phi(x)).str(),
                           ss.eps_bar(x).str()});
            break;
        }
    }
    return rep;
}

namespace {

// shared decomposition machinery for T̃
struct TTildeSolver {
    const Smash& ss;
    const IdempotentE& E;
    KeyIndex domain;   // (y,a) pairs for the left side, (z,c)·rho for right
    KeyIndex image;    // coordinates in A⊗Y
    Rref left_factor;  // columns: vec(T(y⊗a))
    Rref right_factor; // columns: vec((c⊗1)rho(z)) indexed by (z,c)

    static Rref build(const Smash& ss, const KeyIndex& image, bool left,
                      const KeyIndex& domain) {
        const FieldSpec f = ss.field();
        Matrix m(image.size(), domain.size(), f);
        for (std::size_t j = 0; j < domain.size(); ++j) {
            const BasisKey& k = domain.keys()[j];
            Element col = left ? ss.cc->coact.rR(k.leg(0), k.leg(1))
                               : ss.cc->coact.rL(k.leg(0), k.leg(1));
            auto v = image.vec(col, f);
            for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
        }
        return Rref(std::move(m));
    }

    TTildeSolver(const Smash& s, const IdempotentE& e)
        : ss(s),
          E(e),
          domain(KeyIndex::product({s.cc->Y->alg->window, s.cc->A->alg->window})),
          image(KeyIndex::product({s.cc->A->alg->window, s.cc->Y->alg->window})),
          left_factor(build(s, image, true, domain)),
          right_factor(build(s, image, false, domain)) {}

    // E(b⊗y) = Σ rho(x_i)(a_i⊗1) decomposition as an element over (x,a) keys
    std::optional<Element> decompose_left(const Element& target) const {
        auto sol = left_factor.solve(image.vec(target, ss.field()));
        if (!sol) return std::nullopt;
        return domain.unvec(*sol);
    }
    std::optional<Element> decompose_right(const Element& target) const {
        auto sol = right_factor.solve(image.vec(target, ss.field()));
        if (!sol) return std::nullopt;
        return domain.unvec(*sol);
    }
};

Element map_T_pairs(const Smash& ss, const Element& e) {
    Element out;
    for (const auto& [k, c] : e.terms()) out.add(ss.cc->coact.rR(k.leg(0), k.leg(1)).scaled(c));
    return out;
}

} // namespace

Multiplier extend_T_tilde(const Smash& ss, const IdempotentE& E, const Multiplier& m) {
    auto solver = std::make_shared<TTildeSolver>(ss, E);
    const FieldSpec f = ss.field();
    const Smash* ssp = &ss;
    auto left = [solver, m, ssp, f](const Element& t) {
        Element out;
        for (const auto& [k, c] : t.terms()) {
            Element target = solver->E.act.left(Element(k, Scalar::one(f)));
            auto dec = solver->decompose_left(target);
            if (!dec)
                throw WindowExhausted("T~: E(b⊗y) is not decomposable over the window");
            Element out_k;
            for (const auto& [dk, dc] : dec->terms())
                out_k.add(map_T_pairs(*ssp, m.left(Element(dk, Scalar::one(f)))).scaled(dc));
            out.add(out_k.scaled(c));
        }
        return out;
    };
    auto right = [solver, m, ssp, f](const Element& t) {
        Element out;
        for (const auto& [k, c] : t.terms()) {
            Element target = solver->E.act.right(Element(k, Scalar::one(f)));
            auto dec = solver->decompose_right(target);
            if (!dec)
                throw WindowExhausted("T~: (b⊗y)E is not decomposable over the window");
            Element out_k;
            for (const auto& [dk, dc] : dec->terms())
                out_k.add(map_T_pairs(*ssp, m.right(Element(dk, Scalar::one(f)))).scaled(dc));
            out.add(out_k.scaled(c));
        }
        return out;
    };
    return Multiplier(left, right);
}

CheckReport check_T_tilde(const Smash& ss, const IdempotentE& E, const Sampling& s) {
    CheckReport rep;
    rep.suite = "smash.t_tilde:" + ss.name();
    const FieldSpec f = ss.field();
    const auto& wy = ss.cc->Y->alg->window;
    const auto& wa = ss.cc->A->alg->window;
    KeyIndex ay = KeyIndex::product({wa, wy});

    // span identity rho(Y)(A⊗1) = E(A⊗Y)
    {
        std::vector<std::vector<Scalar>> t_span, e_span;
        for (const auto& y : wy)
            for (const auto& a : wa)
                t_span.push_back(ay.vec(ss.cc->coact.rR(y, a), f));
        for (const auto& k : ay.keys())
            e_span.push_back(ay.vec(E.act.left(Element(k, Scalar::one(f))), f));
        bool ok = true;
        for (const auto& v : t_span)
            if (!in_span(v, e_span, f)) ok = false;
        for (const auto& v : e_span)
            if (!in_span(v, t_span, f)) ok = false;
        if (!ok) {
            rep.status = CheckStatus::precondition_failed;
            rep.note("span identity rho(Y)(A⊗1) = E(A⊗Y) fails on the window");
            return rep;
        }
        rep.note("span identity rho(Y)(A⊗1) = E(A⊗Y) holds on the window");
    }

    auto act_equal = [&](const Multiplier& u, const Multiplier& v) -> std::optional<BasisKey> {
        for (const auto& k : ay.keys()) {
            Element probe(k, Scalar::one(f));
            if (u.left(probe) != v.left(probe) || u.right(probe) != v.right(probe)) return k;
        }
        return std::nullopt;
    };

    // T̃ extends T on embedded elements
    for (const auto& y : wy) {
        bool failed = false;
        for (const auto& a : wa) {
            Element ya(tensor_key(y, a), Scalar::one(f));
            Multiplier t_tilde = extend_T_tilde(ss, E, embed(ya, ss.YA));
            Multiplier direct = embed(ss.cc->coact.rR(y, a), tensor_algebra(
                {ss.cc->A->alg, ss.cc->Y->alg}, "A⊗Y"));
            if (auto bad = act_equal(t_tilde, direct)) {
                rep.fail_with({"T~ extends T", {y.str(), a.str(), bad->str()}, "differs",
                               "equal actions"});
                failed = true;
                break;
            }
        }
        if (failed) break;
    }

    // T̃(1) = E
    Multiplier t1 = extend_T_tilde(ss, E, Multiplier::identity());
    if (auto bad = act_equal(t1, E.act))
        rep.fail_with({"T~(1) = E", {bad->str()}, "differs", "equal actions"});

    // T̃(1⊗c) = (c⊗1)E
    for (const auto& ck : wa) {
        Element c = ss.cc->A->unit_elem(ck);
        Multiplier one_c(
            [ssp = &ss, c, f](const Element& t) {
                return map_legs(t, 1, 1, 1, [&](std::span<const BasisKey> ks) {
                    return ssp->cc->A->alg->multiply(c, ssp->cc->A->alg->basis_element(ks[0]));
                });
            },
            [ssp = &ss, c, f](const Element& t) {
                return map_legs(t, 1, 1, 1, [&](std::span<const BasisKey> ks) {
                    return ssp->cc->A->alg->multiply(ssp->cc->A->alg->basis_element(ks[0]), c);
                });
            });
        Multiplier lhs = extend_T_tilde(ss, E, one_c);
        Multiplier rhs(
            [&E, c, ssp = &ss](const Element& t) {
                return map_legs(E.act.left(t), 0, 1, 1, [&](std::span<const BasisKey> ks) {
                    return ssp->cc->A->alg->multiply(c, ssp->cc->A->alg->basis_element(ks[0]));
                });
            },
            [&E, c, ssp = &ss](const Element& t) {
                Element tc = map_legs(t, 0, 1, 1, [&](std::span<const BasisKey> ks) {
                    return ssp->cc->A->alg->multiply(ssp->cc->A->alg->basis_element(ks[0]), c);
                });
                return E.act.right(tc);
            });
        if (auto bad = act_equal(lhs, rhs)) {
            rep.fail_with({"T~(1⊗c) = (c⊗1)E", {ck.str(), bad->str()}, "differs",
                           "equal actions"});
            break;
        }
    }

    // homomorphism on sampled pairs of embedded multipliers
    {
        Sampling eff = s;
        if (eff.cap == 0) eff.cap = 64;
        const auto& w = ss.YA->window;
        auto tw = make_tuples({&w, &w}, eff);
        for (const auto& t : tw.tuples) {
            Multiplier u = embed(Element(t[0], Scalar::one(f)), ss.YA);
            Multiplier v = embed(Element(t[1], Scalar::one(f)), ss.YA);
            Multiplier lhs = extend_T_tilde(ss, E, mul(u, v));
            Multiplier rhs = mul(extend_T_tilde(ss, E, u), extend_T_tilde(ss, E, v));
            if (auto bad = act_equal(lhs, rhs)) {
                rep.fail_with({"T~ multiplicative", {t[0].str(), t[1].str(), bad->str()},
                               "differs", "equal actions"});
                break;
            }
        }
    }
    return rep;
}

} // namespace covact
