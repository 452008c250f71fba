#pragma once

#include "covact/coaction.hpp"

namespace covact {

/// The partial smash coproduct machinery on the tensor algebra Y⊗A.
/// Elements of (Y⊗A)⊗(Y⊗A) are kept in paired form (two legs, each a
/// (y,a)-pair key), so the componentwise algebra structure applies as-is.
/// Δ̄ exists only through its two covered actions.
class Smash {
public:
    CoactionPtr cc;
    AlgebraPtr YA;   // Y⊗A
    AlgebraPtr YAYA; // (Y⊗A)⊗(Y⊗A)
    Element eY;      // window local unit of Y

    const FieldSpec& field() const { return cc->A->field(); }
    std::string name() const { return cc->name; }

    Scalar eps_bar(const Element& x) const; // on Y⊗A

    /// T̄1(x ⊗ w) and T̄2(w ⊗ x), extended bilinearly over Y⊗A.
    Element tbar1(const Element& x, const Element& w) const;
    Element tbar2(const Element& w, const Element& x) const;

    /// Δ̄(x)·v and v·Δ̄(x) for honest v in (Y⊗A)⊗(Y⊗A). Single-factor
    /// coverings: (u⊗1²)Δ̄(x) = tbar2(u,x) and Δ̄(x)(1²⊗u) = tbar1(x,u).
    Element delta_bar_right(const Element& x, const Element& v) const;
    Element delta_bar_left(const Element& v, const Element& x) const;

    /// Δ̄(x)(u⊗1²) and (1²⊗u)Δ̄(x), the other two single-factor coverings.
    Element delta_bar_cov_first(const Element& x, const Element& u) const;
    Element delta_bar_cov_second(const Element& u, const Element& x) const;
};

Smash make_smash(const CoactionPtr& cc);

/// Multiplier compatibility of Δ̄: u·(Δ̄(x)·v) = (u·Δ̄(x))·v.
CheckReport check_compat_bar(const Smash& ss, const Sampling& s = {});

/// Covered coassociativity of Δ̄ over window 6-tuples.
CheckReport check_coassoc_bar(const Smash& ss, const Sampling& s = {});

/// Δ̄ is a homomorphism (A must be commutative).
CheckReport check_hom_bar(const Smash& ss, const Sampling& s = {});

/// Left counit law for ε̄; always expected to pass.
CheckReport eps_bar_left(const Smash& ss, const Sampling& s = {});

/// Right counit law; fails for proper partial coactions.
CheckReport eps_bar_right(const Smash& ss, const Sampling& s = {});

/// Ranks of T̄1/T̄2 on the window (bijective in the global case).
CheckReport check_smash_T_bijective(const Smash& ss);

/// The counitary subspace C_b spanned by (ι⊗ι⊗ε̄)(Δ̄(x)(1²⊗b)).
struct CbSpace {
    std::vector<Element> basis; // echelonized, over Y⊗A
    Element b_witness;
};

CbSpace build_Cb(const Smash& ss, const Element& b);

/// Subalgebra closure, subbialgebra coverings and the two-sided counit.
CheckReport check_Cb(const Smash& ss, const CbSpace& cb, const Sampling& s = {});

/// For h-induced bundles over commutative A: hA is a multiplier Hopf
/// subalgebra and y⊗a ↦ y⊗ha carries Δ̄ to the componentwise structure.
CheckReport check_iso_YhA(const Smash& ss, const Multiplier& h, const Sampling& s = {});

/// The extension T̃ of T to multipliers on Y⊗A (A commutative, span
/// identity rho(Y)(A⊗1) = E(A⊗Y) required); acts on A⊗Y.
Multiplier extend_T_tilde(const Smash& ss, const IdempotentE& E, const Multiplier& m);

/// T̃ checks: extension property, homomorphism samples, T̃(1) = E and
/// T̃(1⊗c) = (c⊗1)E.
CheckReport check_T_tilde(const Smash& ss, const IdempotentE& E, const Sampling& s = {});

} // namespace covact
