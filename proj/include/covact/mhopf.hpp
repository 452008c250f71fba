#pragma once

#include <memory>
#include <mutex>

#include "covact/multiplier.hpp"
#include "covact/sampling.hpp"

namespace covact {

/// A comultiplication stored purely in covered form: the four leg actions
/// of Δ(a) that land in A⊗A. The classical Δ(a) is derived, never primary.
struct CoveredComultiplication {
    using KeyFn = std::function<Element(const BasisKey&, const BasisKey&)>;
    KeyFn dR;  // Δ(a)(1⊗b)
    KeyFn dRp; // Δ(a)(b⊗1)
    KeyFn dL;  // (b⊗1)Δ(a)
    KeyFn dLp; // (1⊗b)Δ(a)
};

/// Inverses of the canonical maps T1(a⊗b)=Δ(a)(1⊗b), T2(a⊗b)=(a⊗1)Δ(b)
/// and of their σΔ-flipped versions, as key-pair closures on A⊗A.
struct TInverses {
    using KeyFn = CoveredComultiplication::KeyFn;
    KeyFn R1, R2, R1f, R2f;
};

/// Multiplier Hopf algebra data: nondegenerate algebra, covered Δ, counit
/// and (verified, never solved-for) antipode. Rule backends may declare
/// T-inverse rules; dense ones derive them by matrix inversion on demand.
class MHopf {
public:
    AlgebraPtr alg;
    CoveredComultiplication comul;
    std::function<Scalar(const BasisKey&)> counit_key;
    std::function<Multiplier(const BasisKey&)> antipode_key; // empty: none supplied
    bool regular_hint = true;
    std::optional<TInverses> declared_inverses;

    MHopf() = default;
    // copies drop the lazily built decomposition cache
    MHopf(const MHopf& o)
        : alg(o.alg),
          comul(o.comul),
          counit_key(o.counit_key),
          antipode_key(o.antipode_key),
          regular_hint(o.regular_hint),
          declared_inverses(o.declared_inverses) {}
    MHopf& operator=(const MHopf&) = delete;

    const std::string& name() const { return alg->name; }
    const FieldSpec& field() const { return alg->field; }

    Element unit_elem(const BasisKey& k) const { return alg->basis_element(k); }

    // covered actions, extended bilinearly
    Element dR(const Element& a, const Element& b) const { return lift2(a, b, comul.dR); }
    Element dRp(const Element& a, const Element& b) const { return lift2(a, b, comul.dRp); }
    Element dL(const Element& a, const Element& b) const { return lift2(a, b, comul.dL); }
    Element dLp(const Element& a, const Element& b) const { return lift2(a, b, comul.dLp); }

    /// T1(a⊗b) = Δ(a)(1⊗b)
    Element T1(const Element& a, const Element& b) const { return dR(a, b); }
    /// T2(a⊗b) = (a⊗1)Δ(b)
    Element T2(const Element& a, const Element& b) const { return dL(b, a); }

    Scalar counit(const Element& x) const;
    bool has_antipode() const { return static_cast<bool>(antipode_key); }
    /// Σ S(u)·v over the terms of u — the m(S⊗ι) composite.
    Element antipode_left_mul(const Element& u, const Element& v) const;
    /// Σ u·S(v) over the terms of v — the m(ι⊗S) composite.
    Element antipode_right_mul(const Element& u, const Element& v) const;

    /// Decomposition maps; nullptr when unavailable (rule backend without
    /// declared rules, or dense with singular T matrices).
    const TInverses* t_inverses() const;

    struct TRanks {
        std::size_t dim = 0, t1 = 0, t2 = 0, t1f = 0, t2f = 0;
    };
    /// Ranks of the four T matrices over the window (dense backends only).
    std::optional<TRanks> t_ranks() const;

    // element-level T maps and inverses on A⊗A
    Element apply_T1(const Element& t) const;
    Element apply_T2(const Element& t) const;
    Element apply_T1f(const Element& t) const;
    Element apply_T2f(const Element& t) const;
    Element apply_R1(const Element& t) const; // t = Σ Δ(a_i)(1⊗b_i), returns Σ a_i⊗b_i
    Element apply_R2(const Element& t) const; // t = Σ (a_i⊗1)Δ(b_i), returns Σ a_i⊗b_i

private:
    struct DenseCache;
    mutable std::shared_ptr<DenseCache> cache_;
    mutable std::once_flag once_;
    const DenseCache* dense_cache() const;
};

using MHopfPtr = std::shared_ptr<const MHopf>;

/// Builds the four covered actions from a classical (finite) Δ table.
CoveredComultiplication covered_from_classical(const AlgebraPtr& alg,
                                               std::function<Element(const BasisKey&)> delta);

/// Convenience builder for dense finite-dimensional structures: classical Δ
/// table, counit vector, antipode as realized elements.
MHopfPtr make_dense_mhopf(const AlgebraPtr& alg, std::function<Element(const BasisKey&)> delta,
                          std::function<Scalar(const BasisKey&)> counit,
                          std::function<Element(const BasisKey&)> antipode_elem);

/// Extension of Δ to a multiplier h: the returned multiplier acts on A⊗A,
/// computed by T-decomposition (or directly when h realizes as an element).
Multiplier extend_delta(const MHopf& H, const Multiplier& h);

/// Tensor product of multiplier Hopf algebras: componentwise product, Δ
/// with middle-leg flip, ε = ε⊗ε, S = S⊗S; T-inverses composed legwise.
MHopfPtr tensor_mha(const MHopfPtr& X, const MHopfPtr& Y, const std::string& name);

// -- axiom suites -------------------------------------------------------------

CheckReport check_coassociativity(const MHopf& H, const Sampling& s = {});
CheckReport check_counit(const MHopf& H, const Sampling& s = {});
CheckReport check_antipode(const MHopf& H, const Sampling& s = {});
CheckReport check_bijective_T(const MHopf& H, const Sampling& s = {});
CheckReport check_regular(const MHopf& H, const Sampling& s = {});

/// Associativity + nondegeneracy + every comultiplication suite above.
std::vector<CheckReport> run_hopf_suite(const MHopf& H, const Sampling& s = {});

} // namespace covact
