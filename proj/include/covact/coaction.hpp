#pragma once

#include "covact/mhopf.hpp"

namespace covact {

/// The two covered actions of a coaction ρ: Y → M(A⊗Y); this is where the
/// Sweedler legs y^(-1)⊗y^(0) live.
struct CoveredCoaction {
    using KeyFn = std::function<Element(const BasisKey& y, const BasisKey& a)>;
    KeyFn rR; // ρ(y)(a⊗1) ∈ A⊗Y
    KeyFn rL; // (a⊗1)ρ(y) ∈ A⊗Y
};

enum class CoactionKind { global, partial, symmetric_partial };

struct ComoduleCoalgebra {
    MHopfPtr Y, A;
    CoveredCoaction coact;
    CoactionKind kind = CoactionKind::partial;
    /// Whether ρ is claimed (and then checked) to be multiplicative —
    /// needed for the comodule-algebra axioms.
    bool rho_is_homomorphism = false;
    std::string name = "rho";

    /// T(y⊗a) = ρ(y)(a⊗1)
    Element map_T(const Element& y, const Element& a) const;
    /// T̄(a⊗y) = (a⊗1)ρ(y)
    Element map_Tbar(const Element& a, const Element& y) const;

    /// ρ(y)·t and t·ρ(y) for honest t in A⊗Y.
    Element rho_times(const Element& y, const Element& t) const;
    Element times_rho(const Element& t, const Element& y) const;

    /// Local unit of Y's window (the identity for unital Y), used to cover
    /// the free leg of Δ_Y in the item-(ii) tensors.
    Element window_unit_Y() const;
};

using CoactionPtr = std::shared_ptr<const ComoduleCoalgebra>;

/// A partial comodule algebra: the same ρ plus the controlling idempotent.
struct PartialComoduleAlgebra {
    CoactionPtr cc;
    IdempotentE E;
};

/// The Def. 3.2(ii) tensor ((ι_Y⊗T)(Δ_Y(y)⊗a))(1⊗1⊗y') in Y⊗A⊗Y, or its
/// left-covered mirror (1⊗1⊗y')(...); Δ_Y's free first leg is covered by
/// the supplied local unit.
Element covered_z23(const ComoduleCoalgebra& cc, const Element& eY, const BasisKey& y,
                    const BasisKey& a, const BasisKey& yp, bool left_cover);

/// Rank of T assembled as a matrix over the window, with the domain
/// dimension (Remark on non-bijectivity of T in the partial case).
std::pair<std::size_t, std::size_t> t_matrix_rank(const ComoduleCoalgebra& cc);

/// Left-comodule axioms: injectivity of ρ, the two covered coassociativity
/// identities, the counit law, plus the comodule-coalgebra compatibility.
CheckReport check_global_comodule(const ComoduleCoalgebra& cc, const Sampling& s = {});

/// Def. 3.2 (i)-(iv).
CheckReport check_partial_axioms(const ComoduleCoalgebra& cc, const Sampling& s = {});

/// Def. 3.2 (v)-(vi).
CheckReport check_symmetric_axioms(const ComoduleCoalgebra& cc, const Sampling& s = {});

/// (ι_A⊗ε_Y)ρ(y) = ε_Y(y)·1 on the window, evaluated through both covered
/// actions, with the coassociativity-equivalence cross-check.
CheckReport check_globality(const ComoduleCoalgebra& cc, const Sampling& s = {});

/// Partial comodule-algebra axioms for (ρ, E).
CheckReport check_comodule_algebra(const PartialComoduleAlgebra& pca, const Sampling& s = {});

/// Comodule algebra + comodule coalgebra with one ρ; symmetric variants too
/// when the claim says so.
std::vector<CheckReport> check_bialgebra(const PartialComoduleAlgebra& pca,
                                         const Sampling& s = {});

} // namespace covact
