#pragma once

#include "covact/coaction.hpp"
#include "covact/gallery.hpp"

namespace covact {

/// The coaction y ↦ h⊗y for a multiplier h on A.
struct HCoactionSpec {
    Multiplier h;
    MHopfPtr A;
    MHopfPtr Y;
    CoactionKind claim = CoactionKind::symmetric_partial;
    std::string name = "h_coaction";
};

CoactionPtr build_h_coaction(const HCoactionSpec& spec);

/// eps(h) = 1, h⊗h = (h⊗1)Delta(h) and, for the symmetric case,
/// h⊗h = Delta(h)(h⊗1); also derives and reports h² = h.
CheckReport check_h_conditions(const Multiplier& h, const MHopf& A, const Sampling& s = {});

/// The E = h⊗1 idempotent of the induced partial comodule algebra.
IdempotentE make_h_idempotent(const Multiplier& h, const MHopfPtr& A, const MHopfPtr& Y);

enum class ZFamily { sweedler, taft };

/// The grouplike-correcting elements z used by the 4-dimensional and Taft
/// coactions; H must be the matching gallery algebra.
Element build_z_element(ZFamily family, const Scalar& alpha, const MHopfPtr& H);

/// An algebra projection pi of Z onto the span of Y_basis.
struct ProjectionSpec {
    MHopfPtr Z;
    std::vector<BasisKey> Y_basis;
    LinearMap pi;
    std::string name = "pi";
};

/// Projection onto a sub-basis that kills every other basis key.
ProjectionSpec make_key_projection(const MHopfPtr& Z, const std::vector<BasisKey>& Y_basis);

/// Idempotency, image, fixed points, multiplicativity and both covered
/// comultiplicativity identities.
CheckReport check_projection(const ProjectionSpec& ps, const Sampling& s = {});

/// Y as a multiplier Hopf subalgebra of Z on the given basis keys.
MHopfPtr restrict_mhopf(const MHopfPtr& Z, const std::vector<BasisKey>& Y_basis,
                        const std::string& name);

/// beta(y) = (ι⊗pi)ρ(y) on the subalgebra carried by Y_sub.
CoactionPtr build_induced_coaction(const CoactionPtr& cc_global, const ProjectionSpec& ps,
                                   const MHopfPtr& Y_sub, const std::string& name);

enum class QuantifyOver { Z, Y };

/// The hypotheses of the induced construction; the report names the
/// quantification domain for clauses (ii) and (iii).
CheckReport check_induction_hypotheses(const ComoduleCoalgebra& cc_global,
                                       const ProjectionSpec& ps, const Element& t,
                                       QuantifyOver domain, const Sampling& s = {});

/// The global group coaction of kN on A_G: rho(h) = sum_{g in N} delta_g ⊗ hg.
CoactionPtr build_group_coaction(const MHopfPtr& AG, const MHopfPtr& kN, const Group& G,
                                 const std::vector<BasisKey>& N, const std::string& name);

} // namespace covact
