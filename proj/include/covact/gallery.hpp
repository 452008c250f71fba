#pragma once

#include "covact/mhopf.hpp"

namespace covact {

/// Finite group presented by a basis-key labelling and a multiplication
/// closure; cyclic groups use integer keys, S3 uses cycle-notation strings.
struct Group {
    std::string name;
    std::vector<BasisKey> elements;
    std::function<BasisKey(const BasisKey&, const BasisKey&)> mul;
    std::function<BasisKey(const BasisKey&)> inverse;
    BasisKey identity;
    bool abelian = true;
};

Group cyclic_group(std::int64_t n);
Group symmetric_group_s3();

/// A_G: finitely supported functions on a finite group under the pointwise
/// product, with Delta(f)(p,q) = f(pq), eps(f) = f(e), S(f)(p) = f(p^-1).
MHopfPtr make_function_algebra(const Group& g, const FieldSpec& f);

/// Group algebra kG with the grouplike comultiplication.
MHopfPtr make_group_algebra(const Group& g, const FieldSpec& f);

/// The 4-dimensional Sweedler Hopf algebra (field characteristic != 2):
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(g)=g⊗g, Delta(x)=x⊗1+g⊗x.
MHopfPtr make_sweedler(const FieldSpec& f);

/// Taft algebra of order 3: g^3 = 1, x^3 = 0, xg = q·gx with q a primitive
/// cube root of unity in the field.
MHopfPtr make_taft(const FieldSpec& f, const Scalar& q);

/// Rule backend A_Z: finitely supported functions on the integers; the
/// motivating non-unital example. window_radius bounds the sampling window.
MHopfPtr make_function_algebra_Z(const FieldSpec& f, std::int64_t window_radius);

/// Rule backend on the basis e_p d^q (p in Z, q in N) with relations
/// d e_p = e_{p+1} d and e_p e_r = delta_{p,r} e_p, comultiplication
/// Delta(e_p) = sum e_r ⊗ e_{p-r}, Delta(d) = d⊗c + 1⊗d for the group-like
/// multiplier c = sum lambda^r e_r. lambda must be nonzero.
MHopfPtr make_epdq(const FieldSpec& f, const Scalar& lambda, std::int64_t pmax,
                   std::int64_t qmax);

BasisKey epdq_key(std::int64_t p, std::int64_t q);

/// The multiplier c_lambda (or its inverse) on an e_p d^q algebra.
Multiplier epdq_c_lambda(const MHopfPtr& A, const Scalar& lambda, bool inverse);

/// The one-dimensional Hopf algebra k.
MHopfPtr make_base_field_algebra(const FieldSpec& f);

/// Indicator of a subgroup (or any subset) of G as a multiplier on A_G.
Multiplier subset_indicator(const MHopfPtr& function_algebra,
                            const std::vector<BasisKey>& subset);

/// Tensor h1⊗h2 acting legwise as a multiplier on a tensor algebra.
Multiplier tensor_multiplier(const Multiplier& h1, const Multiplier& h2, const FieldSpec& f);

} // namespace covact
