#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covact/gallery.hpp"

using namespace covact;

namespace {
const FieldSpec Q = FieldSpec::rationals();
Scalar qs(std::int64_t n, std::int64_t d = 1) {
    return Scalar::from_rational(Q, BigRational(n, d));
}
} // namespace

TEST_CASE("embed: zero, pointwise products, table lookups") {
    auto A2 = make_function_algebra(cyclic_group(2), Q);
    Multiplier z = embed(Element::zero(), A2->alg);
    CHECK(z.left(A2->alg->basis_element(BasisKey(0))).is_zero());

    Multiplier d0 = embed(A2->alg->basis_element(BasisKey(0)), A2->alg);
    CHECK(d0.left(A2->alg->basis_element(BasisKey(1))).is_zero());
    CHECK(d0.right(A2->alg->basis_element(BasisKey(0))) ==
          A2->alg->basis_element(BasisKey(0)));

    auto H4 = make_sweedler(Q);
    Multiplier g = embed(H4->alg->basis_element(BasisKey("g")), H4->alg);
    CHECK(g.left(H4->alg->basis_element(BasisKey("x"))) ==
          H4->alg->basis_element(BasisKey("g*x")));
}

TEST_CASE("mul is the pair-composition product; embed is a homomorphism") {
    auto H4 = make_sweedler(Q);
    Element a = H4->alg->basis_element(BasisKey("g")) + H4->alg->basis_element(BasisKey("x"));
    Element b = H4->alg->basis_element(BasisKey("g*x"));
    Multiplier lhs = mul(embed(a, H4->alg), embed(b, H4->alg));
    Multiplier rhs = embed(H4->alg->multiply(a, b), H4->alg);
    for (const auto& k : H4->alg->window) {
        Element probe = H4->alg->basis_element(k);
        CHECK(lhs.left(probe) == rhs.left(probe));
        CHECK(lhs.right(probe) == rhs.right(probe));
    }
    // identity is a two-sided unit
    Multiplier id = Multiplier::identity();
    Multiplier gi = mul(id, embed(a, H4->alg));
    Multiplier ig = mul(embed(a, H4->alg), id);
    for (const auto& k : H4->alg->window) {
        Element probe = H4->alg->basis_element(k);
        CHECK(gi.left(probe) == ig.left(probe));
    }
}

TEST_CASE("h = d0+d2 on A_Z4 is idempotent as a multiplier") {
    auto A4 = make_function_algebra(cyclic_group(4), Q);
    Multiplier h = subset_indicator(A4, {BasisKey(0), BasisKey(2)});
    Multiplier hh = mul(h, h);
    for (const auto& k : A4->alg->window) {
        Element probe = A4->alg->basis_element(k);
        CHECK(hh.left(probe) == h.left(probe));
        CHECK(hh.right(probe) == h.right(probe));
    }
    std::vector<Element> samples;
    for (const auto& k : A4->alg->window) samples.push_back(A4->alg->basis_element(k));
    CHECK_NOTHROW(require_compatible(h, *A4->alg, samples, "indicator"));
}

TEST_CASE("realize: round trips, the function-algebra unit, and c_lambda") {
    auto A4 = make_function_algebra(cyclic_group(4), Q);
    Element x = A4->alg->basis_element(BasisKey(1)) + A4->alg->basis_element(BasisKey(2));
    auto back = realize(embed(x, A4->alg), A4->alg);
    REQUIRE(back.has_value());
    CHECK(*back == x);

    auto unit = realize(Multiplier::identity(), A4->alg);
    REQUIRE(unit.has_value());
    Element all;
    for (const auto& k : A4->alg->window) all.add(k, qs(1));
    CHECK(*unit == all);

    // c_lambda has full support: not realized on any window
    auto A = make_epdq(Q, qs(2), 3, 3);
    Multiplier c = epdq_c_lambda(A, qs(2), false);
    CHECK_FALSE(realize(c, A->alg).has_value());
    // but embedded elements still round trip on the rule backend
    Element e0d = A->alg->basis_element(epdq_key(0, 1));
    auto rt = realize(embed(e0d, A->alg), A->alg);
    REQUIRE(rt.has_value());
    CHECK(*rt == e0d);
    // the identity of M(A_Z) is not realized either (A_Z is non-unital)
    auto AZ = make_function_algebra_Z(Q, 3);
    CHECK_FALSE(realize(Multiplier::identity(), AZ->alg).has_value());
}

TEST_CASE("on_leg acts through the declared leg only") {
    auto A4 = make_function_algebra(cyclic_group(4), Q);
    Multiplier h = subset_indicator(A4, {BasisKey(0), BasisKey(2)});
    Multiplier h1 = on_leg(h, 0, Q);
    Element t(tensor_key(BasisKey(2), BasisKey("y")), qs(5));
    CHECK(h1.left(t) == t);
    Element t2(tensor_key(BasisKey(1), BasisKey("y")), qs(5));
    CHECK(h1.left(t2).is_zero());
    // X = embed(a) on leg 1 of A⊗Y: X·(b⊗y) = ab⊗y
    Multiplier a = embed(A4->alg->basis_element(BasisKey(2)), A4->alg);
    CHECK(on_leg(a, 0, Q).left(t) == t);
    CHECK(completion_action(on_leg(a, 0, Q), t2, true).is_zero());
}

TEST_CASE("compatibility violations carry a witness") {
    auto A4 = make_function_algebra(cyclic_group(4), Q);
    // a deliberately incompatible pair: left acts as d0-multiplication,
    // right as d1-multiplication
    Multiplier broken(
        [&](const Element& b) {
            return A4->alg->multiply(A4->alg->basis_element(BasisKey(0)), b);
        },
        [&](const Element& a) {
            return A4->alg->multiply(a, A4->alg->basis_element(BasisKey(1)));
        });
    std::vector<Element> samples;
    for (const auto& k : A4->alg->window) samples.push_back(A4->alg->basis_element(k));
    CHECK_THROWS_AS(require_compatible(broken, *A4->alg, samples, "broken"),
                    InternalInconsistency);
}

TEST_CASE("idempotent E = h⊗1 passes its construction check") {
    auto A4 = make_function_algebra(cyclic_group(4), Q);
    auto Y = make_group_algebra(cyclic_group(2), Q);
    Multiplier h = subset_indicator(A4, {BasisKey(0), BasisKey(2)});
    IdempotentE E;
    E.act = on_leg(h, 0, Q);
    E.cover_left = [h](const Element& b) {
        return std::vector<IdempotentE::CoveredTerm>{{h.right(b), Multiplier::identity()}};
    };
    E.cover_right = [h](const Element& b) {
        return std::vector<IdempotentE::CoveredTerm>{{h.left(b), Multiplier::identity()}};
    };
    CHECK_NOTHROW(require_idempotent(E, *A4->alg, *Y->alg));
}
