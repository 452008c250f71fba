#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covact/basis.hpp"

using namespace covact;

namespace {
const FieldSpec Q = FieldSpec::rationals();
Scalar qs(std::int64_t n, std::int64_t d = 1) {
    return Scalar::from_rational(Q, BigRational(n, d));
}
} // namespace

TEST_CASE("basis keys are totally ordered and printable") {
    BasisKey a(3), b("g"), c(BasisKey::Tuple{BasisKey(1), BasisKey("x")});
    CHECK(a < b);  // ints before symbols
    CHECK(b < c);  // symbols before tuples
    CHECK(c.str() == "(1,x)");
    CHECK(c.arity() == 2);
    CHECK(c.leg(1).as_string() == "x");
    CHECK(a.leg(0) == a);
}

TEST_CASE("elements stay canonical: no stored zeros, ordered terms") {
    Element e;
    e.add(BasisKey(2), qs(1));
    e.add(BasisKey(1), qs(3));
    e.add(BasisKey(2), qs(-1));
    CHECK(e.size() == 1);
    CHECK(e.coeff(BasisKey(1), Q) == qs(3));
    CHECK(e.coeff(BasisKey(2), Q).is_zero());
    CHECK((e - e).is_zero());
    CHECK(e.str() == "(3)*1");
}

TEST_CASE("tensor products keep each part as one leg") {
    Element a(BasisKey(1), qs(2));
    Element b(BasisKey("y"), qs(3));
    Element t = tensor_product(a, b);
    REQUIRE(t.size() == 1);
    CHECK(t.terms().begin()->first == tensor_key(BasisKey(1), BasisKey("y")));
    CHECK(t.terms().begin()->second == qs(6));

    // nested keys survive untouched
    Element nested(tensor_key(BasisKey(5), BasisKey(0)), qs(1));
    Element t2 = tensor_product(nested, b);
    CHECK(t2.terms().begin()->first.leg(0) == tensor_key(BasisKey(5), BasisKey(0)));

    Element flat = ungroup_leg(t2, 0);
    CHECK(flat.terms().begin()->first.arity() == 3);
}

TEST_CASE("map_legs splices by declared arity") {
    Element t(tensor_key(BasisKey(1), BasisKey(2)), qs(1));
    // single-leg image, nested key: inserted whole
    Element r1 = map_legs(t, 0, 1, 1, [&](std::span<const BasisKey> ks) {
        return Element(tensor_key(ks[0], ks[0]), qs(1));
    });
    CHECK(r1.terms().begin()->first.arity() == 2);
    CHECK(r1.terms().begin()->first.leg(0).arity() == 2);
    // two-leg image: spliced flat
    Element r2 = map_legs(t, 0, 1, 2, [&](std::span<const BasisKey> ks) {
        return Element(tensor_key(ks[0], ks[0]), qs(1));
    });
    CHECK(r2.terms().begin()->first.arity() == 3);
}

TEST_CASE("permute, contract, group") {
    Element t(tensor_key(BasisKey(1), BasisKey(2), BasisKey(3)), qs(5));
    const std::size_t perm[] = {2, 0, 1};
    Element p = permute_legs(t, perm);
    CHECK(p.terms().begin()->first == tensor_key(BasisKey(3), BasisKey(1), BasisKey(2)));

    Element c = contract_leg(t, 1, [&](const BasisKey& k) { return qs(k.as_int()); });
    CHECK(c.terms().begin()->first == tensor_key(BasisKey(1), BasisKey(3)));
    CHECK(c.terms().begin()->second == qs(10));

    Element g = group_legs(t, {{0, 1}, {2}});
    CHECK(g.terms().begin()->first ==
          tensor_key(tensor_key(BasisKey(1), BasisKey(2)), BasisKey(3)));

    // contracting one leg of a 2-tensor leaves the bare other key
    Element two(tensor_key(BasisKey(7), BasisKey(9)), qs(1));
    Element c2 = contract_leg(two, 0, [&](const BasisKey&) { return qs(1); });
    CHECK(c2.terms().begin()->first == BasisKey(9));
}

TEST_CASE("lift and lift2 extend linearly") {
    Element x;
    x.add(BasisKey(0), qs(1));
    x.add(BasisKey(1), qs(2));
    Element img = lift(x, [&](const BasisKey& k) { return Element(BasisKey(k.as_int() + 10), qs(3)); });
    CHECK(img.coeff(BasisKey(10), Q) == qs(3));
    CHECK(img.coeff(BasisKey(11), Q) == qs(6));

    Element y(BasisKey(5), qs(1));
    Element both = lift2(x, y, [&](const BasisKey& a, const BasisKey& b) {
        return Element(BasisKey(a.as_int() + b.as_int()), qs(1));
    });
    CHECK(both.coeff(BasisKey(5), Q) == qs(1));
    CHECK(both.coeff(BasisKey(6), Q) == qs(2));
}
