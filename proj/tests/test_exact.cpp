#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "covact/linalg.hpp"

using namespace covact;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

Scalar qs(std::int64_t n, std::int64_t d = 1) {
    return Scalar::from_rational(Q, BigRational(n, d));
}

// Independent elimination used as the rank oracle: counts pivots with plain
// Gaussian steps, no shared code with covact::Rref.
std::size_t oracle_rank(std::vector<std::vector<Scalar>> rows, const FieldSpec& f) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) { piv = r; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar factor = rows[r][c] / rows[rank][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                rows[r][cc] = rows[r][cc] - factor * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& f) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic is exact and closed") {
    Scalar a = qs(3, 4), b = qs(-2, 6);
    CHECK((a * b).str() == "-1/4");
    CHECK((a + b).str() == "5/12");
    CHECK((a / b) == qs(-9, 4));
    CHECK(Scalar::parse(Q, "5/10") == qs(1, 2));

    Scalar x = Scalar::from_int(F7, 10);
    CHECK(x.residue() == 3);
    CHECK(x.str() == "3 mod 7");
    CHECK((x * x.inverse()).is_one());
    CHECK(Scalar::parse(F7, "12 mod 7").residue() == 5);
    CHECK(Scalar::parse(F7, "-1").residue() == 6);
    CHECK_THROWS_AS(Scalar::parse(Q, "0.5"), UsageError);
    CHECK_THROWS_AS((void)FieldSpec::prime(6), UsageError);
    CHECK_THROWS_AS((void)(qs(1) + Scalar::from_int(F7, 1)), UsageError);
}

TEST_CASE("solve_linear: identity system") {
    Matrix A(2, 2, Q);
    A.at(0, 0) = qs(1);
    A.at(1, 1) = qs(1);
    auto x = solve_linear(A, {qs(3), qs(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == qs(3));
    CHECK((*x)[1] == qs(5));
}

TEST_CASE("solve_linear: inconsistent system returns none") {
    Matrix A(2, 2, Q);
    A.at(0, 0) = qs(1); A.at(0, 1) = qs(1);
    A.at(1, 0) = qs(2); A.at(1, 1) = qs(2);
    CHECK_FALSE(solve_linear(A, {qs(1), qs(3)}).has_value());
}

TEST_CASE("solve_linear over F_7 matches brute force") {
    // oracle: enumerate x in F_7 with 2x = 1
    std::int64_t expected = -1;
    for (std::int64_t x = 0; x < 7; ++x)
        if ((2 * x) % 7 == 1) { expected = x; break; }
    REQUIRE(expected == 4);

    Matrix A(1, 1, F7);
    A.at(0, 0) = Scalar::from_int(F7, 2);
    auto x = solve_linear(A, {Scalar::from_int(F7, 1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0].residue() == expected);
}

TEST_CASE("solve_linear dimension mismatch is a usage error") {
    Matrix A(2, 2, Q);
    CHECK_THROWS_AS((void)solve_linear(A, {qs(1)}), UsageError);
}

TEST_CASE("rank: zero and identity") {
    Matrix z(3, 3, Q);
    CHECK(rank(z) == 0);
    Matrix id(5, 5, Q);
    for (int i = 0; i < 5; ++i) id.at(i, i) = qs(1);
    CHECK(rank(id) == 5);
}

TEST_CASE("rank of the h-induced coaction map T is 4 of 8") {
    // T: Y⊗A -> A⊗Y for Y = kZ2, A = A_Z4, h = d0+d2, assembled here from
    // the pointwise rule T(y⊗d_a) = h(a)·d_a⊗y, independent of the coaction
    // module. Domain and codomain are both 8-dimensional.
    auto h = [](std::int64_t a) { return a % 2 == 0 ? 1 : 0; };
    std::vector<std::vector<Scalar>> rows(8, std::vector<Scalar>(8, qs(0)));
    // index (y,a) = y*4+a in the domain; image index (a,y) = a*2+y
    for (int y = 0; y < 2; ++y)
        for (int a = 0; a < 4; ++a) rows[a * 2 + y][y * 4 + a] = qs(h(a));
    CHECK(oracle_rank(rows, Q) == 4);
    CHECK(rank(from_rows(rows, Q)) == 4);
}

TEST_CASE("in_span basics") {
    CHECK(in_span({qs(0), qs(0)}, {}, Q));
    CHECK_FALSE(in_span({qs(1), qs(0)}, {{qs(0), qs(1)}}, Q));
}

TEST_CASE("in_span over F_7 via scaling") {
    // oracle: 2x = 1 has the solution x = 4 in F_7, so (1,1) = 4·(2,2)
    auto one = Scalar::from_int(F7, 1);
    auto two = Scalar::from_int(F7, 2);
    CHECK(in_span({one, one}, {{two, two}}, F7));
}

TEST_CASE("property: consistent solves reproduce the rhs exactly") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const FieldSpec& f = trial % 2 ? F7 : Q;
        std::size_t n = 3 + trial % 3, m = 2 + trial % 4;
        Matrix A(n, m, f);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) A.at(r, c) = Scalar::from_int(f, coeff(rng));
        // build a consistent rhs from a random x
        std::vector<Scalar> x0;
        for (std::size_t c = 0; c < m; ++c) x0.push_back(Scalar::from_int(f, coeff(rng)));
        std::vector<Scalar> b(n, Scalar::zero(f));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) b[r] = b[r] + A.at(r, c) * x0[c];
        auto x = solve_linear(A, b);
        REQUIRE(x.has_value());
        for (std::size_t r = 0; r < n; ++r) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t c = 0; c < m; ++c) acc = acc + A.at(r, c) * (*x)[c];
            CHECK(acc == b[r]);
        }
    }
}

TEST_CASE("property: rank(A) == rank(transpose(A)) on random 5x5") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix A(5, 5, Q);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) A.at(r, c) = qs(coeff(rng));
        CHECK(rank(A) == rank(A.transposed()));
    }
}

TEST_CASE("property: in_span agrees with the rank criterion") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const FieldSpec& f = trial % 2 ? F7 : Q;
        std::size_t dim = 4;
        std::vector<std::vector<Scalar>> S;
        for (int i = 0; i < 3; ++i) {
            std::vector<Scalar> col;
            for (std::size_t r = 0; r < dim; ++r) col.push_back(Scalar::from_int(f, coeff(rng)));
            S.push_back(col);
        }
        std::vector<Scalar> v;
        for (std::size_t r = 0; r < dim; ++r) v.push_back(Scalar::from_int(f, coeff(rng)));

        Matrix span_m(dim, S.size(), f);
        for (std::size_t c = 0; c < S.size(); ++c)
            for (std::size_t r = 0; r < dim; ++r) span_m.at(r, c) = S[c][r];
        bool expected = rank(span_m) == rank(span_m.with_column(v));
        CHECK(in_span(v, S, f) == expected);
    }
}
