#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagsolve/matrix.hpp"

using namespace flagsolve;

namespace {

QMatrix make(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    QMatrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
    return m;
}

}  // namespace

TEST_CASE("products, sums and transpose") {
    QMatrix a = make(2, 2, {1, 2, 3, 4});
    QMatrix b = make(2, 2, {5, 6, 7, 8});
    CHECK(a * b == make(2, 2, {19, 22, 43, 50}));
    CHECK(a + b == make(2, 2, {6, 8, 10, 12}));
    CHECK(b - a == make(2, 2, {4, 4, 4, 4}));
    CHECK(a.transpose() == make(2, 2, {1, 3, 2, 4}));
    CHECK(a * QMatrix::identity(2) == a);
    CHECK(a * Rat(2) == make(2, 2, {2, 4, 6, 8}));
    CHECK_THROWS_AS(a * QMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("determinants via Bareiss") {
    CHECK(make(2, 2, {1, 2, 3, 4}).det() == Rat(-2));
    CHECK(make(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1}).det() == Rat(5));
    CHECK(make(3, 3, {1, 2, 3, 4, 5, 6, 5, 7, 9}).det() == Rat(0));  // row3 = row1+row2

    // Rational entries: the 3x3 Hilbert matrix has determinant 1/2160.
    QMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Rat(1, i + j + 1);
    CHECK(h.det() == Rat(1, 2160));
    CHECK(QMatrix::identity(4).det() == Rat(1));
}

TEST_CASE("rank and rref") {
    CHECK(make(3, 3, {1, 2, 3, 4, 5, 6, 5, 7, 9}).rank() == 2);
    CHECK(make(2, 3, {1, 0, 2, 0, 1, 3}).rank() == 2);
    CHECK(QMatrix(3, 3).rank() == 0);

    std::size_t r = 0;
    QMatrix red = make(2, 2, {2, 4, 1, 3}).rref(&r);
    CHECK(r == 2);
    CHECK(red == QMatrix::identity(2));
}

TEST_CASE("inverse") {
    QMatrix a = make(2, 2, {1, 2, 3, 4});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a * *inv == QMatrix::identity(2));
    CHECK(*inv * a == QMatrix::identity(2));
    CHECK(!make(2, 2, {1, 2, 2, 4}).inverse().has_value());
}

TEST_CASE("linear solves") {
    QMatrix a = make(2, 2, {1, 1, 1, -1});
    auto x = a.solve({Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));

    // inconsistent
    CHECK(!make(2, 2, {1, 1, 1, 1}).solve({Rat(0), Rat(1)}).has_value());

    // underdetermined: a valid solution is still produced
    QMatrix u = make(1, 2, {1, 1});
    auto y = u.solve({Rat(5)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rat(5));
}

TEST_CASE("kernel basis") {
    QMatrix a = make(2, 3, {1, 0, 1, 0, 1, 1});
    auto k = a.kernel_basis();
    REQUIRE(k.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < 3; ++j) acc += a.at(i, j) * k[0][j];
        CHECK(acc == 0);
    }
    CHECK(QMatrix::identity(3).kernel_basis().empty());
}

TEST_CASE("characteristic polynomials") {
    CHECK(make(2, 2, {2, 0, 0, 3}).char_poly() == UniPoly::from_desc({1, -5, 6}));
    CHECK(make(2, 2, {1, 2, 3, 4}).char_poly() == UniPoly::from_desc({1, -5, -2}));

    // companion matrix of Y^3 - 2Y - 5
    QMatrix c = make(3, 3, {0, 0, 5, 1, 0, 2, 0, 1, 0});
    CHECK(c.char_poly() == UniPoly::from_desc({1, 0, -2, -5}));

    // cyclic permutation, exercises the pivoting path of the reduction
    QMatrix p = make(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    CHECK(p.char_poly() == UniPoly::from_desc({1, 0, 0, -1}));

    // 4-cycle shift, zero leading entries throughout the reduction
    QMatrix z = make(4, 4, {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0});
    CHECK(z.char_poly() == UniPoly::from_desc({1, 0, 0, 0, -1}));
    // order-2 permutation (swap two coordinate pairs)
    QMatrix w = make(4, 4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    CHECK(w.char_poly() == UniPoly::from_desc({1, 0, -2, 0, 1}));
}

TEST_CASE("generic field elimination matches the rational ranks") {
    struct F {  // minimal field wrapper around Rat
        Rat v;
        bool is_zero() const { return v == 0; }
        F inverse() const { return {1 / v}; }
        F operator*(const F& o) const { return {v * o.v}; }
        F operator-(const F& o) const { return {v - o.v}; }
    };
    std::vector<std::vector<F>> m = {{{Rat(1)}, {Rat(2)}, {Rat(3)}},
                                     {{Rat(4)}, {Rat(5)}, {Rat(6)}},
                                     {{Rat(5)}, {Rat(7)}, {Rat(9)}}};
    CHECK(field_rref_rank(m) == 2);
    std::vector<std::vector<F>> id = {{{Rat(1)}, {Rat(0)}}, {{Rat(0)}, {Rat(1)}}};
    CHECK(field_rref_rank(id) == 2);
}
