#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagsolve/errors.hpp"
#include "flagsolve/numberfield.hpp"

using namespace flagsolve;

TEST_CASE("arithmetic in Q(sqrt 2)") {
    NumberField f(UniPoly::from_desc({1, 0, -2}));
    NumberFieldElem t = f.generator();

    CHECK((t * t).is_rational());
    CHECK((t * t).rational_value() == Rat(2));
    CHECK(((t + Rat(1)) * (t - Rat(1) * Rat(1))).rational_value() == Rat(1));
    CHECK((t + Rat(1)) * (-t + Rat(1)) == f.from_rational(Rat(-1)));

    CHECK(t.inverse() == t * Rat(1, 2));
    CHECK((t + Rat(1)).inverse() == t - Rat(1));
    CHECK(t.pow(4).rational_value() == Rat(4));
    CHECK(t.pow(-2).rational_value() == Rat(1, 2));
    CHECK((t / t) == f.one());
    CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
}

TEST_CASE("arithmetic in the twelfth cyclotomic field") {
    NumberField f(UniPoly::from_desc({1, 0, -1, 0, 1}));  // Y^4 - Y^2 + 1
    NumberFieldElem t = f.generator();

    // t is a primitive 12th root of unity: t^12 = 1, t^6 = -1.
    CHECK(t.pow(12) == f.one());
    CHECK(t.pow(6) == f.from_rational(Rat(-1)));
    CHECK(t.inverse() == t - t.pow(3));
    CHECK(t * (t - t.pow(3)) == f.one());
}

TEST_CASE("zero divisors reveal a factor of the modulus") {
    NumberField f(UniPoly::from_desc({1, 0, -1}));  // Y^2 - 1, reducible
    NumberFieldElem z = f.generator() - Rat(1);
    try {
        z.inverse();
        FAIL("expected ReducibleModulusError");
    } catch (const ReducibleModulusError& e) {
        REQUIRE(e.factor_coeffs().size() == 2);
        CHECK(e.factor_coeffs()[0] == "-1");
        CHECK(e.factor_coeffs()[1] == "1");
    }
}

TEST_CASE("mixed-field operations are rejected") {
    NumberField f(UniPoly::from_desc({1, 0, -2}));
    NumberField g(UniPoly::from_desc({1, 0, -3}));
    CHECK_THROWS_AS(f.generator() + g.generator(), std::invalid_argument);

    // Equal moduli in distinct objects still count as the same field.
    NumberField f2(UniPoly::from_desc({1, 0, -2}));
    CHECK(f.generator() == f2.generator());
}

TEST_CASE("minimal polynomials of field elements") {
    NumberField f(UniPoly::from_desc({1, 0, -1, 0, 1}));
    NumberFieldElem t = f.generator();

    CHECK(minimal_polynomial(t) == UniPoly::from_desc({1, 0, -1, 0, 1}));
    // t^2 is a primitive 6th root of unity.
    CHECK(minimal_polynomial(t * t) == UniPoly::from_desc({1, -1, 1}));
    // t + 1/t = 2 cos(pi/6) = sqrt(3).
    CHECK(minimal_polynomial(t + t.inverse()) == UniPoly::from_desc({1, 0, -3}));
    // rational elements give linear minimal polynomials
    UniPoly lin = minimal_polynomial(f.from_rational(Rat(5, 2)));
    CHECK(lin.degree() == 1);
    CHECK(lin.eval(Rat(5, 2)) == 0);
}

TEST_CASE("non-monic moduli are normalised") {
    NumberField f(UniPoly::from_desc({2, 0, -4}));  // 2Y^2 - 4 -> Y^2 - 2
    CHECK(f.modulus() == UniPoly::from_desc({1, 0, -2}));
    CHECK((f.generator() * f.generator()).rational_value() == Rat(2));
}
