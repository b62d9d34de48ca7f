#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "flagsolve/multipoly.hpp"

using namespace flagsolve;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("degree reverse lexicographic order") {
    Ring R = Ring::degrevlex({"x", "y", "z"});
    // Degree dominates.
    CHECK(R.mono_less(mono({1, 0, 0}), mono({1, 1, 0})));
    CHECK(R.mono_less(mono({0, 0, 0}), mono({0, 0, 1})));
    // Within a degree, the monomial with the smaller exponent on the last
    // differing variable is larger: x^2 > xy > y^2 > xz > yz > z^2.
    CHECK(R.mono_less(mono({1, 1, 0}), mono({2, 0, 0})));
    CHECK(R.mono_less(mono({0, 2, 0}), mono({1, 1, 0})));
    CHECK(R.mono_less(mono({1, 0, 1}), mono({0, 2, 0})));
    CHECK(R.mono_less(mono({0, 1, 1}), mono({1, 0, 1})));
    CHECK(R.mono_less(mono({0, 0, 2}), mono({0, 1, 1})));
    CHECK_FALSE(R.mono_less(mono({2, 0, 0}), mono({2, 0, 0})));
}

TEST_CASE("block elimination order lets the first block dominate") {
    Ring B = Ring::block({"t", "x", "y"}, 1);
    // Any positive power of t beats any t-free monomial.
    CHECK(B.mono_less(mono({0, 5, 5}), mono({1, 0, 0})));
    CHECK(B.mono_less(mono({1, 5, 5}), mono({2, 0, 0})));
    // Ties in the t-block fall back to degrevlex on (x, y).
    CHECK(B.mono_less(mono({1, 1, 0}), mono({1, 2, 0})));
    CHECK(B.mono_less(mono({1, 0, 2}), mono({1, 1, 1})));
}

TEST_CASE("construction and leading data") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly p = x * x + x * y * Rat(3) - MultiPoly::constant(R, Rat(7));
    CHECK(p.term_count() == 3);
    CHECK(p.leading_monomial() == mono({2, 0}));
    CHECK(p.leading_coeff() == Rat(1));
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 1);
    CHECK(p.uses_variable(1));

    // from_terms merges duplicates and drops zeros.
    MultiPoly q = MultiPoly::from_terms(
        R, {{mono({1, 0}), Rat(2)}, {mono({1, 0}), Rat(-2)}, {mono({0, 1}), Rat(5)}});
    CHECK(q == y * Rat(5));
}

TEST_CASE("ring arithmetic identities") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + x * y * Rat(2) + y * y);
    CHECK((x + y).pow(0) == MultiPoly::constant(R, Rat(1)));
    MultiPoly p = x * y - MultiPoly::constant(R, Rat(1));
    CHECK(p - p == MultiPoly(R));
    CHECK((-p) + p == MultiPoly(R));
    // submul computes p - c * m * g in one pass.
    MultiPoly g = x + y;
    CHECK(p.submul(Rat(2), mono({0, 1}), g) == p - g * y * Rat(2));
}

TEST_CASE("monic and primitive scaling") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly p = x * Rat(2, 3) - y * Rat(4, 3);
    CHECK(p.monic() == x - y * Rat(2));
    CHECK(p.primitive() == x - y * Rat(2));
    MultiPoly n = x * Rat(-2, 3) + y * Rat(4, 3);
    CHECK(n.primitive() == x - y * Rat(2));  // sign normalised positive
    CHECK(MultiPoly(R).primitive().is_zero());
}

TEST_CASE("substitution and evaluation") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly p = x * x + x * y;
    MultiPoly s = p.substitute(0, y + MultiPoly::constant(R, Rat(1)));
    CHECK(s == y * y * Rat(2) + y * Rat(3) + MultiPoly::constant(R, Rat(1)));
    CHECK(p.eval_rat({Rat(2), Rat(3)}) == Rat(10));
    CHECK(p.substitute(1, MultiPoly(R)) == x * x);  // y := 0
}

TEST_CASE("transport between rings by variable name") {
    Ring R = Ring::degrevlex({"x", "y"});
    Ring S = Ring::degrevlex({"y", "z", "x"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly p = x * x + y * Rat(3);
    MultiPoly q = p.transport(S);
    CHECK(q.ring().same_ring(S));
    CHECK(q == MultiPoly::variable(S, 2).pow(2) + MultiPoly::variable(S, 0) * Rat(3));
    CHECK(q.transport(R) == p);
    // A used variable missing from the target is an error.
    Ring T = Ring::degrevlex({"x"});
    CHECK_THROWS(p.transport(T));
    CHECK((x * x).transport(T) == MultiPoly::variable(T, 0).pow(2));
}

TEST_CASE("string form") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly p = x * x - y * Rat(1, 2) + MultiPoly::constant(R, Rat(3));
    CHECK(p.str() == "x^2 - 1/2*y + 3");
    CHECK(MultiPoly(R).str() == "0");
}
