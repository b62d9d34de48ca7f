#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "flagsolve/factor.hpp"

using namespace flagsolve;

namespace {

UniPoly reassemble(const RatFactorization& f) {
    UniPoly p{f.unit};
    for (const auto& [g, m] : f.factors) p *= g.pow(static_cast<unsigned>(m));
    return p;
}

std::string shape(const RatFactorization& f) {
    std::ostringstream out;
    for (const auto& [g, m] : f.factors) out << "(" << g.str() << ")^" << m << " ";
    return out.str();
}

}  // namespace

TEST_CASE("linear and quadratic splits") {
    UniPoly p = UniPoly::from_desc({1, 0, -1});  // Y^2-1
    auto f = factor_rational(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.unit == Rat(1));
    CHECK(f.factors[0].first == UniPoly::from_desc({1, -1}));
    CHECK(f.factors[1].first == UniPoly::from_desc({1, 1}));
    CHECK(reassemble(f) == p);

    auto g = factor_rational(UniPoly::from_desc({1, 0, 0, 0, -1}));  // Y^4-1
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[2].first == UniPoly::from_desc({1, 0, 1}));
}

TEST_CASE("content and multiplicities") {
    UniPoly f1 = UniPoly::from_desc({1, -1});
    UniPoly f2 = UniPoly::from_desc({1, 3});
    UniPoly p = f1.pow(2) * f2.pow(3) * Rat(-3, 2);
    auto f = factor_rational(p);
    CHECK(f.unit == Rat(-3, 2));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::make_pair(f1, 2));
    CHECK(f.factors[1] == std::make_pair(f2, 3));
    CHECK(reassemble(f) == p);
}

TEST_CASE("non-monic inputs keep integer-primitive factors") {
    UniPoly a = UniPoly::from_desc({2, 1, 1});   // 2Y^2+Y+1, irreducible
    UniPoly b = UniPoly::from_desc({4, -3, 1});  // 4Y^2-3Y+1, irreducible
    auto f = factor_rational(a * b * Rat(5, 7));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == a);
    CHECK(f.factors[1].first == b);
    CHECK(f.unit == Rat(5, 7));
    CHECK(reassemble(f) == a * b * Rat(5, 7));
}

TEST_CASE("recombination pairs modular factors") {
    // (Y^2-2)(Y^2-3) splits into four linears modulo many primes.
    UniPoly p = UniPoly::from_desc({1, 0, -2}) * UniPoly::from_desc({1, 0, -3});
    auto f = factor_rational(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == UniPoly::from_desc({1, 0, -3}));
    CHECK(f.factors[1].first == UniPoly::from_desc({1, 0, -2}));

    // Swinnerton-Dyer style: minimal polynomial of sqrt(2)+sqrt(3) is
    // irreducible but has no irreducible modular image of degree 4.
    UniPoly sd = UniPoly::from_desc({1, 0, -10, 0, 1});
    CHECK(is_irreducible(sd));
}

TEST_CASE("minimal polynomials of census solution fields are irreducible") {
    // INFO prints the factor shape on failure.
    for (auto coeffs : std::vector<std::vector<long>>{
             {1, -1, 1},                               // m004 components
             {1, 1, 2},
             {2, 1, 1},
             {1, -2, 0, -1},                           // m007
             {1, -1, 1, -2, 1, 0, 1},
             {1, -1, 2},                               // m009
             {1, 2, -1, -2, -4},
             {1, 0, -1, 1},                            // m015
             {1, 0, -1, 0, 1},
             {4, -4, -1, 1, -1},
             {1, 0, 1},                                // Whitehead link
             {1, 1, 4},
             {1, 1, 2, -1, 1},
             {1, -175, -327, -175, 1},                 // cube-root meridian case
         }) {
        std::vector<Rat> lo_to_hi(coeffs.rbegin(), coeffs.rend());
        UniPoly p{std::vector<Rat>(lo_to_hi.begin(), lo_to_hi.end())};
        auto f = factor_rational(p);
        INFO(p.str(), " -> ", shape(f));
        CHECK(is_irreducible(p));
    }
}

TEST_CASE("determinism") {
    UniPoly p = UniPoly::from_desc({1, 0, -10, 0, 1}) * UniPoly::from_desc({1, 0, -2}) *
                UniPoly::from_desc({1, 1, 1, 1});
    auto a = factor_rational(p);
    auto b = factor_rational(p);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}

TEST_CASE("cyclotomic recognition") {
    unsigned n = 0;
    CHECK(is_cyclotomic(UniPoly::from_desc({1, -1}), &n));
    CHECK(n == 1);
    CHECK(is_cyclotomic(UniPoly::from_desc({1, 1}), &n));
    CHECK(n == 2);
    CHECK(is_cyclotomic(UniPoly::from_desc({1, 0, 1}), &n));
    CHECK(n == 4);
    CHECK(is_cyclotomic(UniPoly::from_desc({1, -1, 1}), &n));
    CHECK(n == 6);
    CHECK(is_cyclotomic(UniPoly::from_desc({1, 0, -1, 0, 1}), &n));
    CHECK(n == 12);
    CHECK_FALSE(is_cyclotomic(UniPoly::from_desc({1, -175, -327, -175, 1})));
    CHECK_FALSE(is_cyclotomic(UniPoly::from_desc({1, 0, -2})));
    CHECK_FALSE(is_cyclotomic(UniPoly::from_desc({1, 1, 2})));
}

TEST_CASE("degenerate inputs") {
    auto z = factor_rational(UniPoly());
    CHECK(z.unit == Rat(0));
    CHECK(z.factors.empty());
    auto c = factor_rational(UniPoly(Rat(-5, 3)));
    CHECK(c.unit == Rat(-5, 3));
    CHECK(c.factors.empty());
    CHECK_FALSE(is_irreducible(UniPoly(Rat(4))));
}
