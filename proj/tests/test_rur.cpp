#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "flagsolve/groebner.hpp"
#include "flagsolve/multipoly.hpp"
#include "flagsolve/rur.hpp"

using namespace flagsolve;

namespace {

// Every generator must vanish at every represented solution.
void check_roundtrip(const std::vector<MultiPoly>& gens, const RurResult& rur) {
    for (const auto& comp : rur.components) {
        REQUIRE(comp.eliminant.degree() >= 1);
        NumberField field = component_field(comp);
        std::vector<NumberFieldElem> point = component_point(comp, field);
        for (const auto& c : comp.coordinates)
            CHECK(c.degree() < comp.eliminant.degree());
        for (const auto& g : gens)
            CHECK(evaluate_at_point(g, point, field).is_zero());
    }
    long solutions = 0;
    long weighted = 0;
    for (const auto& comp : rur.components) {
        solutions += comp.eliminant.degree();
        weighted += comp.multiplicity * comp.eliminant.degree();
    }
    CHECK(solutions == rur.solution_count);
    CHECK(weighted == rur.quotient_dimension);
}

}  // namespace

TEST_CASE("two conjugate points on a line") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly two = MultiPoly::constant(R, Rat(2));
    std::vector<MultiPoly> gens = {x * x - two, y - x};
    auto rur = rational_univariate_representation(groebner_basis(gens));
    CHECK(rur.quotient_dimension == 2);
    CHECK(rur.solution_count == 2);
    CHECK(rur.separating == std::vector<Rat>{Rat(1), Rat(0)});  // x separates
    REQUIRE(rur.components.size() == 1);
    const auto& comp = rur.components[0];
    CHECK(comp.eliminant == UniPoly::from_desc({1, 0, -2}));
    CHECK(comp.multiplicity == 1);
    CHECK(comp.coordinates[0] == UniPoly::variable());
    CHECK(comp.coordinates[1] == UniPoly::variable());
    check_roundtrip(gens, rur);
}

TEST_CASE("four rational points force a combined separating form") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly one = MultiPoly::constant(R, Rat(1));
    std::vector<MultiPoly> gens = {x * x - one, y * y - one};
    auto rur = rational_univariate_representation(groebner_basis(gens));
    CHECK(rur.quotient_dimension == 4);
    CHECK(rur.solution_count == 4);
    // Neither x nor y separates the four points; x + 2y does.
    CHECK(rur.separating == std::vector<Rat>{Rat(1), Rat(2)});
    REQUIRE(rur.components.size() == 4);
    // Components sorted by constant coefficient: T-3, T-1, T+1, T+3.
    std::vector<std::pair<Rat, Rat>> expected = {
        {Rat(1), Rat(1)},    // lambda = 3
        {Rat(-1), Rat(1)},   // lambda = 1
        {Rat(1), Rat(-1)},   // lambda = -1
        {Rat(-1), Rat(-1)},  // lambda = -3
    };
    std::vector<Rat> roots = {Rat(3), Rat(1), Rat(-1), Rat(-3)};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& comp = rur.components[k];
        CHECK(comp.eliminant.degree() == 1);
        CHECK(comp.eliminant.eval(roots[k]) == 0);
        CHECK(comp.coordinates[0].eval(roots[k]) == expected[k].first);
        CHECK(comp.coordinates[1].eval(roots[k]) == expected[k].second);
    }
    check_roundtrip(gens, rur);
}

TEST_CASE("double point keeps its multiplicity") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly one = MultiPoly::constant(R, Rat(1));
    MultiPoly two = MultiPoly::constant(R, Rat(2));
    std::vector<MultiPoly> gens = {(x - one) * (x - one), y - two};
    auto rur = rational_univariate_representation(groebner_basis(gens));
    CHECK(rur.quotient_dimension == 2);
    CHECK(rur.solution_count == 1);
    REQUIRE(rur.components.size() == 1);
    CHECK(rur.components[0].multiplicity == 2);
    CHECK(rur.components[0].eliminant == UniPoly::from_desc({1, -1}));
    CHECK(rur.components[0].coordinates[0] == UniPoly(Rat(1)));
    CHECK(rur.components[0].coordinates[1] == UniPoly(Rat(2)));
    check_roundtrip(gens, rur);
}

TEST_CASE("mixed multiplicities in one variable") {
    Ring R = Ring::degrevlex({"x"});
    MultiPoly x = MultiPoly::variable(R, 0);
    std::vector<MultiPoly> gens = {x * x * x - x * x};
    auto rur = rational_univariate_representation(groebner_basis(gens));
    CHECK(rur.quotient_dimension == 3);
    CHECK(rur.solution_count == 2);
    REQUIRE(rur.components.size() == 2);
    // Sorted by constant coefficient: T-1 before T.
    CHECK(rur.components[0].eliminant == UniPoly::from_desc({1, -1}));
    CHECK(rur.components[0].multiplicity == 1);
    CHECK(rur.components[1].eliminant == UniPoly::from_desc({1, 0}));
    CHECK(rur.components[1].multiplicity == 2);
    check_roundtrip(gens, rur);
}

TEST_CASE("tower of algebraic coordinates") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly two = MultiPoly::constant(R, Rat(2));
    // x = +-sqrt(2), y^2 = x: four points, only y separates.
    std::vector<MultiPoly> gens = {x * x - two, y * y - x};
    auto rur = rational_univariate_representation(groebner_basis(gens));
    CHECK(rur.quotient_dimension == 4);
    CHECK(rur.solution_count == 4);
    CHECK(rur.separating == std::vector<Rat>{Rat(0), Rat(1)});
    REQUIRE(rur.components.size() == 1);
    const auto& comp = rur.components[0];
    CHECK(comp.eliminant == UniPoly::from_desc({1, 0, 0, 0, -2}));  // T^4 - 2
    CHECK(comp.coordinates[0] == UniPoly::monomial(2));             // x = T^2
    CHECK(comp.coordinates[1] == UniPoly::variable());              // y = T
    check_roundtrip(gens, rur);
}

TEST_CASE("empty variety and positive dimension are rejected cleanly") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    MultiPoly one = MultiPoly::constant(R, Rat(1));
    auto rur = rational_univariate_representation(groebner_basis({x, x + one}));
    CHECK(rur.components.empty());
    CHECK(rur.quotient_dimension == 0);
    CHECK(rur.solution_count == 0);
    CHECK_THROWS_AS(rational_univariate_representation(groebner_basis({x - y})),
                    std::invalid_argument);
}

TEST_CASE("random rational point sets round-trip exactly") {
    Ring R = Ring::degrevlex({"x", "y"});
    MultiPoly x = MultiPoly::variable(R, 0);
    MultiPoly y = MultiPoly::variable(R, 1);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> count(1, 4);
    auto frac = [&]() {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };

    for (int rep = 0; rep < 20; ++rep) {
        const int m = count(rng);
        std::set<Rat> xs;
        while (static_cast<int>(xs.size()) < m) xs.insert(frac());
        std::vector<Rat> ax(xs.begin(), xs.end());
        std::vector<Rat> by;
        for (int k = 0; k < m; ++k) by.push_back(frac());

        // Vanishing polynomial of the x-values and the Lagrange interpolant
        // through (ax, by) pin down exactly those m points.
        MultiPoly vanish = MultiPoly::constant(R, Rat(1));
        for (const Rat& a : ax) vanish = vanish * (x - MultiPoly::constant(R, a));
        MultiPoly interp(R);
        for (int k = 0; k < m; ++k) {
            MultiPoly term = MultiPoly::constant(R, by[k]);
            for (int j = 0; j < m; ++j) {
                if (j == k) continue;
                term = term * (x - MultiPoly::constant(R, ax[j])) *
                       Rat(Rat(1) / (ax[k] - ax[j]));
            }
            interp = interp + term;
        }
        std::vector<MultiPoly> gens = {vanish, y - interp};
        auto rur = rational_univariate_representation(groebner_basis(gens));
        CHECK(rur.solution_count == m);
        CHECK(rur.quotient_dimension == m);
        check_roundtrip(gens, rur);

        // All points are rational, so every component is linear and we can
        // compare the recovered coordinates with the construction.
        std::set<std::pair<Rat, Rat>> want;
        for (int k = 0; k < m; ++k) want.insert({ax[k], by[k]});
        std::set<std::pair<Rat, Rat>> got;
        for (const auto& comp : rur.components) {
            REQUIRE(comp.eliminant.degree() == 1);
            const Rat root = -comp.eliminant.coeffs()[0] / comp.eliminant.coeffs()[1];
            got.insert({comp.coordinates[0].eval(root), comp.coordinates[1].eval(root)});
        }
        CHECK(want == got);
    }
}
