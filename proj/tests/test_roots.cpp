#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "flagsolve/roots.hpp"

using namespace flagsolve;

namespace {

Rat dec(const std::string& s) {
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '-') {
        neg = true;
        ++i;
    }
    Int num = 0;
    Int den = 1;
    bool frac = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            frac = true;
            continue;
        }
        num = num * 10 + (s[i] - '0');
        if (frac) den *= 10;
    }
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

// True value known to lie in (dec(lo), dec(hi)); the interval must overlap.
bool overlaps(const RatInterval& iv, const std::string& lo, const std::string& hi) {
    return iv.lo() < dec(hi) && iv.hi() > dec(lo);
}

ComplexBox box(long alo, long ahi, long blo, long bhi, long den) {
    return ComplexBox(RatInterval(Rat(alo, den), Rat(ahi, den)),
                      RatInterval(Rat(blo, den), Rat(bhi, den)));
}

}  // namespace

TEST_CASE("sturm chains count real roots") {
    // (Y^2-1)(Y^2-4) has the four real roots -2,-1,1,2.
    UniPoly p = UniPoly::from_desc({1, 0, -5, 0, 4});
    CHECK(count_real_roots(p) == 4);
    CHECK(count_real_roots_in(p, RatInterval(Rat(0), Rat(3))) == 2);
    CHECK(count_real_roots_in(p, RatInterval(Rat(1), Rat(2))) == 2);  // closed endpoints
    CHECK(count_real_roots_in(p, RatInterval(Rat(3), Rat(9))) == 0);
    CHECK(count_real_roots_in(p, RatInterval(Rat(-3), Rat(0))) == 2);

    CHECK(count_real_roots(UniPoly::from_desc({1, 0, 1})) == 0);   // Y^2+1
    CHECK(count_real_roots(UniPoly::from_desc({1, 0, -2})) == 2);  // Y^2-2
    // Multiplicities are ignored: (Y-1)^2 (Y+2).
    UniPoly m = UniPoly::from_desc({1, -2, 1}) * UniPoly::from_desc({1, 2});
    CHECK(count_real_roots(m) == 2);
    CHECK(count_real_roots(UniPoly(Rat(7))) == 0);
}

TEST_CASE("census minimal polynomials have the expected real root counts") {
    CHECK(count_real_roots(UniPoly::from_desc({1, -1, 1})) == 0);
    CHECK(count_real_roots(UniPoly::from_desc({4, -3, 1})) == 0);
    CHECK(count_real_roots(UniPoly::from_desc({1, -2, 0, -1})) == 1);
    CHECK(count_real_roots(UniPoly::from_desc({1, -1, 2})) == 0);
    CHECK(count_real_roots(UniPoly::from_desc({1, 0, -1, 1})) == 1);
    // Palindromic quartic: one real pair (x+1/x ~ 176.9) and one unit-circle
    // conjugate pair (x+1/x ~ -1.86).
    CHECK(count_real_roots(UniPoly::from_desc({1, -175, -327, -175, 1})) == 2);
}

TEST_CASE("real root isolation") {
    // roots 1, 2, 3
    UniPoly p = UniPoly::from_desc({1, -6, 11, -6});
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    CHECK(ivs[0].contains(Rat(1)));
    CHECK(ivs[1].contains(Rat(2)));
    CHECK(ivs[2].contains(Rat(3)));
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi() <= ivs[i + 1].lo());

    // exact rational roots 1/2 and 3
    auto q = isolate_real_roots(UniPoly::from_desc({2, -7, 3}));
    REQUIRE(q.size() == 2);
    CHECK(q[0].contains(Rat(1, 2)));
    CHECK(q[1].contains(Rat(3)));

    // repeated roots collapse
    auto r = isolate_real_roots(UniPoly::from_desc({1, -2, 1}) * UniPoly::from_desc({1, 2}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].contains(Rat(-2)));
    CHECK(r[1].contains(Rat(1)));

    // linear shortcut gives the exact point
    auto lin = isolate_real_roots(UniPoly::from_desc({3, -2}));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].is_point());
    CHECK(lin[0].lo() == Rat(2, 3));

    CHECK(isolate_real_roots(UniPoly::from_desc({1, 0, 1})).empty());
}

TEST_CASE("exact root counting in rectangles") {
    UniPoly p = UniPoly::from_desc({1, 0, 1});  // roots +-i
    CHECK(count_roots_in_box(p, box(-1, 1, 1, 3, 2)) == 1);
    CHECK(count_roots_in_box(p, box(-4, 4, -4, 4, 2)) == 2);
    CHECK(count_roots_in_box(p, box(2, 4, 2, 4, 2)) == 0);

    UniPoly q = UniPoly::from_desc({1, 0, 0, 0, -1});  // roots 1,-1,i,-i
    CHECK(count_roots_in_box(q, box(-1, 1, 1, 3, 2)) == 1);
    CHECK(count_roots_in_box(q, box(-3, 3, -3, 3, 1)) == 4);
    CHECK(count_roots_in_box(q, box(1, 6, -2, 2, 2)) == 1);  // just the root 1

    // root i sitting exactly on the bottom edge
    CHECK_THROWS_AS(count_roots_in_box(p, ComplexBox(RatInterval(Rat(-1), Rat(1)),
                                                     RatInterval(Rat(1), Rat(2)))),
                    std::domain_error);
    CHECK_THROWS_AS(count_roots_in_box(p, ComplexBox(RatInterval(Rat(0), Rat(0)),
                                                     RatInterval(Rat(0), Rat(2)))),
                    std::invalid_argument);

    // multiplicity is ignored: (Y^2+1)^2 still has one distinct root at i
    CHECK(count_roots_in_box(p * p, box(-1, 1, 1, 3, 2)) == 1);
}

TEST_CASE("complex root isolation finds conjugate-closed disjoint boxes") {
    // Y^3 - 1: roots 1 and -1/2 +- i sqrt(3)/2
    auto roots = isolate_roots(UniPoly::from_desc({1, 0, 0, -1}));
    REQUIRE(roots.size() == 3);
    int reals = 0, upper = 0, lower = 0;
    for (const auto& r : roots) {
        if (r.is_real()) {
            ++reals;
            CHECK(r.real_interval().contains(Rat(1)));
        } else if (r.box().im().sign() > 0) {
            ++upper;
        } else {
            CHECK(r.box().im().sign() < 0);
            ++lower;
        }
    }
    CHECK(reals == 1);
    CHECK(upper == 1);
    CHECK(lower == 1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            CHECK(roots[i].box().disjoint(roots[j].box()));

    for (auto& r : roots) {
        if (r.is_real()) continue;
        r.refine(pow2(-30));
        CHECK(overlaps(r.box().re(), "-0.50000001", "-0.49999999"));
        if (r.box().im().sign() > 0)
            CHECK(overlaps(r.box().im(), "0.86602540378443864676", "0.86602540378443864677"));
    }
}

TEST_CASE("isolation of the quadratic with roots (1 +- i sqrt 3)/2") {
    auto roots = isolate_roots(UniPoly::from_desc({1, -1, 1}));
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        CHECK(!r.is_real());
        r.refine(pow2(-40));
        CHECK(overlaps(r.box().re(), "0.4999999999", "0.5000000001"));
    }
    CHECK(roots[0].box().disjoint(roots[1].box()));
}

TEST_CASE("palindromic quartic splits into a real pair and a unit-circle pair") {
    UniPoly p = UniPoly::from_desc({1, -175, -327, -175, 1});
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 4);
    int reals = 0;
    for (auto& r : roots) {
        if (r.is_real()) {
            ++reals;
            continue;
        }
        // |z| = 1 for the nonreal pair
        r.refine(pow2(-40));
        RatInterval a2 = r.box().abs2();
        CHECK(a2.contains(Rat(1)));
        CHECK(a2.width() < pow2(-30));
    }
    CHECK(reals == 2);
}

TEST_CASE("refinement reaches high precision quickly") {
    // positive root of Y^2 - 2
    auto roots = isolate_roots(UniPoly::from_desc({1, 0, -2}));
    REQUIRE(roots.size() == 2);
    AlgebraicRoot r = roots[1];
    CHECK(r.is_real());
    r.refine(pow2(-120));
    CHECK(r.box().max_width() <= pow2(-120));
    CHECK(overlaps(r.box().re(), "1.41421356237309504880", "1.41421356237309504881"));

    // nonreal: deep refinement exercises the interval Newton path
    auto c = isolate_roots(UniPoly::from_desc({1, -1, 1}));
    for (auto& root : c) {
        if (root.box().im().sign() <= 0) continue;
        root.refine(pow2(-200));
        CHECK(root.box().max_width() <= pow2(-200));
        CHECK(overlaps(root.box().im(), "0.86602540378443864676", "0.86602540378443864677"));
    }
}

TEST_CASE("certified evaluation at a root") {
    // At the positive root of Y^2-2, evaluate Y^2+Y: exact value 2+sqrt(2).
    auto roots = isolate_roots(UniPoly::from_desc({1, 0, -2}));
    AlgebraicRoot r = roots[1];
    ComplexBox v = r.evaluate(UniPoly::from_desc({1, 1, 0}), pow2(-80));
    CHECK(v.max_width() <= pow2(-80));
    CHECK(overlaps(v.re(), "3.41421356237309504880", "3.41421356237309504881"));
    CHECK(v.im() == RatInterval::point(Rat(0)));

    // At the upper root of Y^2-Y+1, the value of Y + (1-Y) is exactly 1.
    auto c = isolate_roots(UniPoly::from_desc({1, -1, 1}));
    for (auto& root : c) {
        if (root.box().im().sign() <= 0) continue;
        ComplexBox one = root.evaluate(UniPoly(Rat(1)), pow2(-10));
        CHECK(one.re().contains(Rat(1)));
        // Y^2 at the root equals Y-1: re -1/2, im sqrt(3)/2.
        ComplexBox sq = root.evaluate(UniPoly::from_desc({1, 0, 0}), pow2(-60));
        CHECK(overlaps(sq.re(), "-0.5000000001", "-0.4999999999"));
        CHECK(overlaps(sq.im(), "0.86602540378443864676", "0.86602540378443864677"));
    }
}

TEST_CASE("interval polynomial evaluation encloses the range") {
    UniPoly p = UniPoly::from_desc({1, 0, 0});  // Y^2
    RatInterval v = poly_eval_interval(p, RatInterval(Rat(1), Rat(2)), 64);
    CHECK(v.contains(Rat(1)));
    CHECK(v.contains(Rat(4)));

    ComplexBox z = poly_eval_box(p, ComplexBox::point(Rat(0), Rat(1)), 64);
    CHECK(z.re().contains(Rat(-1)));
    CHECK(z.im().contains(Rat(0)));
}
