#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "flagsolve/classify.hpp"
#include "flagsolve/realfun.hpp"

using namespace flagsolve;

namespace {

Rat ratstr(const char* s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// Reference values computed with an independent arbitrary-precision library.
const Rat kDOmega = ratstr("1014941606409653625021/1000000000000000000000");
const Rat kTwoDOmega = ratstr("2029883212819307250042/1000000000000000000000");
const Rat kDI = ratstr("915965594177219015055/1000000000000000000000");
const Rat kDQuarter = ratstr("619033601484251472849/1000000000000000000000");
const Rat kDSample = ratstr("519764301454008184510/1000000000000000000000");

/// Builds the full coordinate vector from one survivor per vertex using
/// z_ik = 1/(1-z_ij) and z_il = (z_ij-1)/z_ij; surv holds {z12, z21, z34,
/// z43} per tetrahedron.
ComponentSolutions from_survivors(const UniPoly& f, const std::vector<NumberFieldElem>& surv) {
    NumberField F(f);
    std::size_t n = surv.size() / 4;
    ComponentSolutions comp{f, std::vector<NumberFieldElem>(12 * n, F.zero())};
    static const int perm[4][4] = {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
    NumberFieldElem one = F.one();
    for (std::size_t t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            const int* p = perm[v];
            NumberFieldElem zij = surv[4 * t + std::size_t(v)];
            comp.coords[coord_index(int(t), p[0], p[1])] = zij;
            comp.coords[coord_index(int(t), p[0], p[2])] = (one - zij).inverse();
            comp.coords[coord_index(int(t), p[0], p[3])] = (zij - one) * zij.inverse();
        }
    }
    return comp;
}

ComplexBox omega_box() {
    RatInterval imiv = sqrt_enclosure(RatInterval(Rat(3), Rat(3)), 192) * Rat(1, 2);
    return ComplexBox(RatInterval::point(Rat(1, 2)), imiv);
}

FieldMatrix3 mat(const NumberField& F, std::vector<NumberFieldElem> e) {
    return FieldMatrix3::from_entries(F, std::move(e));
}

}  // namespace

TEST_CASE("coordinate indexing follows the lexicographic pair order") {
    CHECK(coord_index(0, 1, 2) == 0);
    CHECK(coord_index(0, 1, 4) == 2);
    CHECK(coord_index(0, 2, 1) == 3);
    CHECK(coord_index(0, 3, 4) == 8);
    CHECK(coord_index(0, 4, 3) == 11);
    CHECK(coord_index(1, 1, 2) == 12);
    CHECK(coord_index(2, 4, 2) == 34);
    CHECK_THROWS_AS(coord_index(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(coord_index(0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(coord_index(0, 5, 1), std::invalid_argument);

    ComponentSolutions comp;
    comp.coords.resize(24);
    CHECK(component_tets(comp) == 2);
    comp.coords.resize(12);
    CHECK(component_tets(comp) == 1);
    comp.coords.resize(13);
    CHECK_THROWS_AS(component_tets(comp), std::invalid_argument);
}

TEST_CASE("exactly real boxes have vanishing Bloch-Wigner value") {
    Rat w(1, 1000000);
    for (const Rat& x : {Rat(0), Rat(1), Rat(1, 2), Rat(3), Rat(-2)}) {
        RatInterval d = bloch_wigner(ComplexBox::real_point(x), w);
        CHECK(d.is_point());
        CHECK(d.lo() == Rat(0));
    }
    ComplexBox seg(RatInterval(Rat(2), Rat(3)), RatInterval::point(Rat(0)));
    RatInterval d = bloch_wigner(seg, w);
    CHECK(d.is_point());
    CHECK(d.lo() == Rat(0));
}

TEST_CASE("Bloch-Wigner enclosures match independently computed values") {
    Rat target = rat_pow(Rat(1, 10), 10);

    RatInterval dw = bloch_wigner(omega_box(), target);
    CHECK(dw.width() <= target);
    CHECK(dw.contains(kDOmega));

    RatInterval di = bloch_wigner(ComplexBox::point(Rat(0), Rat(1)), target);
    CHECK(di.width() <= target);
    CHECK(di.contains(kDI));

    RatInterval dq = bloch_wigner(ComplexBox::point(Rat(1, 4), Rat(1, 4)), target);
    CHECK(dq.width() <= target);
    CHECK(dq.contains(kDQuarter));

    RatInterval ds = bloch_wigner(ComplexBox::point(Rat(3, 10), Rat(1, 5)), target);
    CHECK(ds.width() <= target);
    CHECK(ds.contains(kDSample));
}

TEST_CASE("Bloch-Wigner functional identities hold on certified boxes") {
    Rat target = rat_pow(Rat(1, 10), 9);
    auto antisym = [&](const ComplexBox& z) {
        RatInterval a = bloch_wigner(z, target);
        RatInterval b = bloch_wigner(z.conj(), target);
        CHECK((a + b).contains(Rat(0)));
    };
    antisym(ComplexBox::point(Rat(1, 4), Rat(1, 4)));
    antisym(ComplexBox::point(Rat(3, 5), Rat(2, 5)));
    antisym(omega_box());

    // D(1 - z) = -D(z): the two sides run through different series branches.
    RatInterval a = bloch_wigner(ComplexBox::point(Rat(3, 10), Rat(1, 5)), target);
    RatInterval b = bloch_wigner(ComplexBox::point(Rat(7, 10), -Rat(1, 5)), target);
    CHECK((a + b).contains(Rat(0)));

    // D(1/z) = -D(z) with 1/(2 - 2i) = 1/4 + i/4.
    RatInterval c = bloch_wigner(ComplexBox::point(Rat(2), Rat(-2)), target);
    RatInterval d = bloch_wigner(ComplexBox::point(Rat(1, 4), Rat(1, 4)), target);
    CHECK((c + d).contains(Rat(0)));
}

TEST_CASE("boxes touching a branch point are rejected") {
    RatInterval eighth(Rat(-1, 8), Rat(1, 8));
    CHECK_THROWS_AS(bloch_wigner(ComplexBox(eighth, eighth), Rat(1, 1000)), std::domain_error);
    ComplexBox near_one(RatInterval(Rat(7, 8), Rat(9, 8)), eighth);
    CHECK_THROWS_AS(bloch_wigner(near_one, Rat(1, 1000)), std::domain_error);
    CHECK_THROWS_AS(bloch_wigner(ComplexBox::point(Rat(0), Rat(1)), Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("real-root classification agrees with Sturm counts") {
    struct Row {
        UniPoly f;
        int real_roots;
    };
    std::vector<Row> rows = {
        {UniPoly::from_desc({1, -1, 1}), 0},
        {UniPoly::from_desc({1, 0, -1, 1}), 1},
        {UniPoly::from_desc({1, 0, 1}), 0},
        {UniPoly::from_desc({4, -3, 1}), 0},
        {UniPoly::from_desc({1, -175, -327, -175, 1}), 2},
        {UniPoly::from_desc({1, -27, 25, -27, 1}), 2},
    };
    for (const Row& row : rows) {
        std::vector<AlgebraicRoot> roots = isolate_roots(row.f);
        CHECK(int(roots.size()) == row.f.degree());
        std::vector<bool> flags = classify_real(row.f, roots);
        int found = 0;
        for (bool b : flags) found += b;
        CHECK(found == row.real_roots);
    }
}

TEST_CASE("the hyperbolic test compares survivor coordinates in the field") {
    UniPoly f = UniPoly::from_desc({1, -1, 1});
    NumberField F(f);
    NumberFieldElem w = F.generator();
    NumberFieldElem wb = F.one() - w;

    ComponentSolutions geo = from_survivors(f, {w, w, w, w, w, w, w, w});
    CHECK(classify_hyperbolic(geo));

    ComponentSolutions cr = from_survivors(f, {w, wb, w, wb, wb, wb, w, w});
    CHECK_FALSE(classify_hyperbolic(cr));

    // Only the four survivors per tetrahedron matter.
    ComponentSolutions one_tet = from_survivors(f, {w, w, w, w});
    one_tet.coords[coord_index(0, 1, 3)] = F.from_rational(Rat(5));
    CHECK(classify_hyperbolic(one_tet));

    ComponentSolutions mixed = from_survivors(f, {w, w, w, F.from_rational(Rat(2))});
    CHECK_FALSE(classify_hyperbolic(mixed));
}

TEST_CASE("the geometric component is hyperbolic with the figure-eight volume") {
    UniPoly f = UniPoly::from_desc({1, -1, 1});
    NumberField F(f);
    NumberFieldElem w = F.generator();
    ComponentSolutions comp = from_survivors(f, {w, w, w, w, w, w, w, w});
    // 1/(1-w) and (w-1)/w are fixed points at this value, so every coordinate
    // collapses to the generator.
    for (const NumberFieldElem& c : comp.coords) CHECK(c == w);

    ComponentClassification out = classify_component(comp);
    REQUIRE(out.roots.size() == 2);
    REQUIRE(out.flags.size() == 2);
    REQUIRE(out.volumes.size() == 2);
    for (const ClassificationFlags& fl : out.flags) {
        CHECK_FALSE(fl.is_real);
        CHECK(fl.is_hyperbolic);
        CHECK_FALSE(fl.is_cr);
        CHECK_FALSE(fl.is_pu21_verified);
    }
    // Roots are ordered by lower box corner: the conjugate pair gives
    // opposite volumes.
    CHECK(out.volumes[0].contains(-kTwoDOmega));
    CHECK(out.volumes[1].contains(kTwoDOmega));
    CHECK(out.volumes[0].width() <= Rat(1, 1000000));
    CHECK(out.volumes[1].width() <= Rat(1, 1000000));
    CHECK((out.volumes[0] + out.volumes[1]).contains(Rat(0)));
}

TEST_CASE("the CR component classifies as CR with vanishing volume") {
    UniPoly f = UniPoly::from_desc({1, -1, 1});
    NumberField F(f);
    NumberFieldElem w = F.generator();
    NumberFieldElem wb = F.one() - w;
    ComponentSolutions comp = from_survivors(f, {w, wb, w, wb, wb, wb, w, w});
    CHECK(comp.coords[coord_index(1, 3, 1)] == w);
    CHECK(comp.coords[coord_index(0, 2, 4)] == wb);

    std::vector<AlgebraicRoot> roots = isolate_roots(f);
    CrResult cr = classify_cr(comp, roots);
    CHECK(cr.equations.size() == 2 + 6 * 2);
    CHECK_FALSE(cr.degenerate);
    REQUIRE(cr.cr_root.size() == 2);
    CHECK(cr.cr_root[0]);
    CHECK(cr.cr_root[1]);

    // The geometric component has no CR structure.
    ComponentSolutions geo = from_survivors(f, {w, w, w, w, w, w, w, w});
    std::vector<AlgebraicRoot> groots = isolate_roots(f);
    CrResult none = classify_cr(geo, groots);
    CHECK_FALSE(none.degenerate);
    CHECK_FALSE(none.cr_root[0]);
    CHECK_FALSE(none.cr_root[1]);

    ComponentClassification out = classify_component(comp);
    for (const ClassificationFlags& fl : out.flags) {
        CHECK_FALSE(fl.is_real);
        CHECK_FALSE(fl.is_hyperbolic);
        CHECK(fl.is_cr);
    }
    CHECK(out.flags[0].is_cr == out.flags[1].is_cr);
    for (const RatInterval& v : out.volumes) {
        CHECK(v.contains(Rat(0)));
        CHECK(v.width() <= Rat(1, 1000000));
    }
}

TEST_CASE("a face with unit coordinate product degenerates the component") {
    UniPoly f = UniPoly::from_desc({1, -1, 1});
    NumberField F(f);
    NumberFieldElem w = F.generator();
    ComponentSolutions comp = from_survivors(f, {w, w, w, w});
    // Force z21 z31 z41 == 1, the triple-ratio degeneracy at the face
    // opposite vertex 1.
    comp.coords[coord_index(0, 2, 1)] = w;
    comp.coords[coord_index(0, 3, 1)] = F.one() - w;  // w * conj(w) == 1
    comp.coords[coord_index(0, 4, 1)] = F.one();
    std::vector<AlgebraicRoot> roots = isolate_roots(f);
    CrResult cr = classify_cr(comp, roots);
    CHECK(cr.degenerate);
    CHECK_FALSE(cr.cr_root[0]);
    CHECK_FALSE(cr.cr_root[1]);
}

TEST_CASE("volume evaluation is exact at real solutions") {
    UniPoly f = UniPoly::from_desc({1, 0, -3});  // roots +- sqrt(3)
    NumberField F(f);
    ComponentSolutions comp = from_survivors(f, {F.generator(), F.generator(), F.generator(),
                                                 F.generator()});
    std::vector<AlgebraicRoot> roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    for (AlgebraicRoot& r : roots) {
        CHECK(r.is_real());
        RatInterval v = solution_volume(comp, r, Rat(1, 1000000));
        CHECK(v.is_point());
        CHECK(v.lo() == Rat(0));
    }
}

TEST_CASE("solution volume sums the dilogarithm over the survivors") {
    UniPoly f = UniPoly::from_desc({1, 0, 1});  // roots +- i
    NumberField F(f);
    NumberFieldElem i = F.generator();
    ComponentSolutions comp = from_survivors(f, {i, i, i, i});
    std::vector<AlgebraicRoot> roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    Rat target = rat_pow(Rat(1, 10), 8);
    RatInterval lower = solution_volume(comp, roots[0], target);
    RatInterval upper = solution_volume(comp, roots[1], target);
    CHECK(lower.width() <= target);
    CHECK(upper.width() <= target);
    CHECK(upper.contains(kDI));
    CHECK(lower.contains(-kDI));
    CHECK((lower + upper).contains(Rat(0)));
}

TEST_CASE("form preservation is certified at the component roots") {
    UniPoly f = UniPoly::from_desc({1, -1, 1});
    NumberField F(f);
    NumberFieldElem w = F.generator();
    NumberFieldElem wb = F.one() - w;
    NumberFieldElem o = F.one(), z = F.zero();

    FieldMatrix3 g1 = mat(F, {o, z, z, w, o, z, -w, -w, o});
    FieldMatrix3 g2 = mat(F, {z, z, o, z, wb, z, -w, z, w + Rat(1)});
    FieldMatrix3 g3 = mat(F, {o, wb, o, z, o, -wb, z, z, o});
    FieldMatrix3 form = mat(F, {z, z, -w, z, o, z, -wb, z, z});
    std::vector<FieldMatrix3> gens = {g1, g2, g3};

    std::vector<AlgebraicRoot> roots = isolate_roots(f);
    Rat tol(1, 100000000);
    for (AlgebraicRoot& r : roots) CHECK(certify_form_preservation(gens, form, r, tol));

    FieldMatrix3 broken = mat(F, {F.from_rational(Rat(2)), z, z, w, o, z, -w, -w, o});
    AlgebraicRoot r0 = roots[0];
    CHECK_FALSE(certify_form_preservation({broken}, form, r0, tol));

    CHECK(certify_form_preservation({FieldMatrix3::identity(F)}, form, r0, tol));
    CHECK_THROWS_AS(certify_form_preservation(gens, form, r0, Rat(0)), std::invalid_argument);
}
